#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gallai/graph.hpp"

namespace gallai {

enum class RegularityLevel { irregular, regular, edge_regular, strongly_regular };

std::string_view to_string(RegularityLevel level);
RegularityLevel regularity_level_from_string(std::string_view text);

/// Position of a graph on the irregular < regular < edge-regular < strongly
/// regular ladder.
///
/// `k` is set from `regular` upward, `lambda` from `edge_regular` upward and
/// `mu` only at `strongly_regular`. Complete and empty graphs are flagged and
/// never reach `strongly_regular`; for graphs with no adjacent pairs `lambda`
/// is reported as 0.
struct RegularityReport {
  std::int64_t n = 0;
  RegularityLevel level = RegularityLevel::irregular;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> mu;
  bool complete_or_empty = false;

  bool at_least(RegularityLevel other) const { return level >= other; }

  bool operator==(const RegularityReport&) const = default;
};

RegularityReport classify(const Graph& g);

/// True for at most one component; the null graph counts as connected.
bool is_connected(const Graph& g);

}  // namespace gallai
