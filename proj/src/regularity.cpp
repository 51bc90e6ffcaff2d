#include "gallai/regularity.hpp"

#include <stdexcept>
#include <string>

#include "gallai/errors.hpp"
#include "gallai/kernels.hpp"

namespace gallai {

std::string_view to_string(RegularityLevel level) {
  switch (level) {
    case RegularityLevel::irregular:
      return "irregular";
    case RegularityLevel::regular:
      return "regular";
    case RegularityLevel::edge_regular:
      return "edge_regular";
    case RegularityLevel::strongly_regular:
      return "strongly_regular";
  }
  return "unknown";
}

RegularityLevel regularity_level_from_string(std::string_view text) {
  for (auto level : {RegularityLevel::irregular, RegularityLevel::regular,
                     RegularityLevel::edge_regular, RegularityLevel::strongly_regular}) {
    if (to_string(level) == text) return level;
  }
  throw InputError("unknown regularity level '" + std::string(text) + "'");
}

RegularityReport classify(const Graph& g) {
  const std::size_t n = g.order();
  RegularityReport report;
  report.n = static_cast<std::int64_t>(n);
  report.complete_or_empty = g.size() == 0 || 2 * g.size() == n * (n > 0 ? n - 1 : 0);

  if (n > 0) {
    const std::size_t k = g.neighbors(0).size();
    for (Vertex v = 1; v < n; ++v) {
      if (g.neighbors(v).size() != k) return report;
    }
    report.k = static_cast<std::int64_t>(k);
  } else {
    report.k = 0;
  }
  report.level = RegularityLevel::regular;

  const auto counts = kernels::omp::common_neighbor_counts(g);
  std::optional<std::uint32_t> lambda;
  std::optional<std::uint32_t> mu;
  bool lambda_uniform = true;
  bool mu_uniform = true;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::uint32_t c = counts[u * n + v];
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      bool& uniform = g.adjacent(u, v) ? lambda_uniform : mu_uniform;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        uniform = false;
      }
    }
  }

  if (!lambda_uniform) return report;
  report.level = RegularityLevel::edge_regular;
  report.lambda = lambda.value_or(0);

  if (report.complete_or_empty || !mu || !mu_uniform) return report;
  report.level = RegularityLevel::strongly_regular;
  report.mu = *mu;

  const auto k = *report.k;
  const auto l = *report.lambda;
  const auto m = *report.mu;
  if (k * (k - l - 1) != (report.n - k - 1) * m) {
    throw std::logic_error("strongly regular parameters violate k(k-lambda-1) = (n-k-1)mu");
  }
  return report;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

}  // namespace gallai
