#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gallai/regularity.hpp"
#include "gallai/spectral.hpp"
#include "gallai/theorems.hpp"

namespace gallai {

struct RoleSpectrum {
  std::string role;
  Spectrum spectrum;

  bool operator==(const RoleSpectrum&) const = default;
};

/// Everything one CLI run reports about one input graph.
struct Report {
  std::string input;
  RegularityReport regularity;
  std::vector<RoleSpectrum> spectra;
  std::vector<TheoremVerdict> verdicts;
  /// Seconds per stage; left empty unless timing was requested so that
  /// reports stay byte-identical across runs.
  std::map<std::string, double> timing;

  bool any_failed() const;

  bool operator==(const Report&) const = default;
};

/// Magnitudes below this are roundoff and serialise as 0.
inline constexpr double kZeroSnap = 1e-10;

/// Rounds to 12 significant digits; values below kZeroSnap and -0 become 0.
double round_significant(double x);

// nlohmann::json conversions. Objects use std::map, so keys come out sorted.
void to_json(nlohmann::json& j, const RegularityReport& r);
void from_json(const nlohmann::json& j, RegularityReport& r);
void to_json(nlohmann::json& j, const Spectrum& s);
void from_json(const nlohmann::json& j, Spectrum& s);
void to_json(nlohmann::json& j, const TheoremVerdict& v);
void from_json(const nlohmann::json& j, TheoremVerdict& v);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

}  // namespace gallai
