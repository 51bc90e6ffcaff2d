#include "gallai/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "gallai/errors.hpp"

namespace gallai {

using nlohmann::json;

namespace {

json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::int64_t> read_optional_int(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<std::int64_t>();
}

json detail_to_json(const DetailValue& value) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return round_significant(x);
        } else {
          return x;
        }
      },
      value);
}

DetailValue detail_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw InputError("unsupported detail value " + j.dump());
}

}  // namespace

bool Report::any_failed() const {
  for (const auto& v : verdicts) {
    if (v.failed()) return true;
  }
  return false;
}

double round_significant(double x) {
  if (std::abs(x) < kZeroSnap) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

void to_json(json& j, const RegularityReport& r) {
  j = json{{"n", r.n},
           {"level", std::string(to_string(r.level))},
           {"k", optional_int(r.k)},
           {"lambda", optional_int(r.lambda)},
           {"mu", optional_int(r.mu)},
           {"complete_or_empty", r.complete_or_empty}};
}

void from_json(const json& j, RegularityReport& r) {
  r.n = j.at("n").get<std::int64_t>();
  r.level = regularity_level_from_string(j.at("level").get<std::string>());
  r.k = read_optional_int(j, "k");
  r.lambda = read_optional_int(j, "lambda");
  r.mu = read_optional_int(j, "mu");
  r.complete_or_empty = j.at("complete_or_empty").get<bool>();
}

void to_json(json& j, const Spectrum& s) {
  json values = json::array();
  for (double x : s.values) values.push_back(round_significant(x));
  json groups = json::array();
  for (const auto& g : s.groups) {
    groups.push_back({{"value", round_significant(g.value)}, {"multiplicity", g.multiplicity}});
  }
  j = json{{"source", std::string(to_string(s.source))}, {"values", values}, {"groups", groups}};
}

void from_json(const json& j, Spectrum& s) {
  s.source = spectrum_source_from_string(j.at("source").get<std::string>());
  s.values = j.at("values").get<std::vector<double>>();
  s.groups.clear();
  for (const auto& g : j.at("groups")) {
    s.groups.push_back({g.at("value").get<double>(), g.at("multiplicity").get<std::size_t>()});
  }
}

void to_json(json& j, const TheoremVerdict& v) {
  json details = json::object();
  for (const auto& [key, value] : v.details) details[key] = detail_to_json(value);
  j = json{{"theorem_id", v.theorem_id},
           {"hypotheses_hold", v.hypotheses_hold},
           {"conclusion_holds", v.conclusion_holds ? json(*v.conclusion_holds) : json(nullptr)},
           {"witness", v.witness ? json(*v.witness) : json(nullptr)},
           {"details", details},
           {"parts", v.parts}};
}

void from_json(const json& j, TheoremVerdict& v) {
  v.theorem_id = j.at("theorem_id").get<std::string>();
  v.hypotheses_hold = j.at("hypotheses_hold").get<bool>();
  const auto& c = j.at("conclusion_holds");
  v.conclusion_holds = c.is_null() ? std::nullopt : std::optional<bool>(c.get<bool>());
  const auto& w = j.at("witness");
  v.witness = w.is_null() ? std::nullopt : std::optional<std::string>(w.get<std::string>());
  v.details.clear();
  for (const auto& [key, value] : j.at("details").items()) v.details[key] = detail_from_json(value);
  v.parts = j.at("parts").get<std::vector<TheoremVerdict>>();
}

void to_json(json& j, const Report& r) {
  json spectra = json::array();
  for (const auto& s : r.spectra) spectra.push_back({{"role", s.role}, {"spectrum", s.spectrum}});
  json timing = json::object();
  for (const auto& [stage, seconds] : r.timing) timing[stage] = seconds;
  j = json{{"input", r.input},
           {"regularity", r.regularity},
           {"spectra", spectra},
           {"verdicts", r.verdicts},
           {"timing", timing}};
}

void from_json(const json& j, Report& r) {
  r.input = j.at("input").get<std::string>();
  r.regularity = j.at("regularity").get<RegularityReport>();
  r.spectra.clear();
  for (const auto& s : j.at("spectra")) {
    r.spectra.push_back({s.at("role").get<std::string>(), s.at("spectrum").get<Spectrum>()});
  }
  r.verdicts = j.at("verdicts").get<std::vector<TheoremVerdict>>();
  r.timing = j.at("timing").get<std::map<std::string, double>>();
}

}  // namespace gallai
