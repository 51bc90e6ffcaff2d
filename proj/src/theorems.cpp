#include "gallai/theorems.hpp"

#include <cmath>
#include <functional>
#include <utility>

#include "gallai/errors.hpp"
#include "gallai/kernels.hpp"
#include "gallai/operators.hpp"
#include "gallai/regularity.hpp"
#include "gallai/spectral.hpp"
#include "gallai/structure.hpp"

namespace gallai {

namespace {

using IndexPair = std::pair<std::size_t, std::size_t>;

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string params_text(const RegularityReport& r) {
  std::string out = "(" + std::to_string(r.n);
  if (r.k) out += "," + std::to_string(*r.k);
  if (r.lambda) out += "," + std::to_string(*r.lambda);
  if (r.mu) out += "," + std::to_string(*r.mu);
  return out + ")";
}

/// Collects conclusion checks; the first failure becomes the witness.
class Conclusion {
 public:
  void require(bool ok, std::string witness) {
    if (!ok && holds_) {
      holds_ = false;
      witness_ = std::move(witness);
    }
  }

  void finish(TheoremVerdict& v) {
    v.hypotheses_hold = true;
    v.conclusion_holds = holds_;
    if (!holds_) v.witness = witness_;
  }

 private:
  bool holds_ = true;
  std::string witness_;
};

TheoremVerdict not_applicable(std::string_view id, std::string reason,
                              std::map<std::string, DetailValue> details = {}) {
  TheoremVerdict v;
  v.theorem_id = std::string(id);
  v.details = std::move(details);
  v.details["reason"] = std::move(reason);
  return v;
}

void record(std::map<std::string, DetailValue>& details, const std::string& prefix,
            const RegularityReport& r) {
  details[prefix + "level"] = std::string(to_string(r.level));
  details[prefix + "n"] = r.n;
  if (r.k) details[prefix + "k"] = *r.k;
  if (r.lambda) details[prefix + "lambda"] = *r.lambda;
  if (r.mu) details[prefix + "mu"] = *r.mu;
}

/// Why a graph fails the "connected SRG with k >= 3" gate, if it does.
/// The local-structure lemma also holds on C4 and C5, so it may waive k >= 3.
std::optional<std::string> srg_gate(const Graph& g, const RegularityReport& r, bool require_k3 = true) {
  if (!is_connected(g)) return "graph is disconnected";
  if (r.level != RegularityLevel::strongly_regular) return "graph is not strongly regular";
  if (require_k3 && *r.k < 3) return "k < 3 is excluded";
  return std::nullopt;
}

std::vector<IndexPair> disjoint_edge_pairs(const Graph& g) {
  std::vector<IndexPair> pairs;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!shared_endpoint(edges[i], edges[j])) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<IndexPair> all_edge_pairs(const Graph& g) {
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

/// First disjoint edge pair not on a common cycle of `length`, if any.
std::optional<IndexPair> co_cycle_counterexample(const Graph& g, std::size_t length) {
  const auto pairs = disjoint_edge_pairs(g);
  const auto& edges = g.edges();
  const auto bad = kernels::omp::find_first(pairs.size(), [&](std::size_t idx) {
    const auto [i, j] = pairs[idx];
    return !edges_on_common_cycle(g, edges[i], edges[j], length);
  });
  if (!bad) return std::nullopt;
  return pairs[*bad];
}

bool matches(const RegularityReport& r, std::int64_t n, std::int64_t k, std::int64_t lambda) {
  return r.at_least(RegularityLevel::edge_regular) && r.n == n && r.k == k && r.lambda == lambda;
}

/// Every vertex's neighbourhood induces exactly one cycle through all of it.
std::optional<Vertex> vertex_without_unique_wheel(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto wheels = wheels_at_vertex(g, v);
    if (wheels.size() != 1 || wheels.front().size() != g.neighbors(v).size()) return v;
  }
  return std::nullopt;
}

std::optional<std::string> lambda2_gate(const Graph& g, const RegularityReport& r) {
  if (auto reason = srg_gate(g, r)) return reason;
  if (*r.lambda != 2) return "lambda != 2";
  if (auto v = vertex_without_unique_wheel(g)) {
    return "vertex " + std::to_string(*v) + " is not the hub of exactly one wheel";
  }
  return std::nullopt;
}

TheoremVerdict verify_partition(const Graph& g, DerivedKind kind, std::string_view id) {
  if (!is_connected(g)) return not_applicable(id, "graph is disconnected");
  const bool gallai_side = kind == DerivedKind::gallai;
  const DerivedGraph derived = derive(g, kind);
  std::size_t classes = 0;
  const auto comp = connected_components(derived.graph, &classes);

  const auto& edges = g.edges();
  Conclusion c;
  std::int64_t cross_pairs = 0;
  std::int64_t violations = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (comp[i] == comp[j] || !shared_endpoint(edges[i], edges[j])) continue;
      ++cross_pairs;
      const bool triangle = edges_span_triangle(g, edges[i], edges[j]);
      violations += triangle != gallai_side;
      c.require(triangle == gallai_side,
                "incident edges " + edge_text(edges[i]) + " and " + edge_text(edges[j]) +
                    " lie in different classes but " +
                    (gallai_side ? "do not span a triangle" : "span a triangle"));
    }
  }
  const bool disconnected = !is_connected(derived.graph);
  // The component partition qualifies iff it has >= 2 classes and the
  // cross-class condition holds; the derived graph must then be disconnected.
  const bool partition_qualifies = classes >= 2 && cross_pairs > 0 && violations == 0;
  c.require(!(classes >= 2) || cross_pairs > 0,
            "components do not meet across an incident pair although G is connected");
  c.require(partition_qualifies == disconnected,
            "partition condition and connectivity of the derived graph disagree");

  TheoremVerdict v;
  v.theorem_id = std::string(id);
  v.details["classes"] = static_cast<std::int64_t>(classes);
  v.details["cross_class_incident_pairs"] = cross_pairs;
  v.details["derived_disconnected"] = disconnected;
  c.finish(v);
  return v;
}

/// Aggregates applicable parts into the parent verdict.
void fold_parts(TheoremVerdict& parent) {
  Conclusion c;
  for (const auto& part : parent.parts) {
    if (part.hypotheses_hold) {
      c.require(*part.conclusion_holds, part.theorem_id + ": " + part.witness.value_or(""));
    }
  }
  c.finish(parent);
}

TheoremVerdict part(std::string id, bool applicable, std::string reason,
                    const std::function<std::optional<std::string>()>& check) {
  if (!applicable) return not_applicable(id, std::move(reason));
  TheoremVerdict v;
  v.theorem_id = std::move(id);
  Conclusion c;
  const auto failure = check();
  c.require(!failure, failure.value_or(""));
  c.finish(v);
  return v;
}

}  // namespace

TheoremVerdict verify_regularity_theorem(const Graph& g) {
  const auto r = classify(g);
  std::map<std::string, DetailValue> details;
  record(details, "g_", r);
  if (!r.at_least(RegularityLevel::edge_regular)) {
    return not_applicable(theorem_id::kRegularity, "graph is not edge-regular", details);
  }
  const std::int64_t gamma_degree = 2 * (*r.k - *r.lambda - 1);
  const std::int64_t delta_degree = 2 * *r.lambda;
  const auto gamma = gallai(g);
  const auto delta = anti_gallai(g);

  Conclusion c;
  for (Vertex x = 0; x < gamma.graph.order(); ++x) {
    const auto d = static_cast<std::int64_t>(degree(gamma.graph, x));
    c.require(d == gamma_degree, "Gallai vertex " + std::to_string(x) + " (edge " +
                                     edge_text(gamma.source_edges[x]) + ") has degree " +
                                     std::to_string(d) + ", expected " + std::to_string(gamma_degree));
  }
  for (Vertex x = 0; x < delta.graph.order(); ++x) {
    const auto d = static_cast<std::int64_t>(degree(delta.graph, x));
    c.require(d == delta_degree, "anti-Gallai vertex " + std::to_string(x) + " (edge " +
                                     edge_text(delta.source_edges[x]) + ") has degree " +
                                     std::to_string(d) + ", expected " + std::to_string(delta_degree));
  }
  TheoremVerdict v;
  v.theorem_id = std::string(theorem_id::kRegularity);
  v.details = std::move(details);
  v.details["gallai_degree_expected"] = gamma_degree;
  v.details["anti_gallai_degree_expected"] = delta_degree;
  c.finish(v);
  return v;
}

TheoremVerdict verify_gallai_partition(const Graph& g) {
  return verify_partition(g, DerivedKind::gallai, theorem_id::kGallaiPartition);
}

TheoremVerdict verify_antigallai_partition(const Graph& g) {
  return verify_partition(g, DerivedKind::anti_gallai, theorem_id::kAntiGallaiPartition);
}

TheoremVerdict verify_gallai_lambda0(const Graph& g) {
  const auto r = classify(g);
  std::map<std::string, DetailValue> details;
  record(details, "g_", r);
  if (auto reason = srg_gate(g, r)) return not_applicable(theorem_id::kGallaiLambda0, *reason, details);
  if (*r.lambda != 0) return not_applicable(theorem_id::kGallaiLambda0, "lambda != 0", details);

  const std::int64_t n = r.n, k = *r.k, mu = *r.mu;
  const auto gamma = gallai(g);
  const auto gr = classify(gamma.graph);
  record(details, "gallai_", gr);

  Conclusion c;
  c.require(gamma.graph == line_graph(g).graph, "Gallai graph differs from the line graph");
  c.require(is_connected(gamma.graph), "Gallai graph is disconnected");
  c.require(matches(gr, n * k / 2, 2 * k - 2, k - 2),
            "Gallai graph parameters " + params_text(gr) + " differ from (nk/2, 2k-2, k-2)");

  const std::size_t length = mu == 1 ? 5 : 4;
  const auto counterexample = co_cycle_counterexample(g, length);
  const bool side_srg = gr.level == RegularityLevel::strongly_regular;
  const bool side_cycles = !counterexample;
  details["cycle_length"] = static_cast<std::int64_t>(length);
  details["side_strongly_regular"] = side_srg;
  details["side_cycle_condition"] = side_cycles;
  if (counterexample) {
    details["cycle_condition_counterexample"] = edge_text(g.edges()[counterexample->first]) + " " +
                                                edge_text(g.edges()[counterexample->second]);
  }
  c.require(side_srg == side_cycles,
            std::string("Gallai graph is ") + (side_srg ? "" : "not ") +
                "strongly regular but the C" + std::to_string(length) + " condition " +
                (side_cycles ? "holds" : "fails"));

  TheoremVerdict v;
  v.theorem_id = std::string(theorem_id::kGallaiLambda0);
  v.details = std::move(details);
  c.finish(v);
  return v;
}

TheoremVerdict verify_gallai_lambda1(const Graph& g) {
  const auto r = classify(g);
  std::map<std::string, DetailValue> details;
  record(details, "g_", r);
  if (auto reason = srg_gate(g, r)) return not_applicable(theorem_id::kGallaiLambda1, *reason, details);
  if (*r.lambda != 1) return not_applicable(theorem_id::kGallaiLambda1, "lambda != 1", details);

  const std::int64_t n = r.n, k = *r.k, mu = *r.mu;
  const auto gamma = gallai(g);
  const auto gr = classify(gamma.graph);
  record(details, "gallai_", gr);

  // Two Gallai-adjacent edges uv, uw share exactly the edges ux with x outside
  // N(v) and N(w). With lambda = 1 that leaves k-4 of them, not k-2.
  details["stated_gallai_lambda"] = k - 2;
  Conclusion c;
  c.require(matches(gr, n * k / 2, 2 * k - 4, k - 4),
            "Gallai graph parameters " + params_text(gr) + " differ from (nk/2, 2k-4, k-4)");

  const auto counterexample = co_cycle_counterexample(g, 4);
  const bool side_srg = gr.level == RegularityLevel::strongly_regular;
  const bool side_condition = mu > 1 && k == 4 && !counterexample;
  details["side_strongly_regular"] = side_srg;
  details["side_condition"] = side_condition;
  details["c4_condition"] = !counterexample;
  if (counterexample) {
    details["cycle_condition_counterexample"] = edge_text(g.edges()[counterexample->first]) + " " +
                                                edge_text(g.edges()[counterexample->second]);
  }
  c.require(side_srg == side_condition,
            std::string("Gallai graph is ") + (side_srg ? "" : "not ") +
                "strongly regular but [mu>1, k=4, C4 condition] is " +
                (side_condition ? "true" : "false"));

  TheoremVerdict v;
  v.theorem_id = std::string(theorem_id::kGallaiLambda1);
  v.details = std::move(details);
  c.finish(v);
  return v;
}

TheoremVerdict verify_gallai_two_connected(const Graph& g) {
  const auto r = classify(g);
  std::map<std::string, DetailValue> details;
  record(details, "g_", r);
  if (auto reason = srg_gate(g, r)) {
    return not_applicable(theorem_id::kGallaiTwoConnected, *reason, details);
  }
  if (*r.lambda > 1) return not_applicable(theorem_id::kGallaiTwoConnected, "lambda > 1", details);

  const auto gamma = gallai(g);
  Conclusion c;
  const bool connected = is_connected(gamma.graph);
  c.require(connected, "Gallai graph is disconnected");
  if (connected) {
    const auto cuts = articulation_vertices(gamma.graph);
    c.require(cuts.empty() && gamma.graph.order() >= 3,
              cuts.empty() ? "Gallai graph has fewer than 3 vertices"
                           : "Gallai vertex " + std::to_string(cuts.front()) + " (edge " +
                                 edge_text(gamma.source_edges[cuts.front()]) + ") is a cut vertex");
  }
  TheoremVerdict v;
  v.theorem_id = std::string(theorem_id::kGallaiTwoConnected);
  v.details = std::move(details);
  v.details["gallai_order"] = static_cast<std::int64_t>(gamma.graph.order());
  c.finish(v);
  return v;
}

TheoremVerdict verify_antigallai_lambda2(const Graph& g) {
  const auto r = classify(g);
  std::map<std::string, DetailValue> details;
  record(details, "g_", r);
  if (auto reason = lambda2_gate(g, r)) {
    return not_applicable(theorem_id::kAntiGallaiLambda2, *reason, details);
  }
  const std::int64_t n = r.n, k = *r.k;
  const auto delta = anti_gallai(g);
  const auto dr = classify(delta.graph);
  record(details, "anti_gallai_", dr);

  Conclusion c;
  c.require(is_connected(delta.graph), "anti-Gallai graph is disconnected");
  c.require(matches(dr, n * k / 2, 4, 1),
            "anti-Gallai parameters " + params_text(dr) + " differ from (nk/2, 4, 1)");
  TheoremVerdict v;
  v.theorem_id = std::string(theorem_id::kAntiGallaiLambda2);
  v.details = std::move(details);
  c.finish(v);
  return v;
}

TheoremVerdict verify_spec_band_interlacing(const Graph& g) {
  const auto r = classify(g);
  std::map<std::string, DetailValue> details;
  record(details, "g_", r);
  if (auto reason = lambda2_gate(g, r)) {
    return not_applicable(theorem_id::kSpecBandInterlace, *reason, details);
  }
  const auto delta = anti_gallai(g);
  const auto spectrum = eigenvalues(delta.graph);
  const auto wheel = rcn_spectrum(*r.k);
  const double largest = spectrum.values.empty() ? 0.0 : spectrum.values.front();

  Conclusion c;
  c.require(spectrum_in_band(spectrum, 4.0), "an anti-Gallai eigenvalue lies outside [-4,4]");
  c.require(std::abs(largest - 4.0) <= kComparisonTolerance,
            "largest anti-Gallai eigenvalue is " + std::to_string(largest) + ", not 4");
  const bool interlaced = wheel.size() < spectrum.size() && interlaces(wheel, spectrum);
  c.require(interlaced, "R(C_" + std::to_string(*r.k) + ") spectrum does not interlace spec(anti-Gallai)");

  TheoremVerdict v;
  v.theorem_id = std::string(theorem_id::kSpecBandInterlace);
  v.details = std::move(details);
  v.details["largest_eigenvalue"] = largest;
  v.details["smallest_eigenvalue"] = spectrum.values.empty() ? 0.0 : spectrum.values.back();
  v.details["wheel_spectrum_size"] = static_cast<std::int64_t>(wheel.size());
  c.finish(v);
  return v;
}

TheoremVerdict verify_srg_local_structure(const Graph& g) {
  const auto r = classify(g);
  std::map<std::string, DetailValue> details;
  record(details, "g_", r);
  const std::string id(theorem_id::kSrgBasics);
  if (auto reason = srg_gate(g, r, false)) return not_applicable(id, *reason, details);

  const std::int64_t lambda = *r.lambda, mu = *r.mu;
  const std::size_t n = g.order();
  const auto& edges = g.edges();
  auto sub = [&](int i) { return id + "." + std::to_string(i); };

  TheoremVerdict v;
  v.theorem_id = id;
  v.details = std::move(details);

  v.parts.push_back(part(sub(1), true, "", [&]() -> std::optional<std::string> {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        if (!g.adjacent(x, y) && common_neighbor_count(g, x, y) == 0) {
          return "non-adjacent " + std::to_string(x) + "," + std::to_string(y) +
                 " have no common neighbour";
        }
      }
    }
    return std::nullopt;
  }));

  v.parts.push_back(part(sub(2), mu > 1, "mu <= 1", [&]() -> std::optional<std::string> {
    std::vector<IndexPair> pairs;
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        if (!g.adjacent(x, y)) pairs.emplace_back(x, y);
      }
    }
    const auto bad = kernels::omp::find_first(pairs.size(), [&](std::size_t i) {
      const Vertex both[] = {pairs[i].first, pairs[i].second};
      return !find_cycle(g, 4, {}, both);
    });
    if (!bad) return std::nullopt;
    return "non-adjacent " + std::to_string(pairs[*bad].first) + "," +
           std::to_string(pairs[*bad].second) + " lie on no C4";
  }));

  v.parts.push_back(part(sub(3), true, "", [&]() -> std::optional<std::string> {
    const auto bad = kernels::omp::find_first(edges.size() * n, [&](std::size_t idx) {
      const Edge e = edges[idx / n];
      const Vertex w = idx % n;
      if (e.incident_to(w)) return false;
      for (Vertex y = 0; y < n; ++y) {
        if (g.adjacent(y, w) && g.adjacent(y, e.u) && g.adjacent(y, e.v)) return false;
      }
      const Vertex three[] = {w, e.u, e.v};
      for (std::size_t len = 3; len <= 5; ++len) {
        if (find_cycle(g, len, {}, three)) return false;
      }
      return true;
    });
    if (!bad) return std::nullopt;
    return "edge " + edge_text(edges[*bad / n]) + " and vertex " + std::to_string(*bad % n) +
           " have no common neighbour and share no cycle of length <= 5";
  }));

  v.parts.push_back(part(sub(4), true, "", [&]() -> std::optional<std::string> {
    const auto pairs = all_edge_pairs(g);
    const auto bad = kernels::omp::find_first(pairs.size(), [&](std::size_t idx) {
      const Edge a = edges[pairs[idx].first];
      const Edge b = edges[pairs[idx].second];
      for (Vertex z = 0; z < n; ++z) {
        if (a.incident_to(z) || b.incident_to(z)) continue;
        if (g.adjacent(z, a.u) && g.adjacent(z, a.v) && g.adjacent(z, b.u) && g.adjacent(z, b.v)) {
          return false;
        }
      }
      const Edge both[] = {a, b};
      for (std::size_t len = 3; len <= 6; ++len) {
        if (find_cycle(g, len, both, {})) return false;
      }
      return true;
    });
    if (!bad) return std::nullopt;
    return "edges " + edge_text(edges[pairs[*bad].first]) + " and " +
           edge_text(edges[pairs[*bad].second]) +
           " have no common neighbour and share no cycle of length <= 6";
  }));

  auto quad_text = [](const kernels::Quadruple& q) {
    return "{" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) +
           "," + std::to_string(q[3]) + "}";
  };

  v.parts.push_back(part(sub(5), mu == 1, "mu != 1", [&]() -> std::optional<std::string> {
    for (auto p : {Pattern::diamond, Pattern::c4}) {
      if (auto q = find_forbidden_induced(g, p)) {
        return quad_text(*q) + " induces a " + std::string(to_string(p));
      }
    }
    return std::nullopt;
  }));

  v.parts.push_back(part(sub(6), true, "", [&]() -> std::optional<std::string> {
    if (is_two_connected(g)) return std::nullopt;
    const auto cuts = articulation_vertices(g);
    return cuts.empty() ? std::string("graph is not 2-connected")
                        : "vertex " + std::to_string(cuts.front()) + " is a cut vertex";
  }));

  v.parts.push_back(part(sub(7), lambda <= 1, "lambda > 1", [&]() -> std::optional<std::string> {
    if (contains_subgraph(g, Pattern::diamond)) return "graph contains a diamond";
    if (contains_subgraph(g, Pattern::k4)) return "graph contains a K4";
    return std::nullopt;
  }));

  fold_parts(v);
  return v;
}

TheoremVerdict verify_fan_and_wheel_lemmas(const Graph& g) {
  const auto r = classify(g);
  std::map<std::string, DetailValue> details;
  record(details, "g_", r);
  const std::string id(theorem_id::kFanWheel);
  if (auto reason = srg_gate(g, r)) return not_applicable(id, *reason, details);
  const std::int64_t lambda = *r.lambda;
  if (lambda == 0) return not_applicable(id, "lambda = 0", details);

  TheoremVerdict v;
  v.theorem_id = id;
  v.details = std::move(details);
  v.details["fan_size"] = *r.k / 2;

  v.parts.push_back(part("lemma-fan", lambda == 1, "lambda != 1", [&]() -> std::optional<std::string> {
    for (Vertex x = 0; x < g.order(); ++x) {
      if (!neighborhood_is_fan(g, x)) return "vertex " + std::to_string(x) + " is not the centre of a fan";
    }
    return std::nullopt;
  }));
  v.parts.push_back(part("lemma-wheel", lambda >= 2, "lambda < 2", [&]() -> std::optional<std::string> {
    for (Vertex x = 0; x < g.order(); ++x) {
      if (!find_wheel_rim(g, x)) return "vertex " + std::to_string(x) + " is the hub of no wheel";
    }
    return std::nullopt;
  }));
  fold_parts(v);
  return v;
}

namespace {

using Verifier = TheoremVerdict (*)(const Graph&);

const std::vector<std::pair<std::string_view, Verifier>>& registry() {
  static const std::vector<std::pair<std::string_view, Verifier>> table = {
      {theorem_id::kSrgBasics, verify_srg_local_structure},
      {theorem_id::kFanWheel, verify_fan_and_wheel_lemmas},
      {theorem_id::kRegularity, verify_regularity_theorem},
      {theorem_id::kGallaiPartition, verify_gallai_partition},
      {theorem_id::kGallaiLambda0, verify_gallai_lambda0},
      {theorem_id::kGallaiLambda1, verify_gallai_lambda1},
      {theorem_id::kGallaiTwoConnected, verify_gallai_two_connected},
      {theorem_id::kAntiGallaiPartition, verify_antigallai_partition},
      {theorem_id::kAntiGallaiLambda2, verify_antigallai_lambda2},
      {theorem_id::kSpecBandInterlace, verify_spec_band_interlacing},
  };
  return table;
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.emplace_back(id);
  return ids;
}

TheoremVerdict verify_by_id(std::string_view id, const Graph& g) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) return fn(g);
  }
  throw InputError("unknown theorem id '" + std::string(id) + "'");
}

std::vector<TheoremVerdict> verify_all(const Graph& g) {
  std::vector<TheoremVerdict> out;
  for (const auto& [id, fn] : registry()) out.push_back(fn(g));
  return out;
}

}  // namespace gallai
