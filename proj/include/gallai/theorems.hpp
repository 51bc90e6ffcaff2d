#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

using DetailValue = std::variant<bool, std::int64_t, double, std::string>;

/// Outcome of checking one result on one graph.
///
/// When the hypotheses fail, `conclusion_holds` is empty rather than false.
/// A failed conclusion always carries a witness naming the offending
/// vertices or edges. Composite checks list their pieces in `parts`; the
/// parent concludes true only if every applicable part does.
struct TheoremVerdict {
  std::string theorem_id;
  bool hypotheses_hold = false;
  std::optional<bool> conclusion_holds;
  std::optional<std::string> witness;
  std::map<std::string, DetailValue> details;
  std::vector<TheoremVerdict> parts;

  /// Hypotheses hold but the conclusion does not.
  bool failed() const { return hypotheses_hold && conclusion_holds == false; }

  bool operator==(const TheoremVerdict&) const = default;
};

namespace theorem_id {
inline constexpr std::string_view kSrgBasics = "lemma-srg-basics";
inline constexpr std::string_view kFanWheel = "lemma-fan-wheel";
inline constexpr std::string_view kRegularity = "thm-regularity";
inline constexpr std::string_view kGallaiPartition = "thm-gallai-partition";
inline constexpr std::string_view kGallaiLambda0 = "thm-gallai-lambda0";
inline constexpr std::string_view kGallaiLambda1 = "thm-gallai-lambda1";
inline constexpr std::string_view kGallaiTwoConnected = "thm-gallai-two-connected";
inline constexpr std::string_view kAntiGallaiPartition = "thm-antigallai-partition";
inline constexpr std::string_view kAntiGallaiLambda2 = "thm-antigallai-lambda2";
inline constexpr std::string_view kSpecBandInterlace = "thm-spec-band-interlace";
}  // namespace theorem_id

/// Edge-regular (n,k,λ) G has Γ(G) 2(k-λ-1)-regular and Δ(G) 2λ-regular.
TheoremVerdict verify_regularity_theorem(const Graph& g);

/// For connected G: Γ(G) is disconnected iff E(G) splits into classes whose
/// incident cross-class pairs all span triangles. Checked on the partition
/// induced by the components of Γ(G).
TheoremVerdict verify_gallai_partition(const Graph& g);

/// Mirror of the above for Δ(G): cross-class incident pairs never span a
/// triangle, and at least one such pair exists.
TheoremVerdict verify_antigallai_partition(const Graph& g);

/// Connected (n,k,0,μ) SRG with k >= 3: Γ(G) is connected and edge-regular
/// (nk/2, 2k-2, k-2), and Γ(G) is strongly regular iff every two disjoint
/// edges lie on a common C5 (μ = 1) or C4 (μ > 1).
TheoremVerdict verify_gallai_lambda0(const Graph& g);

/// Connected (n,k,1,μ) SRG: Γ(G) is edge-regular (nk/2, 2k-4, k-4), and
/// strongly regular iff μ > 1, k = 4 and every two disjoint edges lie on a C4.
TheoremVerdict verify_gallai_lambda1(const Graph& g);

/// Connected SRG with λ in {0,1}: Γ(G) is 2-connected.
TheoremVerdict verify_gallai_two_connected(const Graph& g);

/// Connected (n,k,2,μ) SRG whose every neighbourhood induces a single cycle:
/// Δ(G) is connected and edge-regular (nk/2, 4, 1).
TheoremVerdict verify_antigallai_lambda2(const Graph& g);

/// Same hypotheses: spec(Δ(G)) lies in [-4,4] with 4 attained, and the
/// closed-form spectrum of R(C_k) interlaces it.
TheoremVerdict verify_spec_band_interlacing(const Graph& g);

/// Seven local facts about a connected SRG (any k), one part each:
/// μ >= 1; μ > 1 puts every non-adjacent pair on a C4; every edge uv and
/// vertex w have a common neighbour or lie on a cycle of length <= 5; every
/// two edges have a common neighbour of all endpoints or lie on a cycle of
/// length <= 6; μ = 1 forbids induced diamonds and C4s; G is 2-connected;
/// λ <= 1 forbids diamond and K4 subgraphs.
TheoremVerdict verify_srg_local_structure(const Graph& g);

/// λ = 1: every closed neighbourhood is a fan. λ >= 2: every vertex is the
/// hub of at least one wheel.
TheoremVerdict verify_fan_and_wheel_lemmas(const Graph& g);

/// Identifiers accepted by verify_by_id, in the order verify_all runs them.
std::vector<std::string> theorem_ids();

/// Throws InputError for unknown ids.
TheoremVerdict verify_by_id(std::string_view id, const Graph& g);

std::vector<TheoremVerdict> verify_all(const Graph& g);

}  // namespace gallai
