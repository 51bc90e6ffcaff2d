#include <gtest/gtest.h>

#include "gallai/errors.hpp"
#include "gallai/generators.hpp"
#include "gallai/operators.hpp"
#include "gallai/theorems.hpp"

namespace gallai {
namespace {

const TheoremVerdict& part_named(const TheoremVerdict& v, const std::string& id) {
  for (const auto& p : v.parts) {
    if (p.theorem_id == id) return p;
  }
  throw std::out_of_range("no part " + id);
}

template <class T>
T detail(const TheoremVerdict& v, const std::string& key) {
  return std::get<T>(v.details.at(key));
}

void expect_holds(const TheoremVerdict& v) {
  EXPECT_TRUE(v.hypotheses_hold) << v.theorem_id;
  EXPECT_EQ(v.conclusion_holds, true) << v.theorem_id << ": " << v.witness.value_or("");
}

void expect_not_applicable(const TheoremVerdict& v) {
  EXPECT_FALSE(v.hypotheses_hold) << v.theorem_id;
  EXPECT_FALSE(v.conclusion_holds.has_value()) << v.theorem_id;
  EXPECT_TRUE(v.details.count("reason")) << v.theorem_id;
}

// No applicable verdict may fail on the corpus, and failed verdicts must carry witnesses.
TEST(Theorems, CorpusSweepHasNoFailures) {
  for (const auto& entry : srg_corpus()) {
    for (const auto& v : verify_all(entry.graph)) {
      SCOPED_TRACE(entry.label() + " " + v.theorem_id);
      EXPECT_FALSE(v.failed()) << v.witness.value_or("");
      if (!v.hypotheses_hold) EXPECT_FALSE(v.conclusion_holds.has_value());
      for (const auto& p : v.parts) EXPECT_FALSE(p.failed()) << p.theorem_id << " " << p.witness.value_or("");
    }
  }
}

TEST(Theorems, VerdictsAreDeterministic) {
  for (const auto& entry : srg_corpus()) EXPECT_EQ(verify_all(entry.graph), verify_all(entry.graph));
}

TEST(Theorems, ApplicabilityMatrix) {
  const Graph p = petersen(), k33 = complete_bipartite(3, 3), c5 = paley(5);
  const Graph q13 = paley(13), oct = octahedron(), r3 = rook(3), f5 = folded5cube();

  expect_holds(verify_gallai_lambda0(p));
  expect_holds(verify_gallai_lambda0(k33));
  expect_holds(verify_gallai_lambda0(f5));
  expect_not_applicable(verify_gallai_lambda0(oct));
  expect_not_applicable(verify_gallai_lambda0(c5));

  expect_holds(verify_gallai_lambda1(r3));
  expect_not_applicable(verify_gallai_lambda1(q13));
  expect_not_applicable(verify_gallai_lambda1(c5));

  expect_holds(verify_gallai_two_connected(p));
  expect_holds(verify_gallai_two_connected(r3));
  expect_not_applicable(verify_gallai_two_connected(q13));

  expect_holds(verify_antigallai_lambda2(oct));
  expect_holds(verify_antigallai_lambda2(q13));
  expect_not_applicable(verify_antigallai_lambda2(p));
  expect_holds(verify_spec_band_interlacing(oct));
  expect_holds(verify_spec_band_interlacing(q13));
  expect_not_applicable(verify_spec_band_interlacing(paley(17)));
}

TEST(Theorems, GallaiLambdaZeroBiconditional) {
  const auto k = verify_gallai_lambda0(complete_bipartite(3, 3));
  EXPECT_TRUE(detail<bool>(k, "side_strongly_regular"));
  EXPECT_TRUE(detail<bool>(k, "side_cycle_condition"));
  EXPECT_EQ(detail<std::int64_t>(k, "gallai_n"), 9);
  EXPECT_EQ(detail<std::int64_t>(k, "gallai_mu"), 2);

  const auto p = verify_gallai_lambda0(petersen());
  EXPECT_FALSE(detail<bool>(p, "side_strongly_regular"));
  EXPECT_FALSE(detail<bool>(p, "side_cycle_condition"));
  EXPECT_EQ(detail<std::int64_t>(p, "gallai_k"), 4);
  EXPECT_EQ(detail<std::int64_t>(p, "gallai_lambda"), 1);
}

TEST(Theorems, GallaiLambdaOneMeasuredParameters) {
  const auto v = verify_gallai_lambda1(rook(3));
  EXPECT_EQ(detail<std::int64_t>(v, "gallai_n"), 18);
  EXPECT_EQ(detail<std::int64_t>(v, "gallai_k"), 4);
  EXPECT_EQ(detail<std::int64_t>(v, "gallai_lambda"), 0);
  EXPECT_EQ(detail<std::int64_t>(v, "stated_gallai_lambda"), 2);
  EXPECT_FALSE(detail<bool>(v, "side_strongly_regular"));
  EXPECT_FALSE(detail<bool>(v, "side_condition"));
}

TEST(Theorems, RegularityTheoremOnNonSrg) {
  expect_holds(verify_regularity_theorem(cycle(7)));
  expect_holds(verify_regularity_theorem(complete(5)));
  expect_not_applicable(verify_regularity_theorem(path(4)));
}

TEST(Theorems, PartitionTheorems) {
  // Graphs with and without triangles, so both sides of each biconditional come up.
  for (const Graph& g : {complete(4), cycle(5), fan(3), wheel(5), petersen(), octahedron(), path(4)}) {
    const auto gp = verify_gallai_partition(g);
    const auto ap = verify_antigallai_partition(g);
    EXPECT_FALSE(gp.failed()) << gp.witness.value_or("");
    EXPECT_FALSE(ap.failed()) << ap.witness.value_or("");
  }
  expect_not_applicable(verify_gallai_partition(empty_graph(3)));
}

TEST(Theorems, SrgLocalStructureParts) {
  const auto p = verify_srg_local_structure(petersen());
  ASSERT_EQ(p.parts.size(), 7u);
  expect_holds(p);
  expect_not_applicable(part_named(p, "lemma-srg-basics.2"));
  expect_holds(part_named(p, "lemma-srg-basics.5"));
  expect_holds(part_named(p, "lemma-srg-basics.7"));

  const auto k = verify_srg_local_structure(complete_bipartite(3, 3));
  expect_not_applicable(part_named(k, "lemma-srg-basics.5"));

  // k = 2 is still covered: C5 satisfies every part.
  expect_holds(verify_srg_local_structure(paley(5)));

  const auto f = verify_srg_local_structure(folded5cube());
  expect_holds(part_named(f, "lemma-srg-basics.2"));
}

TEST(Theorems, FanAndWheelLemmas) {
  const auto r = verify_fan_and_wheel_lemmas(rook(3));
  expect_holds(part_named(r, "lemma-fan"));
  expect_not_applicable(part_named(r, "lemma-wheel"));
  const auto q = verify_fan_and_wheel_lemmas(paley(13));
  expect_holds(part_named(q, "lemma-wheel"));
  expect_holds(verify_fan_and_wheel_lemmas(paley(17)));
  expect_holds(verify_fan_and_wheel_lemmas(triangular(5)));
  expect_not_applicable(verify_fan_and_wheel_lemmas(petersen()));
}

TEST(Theorems, GateReasons) {
  const auto disconnected = verify_gallai_lambda0(anti_gallai(rook(3)).graph);
  EXPECT_EQ(std::get<std::string>(disconnected.details.at("reason")), "graph is disconnected");
  const auto small = verify_gallai_lambda0(paley(5));
  EXPECT_EQ(std::get<std::string>(small.details.at("reason")), "k < 3 is excluded");
}

TEST(Theorems, DispatchById) {
  const auto ids = theorem_ids();
  EXPECT_EQ(ids.size(), 10u);
  for (const auto& id : ids) EXPECT_EQ(verify_by_id(id, petersen()).theorem_id, id);
  EXPECT_THROW(verify_by_id("thm-unknown", petersen()), InputError);
}

}  // namespace
}  // namespace gallai
