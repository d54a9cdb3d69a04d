#include <doctest.h>

#include <set>
#include <vector>

#include "netident/errors.hpp"
#include "netident/examples.hpp"
#include "netident/identifiability.hpp"
#include "test_util.hpp"

using namespace netident;

namespace {

const NodeVerdict& verdict_for(const IdentifiabilityReport& r, int node) {
  for (const auto& v : r.nodes)
    if (v.node == node) return v;
  REQUIRE(false);
  return r.nodes.front();
}

}  // namespace

TEST_CASE("string round trips for classes and verdicts") {
  CHECK(function_class_from_string("polynomial") == FunctionClass::Polynomial);
  CHECK(function_class_from_string("analytic") == FunctionClass::Analytic);
  CHECK(function_class_from_string("additive") == FunctionClass::Additive);
  CHECK_THROWS_AS(function_class_from_string("smooth"), Error);
  CHECK(to_string(Verdict::GenericallyIdentifiable) == "GenericallyIdentifiable");
  CHECK(to_string(Verdict::NotIdentifiable) == "NotIdentifiable");
  CHECK(to_string(Verdict::UnknownConjectured) == "UnknownConjectured");
  CHECK(to_string(Verdict::Unknown) == "Unknown");
}

TEST_CASE("fig5 is generically identifiable everywhere") {
  ValidatedDigraph g = validate(bundled_example("fig5"));
  IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
  CHECK(r.network_verdict == Verdict::GenericallyIdentifiable);
  CHECK(r.source_violations.empty());
  for (const auto& v : r.nodes) {
    CHECK(v.verdict == Verdict::GenericallyIdentifiable);
    CHECK(v.achieved == v.required);
    REQUIRE(v.witness.has_value());
    CHECK(family_is_valid(g, *v.witness));
    CHECK(v.witness->count() == v.required);
    CHECK(!v.deficiency.has_value());
  }
}

TEST_CASE("fig7 node 7 is deficient; class decides the label") {
  ValidatedDigraph g = validate(bundled_example("fig7"));

  IdentifiabilityReport poly = analyze(g, FunctionClass::Polynomial);
  const NodeVerdict& v7 = verdict_for(poly, 7);
  CHECK(v7.required == 3);
  CHECK(v7.achieved == 2);
  CHECK(v7.verdict == Verdict::NotIdentifiable);
  REQUIRE(v7.deficiency.has_value());
  CHECK(v7.deficiency->size() == 2);
  CHECK(v7.deficiency->nodes == std::vector<int>{1, 2});
  CHECK(poly.network_verdict == Verdict::NotIdentifiable);
  // All other nodes reach their full count.
  for (const auto& v : poly.nodes)
    if (v.node != 7) CHECK(v.verdict == Verdict::GenericallyIdentifiable);

  IdentifiabilityReport ana = analyze(g, FunctionClass::Analytic);
  CHECK(verdict_for(ana, 7).verdict == Verdict::UnknownConjectured);
  CHECK(ana.network_verdict == Verdict::UnknownConjectured);

  IdentifiabilityReport add = analyze(g, FunctionClass::Additive);
  CHECK(verdict_for(add, 7).verdict == Verdict::Unknown);
  CHECK(add.network_verdict == Verdict::Unknown);
}

TEST_CASE("unexcited feeding sources are flagged") {
  Digraph raw;
  raw.n = 3;
  raw.edges = {{3, 1}, {3, 2}};
  raw.excited = {1};  // source 2 feeds node 3 but is never excited
  ValidatedDigraph g = validate(raw);
  auto viol = check_sources(g);
  REQUIRE(viol.size() == 1);
  CHECK(viol[0].node == 2);
  IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
  REQUIRE(r.source_violations.size() == 1);
  CHECK(r.source_violations[0].node == 2);
  CHECK(r.network_verdict == Verdict::NotIdentifiable);
}

TEST_CASE("excited sinks draw an advisory") {
  Digraph raw;
  raw.n = 3;
  raw.edges = {{2, 1}, {3, 2}};
  raw.excited = {1, 3};  // exciting the sink 3 cannot help identification
  ValidatedDigraph g = validate(raw);
  auto adv = sink_excitation_advice(g);
  REQUIRE(adv.size() == 1);
  CHECK(adv[0].node == 3);
  // Excited non-sinks never appear.
  Digraph raw2 = raw;
  raw2.excited = {1, 2};
  CHECK(sink_excitation_advice(validate(raw2)).empty());
}

TEST_CASE("analyze rejects partial measurement") {
  Digraph raw;
  raw.n = 2;
  raw.edges = {{2, 1}};
  raw.excited = {1};
  raw.measured = std::set<int>{2};
  ValidatedDigraph g = validate(raw);
  CHECK_THROWS_WITH_AS(analyze(g, FunctionClass::Analytic),
                       doctest::Contains("NotFullMeasurement"), Error);
}

TEST_CASE("network verdict is the worst node verdict") {
  // fig3: node 3 has N = {1,2} but only source 1 is excited -> deficient.
  ValidatedDigraph g = validate(bundled_example("fig3"));
  IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
  bool any_bad = false;
  for (const auto& v : r.nodes) any_bad = any_bad || v.verdict != Verdict::GenericallyIdentifiable;
  CHECK(any_bad);
  CHECK(r.network_verdict == Verdict::NotIdentifiable);
}

TEST_CASE("analysis against brute-force path counts on 50 random DAGs") {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng(Rng::derive(0xA11A, static_cast<std::uint64_t>(trial)));
    int n = static_cast<int>(rng.uniform_int(2, 10));
    ValidatedDigraph g = validate(testutil::random_dag(n, rng, 40), true);
    IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
    for (const auto& v : r.nodes) {
      std::set<int> B(v.targets.begin(), v.targets.end());
      std::set<int> A;
      for (int e : g.excited())
        if (e != v.node && g.reaches(e, v.node)) A.insert(e);
      int oracle = A.empty() ? 0 : brute_force_disjoint(g, A, B);
      CHECK(v.achieved == oracle);
      CHECK(v.required == static_cast<int>(B.size()));
      if (v.achieved == v.required) {
        CHECK(v.verdict == Verdict::GenericallyIdentifiable);
        REQUIRE(v.witness.has_value());
        CHECK(family_is_valid(g, *v.witness));
      } else {
        CHECK(v.verdict == Verdict::NotIdentifiable);
        REQUIRE(v.deficiency.has_value());
        CHECK(v.deficiency->size() == v.achieved);
        std::set<int> cut(v.deficiency->nodes.begin(), v.deficiency->nodes.end());
        if (!A.empty()) CHECK(is_disconnecting(g, A, B, cut));
      }
    }
  }
}

TEST_CASE("tree verdict: identifiable iff every source is excited") {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(Rng::derive(0x73EE, static_cast<std::uint64_t>(trial)));
    int n = static_cast<int>(rng.uniform_int(2, 9));
    Digraph raw = testutil::random_tree(n, rng);
    for (int i = 1; i <= n; ++i)
      if (rng.uniform_int(0, 1) == 1) raw.excited.insert(i);
    ValidatedDigraph g = validate(raw);
    bool all_sources_excited = true;
    for (int s : g.sources())
      if (!g.out_neighbors(s).empty() && !g.excited().count(s)) all_sources_excited = false;
    Verdict tv = tree_verdict(g);
    CHECK((tv == Verdict::GenericallyIdentifiable) == all_sources_excited);
    // Agreement with the general analyzer.
    IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
    bool every_node_gi = r.source_violations.empty();
    for (const auto& v : r.nodes)
      every_node_gi = every_node_gi && v.verdict == Verdict::GenericallyIdentifiable;
    CHECK(every_node_gi == all_sources_excited);
  }
  // Non-trees are refused.
  ValidatedDigraph g5 = validate(bundled_example("fig5"));
  CHECK_THROWS_WITH_AS(tree_verdict(g5), doctest::Contains("NotATree"), Error);
}

TEST_CASE("excitation suggestions repair every deficiency") {
  for (int trial = 0; trial < 40; ++trial) {
    Rng rng(Rng::derive(0x566357, static_cast<std::uint64_t>(trial)));
    int n = static_cast<int>(rng.uniform_int(2, 9));
    ValidatedDigraph g = validate(testutil::random_dag(n, rng, 40), true);
    ExcitationSuggestion s = excitation_suggestion(g);
    for (int e : g.excited()) CHECK(s.excited.count(e));
    for (int a : s.added) {
      CHECK(!g.excited().count(a));
      CHECK(!g.out_neighbors(a).empty());  // never propose a pure sink
    }
    // Re-validate with the proposed excitation: everything identifiable.
    Digraph raw;
    raw.n = g.n();
    raw.edges = g.edges();
    raw.excited = s.excited;
    ValidatedDigraph g2 = validate(raw, true);
    IdentifiabilityReport r = analyze(g2, FunctionClass::Polynomial);
    CHECK(r.source_violations.empty());
    for (const auto& v : r.nodes) CHECK(v.verdict == Verdict::GenericallyIdentifiable);
    if (s.already_sufficient) CHECK(s.added.empty());
  }
  // fig7 needs exactly one extra excitation.
  ValidatedDigraph f7 = validate(bundled_example("fig7"));
  ExcitationSuggestion s = excitation_suggestion(f7);
  CHECK(!s.already_sufficient);
  CHECK(s.added == std::vector<int>{3});
  CHECK(s.excited == std::set<int>{1, 2, 3});
  // fig5 is already fine.
  ExcitationSuggestion s5 = excitation_suggestion(validate(bundled_example("fig5")));
  CHECK(s5.already_sufficient);
  CHECK(s5.added.empty());
}
