// Acceptance gate: twelve end-to-end checks, one PASS/FAIL line each.
// Runs entirely on the bundled example networks plus seeded random draws,
// so a run is reproducible bit for bit. Exits nonzero if any check fails.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netident/certificates.hpp"
#include "netident/errors.hpp"
#include "netident/examples.hpp"
#include "netident/identifiability.hpp"
#include "netident/json_io.hpp"

using namespace netident;

namespace {

struct Reporter {
  int failures = 0;
  void run(int idx, const std::string& label, const std::function<void()>& body) {
    std::string detail;
    bool ok = true;
    try {
      body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    std::printf("%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", idx, label.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

ValidatedDigraph example(const std::string& name) { return validate(bundled_example(name)); }

// Additive fig5 dynamics whose middle-layer edge functions coincide pairwise,
// the precondition for an undetectable in-neighbor swap at node 5.
NetworkDynamics fig5_swap_dynamics(const ValidatedDigraph& g) {
  Polynomial lin = Polynomial::monomial(1, {1}, rat(2));
  Polynomial quad(1);
  quad.add_term({1}, rat(1));
  quad.add_term({2}, rat(1));
  std::map<std::pair<int, int>, Polynomial> f;
  f[{3, 1}] = quad;
  f[{4, 1}] = quad;  // f_{3,1} == f_{4,1}
  f[{3, 2}] = lin;
  f[{4, 2}] = lin;   // f_{3,2} == f_{4,2}
  f[{5, 3}] = Polynomial::monomial(1, {1}, rat(1));
  f[{5, 4}] = Polynomial::monomial(1, {1}, rat(3));  // asymmetric top
  return dynamics_from_edge_functions(g, f);
}

}  // namespace

int main() {
  Reporter rep;

  rep.run(1, "ten-node example: 3 vertex-disjoint paths, dual cut of size 3", [] {
    ValidatedDigraph g = example("fig6");
    std::set<int> A = {1, 2, 3}, B = {7, 8, 9};
    PathFamily fam = max_vertex_disjoint(g, A, B);
    require(fam.count() == 3, "expected 3 disjoint paths, got " + std::to_string(fam.count()));
    require(family_is_valid(g, fam), "returned family is structurally invalid");
    DisconnectingSet cut = min_disconnecting_set(g, A, B);
    require(cut.size() == 3, "expected a minimum cut of size 3");
    require(is_disconnecting(g, A, B, {cut.nodes.begin(), cut.nodes.end()}),
            "returned cut does not disconnect");
    require(is_disconnecting(g, A, B, {4, 5, 6}), "{4,5,6} should disconnect the layers");
    require(fam.count() == brute_force_disjoint(g, A, B), "disagrees with brute force");
  });

  rep.run(2, "five-node example: all nodes identifiable and the swap witness verifies", [] {
    ValidatedDigraph g = example("fig5");
    IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
    require(r.network_verdict == Verdict::GenericallyIdentifiable,
            "network verdict should be identifiable");
    for (const auto& v : r.nodes) {
      require(v.verdict == Verdict::GenericallyIdentifiable && v.witness.has_value(),
              "node " + std::to_string(v.node) + " lacks a path witness");
      require(family_is_valid(g, *v.witness) && v.witness->count() == v.required,
              "witness for node " + std::to_string(v.node) + " is not a full valid family");
    }
    NetworkDynamics dyn = fig5_swap_dynamics(g);
    Certificate c = swap_witness(g, dyn, 5, {{3, 4}, {4, 3}});
    require(!c.delta.is_zero(), "swap delta must be nonzero");
    require(c.verification.verified, "swap witness failed verification");
    require(c.verification.replays == 100, "expected 100 exact replays");
  });

  rep.run(3, "seven-node example: node 7 not identifiable, certificate found and verified", [] {
    ValidatedDigraph g = example("fig7");
    IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
    const NodeVerdict* v7 = nullptr;
    for (const auto& v : r.nodes)
      if (v.node == 7) v7 = &v;
    require(v7 != nullptr, "no verdict for node 7");
    require(v7->verdict == Verdict::NotIdentifiable, "node 7 should be NotIdentifiable");
    require(v7->required == 3 && v7->achieved == 2, "expected 2 of 3 disjoint paths");
    require(v7->deficiency.has_value() && v7->deficiency->size() == 2,
            "expected a size-2 disconnecting set");

    NetworkDynamics dyn = random_dynamics(g, 2, 1);
    Certificate c = node_nonident_certificate(g, dyn, 7, 8);
    require(!c.delta.is_zero(), "relation must be nonzero");
    require(c.delta.compose(c.G).is_zero(), "relation must compose to zero exactly");
    require(c.bound == 43 && c.M <= c.bound, "M must sit below the degree bound 43");
    require(c.M == 8, "minimal product degree should be 8, got " + std::to_string(c.M));
    require(c.verification.verified && c.verification.replays == 100,
            "certificate failed two-layer verification");

    NetworkDynamics add = random_dynamics(g, 2, 5, DynamicsMode::Additive);
    require(!additive_ambiguity_search(g, add, 7, 6).has_value(),
            "no additive-shape relation should exist up to degree 6");
    Certificate unrestricted = node_nonident_certificate(g, add, 7, 8);
    require(unrestricted.verification.verified,
            "unrestricted certificate on the same additive dynamics must verify");
  });

  rep.run(4, "50 random DAGs: per-node analysis equals exhaustive path enumeration", [] {
    for (int trial = 0; trial < 50; ++trial) {
      Rng rng(Rng::derive(0xACC4, static_cast<std::uint64_t>(trial)));
      int n = static_cast<int>(rng.uniform_int(2, 10));
      Digraph raw;
      raw.n = n;
      for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
          if (rng.uniform_int(1, 100) <= 35) raw.edges.emplace_back(i, j);
      for (int i = 1; i <= n; ++i)
        if (rng.uniform_int(0, 1) == 1) raw.excited.insert(i);
      if (raw.excited.empty()) raw.excited.insert(1);
      ValidatedDigraph g = validate(raw, true);
      IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
      for (const auto& v : r.nodes) {
        std::set<int> A;
        for (int e : g.excited())
          if (e != v.node && g.reaches(e, v.node)) A.insert(e);
        std::set<int> B(v.targets.begin(), v.targets.end());
        int oracle = A.empty() ? 0 : brute_force_disjoint(g, A, B);
        require(v.achieved == oracle,
                "trial " + std::to_string(trial) + " node " + std::to_string(v.node) +
                    ": flow " + std::to_string(v.achieved) + " vs brute force " +
                    std::to_string(oracle));
      }
    }
  });

  rep.run(5, "200 random DAGs: max-flow, min-cut, and both brute-force oracles agree", [] {
    for (int trial = 0; trial < 200; ++trial) {
      Rng rng(Rng::derive(0xACC5, static_cast<std::uint64_t>(trial)));
      int n = static_cast<int>(rng.uniform_int(2, 8));
      Digraph raw;
      raw.n = n;
      for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
          if (rng.uniform_int(1, 100) <= 45) raw.edges.emplace_back(i, j);
      ValidatedDigraph g = validate(raw, true);
      std::set<int> A, B;
      for (int i = 1; i <= n; ++i) {
        if (rng.uniform_int(0, 1) == 1) A.insert(i);
        if (rng.uniform_int(0, 1) == 1) B.insert(i);
      }
      if (A.empty()) A.insert(1);
      if (B.empty()) B.insert(n);
      PathFamily fam = max_vertex_disjoint(g, A, B);
      DisconnectingSet cut = min_disconnecting_set(g, A, B);
      require(family_is_valid(g, fam), "invalid family at trial " + std::to_string(trial));
      require(fam.count() == cut.size(), "duality gap at trial " + std::to_string(trial));
      require(is_disconnecting(g, A, B, {cut.nodes.begin(), cut.nodes.end()}),
              "cut fails to disconnect at trial " + std::to_string(trial));
      require(fam.count() == brute_force_disjoint(g, A, B),
              "flow vs brute force mismatch at trial " + std::to_string(trial));
      require(cut.size() == brute_force_min_disconnecting(g, A, B),
              "cut vs brute force mismatch at trial " + std::to_string(trial));
    }
  });

  rep.run(6, "rank probes: rank never exceeds the path count; linear draws typically meet it", [] {
    int eq = 0, total = 0;
    for (int trial = 0; trial < 50; ++trial) {
      Rng rng(Rng::derive(0xACC6, static_cast<std::uint64_t>(trial)));
      int n = static_cast<int>(rng.uniform_int(3, 10));
      Digraph raw;
      raw.n = n;
      for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
          if (rng.uniform_int(1, 100) <= 40) raw.edges.emplace_back(i, j);
      for (int i = 1; i <= n; ++i)
        if (rng.uniform_int(0, 1) == 1) raw.excited.insert(i);
      if (raw.excited.empty()) raw.excited.insert(1);
      ValidatedDigraph g = validate(raw, true);
      // Query the in-neighborhood of the highest node with incoming edges.
      int node = 0;
      for (int i = n; i >= 1; --i)
        if (!g.in_neighbors(i).empty()) {
          node = i;
          break;
        }
      if (node == 0) continue;
      std::set<int> A;
      for (int e : g.excited())
        if (e != node && g.reaches(e, node)) A.insert(e);
      if (A.empty()) continue;
      const auto& nb = g.in_neighbors(node);
      std::set<int> B(nb.begin(), nb.end());
      int flow = max_vertex_disjoint(g, A, B).count();
      for (int K : {1, 2, 3}) {
        RankProbe p = generic_rank(g, K, A, B, 20, Rng::derive(0xACC6u, 1000 + static_cast<std::uint64_t>(trial)));
        require(p.generic_rank <= flow,
                "rank exceeded the disjoint-path count at trial " + std::to_string(trial));
        if (K == 1) {
          ++total;
          if (p.generic_rank == flow) ++eq;
        }
      }
    }
    require(total >= 30, "too few usable draws");
    double pct = 100.0 * eq / total;
    std::ostringstream os;
    os << "equality rate " << pct << "% over " << total << " draws";
    std::cout << "      [criterion 6] " << os.str() << "\n";
    require(pct >= 95.0, os.str() + " is below the 95% threshold");
  });

  rep.run(7, "(I - J) T = I exactly, with T supported on reachability", [] {
    for (int trial = 0; trial < 25; ++trial) {
      Rng rng(Rng::derive(0xACC7, static_cast<std::uint64_t>(trial)));
      int n = static_cast<int>(rng.uniform_int(2, 8));
      Digraph raw;
      raw.n = n;
      for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
          if (rng.uniform_int(1, 100) <= 50) raw.edges.emplace_back(i, j);
      for (int i = 1; i <= n; ++i) raw.excited.insert(i);
      ValidatedDigraph g = validate(raw, true);
      NetworkDynamics dyn = random_dynamics(g, static_cast<int>(rng.uniform_int(1, 3)), rng.next());
      std::map<int, Rational> u;
      for (int e : g.excited()) u[e] = rng.rational(5);
      RationalMatrix J = nonlinear_network_matrix(g, dyn, u);
      RationalMatrix T = transfer_matrix(g, dyn, u);
      RationalMatrix ImJ = RationalMatrix::identity(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ImJ.a[i][j] -= J.a[i][j];
      require((ImJ * T).is_identity(), "(I-J)T != I at trial " + std::to_string(trial));
      require((T * ImJ).is_identity(), "T(I-J) != I at trial " + std::to_string(trial));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (!g.reaches(j, i))
            require(T.a[i - 1][j - 1] == 0, "T has support off the reachability relation");
          if (i == j) require(T.a[i - 1][j - 1] == 1, "diagonal of T must be 1 on a DAG");
        }
    }
  });

  rep.run(8, "response-map Jacobian: symbolic matches finite differences", [] {
    int compared = 0;
    for (int trial = 0; trial < 10; ++trial) {
      Rng rng(Rng::derive(0xACC8, static_cast<std::uint64_t>(trial)));
      int n = static_cast<int>(rng.uniform_int(3, 6));
      Digraph raw;
      raw.n = n;
      for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
          if (rng.uniform_int(1, 100) <= 50) raw.edges.emplace_back(i, j);
      for (int i = 1; i <= n; ++i)
        if (rng.uniform_int(0, 1) == 1) raw.excited.insert(i);
      if (raw.excited.empty()) raw.excited.insert(1);
      ValidatedDigraph g = validate(raw, true);
      NetworkDynamics dyn =
          random_dynamics(g, static_cast<int>(rng.uniform_int(1, 2)), rng.next(),
                          DynamicsMode::General, 3);
      std::map<int, Rational> u;
      for (int e : g.excited()) u[e] = rng.small_rational();
      for (int i = 1; i <= n; ++i) {
        if (g.in_neighbors(i).empty()) continue;
        XiJacobian sym = xi_jacobian_symbolic(g, dyn, i, u);
        if (sym.excitations.empty()) continue;
        auto fd = xi_jacobian_fd(g, dyn, i, u, 1e-5);
        for (std::size_t r = 0; r < fd.size(); ++r)
          for (std::size_t c = 0; c < fd[r].size(); ++c) {
            double s = rat_double(sym.sym.a[r][c]);
            require(std::abs(fd[r][c] - s) <= 1e-9 + 1e-6 * std::abs(s),
                    "finite-difference mismatch at trial " + std::to_string(trial));
            ++compared;
          }
      }
    }
    require(compared > 50, "too few Jacobian entries compared");
    // Linear dynamics: the response map is linear and the Jacobian equals the
    // matching block of the exact transfer matrix.
    ValidatedDigraph g = example("fig7");
    NetworkDynamics lin = random_dynamics(g, 1, 8);
    std::map<int, Rational> u;
    Rng rng(4);
    for (int e : g.excited()) u[e] = rng.rational(3);
    RationalMatrix T = transfer_matrix(g, lin, u);
    XiJacobian xj = xi_jacobian_symbolic(g, lin, 7, u);
    for (std::size_t r = 0; r < xj.targets.size(); ++r)
      for (std::size_t c = 0; c < xj.excitations.size(); ++c)
        require(xj.sym.a[r][c] == T.a[xj.targets[r] - 1][xj.excitations[c] - 1],
                "linear response Jacobian differs from the transfer matrix");
  });

  rep.run(9, "100 random trees: identifiable exactly when every source is excited", [] {
    for (int trial = 0; trial < 100; ++trial) {
      Rng rng(Rng::derive(0xACC9, static_cast<std::uint64_t>(trial)));
      int n = static_cast<int>(rng.uniform_int(2, 9));
      Digraph raw;
      raw.n = n;
      for (int i = 2; i <= n; ++i)
        raw.edges.emplace_back(i, static_cast<int>(rng.uniform_int(1, i - 1)));
      for (int i = 1; i <= n; ++i)
        if (rng.uniform_int(0, 1) == 1) raw.excited.insert(i);
      ValidatedDigraph g = validate(raw);
      bool all_src = true;
      for (int s : g.sources())
        if (!g.out_neighbors(s).empty() && !g.excited().count(s)) all_src = false;
      Verdict tv = tree_verdict(g);
      require((tv == Verdict::GenericallyIdentifiable) == all_src,
              "tree verdict disagrees at trial " + std::to_string(trial));
      IdentifiabilityReport r = analyze(g, FunctionClass::Polynomial);
      bool all_gi = r.source_violations.empty();
      for (const auto& v : r.nodes)
        all_gi = all_gi && v.verdict == Verdict::GenericallyIdentifiable;
      require(all_gi == all_src,
              "full analysis disagrees with the tree rule at trial " + std::to_string(trial));
    }
  });

  rep.run(10, "silent-source perturbation verifies; sink advisories fire precisely", [] {
    Digraph raw = bundled_example("fig5");
    raw.excited = {1};
    ValidatedDigraph g = validate(raw);
    NetworkDynamics dyn = fig5_swap_dynamics(g);
    Certificate c = source_perturbation_witness(g, dyn, 3, Polynomial::variable(1, 0));
    require(c.source == 2, "expected the unexcited source 2");
    require(c.verification.verified && c.verification.replays == 100,
            "source perturbation failed verification");
    require(!check_sources(g).empty(), "unexcited feeding source must be flagged");

    for (int trial = 0; trial < 30; ++trial) {
      Rng rng(Rng::derive(0xACCA, static_cast<std::uint64_t>(trial)));
      int n = static_cast<int>(rng.uniform_int(2, 8));
      Digraph d;
      d.n = n;
      for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
          if (rng.uniform_int(1, 100) <= 40) d.edges.emplace_back(i, j);
      for (int i = 1; i <= n; ++i)
        if (rng.uniform_int(0, 1) == 1) d.excited.insert(i);
      ValidatedDigraph gg = validate(d, true);
      std::set<int> flagged;
      for (const auto& a : sink_excitation_advice(gg)) flagged.insert(a.node);
      for (int i = 1; i <= n; ++i) {
        bool expect = gg.excited().count(i) > 0 && gg.out_neighbors(i).empty() && n > 1;
        require(flagged.count(i) == static_cast<std::size_t>(expect ? 1 : 0),
                "sink advisory mismatch at node " + std::to_string(i));
      }
    }
  });

  rep.run(11, "dimension bound: 50 random parametrizations all yield exact relations", [] {
    for (int trial = 0; trial < 50; ++trial) {
      Rng rng(Rng::derive(0xACCB, static_cast<std::uint64_t>(trial)));
      int m = static_cast<int>(rng.uniform_int(1, 2));   // z variables
      int n = m + 1;                                     // one more output than inputs
      int N = static_cast<int>(rng.uniform_int(1, 2));   // parametrization degree
      std::vector<Polynomial> G;
      for (int j = 0; j < n; ++j)
        G.push_back(random_polynomial(m, N, rng, 4, /*include_constant=*/false));
      long bound = guaranteed_relation_degree(n, m, N);
      require(bound >= 1, "a finite bound must exist when n > m");
      ImplicitizationResult r = implicitization_certificate(G, static_cast<int>(bound));
      require(r.delta.has_value(),
              "no relation found at the guaranteed bound, trial " + std::to_string(trial));
      require(!r.delta->is_zero(), "relation must be nonzero");
      require(r.delta->compose(G).is_zero(), "relation must compose to zero exactly");
      require(r.M <= bound, "reported degree must respect the bound");
    }
  });

  rep.run(12, "byte-identical reports for identical configurations", [] {
    for (const auto& name : bundled_example_names()) {
      ValidatedDigraph g = example(name);
      std::string a = dump_json_text(report_to_json(analyze(g, FunctionClass::Analytic)));
      std::string b = dump_json_text(report_to_json(analyze(g, FunctionClass::Analytic)));
      require(a == b, "analysis report bytes differ for " + name);
    }
    ValidatedDigraph g = example("fig7");
    NetworkDynamics dyn = random_dynamics(g, 2, 1);
    std::string c1 = dump_json_text(certificate_to_json(node_nonident_certificate(g, dyn, 7, 8)));
    std::string c2 = dump_json_text(certificate_to_json(node_nonident_certificate(g, dyn, 7, 8)));
    require(c1 == c2, "certificate bytes differ between identical runs");
    InputSchedule s;
    s.horizon = 6;
    Rng rng(12);
    for (int e : g.excited()) {
      std::vector<Rational> seq;
      for (int k = 0; k <= 6; ++k) seq.push_back(rng.rational(5));
      s.inputs[e] = seq;
    }
    DelayAssignment d = effective_delays(g);
    std::string t1 = dump_json_text(trajectory_to_json(simulate(g, dyn, d, s)));
    std::string t2 = dump_json_text(trajectory_to_json(simulate(g, dyn, d, s)));
    require(t1 == t2, "trajectory bytes differ between identical runs");
  });

  if (rep.failures == 0) {
    std::printf("all 12 acceptance checks passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) failed\n", rep.failures);
  return 1;
}
