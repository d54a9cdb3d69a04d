#include <doctest.h>

#include <map>
#include <set>

#include "netident/errors.hpp"
#include "netident/examples.hpp"
#include "netident/network_matrix.hpp"
#include "test_util.hpp"

using namespace netident;

namespace {

ValidatedDigraph chain3() {
  Digraph g;
  g.n = 3;
  g.edges = {{2, 1}, {3, 2}};
  g.excited = {1};
  return validate(g);
}

// f_{2,1}(y) = 2y^2, f_{3,2}(y) = y + y^3.
NetworkDynamics chain3_dynamics(const ValidatedDigraph& g) {
  std::map<std::pair<int, int>, Polynomial> f;
  Polynomial f21(1), f32(1);
  f21.add_term({2}, rat(2));
  f32.add_term({1}, rat(1));
  f32.add_term({3}, rat(1));
  f[{2, 1}] = f21;
  f[{3, 2}] = f32;
  return dynamics_from_edge_functions(g, f);
}

}  // namespace

TEST_CASE("static propagation on a hand-solved chain") {
  ValidatedDigraph g = chain3();
  NetworkDynamics dyn = chain3_dynamics(g);
  auto y = propagate_static(g, dyn, {{1, rat(1, 2)}});
  CHECK(y[1] == rat(1, 2));
  CHECK(y[2] == rat(1, 2));   // 2 * (1/2)^2
  CHECK(y[3] == rat(5, 8));   // 1/2 + (1/2)^3
  auto y0 = propagate_static(g, dyn, {});
  CHECK(y0[1] == 0);
  CHECK(y0[2] == 0);
  CHECK(y0[3] == 0);
  CHECK_THROWS_AS(propagate_static(g, dyn, {{17, rat(1)}}), Error);
}

TEST_CASE("symbolic jacobian holds the derivatives of the edge functions") {
  ValidatedDigraph g = chain3();
  NetworkDynamics dyn = chain3_dynamics(g);
  SymbolicMatrix J = jacobian_symbolic(g, dyn);
  // d f21 / dy = 4y
  CHECK(J.e[1][0] == Polynomial::monomial(1, {1}, rat(4)));
  // d f32 / dy = 1 + 3y^2
  Polynomial expect(1);
  expect.add_term({0}, rat(1));
  expect.add_term({2}, rat(3));
  CHECK(J.e[2][1] == expect);
  // Off-edge entries and the diagonal are zero.
  CHECK(J.e[0][0].is_zero());
  CHECK(J.e[0][1].is_zero());
  CHECK(J.e[2][0].is_zero());
}

TEST_CASE("network matrix evaluates the jacobian along the propagation") {
  ValidatedDigraph g = chain3();
  NetworkDynamics dyn = chain3_dynamics(g);
  RationalMatrix J = nonlinear_network_matrix(g, dyn, {{1, rat(1, 2)}});
  CHECK(J.a[1][0] == rat(2));      // 4 * y1 = 4 * 1/2
  CHECK(J.a[2][1] == rat(7, 4));   // 1 + 3 * (1/2)^2
  CHECK(J.a[0][0] == 0);
  CHECK(J.a[0][2] == 0);
}

TEST_CASE("transfer matrix inverts I - J exactly") {
  ValidatedDigraph g = chain3();
  NetworkDynamics dyn = chain3_dynamics(g);
  std::map<int, Rational> u = {{1, rat(1, 2)}};
  RationalMatrix J = nonlinear_network_matrix(g, dyn, u);
  RationalMatrix T = transfer_matrix(g, dyn, u);
  RationalMatrix ImJ = RationalMatrix::identity(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ImJ.a[i][j] -= J.a[i][j];
  CHECK((ImJ * T).is_identity());
  CHECK((T * ImJ).is_identity());
  // Chain: T[3][1] = product of the two edge gains.
  CHECK(T.a[2][0] == rat(2) * rat(7, 4));
  CHECK(T.a[0][0] == 1);
  // Strict triangularity: entry (i,j) nonzero only when j reaches i.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (!g.reaches(j, i)) CHECK(T.a[i - 1][j - 1] == 0);
}

TEST_CASE("(I - J) T = I on random DAG dynamics") {
  for (int trial = 0; trial < 12; ++trial) {
    Rng rng(Rng::derive(0x7AB1E, static_cast<std::uint64_t>(trial)));
    int n = static_cast<int>(rng.uniform_int(2, 7));
    ValidatedDigraph g = validate(testutil::random_dag(n, rng, 50), true);
    NetworkDynamics dyn = random_dynamics(g, 2, rng.next());
    std::map<int, Rational> u;
    for (int e : g.excited()) u[e] = rng.rational(4);
    RationalMatrix J = nonlinear_network_matrix(g, dyn, u);
    RationalMatrix T = transfer_matrix(g, dyn, u);
    RationalMatrix ImJ = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ImJ.a[i][j] -= J.a[i][j];
    CHECK((ImJ * T).is_identity());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (!g.reaches(j, i)) CHECK(T.a[i - 1][j - 1] == 0);
  }
}

TEST_CASE("exact_rank agrees with the minor-expansion oracle") {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng(Rng::derive(0xFACE, static_cast<std::uint64_t>(trial)));
    int rows = static_cast<int>(rng.uniform_int(1, 4));
    int cols = static_cast<int>(rng.uniform_int(1, 4));
    RationalMatrix m = RationalMatrix::zero(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (rng.uniform_int(0, 2) > 0) m.a[r][c] = rng.rational(6);
    CHECK(exact_rank(m) == rank_by_minors(m));
  }
  // Rank drops are detected exactly: duplicate a row.
  RationalMatrix m = RationalMatrix::zero(3, 3);
  Rng rng(5);
  for (int c = 0; c < 3; ++c) {
    m.a[0][c] = rng.rational(9);
    m.a[2][c] = rng.rational(9);
  }
  for (int c = 0; c < 3; ++c) m.a[1][c] = m.a[0][c] * rat(7, 3);
  CHECK(exact_rank(m) <= 2);
  CHECK(exact_rank(m) == rank_by_minors(m));
}

TEST_CASE("transfer_submatrix picks response rows by target, columns by source") {
  ValidatedDigraph g = chain3();
  NetworkDynamics dyn = chain3_dynamics(g);
  RationalMatrix T = transfer_matrix(g, dyn, {{1, rat(1, 2)}});
  RationalMatrix S = transfer_submatrix(T, {1}, {3});
  CHECK(S.rows == 1);
  CHECK(S.cols == 1);
  CHECK(S.a[0][0] == T.a[2][0]);
}

TEST_CASE("generic rank matches the disjoint-path count on the examples") {
  ValidatedDigraph f7 = validate(bundled_example("fig7"));
  RankProbe p = generic_rank(f7, 1, {1, 2}, {3, 5, 6}, 8, 2);
  CHECK(p.generic_rank == 2);
  CHECK(p.A == std::vector<int>{1, 2});
  CHECK(p.B == std::vector<int>{3, 5, 6});
  CHECK(p.ranks.size() == 8);
  for (int idx : p.degenerate) CHECK(p.ranks[static_cast<std::size_t>(idx)] < 2);

  ValidatedDigraph f6 = validate(bundled_example("fig6"));
  RankProbe q = generic_rank(f6, 1, {1, 2, 3}, {7, 8, 9}, 8, 2);
  CHECK(q.generic_rank == 3);
}

TEST_CASE("rank probes are reproducible and seed-sensitive") {
  ValidatedDigraph f7 = validate(bundled_example("fig7"));
  RankProbe a = generic_rank(f7, 1, {1, 2}, {3, 5, 6}, 6, 11);
  RankProbe b = generic_rank(f7, 1, {1, 2}, {3, 5, 6}, 6, 11);
  CHECK(a.ranks == b.ranks);
  CHECK(a.generic_rank == b.generic_rank);
}
