#include "netident/network_matrix.hpp"

#include <algorithm>

#include "netident/errors.hpp"

namespace netident {

RationalMatrix RationalMatrix::zero(int rows, int cols) {
  RationalMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(rows, std::vector<Rational>(cols, rat(0)));
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.a[i][i] = rat(1);
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols != o.rows) fail("ArityMismatch", "matrix product dimension mismatch");
  RationalMatrix r = zero(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (o.a[k][j] == 0) continue;
        r.a[i][j] += a[i][k] * o.a[k][j];
      }
    }
  for (auto& row : r.a)
    for (auto& x : row) x.canonicalize();
  return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (a[i][j] != o.a[i][j]) return false;
  return true;
}

bool RationalMatrix::is_identity() const {
  if (rows != cols) return false;
  return *this == identity(rows);
}

std::vector<Rational> propagate_static(const ValidatedDigraph& g,
                                       const NetworkDynamics& dyn,
                                       const std::map<int, Rational>& u) {
  for (const auto& [node, val] : u) {
    if (node < 1 || node > g.n()) fail("SchemaError", "excitation node out of range");
  }
  std::vector<Rational> y(g.n() + 1, rat(0));
  for (int i : g.topological_order()) {
    Decomposition dec = decompose(dyn.phi_of(i));
    const auto& nbrs = g.in_neighbors(i);
    std::vector<Rational> point(nbrs.size(), rat(0));
    for (size_t w = 0; w < nbrs.size(); ++w) point[w] = y[nbrs[w]];
    Rational acc = rat(0);
    for (size_t v = 0; v < nbrs.size(); ++v) acc += dec.parts[v].eval(point);
    auto it = u.find(i);
    if (it != u.end()) acc += it->second;
    acc.canonicalize();
    y[i] = acc;
  }
  return y;
}

SymbolicMatrix jacobian_symbolic(const ValidatedDigraph& g, const NetworkDynamics& dyn) {
  SymbolicMatrix m;
  m.rows = m.cols = g.n();
  m.e.assign(g.n(), std::vector<Polynomial>(g.n(), Polynomial(1)));
  for (int i = 1; i <= g.n(); ++i) {
    Decomposition dec = decompose(dyn.phi_of(i));
    const auto& nbrs = g.in_neighbors(i);
    for (int v = 0; v < static_cast<int>(nbrs.size()); ++v) {
      int j = nbrs[v];
      // Univariate part in variable v, derived, then renamed to a single
      // variable (the output of node j).
      Polynomial d = dec.parts[v].diff(v);
      // d is supported on variable v only; collapse to arity 1.
      Polynomial uni(1);
      for (const auto& [e, c] : d.terms()) uni.add_term({e[v]}, c);
      m.e[i - 1][j - 1] = uni;
    }
  }
  return m;
}

RationalMatrix nonlinear_network_matrix(const ValidatedDigraph& g,
                                        const NetworkDynamics& dyn,
                                        const std::map<int, Rational>& u) {
  std::vector<Rational> y = propagate_static(g, dyn, u);
  SymbolicMatrix sym = jacobian_symbolic(g, dyn);
  RationalMatrix m = RationalMatrix::zero(g.n(), g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      if (!sym.e[i][j].is_zero()) m.a[i][j] = sym.e[i][j].eval({y[j + 1]});
  return m;
}

RationalMatrix transfer_matrix(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                               const std::map<int, Rational>& u) {
  RationalMatrix J = nonlinear_network_matrix(g, dyn, u);
  int n = g.n();
  RationalMatrix out = RationalMatrix::zero(n, n);
  // Solve (I - J) x = e_col in topological order: x_i depends only on
  // in-neighbor entries, which precede i topologically.
  for (int col = 0; col < n; ++col) {
    std::vector<Rational> val(n + 1, rat(0));
    for (int i : g.topological_order()) {
      Rational acc = (i - 1 == col) ? rat(1) : rat(0);
      for (int j : g.in_neighbors(i)) acc += J.a[i - 1][j - 1] * val[j];
      acc.canonicalize();
      val[i] = acc;
    }
    for (int r = 0; r < n; ++r) out.a[r][col] = val[r + 1];
  }
  return out;
}

int exact_rank(const RationalMatrix& m) {
  // Clear denominators per row (rank-preserving), then Bareiss.
  int rows = m.rows, cols = m.cols;
  std::vector<std::vector<Integer>> w(rows, std::vector<Integer>(cols));
  for (int r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (int c = 0; c < cols; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.a[r][c].get_den().get_mpz_t());
    for (int c = 0; c < cols; ++c) {
      Rational v = m.a[r][c] * lcm;
      v.canonicalize();
      w[r][c] = v.get_num();
    }
  }
  int rank = 0;
  Integer prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (w[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(w[rank], w[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        Integer t = w[rank][col] * w[r][c] - w[r][col] * w[rank][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w[r][c] = t;
      }
      w[r][col] = 0;
    }
    prev = w[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

Rational minor_det(const RationalMatrix& m, const std::vector<int>& rs,
                   const std::vector<int>& cs) {
  // Laplace expansion along the first row of the selected minor.
  if (rs.size() == 1) return m.a[rs[0]][cs[0]];
  Rational det = rat(0);
  std::vector<int> sub_rs(rs.begin() + 1, rs.end());
  for (size_t k = 0; k < cs.size(); ++k) {
    if (m.a[rs[0]][cs[k]] == 0) continue;
    std::vector<int> sub_cs;
    for (size_t t = 0; t < cs.size(); ++t)
      if (t != k) sub_cs.push_back(cs[t]);
    Rational term = m.a[rs[0]][cs[k]] * minor_det(m, sub_rs, sub_cs);
    det += (k % 2 == 0) ? term : Rational(-term);
  }
  det.canonicalize();
  return det;
}

}  // namespace

int rank_by_minors(const RationalMatrix& m) {
  int maxk = std::min(m.rows, m.cols);
  if (static_cast<long>(m.rows) * m.cols > 64)
    fail("TooLarge", "minor-expansion oracle limited to tiny matrices");
  for (int k = maxk; k >= 1; --k) {
    // All k-subsets of rows and of columns.
    std::vector<int> rs(k), cs(k);
    auto pick = [&](auto&& self, std::vector<int>& sel, int limit, int start,
                    int depth, const auto& inner) -> bool {
      if (depth == k) return inner();
      for (int v = start; v < limit; ++v) {
        sel[depth] = v;
        if (self(self, sel, limit, v + 1, depth + 1, inner)) return true;
      }
      return false;
    };
    bool found = pick(
        pick, rs, m.rows, 0, 0, [&]() -> bool {
          return pick(pick, cs, m.cols, 0, 0,
                      [&]() -> bool { return minor_det(m, rs, cs) != 0; });
        });
    if (found) return k;
  }
  return 0;
}

RationalMatrix transfer_submatrix(const RationalMatrix& T, const std::set<int>& A,
                                  const std::set<int>& B) {
  RationalMatrix m = RationalMatrix::zero(static_cast<int>(B.size()),
                                          static_cast<int>(A.size()));
  int r = 0;
  for (int b : B) {
    int c = 0;
    for (int a : A) {
      m.a[r][c] = T.a[b - 1][a - 1];
      ++c;
    }
    ++r;
  }
  return m;
}

RankProbe generic_rank(const ValidatedDigraph& g, int K, const std::set<int>& A,
                       const std::set<int>& B, int samples, std::uint64_t seed) {
  if (A.empty() || B.empty()) fail("EmptySet", "rank probe requires nonempty sets");
  for (int v : A)
    if (v < 1 || v > g.n()) fail("SchemaError", "set member out of range");
  for (int v : B)
    if (v < 1 || v > g.n()) fail("SchemaError", "set member out of range");
  RankProbe probe;
  probe.A.assign(A.begin(), A.end());
  probe.B.assign(B.begin(), B.end());
  probe.degree = K;
  probe.samples = samples;
  probe.seed = seed;

  std::set<int> point_nodes = A;
  for (int e : g.excited()) point_nodes.insert(e);

  for (int s = 0; s < samples; ++s) {
    std::uint64_t dyn_seed = Rng::derive(seed, 2 * static_cast<std::uint64_t>(s));
    std::uint64_t pt_seed = Rng::derive(seed, 2 * static_cast<std::uint64_t>(s) + 1);
    NetworkDynamics dyn = random_dynamics(g, K, dyn_seed, DynamicsMode::Additive);
    Rng prng(pt_seed);
    std::map<int, Rational> u;
    for (int node : point_nodes) u[node] = prng.rational(10);
    RationalMatrix T = transfer_matrix(g, dyn, u);
    probe.ranks.push_back(exact_rank(transfer_submatrix(T, A, B)));
  }
  probe.generic_rank = 0;
  for (int r : probe.ranks) probe.generic_rank = std::max(probe.generic_rank, r);
  for (int s = 0; s < samples; ++s)
    if (probe.ranks[s] < probe.generic_rank) probe.degenerate.push_back(s);
  return probe;
}

}  // namespace netident
