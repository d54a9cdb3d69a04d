#pragma once
/*
 * The static propagation model and its matrices.
 *
 * Static model: y_i = sum_j f_{i,j}(y_j) + u_i in topological order, where
 * the f_{i,j} are the univariate parts of phi_i (the cross part is set to
 * zero here by definition of the static model) and u_i = 0 for unexcited
 * nodes.
 *
 * J(y) is the symbolic matrix with entry (i,j) = f'_{i,j}(y_j) on edges and
 * zero elsewhere; J(u) evaluates it along the static propagation of u;
 * T(u) = (I - J(u))^{-1} exists because J is strictly triangular under the
 * topological permutation, and is computed exactly by back-substitution.
 *
 * Generic rank of a submatrix of T is estimated as the maximum of exact
 * ranks over independently seeded random draws (dynamics and excitation
 * point per sample); draws below the maximum are reported as degenerate
 * rather than silently absorbed.
 */

#include <cstdint>
#include <set>
#include <vector>

#include "netident/dynamics.hpp"

namespace netident {

struct RationalMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<Rational>> a;  // a[r][c]

  static RationalMatrix zero(int rows, int cols);
  static RationalMatrix identity(int n);
  RationalMatrix operator*(const RationalMatrix& o) const;
  bool operator==(const RationalMatrix& o) const;
  bool is_identity() const;
};

// Entry (r, c) is a univariate polynomial in the output of the node backing
// column c (for J(y)), or a polynomial in excitation variables (for the
// response-map Jacobians elsewhere).
struct SymbolicMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<Polynomial>> e;
};

// Excitation vector: value per node id; nodes absent from the map are 0.
// Any node may carry a value here (rank probes excite the query set A even
// when it extends the graph's excited set); ids are range-checked only.
// Returns y indexed 1..n (slot 0 unused).
std::vector<Rational> propagate_static(const ValidatedDigraph& g,
                                       const NetworkDynamics& dyn,
                                       const std::map<int, Rational>& u);

// J as polynomials: entry (i,j) = d f_{i,j} / d y evaluated symbolically in
// the single variable y_j; zero polynomial off-edges (and on the diagonal).
SymbolicMatrix jacobian_symbolic(const ValidatedDigraph& g, const NetworkDynamics& dyn);

// J(u): jacobian_symbolic evaluated at y = propagate_static(u). Exact.
RationalMatrix nonlinear_network_matrix(const ValidatedDigraph& g,
                                        const NetworkDynamics& dyn,
                                        const std::map<int, Rational>& u);

// T(u) = (I - J(u))^{-1}, exact via topological back-substitution.
RationalMatrix transfer_matrix(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                               const std::map<int, Rational>& u);

// Exact rank by fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing denominators row-wise.
int exact_rank(const RationalMatrix& m);

// Oracle for tests: rank as the largest k with a nonzero k x k minor,
// by direct minor expansion (small matrices only).
int rank_by_minors(const RationalMatrix& m);

// Submatrix of T(u) with rows indexed by B and columns by A (both
// ascending): entry (b, a) is the response of node b to excitation at a.
RationalMatrix transfer_submatrix(const RationalMatrix& T, const std::set<int>& A,
                                  const std::set<int>& B);

struct RankProbe {
  std::vector<int> A, B;     // excitation side / target side, ascending
  int degree = 0;            // dynamics degree K
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<int> ranks;    // exact rank per sample
  int generic_rank = 0;      // max over samples
  std::vector<int> degenerate;  // sample indices with rank < max
};

// Draws `samples` independent (dynamics, excitation point) pairs — additive
// dynamics with univariate edge functions dense of degree 1..K — and
// records the exact rank of T^{B,A} for each. Sample s uses substreams
// (2s, 2s+1) of `seed` for dynamics and point, so results do not depend on
// evaluation order. Excitations are drawn for the union of g's excited set
// and A.
RankProbe generic_rank(const ValidatedDigraph& g, int K, const std::set<int>& A,
                       const std::set<int>& B, int samples, std::uint64_t seed);

}  // namespace netident
