#pragma once
/*
 * Per-node dynamics: each node i carries a polynomial phi_i over its
 * in-neighbor outputs. Variable v of phi_i corresponds to the v-th
 * in-neighbor of i in ascending node-id order; sources carry an arity-0
 * (constant) polynomial. Mode records whether every phi is additive
 * (a sum of univariate edge functions with no cross part and no constant)
 * or general.
 *
 * Validation enforces the standing assumption that the graph is exactly the
 * interaction structure: for every edge j -> i, the partial derivative of
 * phi_i in the variable of j must not be identically zero, otherwise the
 * declared edge is vacuous.
 */

#include <cstdint>
#include <vector>

#include "netident/digraph.hpp"
#include "netident/polynomial.hpp"

namespace netident {

enum class DynamicsMode { Additive, General };

struct NetworkDynamics {
  // phi[i] for node i (index 0 unused).
  std::vector<Polynomial> phi;
  DynamicsMode mode = DynamicsMode::General;

  const Polynomial& phi_of(int node) const { return phi[node]; }
  // Index of in-neighbor j within phi_of(i)'s variables.
  static int var_index(const ValidatedDigraph& g, int i, int j);
};

// Checks arities, per-edge non-vacuousness, and (in additive mode) that
// every phi has zero cross part and zero constant term.
// Errors: InvalidDynamics.
void validate_dynamics(const ValidatedDigraph& g, const NetworkDynamics& dyn);

/*
 * Random dynamics draws. Each node takes substream `node` of `seed`, so the
 * result is independent of construction order. Polynomials are dense up to
 * total degree K with nonzero coefficients (numerators in [-bound,bound]\{0},
 * denominators in [1,bound]) and have zero constant term, so the all-zero
 * trajectory is a fixed point of the unexcited network; sources get the zero
 * polynomial. General mode fills every monomial (cross terms included),
 * additive mode only per-variable univariate monomials.
 */
NetworkDynamics random_dynamics(const ValidatedDigraph& g, int K, std::uint64_t seed,
                                DynamicsMode mode = DynamicsMode::General,
                                long bound = 10);

// Additive dynamics given per-edge univariate functions: edge_f[(i,j)] is
// f_{i,j} (arity 1). Missing edges error; extra entries error.
NetworkDynamics dynamics_from_edge_functions(
    const ValidatedDigraph& g,
    const std::map<std::pair<int, int>, Polynomial>& edge_f);

}  // namespace netident
