#pragma once
/*
 * Discrete-time simulation of the delayed network dynamics and the
 * symbolic input-output objects derived from it.
 *
 * Update rule: y_i at time k equals u_i at time k-1 (when i is excited and
 * k >= 1) plus phi_i applied to each in-neighbor's output delayed by the
 * edge delay. Pre-history is zero: y and u are 0 for negative times, so an
 * unexcited network with zero-constant dynamics stays at rest.
 *
 * measured_function unrolls the recursion symbolically into an exact
 * polynomial in delayed excitation samples. Variables are keyed by
 * (node e, shift s) meaning "u_e at time k - s"; under path-independent
 * delays exactly one variable appears per excited node with a path to the
 * target (the pair delay), which is the compact form the identifiability
 * theory works with.
 *
 * xi_map is the static collapse of that picture: it sends a vector of
 * excitation values to the outputs of a node's in-neighbors, the map whose
 * Jacobian rank certifies local surjectivity (the engine behind the
 * sufficiency side of the path-based identifiability condition).
 */

#include <map>
#include <vector>

#include "netident/dynamics.hpp"
#include "netident/network_matrix.hpp"

namespace netident {

struct InputSchedule {
  int horizon = 0;                             // times 0..horizon inclusive
  std::map<int, std::vector<Rational>> inputs;  // per excited node, length horizon+1
};

struct Trajectory {
  int horizon = 0;
  std::vector<std::vector<Rational>> y;  // y[node][k], node 1..n (index 0 unused)
  std::vector<std::string> warnings;     // e.g. horizon shorter than propagation
};

// Exact simulation. Errors: SchemaError (bad schedule shape or non-excited
// input key). Adds a warning when the horizon is too short for every
// excitation to have reached every reachable node.
Trajectory simulate(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                    const DelayAssignment& delays, const InputSchedule& schedule);

struct MeasuredFunction {
  Polynomial F;                           // over the variables listed below
  std::vector<std::pair<int, int>> vars;  // (node e, shift s) ascending
};

// Exact symbolic unrolling of node i's output at a generic time k.
// Guarded against blowup (term count / degree caps) with a TooLarge error.
MeasuredFunction measured_function(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                                   const DelayAssignment& delays, int i);

// Evaluates a measured function against a schedule at time k (variables
// reaching before time 0 read as 0) — the bridge simulate() is tested against.
Rational eval_measured(const MeasuredFunction& mf, const InputSchedule& schedule, int k);

// Projects a schedule onto the signal subspace where path-dependent delay
// spreads cannot be seen: any node whose outgoing delays conflict somewhere
// gets its sequence held constant at its first value. Nodes with uniform
// delays keep their sequences.
InputSchedule restrict_path_independent(const ValidatedDigraph& g,
                                        const DelayAssignment& delays,
                                        const InputSchedule& schedule);

// Static response map of node i's in-neighborhood: excitation values u
// (keys must be excited nodes; absent keys are 0) propagate through the
// full dynamics (cross terms included, no delays) and the outputs of i's
// in-neighbors are returned in ascending order.
std::vector<Rational> xi_map(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                             int i, const std::map<int, Rational>& u);

struct XiJacobian {
  std::vector<int> targets;      // in-neighbors of i, ascending (rows)
  std::vector<int> excitations;  // excited nodes with a path to i, ascending (cols)
  RationalMatrix sym;            // exact Jacobian at the given point
  int rank = 0;                  // exact rank of sym
};

// Exact symbolic Jacobian of xi at point u (entries are derivatives of the
// composed propagation polynomials, evaluated exactly).
XiJacobian xi_jacobian_symbolic(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                                int i, const std::map<int, Rational>& u);

// Central finite differences with step h, double precision; rows/cols as in
// xi_jacobian_symbolic. The float oracle the symbolic path is tested against.
std::vector<std::vector<double>> xi_jacobian_fd(const ValidatedDigraph& g,
                                                const NetworkDynamics& dyn, int i,
                                                const std::map<int, Rational>& u,
                                                double h);

}  // namespace netident
