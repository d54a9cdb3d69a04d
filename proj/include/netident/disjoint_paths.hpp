#pragma once
/*
 * Maximum vertex-disjoint path families and minimum disconnecting sets
 * between node subsets of a DAG.
 *
 * "Vertex-disjoint" is the strict variant: no two paths of a family may
 * share any vertex, endpoints included. A node lying in both A and B can
 * appear as a length-0 path consisting of that single node.
 *
 * Method: classical node splitting. Every node v becomes an arc
 * v_in -> v_out of capacity 1; graph edges j -> i become arcs
 * j_out -> i_in of effectively unlimited capacity, as do the arcs from the
 * super-source to A and from B to the super-sink. Integral max-flow equals
 * the maximum family size; the arcs crossing the residual source cut are
 * exactly saturated vertex arcs, which yields a minimum disconnecting set
 * of matching size (max-flow/min-cut duality).
 *
 * Determinism: arcs are inserted in ascending node order, augmentation is
 * breadth-first (shortest path, first-found under that arc order), and path
 * decomposition walks flow arcs in the same order — so the returned family
 * and set are a pure function of the input.
 */

#include <optional>
#include <set>
#include <vector>

#include "netident/digraph.hpp"

namespace netident {

struct PathFamily {
  std::vector<std::vector<int>> paths;  // node sequences, start in A, end in B
  std::vector<int> A, B;                // the query sets, ascending
  int count() const { return static_cast<int>(paths.size()); }
};

struct DisconnectingSet {
  std::vector<int> nodes;  // ascending
  std::vector<int> A, B;
  int size() const { return static_cast<int>(nodes.size()); }
};

// Maximum-cardinality vertex-disjoint path family from A to B. When
// `allowed` is given, paths may only use nodes in it (A and B are
// intersected with it first). Errors: EmptySet if A or B is empty,
// SchemaError on out-of-range ids.
PathFamily max_vertex_disjoint(const ValidatedDigraph& g, const std::set<int>& A,
                               const std::set<int>& B,
                               const std::optional<std::set<int>>& allowed = std::nullopt);

// Minimum node set meeting every A->B path (within `allowed`); its size
// equals the maximum vertex-disjoint family size.
DisconnectingSet min_disconnecting_set(const ValidatedDigraph& g, const std::set<int>& A,
                                       const std::set<int>& B,
                                       const std::optional<std::set<int>>& allowed = std::nullopt);

// True iff removing `cut` leaves no directed A->B path within `allowed`.
// (A member of A∩B not in the cut counts as a surviving length-0 path.)
bool is_disconnecting(const ValidatedDigraph& g, const std::set<int>& A,
                      const std::set<int>& B, const std::set<int>& cut,
                      const std::optional<std::set<int>>& allowed = std::nullopt);

// Checks the family invariants: every path follows edges from A to B and no
// vertex appears in two paths (or twice in one).
bool family_is_valid(const ValidatedDigraph& g, const PathFamily& fam);

// Independent test oracle: enumerates every simple A->B path, then finds
// the largest packing of pairwise vertex-disjoint ones by exhaustive
// (memoized) search. Errors: TooLarge when n > 12 or the path count
// explodes; EmptySet as above.
int brute_force_disjoint(const ValidatedDigraph& g, const std::set<int>& A,
                         const std::set<int>& B);

// Second oracle for the dual side: smallest subset of nodes whose removal
// disconnects A from B, by subset enumeration (n <= 12).
int brute_force_min_disconnecting(const ValidatedDigraph& g, const std::set<int>& A,
                                  const std::set<int>& B);

}  // namespace netident
