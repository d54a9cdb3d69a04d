#pragma once
/*
 * Directed acyclic influence graphs.
 *
 * Convention (documented everywhere it can bite): an edge pair (i, j) means
 * "j influences i", i.e. j is an in-neighbor of i and signal flows j -> i.
 * Input files list edges in exactly this (i, j) order. Node ids are 1-based.
 *
 * Validation rejects self-loops, duplicate edges, cycles (reporting one),
 * and — unless explicitly allowed — graphs whose undirected skeleton is not
 * connected. A validated graph caches its deterministic topological order
 * (Kahn's algorithm, smallest node id first among ready nodes), which every
 * downstream delay/report computation reuses so outputs are reproducible.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace netident {

// Raw parsed graph, prior to validation.
struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (i, j): j -> i influence
  std::set<int> excited;
  std::optional<std::set<int>> measured;   // absent = all nodes measured
  std::map<std::pair<int, int>, long> delays;  // per edge (i, j); may be empty
};

class ValidatedDigraph {
 public:
  int n() const { return n_; }
  // Nodes that influence i, ascending.
  const std::vector<int>& in_neighbors(int i) const { return in_[i]; }
  // Nodes influenced by i, ascending.
  const std::vector<int>& out_neighbors(int i) const { return out_[i]; }
  bool has_edge(int i, int j) const { return edge_set_.count({i, j}) > 0; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::set<int>& excited() const { return excited_; }
  const std::set<int>& measured() const { return measured_; }
  bool fully_measured() const { return static_cast<int>(measured_.size()) == n_; }
  const std::map<std::pair<int, int>, long>& file_delays() const { return file_delays_; }

  // Deterministic topological order (smallest-id-first tie break).
  const std::vector<int>& topological_order() const { return topo_; }
  // 0-based position of node i in the topological order.
  int topo_pos(int i) const { return pos_[i]; }

  std::vector<int> sources() const;
  std::vector<int> sinks() const;

  // Strict ancestors of i: nodes with a directed path of length >= 1 to i.
  std::set<int> ancestors(int i) const;
  // Excited nodes with a directed path (length >= 0) to i.
  std::set<int> reachable_excited(int i) const;
  // True iff a directed path (length >= 0) runs from j to i.
  bool reaches(int j, int i) const;

  // True iff the undirected skeleton is a tree (connected, n-1 edges).
  bool is_tree() const;

  friend ValidatedDigraph validate(const Digraph& g, bool allow_disconnected);

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::set<std::pair<int, int>> edge_set_;
  std::vector<std::vector<int>> in_, out_;
  std::set<int> excited_, measured_;
  std::map<std::pair<int, int>, long> file_delays_;
  std::vector<int> topo_, pos_;
};

// Checks all structural invariants and caches topological data.
// Errors: SelfLoop, DuplicateEdge, CycleDetected (with the cycle),
// NotWeaklyConnected (unless allow_disconnected), SchemaError for
// out-of-range ids.
ValidatedDigraph validate(const Digraph& g, bool allow_disconnected = false);

/*
 * Per-edge delay assignment (positive integers) and the derived node-pair
 * delay table. A pair (j, i) with j reaching i is Uniform when all directed
 * j->i paths carry the same total edge delay; the pair delay is then that
 * total plus one (one step for the final state update). Otherwise the pair
 * is a Conflict, witnessed by two concrete paths with different totals.
 */
struct DelayAssignment {
  std::map<std::pair<int, int>, long> m;  // key (i, j) for edge j -> i
  long edge_delay(int i, int j) const;
};

struct PairDelay {
  bool uniform = true;
  long T = 0;                       // uniform: path total + 1
  std::vector<int> path_a, path_b;  // conflict witnesses (node sequences j..i)
  long total_a = 0, total_b = 0;    // their differing totals
};

// Key (i, j): j != i, j reaches i.
using DelayTable = std::map<std::pair<int, int>, PairDelay>;

// Relabels by the deterministic topological order and sets the edge delay
// k * (pos(i) - pos(j)) for every edge j -> i. Every path j -> i then sums
// to k * (pos(i) - pos(j)) regardless of route, so the table it induces is
// conflict-free by construction.
DelayAssignment assign_path_independent_delays(const ValidatedDigraph& g, long k = 1);

// The delay assignment an analysis should use: the file-specified delays
// when the graph carries any (they must then cover every edge — SchemaError
// otherwise), else the canonical path-independent assignment with step k.
DelayAssignment effective_delays(const ValidatedDigraph& g, long k = 1);

// Exact per-pair classification. Internally tracks, per source node, up to
// two distinct path totals per target (enough to decide uniformity and to
// reconstruct two conflicting witness paths); this is equivalent to full
// path enumeration, which stays finite on a DAG but can be exponential.
DelayTable verify_path_independence(const ValidatedDigraph& g,
                                    const DelayAssignment& delays);

// Test oracle: exhaustively enumerates every directed path j -> i and
// returns the set of distinct totals (intended for small n only).
std::set<long> enumerate_path_totals(const ValidatedDigraph& g,
                                     const DelayAssignment& delays, int j, int i);

}  // namespace netident
