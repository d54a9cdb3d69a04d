#pragma once
// Shared helpers for the test binaries: deterministic random DAG draws.
// Nodes are numbered so that an edge j -> i always has j < i, which makes
// acyclicity automatic; the excited set is a random nonempty subset.

#include <set>
#include <utility>
#include <vector>

#include "netident/digraph.hpp"
#include "netident/rng.hpp"

namespace testutil {

inline netident::Digraph random_dag(int n, netident::Rng& rng, int percent_edge = 40,
                                    bool want_excited = true) {
  netident::Digraph g;
  g.n = n;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (rng.uniform_int(1, 100) <= percent_edge) g.edges.emplace_back(i, j);
  if (want_excited) {
    for (int i = 1; i <= n; ++i)
      if (rng.uniform_int(0, 1) == 1) g.excited.insert(i);
    if (g.excited.empty()) g.excited.insert(1);
  }
  return g;
}

// Random tree on n nodes: each node i >= 2 hangs off a uniformly chosen
// earlier node, edges oriented parent -> child.
inline netident::Digraph random_tree(int n, netident::Rng& rng) {
  netident::Digraph g;
  g.n = n;
  for (int i = 2; i <= n; ++i) {
    int parent = static_cast<int>(rng.uniform_int(1, i - 1));
    g.edges.emplace_back(i, parent);
  }
  return g;
}

// Random nonempty subset of 1..n.
inline std::set<int> random_subset(int n, netident::Rng& rng) {
  std::set<int> s;
  for (int i = 1; i <= n; ++i)
    if (rng.uniform_int(0, 1) == 1) s.insert(i);
  if (s.empty()) s.insert(static_cast<int>(rng.uniform_int(1, n)));
  return s;
}

}  // namespace testutil
