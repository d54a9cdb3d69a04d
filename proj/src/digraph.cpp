#include "netident/digraph.hpp"

#include <algorithm>
#include <queue>

#include "netident/errors.hpp"

namespace netident {

namespace {

void check_node_range(int v, int n, const std::string& what) {
  if (v < 1 || v > n)
    fail("SchemaError", what + " id " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n));
}

}  // namespace

ValidatedDigraph validate(const Digraph& g, bool allow_disconnected) {
  if (g.n <= 0) fail("SchemaError", "node count must be positive");
  ValidatedDigraph v;
  v.n_ = g.n;
  v.in_.assign(g.n + 1, {});
  v.out_.assign(g.n + 1, {});

  for (const auto& [i, j] : g.edges) {
    check_node_range(i, g.n, "edge endpoint");
    check_node_range(j, g.n, "edge endpoint");
    if (i == j)
      fail("SelfLoop", "node " + std::to_string(i) + " influences itself");
    if (!v.edge_set_.insert({i, j}).second)
      fail("DuplicateEdge", "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                ") listed twice");
    v.edges_.push_back({i, j});
    v.in_[i].push_back(j);
    v.out_[j].push_back(i);
  }
  for (int i = 1; i <= g.n; ++i) {
    std::sort(v.in_[i].begin(), v.in_[i].end());
    std::sort(v.out_[i].begin(), v.out_[i].end());
  }

  for (int e : g.excited) check_node_range(e, g.n, "excited node");
  v.excited_ = g.excited;
  if (g.measured) {
    for (int m : *g.measured) check_node_range(m, g.n, "measured node");
    v.measured_ = *g.measured;
  } else {
    for (int i = 1; i <= g.n; ++i) v.measured_.insert(i);
  }
  for (const auto& [edge, d] : g.delays) {
    if (!v.edge_set_.count(edge))
      fail("SchemaError", "delay given for non-edge (" + std::to_string(edge.first) +
                              "," + std::to_string(edge.second) + ")");
    if (d < 1)
      fail("SchemaError", "edge delays must be positive integers");
  }
  v.file_delays_ = g.delays;

  // Kahn's algorithm with a min-heap: smallest ready id first.
  std::vector<int> indeg(g.n + 1, 0);
  for (int i = 1; i <= g.n; ++i) indeg[i] = static_cast<int>(v.in_[i].size());
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 1; i <= g.n; ++i)
    if (indeg[i] == 0) ready.push(i);
  v.pos_.assign(g.n + 1, -1);
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    v.pos_[u] = static_cast<int>(v.topo_.size());
    v.topo_.push_back(u);
    for (int w : v.out_[u])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(v.topo_.size()) != g.n) {
    // Extract one cycle from the leftover nodes by walking in-neighbors
    // (every leftover node still has one inside the leftover set).
    std::vector<int> stuck;
    std::vector<char> left(g.n + 1, 0);
    for (int i = 1; i <= g.n; ++i)
      if (v.pos_[i] < 0) left[i] = 1;
    int start = 1;
    while (!left[start]) ++start;
    std::vector<int> walk;
    std::vector<int> seen_at(g.n + 1, -1);
    int cur = start;
    while (seen_at[cur] < 0) {
      seen_at[cur] = static_cast<int>(walk.size());
      walk.push_back(cur);
      int next = -1;
      for (int j : v.in_[cur])
        if (left[j]) {
          next = j;
          break;
        }
      cur = next;
    }
    std::vector<int> cycle(walk.begin() + seen_at[cur], walk.end());
    std::reverse(cycle.begin(), cycle.end());  // report in influence order
    cycle.push_back(cycle.front());
    std::string msg = "cycle:";
    for (int x : cycle) msg += " " + std::to_string(x);
    throw CycleError(cycle, msg);
  }

  if (!allow_disconnected && g.n > 1) {
    std::vector<char> vis(g.n + 1, 0);
    std::vector<int> stack = {1};
    vis[1] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      auto push = [&](int w) {
        if (!vis[w]) {
          vis[w] = 1;
          ++count;
          stack.push_back(w);
        }
      };
      for (int w : v.in_[u]) push(w);
      for (int w : v.out_[u]) push(w);
    }
    if (count != g.n)
      fail("NotWeaklyConnected",
           "graph has more than one weakly connected component");
  }
  return v;
}

std::vector<int> ValidatedDigraph::sources() const {
  std::vector<int> s;
  for (int i = 1; i <= n_; ++i)
    if (in_[i].empty()) s.push_back(i);
  return s;
}

std::vector<int> ValidatedDigraph::sinks() const {
  std::vector<int> s;
  for (int i = 1; i <= n_; ++i)
    if (out_[i].empty()) s.push_back(i);
  return s;
}

std::set<int> ValidatedDigraph::ancestors(int i) const {
  std::set<int> anc;
  std::vector<int> stack(in_[i].begin(), in_[i].end());
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (!anc.insert(u).second) continue;
    for (int j : in_[u]) stack.push_back(j);
  }
  return anc;
}

std::set<int> ValidatedDigraph::reachable_excited(int i) const {
  std::set<int> anc = ancestors(i);
  anc.insert(i);  // length-0 path
  std::set<int> r;
  for (int e : excited_)
    if (anc.count(e)) r.insert(e);
  return r;
}

bool ValidatedDigraph::reaches(int j, int i) const {
  if (j == i) return true;
  return ancestors(i).count(j) > 0;
}

bool ValidatedDigraph::is_tree() const {
  // Validation already guarantees weak connectivity for graphs built with
  // allow_disconnected = false; re-check here so the predicate stands alone.
  if (static_cast<int>(edges_.size()) != n_ - 1) return false;
  std::vector<char> vis(n_ + 1, 0);
  std::vector<int> stack = {1};
  vis[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    auto push = [&](int w) {
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        stack.push_back(w);
      }
    };
    for (int w : in_[u]) push(w);
    for (int w : out_[u]) push(w);
  }
  return count == n_;
}

long DelayAssignment::edge_delay(int i, int j) const {
  auto it = m.find({i, j});
  if (it == m.end())
    fail("SchemaError", "no delay assigned to edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  return it->second;
}

DelayAssignment assign_path_independent_delays(const ValidatedDigraph& g, long k) {
  if (k < 1) fail("SchemaError", "delay family parameter k must be >= 1");
  DelayAssignment a;
  for (const auto& [i, j] : g.edges())
    a.m[{i, j}] = k * (g.topo_pos(i) - g.topo_pos(j));
  return a;
}

DelayAssignment effective_delays(const ValidatedDigraph& g, long k) {
  if (g.file_delays().empty()) return assign_path_independent_delays(g, k);
  DelayAssignment a;
  a.m = g.file_delays();
  for (const auto& [i, j] : g.edges()) {
    if (!a.m.count({i, j}))
      fail("SchemaError", "delays, when given, must cover every edge; missing (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return a;
}

DelayTable verify_path_independence(const ValidatedDigraph& g,
                                    const DelayAssignment& delays) {
  for (const auto& [i, j] : g.edges()) {
    if (delays.edge_delay(i, j) < 1)
      fail("SchemaError", "edge delays must be positive integers");
  }
  DelayTable table;
  // For each start node j, sweep the topological order keeping up to two
  // distinct totals per node, each with a predecessor link for witness
  // reconstruction. Two totals suffice: a pair is uniform iff one total
  // exists, and any two distinct totals witness a conflict.
  struct Slot {
    long total;
    int pred;      // previous node on a path realizing this total
    int pred_slot; // which slot of pred it extends
  };
  int n = g.n();
  for (int j = 1; j <= n; ++j) {
    std::vector<std::vector<Slot>> slots(n + 1);
    slots[j].push_back({0, 0, -1});
    for (int idx = g.topo_pos(j); idx < n; ++idx) {
      int u = g.topological_order()[idx];
      if (slots[u].empty()) continue;
      for (int w : g.out_neighbors(u)) {
        long d = delays.edge_delay(w, u);
        for (int s = 0; s < static_cast<int>(slots[u].size()); ++s) {
          long t = slots[u][s].total + d;
          auto& sw = slots[w];
          if (sw.size() >= 2) continue;
          bool dup = false;
          for (const auto& have : sw) dup |= (have.total == t);
          if (!dup) sw.push_back({t, u, s});
        }
      }
    }
    auto reconstruct = [&](int node, int slot) {
      std::vector<int> path;
      while (slot >= 0) {
        path.push_back(node);
        const Slot& s = slots[node][slot];
        int pn = s.pred, ps = s.pred_slot;
        if (ps < 0 && node == j) break;
        node = pn;
        slot = ps;
      }
      std::reverse(path.begin(), path.end());
      return path;
    };
    for (int i = 1; i <= n; ++i) {
      if (i == j || slots[i].empty()) continue;
      PairDelay pd;
      if (slots[i].size() == 1) {
        pd.uniform = true;
        pd.T = slots[i][0].total + 1;
      } else {
        pd.uniform = false;
        pd.path_a = reconstruct(i, 0);
        pd.total_a = slots[i][0].total;
        pd.path_b = reconstruct(i, 1);
        pd.total_b = slots[i][1].total;
      }
      table[{i, j}] = std::move(pd);
    }
  }
  return table;
}

std::set<long> enumerate_path_totals(const ValidatedDigraph& g,
                                     const DelayAssignment& delays, int j, int i) {
  std::set<long> totals;
  std::vector<std::pair<int, long>> stack = {{j, 0}};
  while (!stack.empty()) {
    auto [u, t] = stack.back();
    stack.pop_back();
    if (u == i) {
      totals.insert(t);
      continue;
    }
    for (int w : g.out_neighbors(u))
      stack.push_back({w, t + delays.edge_delay(w, u)});
  }
  if (j == i) totals.insert(0);
  return totals;
}

}  // namespace netident
