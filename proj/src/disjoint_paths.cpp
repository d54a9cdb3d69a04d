#include "netident/disjoint_paths.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "netident/errors.hpp"

namespace netident {

namespace {

// Unit-capacity max-flow network over split nodes.
// Node numbering: super-source 0, v_in = 2v-1, v_out = 2v, super-sink 2n+1.
class SplitFlow {
 public:
  SplitFlow(const ValidatedDigraph& g, const std::set<int>& A, const std::set<int>& B,
            const std::set<int>& allowed)
      : g_(g), n_(g.n()), big_(g.n() + 5), adj_(2 * g.n() + 2) {
    for (int v = 1; v <= n_; ++v)
      if (allowed.count(v)) add_arc(vin(v), vout(v), 1);
    for (const auto& [i, j] : sorted_edges())
      if (allowed.count(i) && allowed.count(j)) add_arc(vout(j), vin(i), big_);
    for (int a : A)
      if (allowed.count(a)) add_arc(src(), vin(a), big_);
    for (int b : B)
      if (allowed.count(b)) add_arc(vout(b), snk(), big_);
  }

  int src() const { return 0; }
  int snk() const { return 2 * n_ + 1; }
  int vin(int v) const { return 2 * v - 1; }
  int vout(int v) const { return 2 * v; }

  int max_flow() {
    int total = 0;
    while (augment()) ++total;
    return total;
  }

  // One breadth-first augmentation; bottleneck is always 1 (vertex arcs).
  bool augment() {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    q.push(src());
    seen[src()] = 1;
    while (!q.empty() && !seen[snk()]) {
      int u = q.front();
      q.pop();
      for (int id : adj_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap - a.flow <= 0 || seen[a.to]) continue;
        seen[a.to] = 1;
        via[a.to] = id;
        q.push(a.to);
      }
    }
    if (!seen[snk()]) return false;
    for (int u = snk(); u != src();) {
      Arc& a = arcs_[via[u]];
      a.flow += 1;
      arcs_[via[u] ^ 1].flow -= 1;
      u = arcs_[via[u] ^ 1].to;
    }
    return true;
  }

  // Walks saturated arcs from each used A-entry; every visited vertex arc
  // carries at most one unit, so each walk is uniquely determined.
  std::vector<std::vector<int>> decompose() {
    std::vector<std::vector<int>> paths;
    for (int id : adj_[src()]) {
      Arc& sa = arcs_[id];
      if (sa.flow <= 0) continue;
      std::vector<int> path;
      int u = sa.to;  // some vin(a)
      while (u != snk()) {
        if (u % 2 == 1) path.push_back((u + 1) / 2);  // v_in carries node id
        int next_id = -1;
        for (int cand : adj_[u]) {
          if ((cand & 1) == 0 /*forward arc*/ && arcs_[cand].flow > 0) {
            next_id = cand;
            break;
          }
        }
        Arc& na = arcs_[next_id];
        na.flow -= 1;
        arcs_[next_id ^ 1].flow += 1;
        u = na.to;
      }
      sa.flow -= 1;
      arcs_[id ^ 1].flow += 1;
      paths.push_back(std::move(path));
    }
    return paths;
  }

  // Nodes whose vertex arcs cross the residual source cut.
  std::vector<int> min_cut_nodes() {
    std::vector<char> reach(adj_.size(), 0);
    std::queue<int> q;
    q.push(src());
    reach[src()] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : adj_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap - a.flow <= 0 || reach[a.to]) continue;
        reach[a.to] = 1;
        q.push(a.to);
      }
    }
    std::vector<int> cut;
    for (int v = 1; v <= n_; ++v) {
      if (!vertex_arc_.count(v)) continue;
      if (reach[vin(v)] && !reach[vout(v)]) cut.push_back(v);
    }
    return cut;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
  };

  std::vector<std::pair<int, int>> sorted_edges() const {
    std::vector<std::pair<int, int>> es = g_.edges();
    // Arc insertion order (tail j, head i) ascending keeps augmentation and
    // decomposition deterministic.
    std::sort(es.begin(), es.end(), [](const auto& x, const auto& y) {
      return std::pair(x.second, x.first) < std::pair(y.second, y.first);
    });
    return es;
  }

  void add_arc(int from, int to, int cap) {
    if (from > 0 && from % 2 == 1 && to == from + 1) vertex_arc_.insert((to) / 2);
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, 0});  // even index: forward
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});  // odd index: residual
  }

  const ValidatedDigraph& g_;
  int n_, big_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::set<int> vertex_arc_;
};

std::set<int> default_allowed(const ValidatedDigraph& g,
                              const std::optional<std::set<int>>& allowed) {
  if (allowed) return *allowed;
  std::set<int> all;
  for (int v = 1; v <= g.n(); ++v) all.insert(v);
  return all;
}

void check_sets(const ValidatedDigraph& g, const std::set<int>& A,
                const std::set<int>& B) {
  if (A.empty() || B.empty())
    fail("EmptySet", "path/cut query requires nonempty endpoint sets");
  for (int v : A)
    if (v < 1 || v > g.n()) fail("SchemaError", "set member out of range");
  for (int v : B)
    if (v < 1 || v > g.n()) fail("SchemaError", "set member out of range");
}

}  // namespace

PathFamily max_vertex_disjoint(const ValidatedDigraph& g, const std::set<int>& A,
                               const std::set<int>& B,
                               const std::optional<std::set<int>>& allowed) {
  check_sets(g, A, B);
  SplitFlow f(g, A, B, default_allowed(g, allowed));
  f.max_flow();
  PathFamily fam;
  fam.paths = f.decompose();
  fam.A.assign(A.begin(), A.end());
  fam.B.assign(B.begin(), B.end());
  return fam;
}

DisconnectingSet min_disconnecting_set(const ValidatedDigraph& g, const std::set<int>& A,
                                       const std::set<int>& B,
                                       const std::optional<std::set<int>>& allowed) {
  check_sets(g, A, B);
  SplitFlow f(g, A, B, default_allowed(g, allowed));
  f.max_flow();
  DisconnectingSet d;
  d.nodes = f.min_cut_nodes();
  d.A.assign(A.begin(), A.end());
  d.B.assign(B.begin(), B.end());
  return d;
}

bool is_disconnecting(const ValidatedDigraph& g, const std::set<int>& A,
                      const std::set<int>& B, const std::set<int>& cut,
                      const std::optional<std::set<int>>& allowed) {
  std::set<int> ok = default_allowed(g, allowed);
  for (int c : cut) ok.erase(c);
  std::vector<char> vis(g.n() + 1, 0);
  std::vector<int> stack;
  for (int a : A)
    if (ok.count(a)) {
      if (B.count(a)) return false;  // surviving length-0 path
      vis[a] = 1;
      stack.push_back(a);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.out_neighbors(u)) {
      if (!ok.count(w) || vis[w]) continue;
      if (B.count(w)) return false;
      vis[w] = 1;
      stack.push_back(w);
    }
  }
  return true;
}

bool family_is_valid(const ValidatedDigraph& g, const PathFamily& fam) {
  std::set<int> used;
  std::set<int> A(fam.A.begin(), fam.A.end()), B(fam.B.begin(), fam.B.end());
  for (const auto& p : fam.paths) {
    if (p.empty()) return false;
    if (!A.count(p.front()) || !B.count(p.back())) return false;
    for (size_t k = 0; k + 1 < p.size(); ++k)
      if (!g.has_edge(p[k + 1], p[k])) return false;  // edge p[k] -> p[k+1]
    for (int v : p)
      if (!used.insert(v).second) return false;
  }
  return true;
}

int brute_force_disjoint(const ValidatedDigraph& g, const std::set<int>& A,
                         const std::set<int>& B) {
  check_sets(g, A, B);
  if (g.n() > 12) fail("TooLarge", "brute-force oracle limited to n <= 12");
  constexpr size_t kMaxPaths = 200000;

  // Enumerate all simple A->B paths as vertex bitmasks.
  std::vector<std::uint32_t> paths;
  std::uint32_t cur_mask = 0;
  auto dfs = [&](auto&& self, int u) -> void {
    cur_mask |= (1u << u);
    if (B.count(u)) {
      paths.push_back(cur_mask);
      if (paths.size() > kMaxPaths) fail("TooLarge", "too many simple paths");
    }
    for (int w : g.out_neighbors(u))
      if (!(cur_mask & (1u << w))) self(self, w);
    cur_mask &= ~(1u << u);
  };
  for (int a : A) dfs(dfs, a);

  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

  // Largest pairwise-disjoint packing via memoized search on the used mask.
  std::map<std::uint32_t, int> memo;
  auto best = [&](auto&& self, std::uint32_t used) -> int {
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    int b = 0;
    for (std::uint32_t pm : paths)
      if (!(pm & used)) b = std::max(b, 1 + self(self, used | pm));
    memo[used] = b;
    return b;
  };
  return best(best, 0);
}

int brute_force_min_disconnecting(const ValidatedDigraph& g, const std::set<int>& A,
                                  const std::set<int>& B) {
  check_sets(g, A, B);
  if (g.n() > 12) fail("TooLarge", "brute-force oracle limited to n <= 12");
  int n = g.n();
  for (int size = 0; size <= n; ++size) {
    // All subsets of {1..n} of the given size.
    std::vector<int> pick(size);
    auto rec = [&](auto&& self, int start, int depth) -> bool {
      if (depth == size) {
        std::set<int> cut(pick.begin(), pick.end());
        return is_disconnecting(g, A, B, cut);
      }
      for (int v = start; v <= n; ++v) {
        pick[depth] = v;
        if (self(self, v + 1, depth + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 1, 0)) return size;
  }
  return n;
}

}  // namespace netident
