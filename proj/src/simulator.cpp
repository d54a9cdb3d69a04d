#include "netident/simulator.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "netident/errors.hpp"

namespace netident {

namespace {

constexpr std::size_t kMaxUnrollStates = 200000;
constexpr std::size_t kMaxUnrollTerms = 1000000;
constexpr int kMaxUnrollDegree = 64;

Rational schedule_value(const InputSchedule& s, int node, int t) {
  if (t < 0 || t > s.horizon) return 0;
  auto it = s.inputs.find(node);
  if (it == s.inputs.end()) return 0;
  return it->second[static_cast<std::size_t>(t)];
}

void check_schedule(const ValidatedDigraph& g, const InputSchedule& s) {
  if (s.horizon < 0) fail("SchemaError", "schedule horizon must be non-negative");
  for (const auto& [node, seq] : s.inputs) {
    if (node < 1 || node > g.n() || !g.excited().count(node)) {
      std::ostringstream os;
      os << "schedule provides input for node " << node << " which is not excited";
      fail("SchemaError", os.str());
    }
    if (static_cast<int>(seq.size()) != s.horizon + 1) {
      std::ostringstream os;
      os << "input sequence for node " << node << " has length " << seq.size()
         << ", expected horizon+1 = " << s.horizon + 1;
      fail("SchemaError", os.str());
    }
  }
}

}  // namespace

Trajectory simulate(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                    const DelayAssignment& delays, const InputSchedule& schedule) {
  check_schedule(g, schedule);
  validate_dynamics(g, dyn);

  const int n = g.n();
  const int T = schedule.horizon;
  Trajectory out;
  out.horizon = T;
  out.y.assign(static_cast<std::size_t>(n) + 1, std::vector<Rational>(static_cast<std::size_t>(T) + 1, Rational(0)));

  // Every edge delay is at least 1, so at each time step the arguments of
  // phi refer to strictly earlier times and nodes can be updated in id order.
  for (int k = 0; k <= T; ++k) {
    for (int i = 1; i <= n; ++i) {
      Rational v = 0;
      if (g.excited().count(i)) v += schedule_value(schedule, i, k - 1);
      const auto& nb = g.in_neighbors(i);
      if (!nb.empty()) {
        std::vector<Rational> args;
        args.reserve(nb.size());
        for (int j : nb) {
          long m = delays.edge_delay(i, j);
          long t = static_cast<long>(k) - m;
          args.push_back(t >= 0 ? out.y[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]
                                : Rational(0));
        }
        v += dyn.phi_of(i).eval(args);
      } else {
        v += dyn.phi_of(i).eval({});
      }
      out.y[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = v;
    }
  }

  // Longest delay-weighted path from an excited node; excitation injected at
  // time t first shows up at distance L at time t + 1 + L.
  if (!g.excited().empty()) {
    const long NEG = std::numeric_limits<long>::min() / 4;
    std::vector<long> far(static_cast<std::size_t>(n) + 1, NEG);
    for (int e : g.excited()) far[static_cast<std::size_t>(e)] = 0;
    for (int i : g.topological_order()) {
      for (int j : g.in_neighbors(i)) {
        if (far[static_cast<std::size_t>(j)] > NEG) {
          far[static_cast<std::size_t>(i)] =
              std::max(far[static_cast<std::size_t>(i)],
                       far[static_cast<std::size_t>(j)] + delays.edge_delay(i, j));
        }
      }
    }
    long need = 0;
    for (int i = 1; i <= n; ++i)
      if (far[static_cast<std::size_t>(i)] > NEG)
        need = std::max(need, far[static_cast<std::size_t>(i)] + 1);
    if (T < need) {
      std::ostringstream os;
      os << "HorizonTooShort: horizon " << T << " ends before excitation reaches the farthest node (needs "
         << need << ")";
      out.warnings.push_back(os.str());
    }
  }

  return out;
}

namespace {

// Shared state for the symbolic unrolling of one node's output.
struct Unroller {
  const ValidatedDigraph& g;
  const NetworkDynamics& dyn;
  const DelayAssignment& delays;
  std::set<std::pair<int, int>> seen;  // (node, shift) states visited in pass 1
  std::set<std::pair<int, int>> vars;  // (excited node, shift of its input sample)
  std::map<std::pair<int, int>, int> var_index;
  std::map<std::pair<int, int>, Polynomial> memo;
  int arity = 0;

  // Pass 1: discover which delayed input samples can appear in y_node^{k-shift}.
  void collect(int node, int shift) {
    if (!seen.insert({node, shift}).second) return;
    if (seen.size() > kMaxUnrollStates)
      fail("TooLarge", "symbolic unrolling visits too many (node, delay) states");
    if (g.excited().count(node)) vars.insert({node, shift + 1});
    for (int j : g.in_neighbors(node))
      collect(j, shift + static_cast<int>(delays.edge_delay(node, j)));
  }

  // Pass 2: build the polynomial for y_node^{k-shift} over the fixed variable set.
  const Polynomial& expr(int node, int shift) {
    auto key = std::make_pair(node, shift);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Polynomial p(arity);
    if (g.excited().count(node))
      p = p + Polynomial::variable(arity, var_index.at({node, shift + 1}));
    const auto& nb = g.in_neighbors(node);
    if (!nb.empty()) {
      std::vector<Polynomial> args;
      args.reserve(nb.size());
      for (int j : nb)
        args.push_back(expr(j, shift + static_cast<int>(delays.edge_delay(node, j))));
      p = p + dyn.phi_of(node).compose(args);
    } else {
      p = p + Polynomial::constant(arity, dyn.phi_of(node).eval({}));
    }
    if (p.term_count() > kMaxUnrollTerms || p.degree() > kMaxUnrollDegree)
      fail("TooLarge", "symbolic unrolling exceeds the term or degree budget");
    return memo.emplace(key, std::move(p)).first->second;
  }
};

}  // namespace

MeasuredFunction measured_function(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                                   const DelayAssignment& delays, int i) {
  if (i < 1 || i > g.n()) fail("SchemaError", "node id out of range");
  validate_dynamics(g, dyn);
  Unroller u{g, dyn, delays, {}, {}, {}, {}, 0};
  u.collect(i, 0);
  MeasuredFunction mf;
  mf.vars.assign(u.vars.begin(), u.vars.end());
  u.arity = static_cast<int>(mf.vars.size());
  for (int v = 0; v < u.arity; ++v) u.var_index[mf.vars[static_cast<std::size_t>(v)]] = v;
  mf.F = u.expr(i, 0);
  return mf;
}

Rational eval_measured(const MeasuredFunction& mf, const InputSchedule& schedule, int k) {
  std::vector<Rational> point;
  point.reserve(mf.vars.size());
  for (const auto& [node, shift] : mf.vars) point.push_back(schedule_value(schedule, node, k - shift));
  return mf.F.eval(point);
}

InputSchedule restrict_path_independent(const ValidatedDigraph& g,
                                        const DelayAssignment& delays,
                                        const InputSchedule& schedule) {
  DelayTable table = verify_path_independence(g, delays);
  std::set<int> conflicted;
  for (const auto& [pair, pd] : table)
    if (!pd.uniform) conflicted.insert(pair.second);
  InputSchedule out = schedule;
  for (auto& [node, seq] : out.inputs) {
    if (conflicted.count(node) && !seq.empty())
      std::fill(seq.begin(), seq.end(), seq.front());
  }
  return out;
}

namespace {

void check_point(const ValidatedDigraph& g, const std::map<int, Rational>& u) {
  for (const auto& [node, val] : u) {
    (void)val;
    if (node < 1 || node > g.n() || !g.excited().count(node)) {
      std::ostringstream os;
      os << "excitation value given for node " << node << " which is not excited";
      fail("SchemaError", os.str());
    }
  }
}

}  // namespace

std::vector<Rational> xi_map(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                             int i, const std::map<int, Rational>& u) {
  if (i < 1 || i > g.n()) fail("SchemaError", "node id out of range");
  validate_dynamics(g, dyn);
  check_point(g, u);
  const int n = g.n();
  std::vector<Rational> y(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int v : g.topological_order()) {
    Rational val = 0;
    auto it = u.find(v);
    if (it != u.end()) val += it->second;
    const auto& nb = g.in_neighbors(v);
    std::vector<Rational> args;
    args.reserve(nb.size());
    for (int j : nb) args.push_back(y[static_cast<std::size_t>(j)]);
    val += dyn.phi_of(v).eval(args);
    y[static_cast<std::size_t>(v)] = val;
  }
  std::vector<Rational> out;
  for (int j : g.in_neighbors(i)) out.push_back(y[static_cast<std::size_t>(j)]);
  return out;
}

XiJacobian xi_jacobian_symbolic(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                                int i, const std::map<int, Rational>& u) {
  if (i < 1 || i > g.n()) fail("SchemaError", "node id out of range");
  validate_dynamics(g, dyn);
  check_point(g, u);

  XiJacobian out;
  out.targets = g.in_neighbors(i);
  std::set<int> anc = g.ancestors(i);
  for (int e : g.excited())
    if (anc.count(e)) out.excitations.push_back(e);

  const int E = static_cast<int>(out.excitations.size());
  std::map<int, int> col_of;
  for (int c = 0; c < E; ++c) col_of[out.excitations[static_cast<std::size_t>(c)]] = c;

  // Symbolic static propagation over the ancestors of i, with one formal
  // variable per contributing excitation.
  std::map<int, Polynomial> S;
  for (int v : g.topological_order()) {
    if (!anc.count(v)) continue;
    Polynomial p(E);
    auto ce = col_of.find(v);
    if (ce != col_of.end()) p = p + Polynomial::variable(E, ce->second);
    const auto& nb = g.in_neighbors(v);
    if (!nb.empty()) {
      std::vector<Polynomial> args;
      args.reserve(nb.size());
      for (int j : nb) args.push_back(S.at(j));
      p = p + dyn.phi_of(v).compose(args);
    } else {
      p = p + Polynomial::constant(E, dyn.phi_of(v).eval({}));
    }
    if (p.term_count() > kMaxUnrollTerms)
      fail("TooLarge", "symbolic propagation exceeds the term budget");
    S.emplace(v, std::move(p));
  }

  std::vector<Rational> point(static_cast<std::size_t>(E), Rational(0));
  for (int c = 0; c < E; ++c) {
    auto it = u.find(out.excitations[static_cast<std::size_t>(c)]);
    if (it != u.end()) point[static_cast<std::size_t>(c)] = it->second;
  }

  out.sym = RationalMatrix::zero(static_cast<int>(out.targets.size()), E);
  for (std::size_t r = 0; r < out.targets.size(); ++r) {
    const Polynomial& pj = S.at(out.targets[r]);
    for (int c = 0; c < E; ++c)
      out.sym.a[r][static_cast<std::size_t>(c)] = pj.diff(c).eval(point);
  }
  out.rank = exact_rank(out.sym);
  return out;
}

std::vector<std::vector<double>> xi_jacobian_fd(const ValidatedDigraph& g,
                                                const NetworkDynamics& dyn, int i,
                                                const std::map<int, Rational>& u,
                                                double h) {
  if (i < 1 || i > g.n()) fail("SchemaError", "node id out of range");
  if (!(h > 0)) fail("SchemaError", "finite-difference step must be positive");
  validate_dynamics(g, dyn);
  check_point(g, u);

  std::vector<int> targets = g.in_neighbors(i);
  std::set<int> anc = g.ancestors(i);
  std::vector<int> excitations;
  for (int e : g.excited())
    if (anc.count(e)) excitations.push_back(e);

  const int n = g.n();
  auto propagate = [&](const std::map<int, double>& uv) {
    std::vector<double> y(static_cast<std::size_t>(n) + 1, 0.0);
    for (int v : g.topological_order()) {
      double val = 0.0;
      auto it = uv.find(v);
      if (it != uv.end()) val += it->second;
      const auto& nb = g.in_neighbors(v);
      std::vector<double> args;
      args.reserve(nb.size());
      for (int j : nb) args.push_back(y[static_cast<std::size_t>(j)]);
      val += dyn.phi_of(v).eval_double(args);
      y[static_cast<std::size_t>(v)] = val;
    }
    std::vector<double> out;
    out.reserve(targets.size());
    for (int j : targets) out.push_back(y[static_cast<std::size_t>(j)]);
    return out;
  };

  std::map<int, double> base;
  for (int e : excitations) {
    auto it = u.find(e);
    base[e] = it != u.end() ? rat_double(it->second) : 0.0;
  }

  std::vector<std::vector<double>> jac(targets.size(),
                                       std::vector<double>(excitations.size(), 0.0));
  for (std::size_t c = 0; c < excitations.size(); ++c) {
    std::map<int, double> up = base, dn = base;
    up[excitations[c]] += h;
    dn[excitations[c]] -= h;
    std::vector<double> yp = propagate(up), yn = propagate(dn);
    for (std::size_t r = 0; r < targets.size(); ++r)
      jac[r][c] = (yp[r] - yn[r]) / (2.0 * h);
  }
  return jac;
}

}  // namespace netident
