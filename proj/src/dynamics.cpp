#include "netident/dynamics.hpp"

#include <algorithm>

#include "netident/errors.hpp"

namespace netident {

int NetworkDynamics::var_index(const ValidatedDigraph& g, int i, int j) {
  const auto& nbrs = g.in_neighbors(i);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j);
  if (it == nbrs.end() || *it != j)
    fail("SchemaError", std::to_string(j) + " is not an in-neighbor of " +
                            std::to_string(i));
  return static_cast<int>(it - nbrs.begin());
}

void validate_dynamics(const ValidatedDigraph& g, const NetworkDynamics& dyn) {
  if (static_cast<int>(dyn.phi.size()) != g.n() + 1)
    fail("InvalidDynamics", "dynamics must define phi for every node");
  for (int i = 1; i <= g.n(); ++i) {
    int arity = static_cast<int>(g.in_neighbors(i).size());
    if (dyn.phi[i].arity() != arity)
      fail("InvalidDynamics", "phi of node " + std::to_string(i) + " has arity " +
                                  std::to_string(dyn.phi[i].arity()) + ", expected " +
                                  std::to_string(arity));
    for (int v = 0; v < arity; ++v) {
      if (dyn.phi[i].diff(v).is_zero())
        fail("InvalidDynamics",
             "edge " + std::to_string(g.in_neighbors(i)[v]) + " -> " +
                 std::to_string(i) +
                 " is vacuous: phi does not depend on that in-neighbor");
    }
    if (dyn.mode == DynamicsMode::Additive) {
      if (!decompose(dyn.phi[i]).cross.is_zero())
        fail("InvalidDynamics", "additive mode but phi of node " + std::to_string(i) +
                                    " has a cross part or constant term");
    }
  }
}

NetworkDynamics random_dynamics(const ValidatedDigraph& g, int K, std::uint64_t seed,
                                DynamicsMode mode, long bound) {
  if (K < 1) fail("SchemaError", "dynamics degree K must be >= 1");
  NetworkDynamics dyn;
  dyn.mode = mode;
  dyn.phi.assign(g.n() + 1, Polynomial(0));
  for (int i = 1; i <= g.n(); ++i) {
    int arity = static_cast<int>(g.in_neighbors(i).size());
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    if (arity == 0) {
      dyn.phi[i] = Polynomial(0);  // sources emit nothing of their own
      continue;
    }
    if (mode == DynamicsMode::General) {
      dyn.phi[i] = random_polynomial(arity, K, rng, bound, /*include_constant=*/false);
    } else {
      Polynomial p(arity);
      for (int v = 0; v < arity; ++v) {
        std::vector<int> e(arity, 0);
        for (int d = 1; d <= K; ++d) {
          e[v] = d;
          p.add_term(e, rng.rational(bound));
        }
      }
      dyn.phi[i] = p;
    }
  }
  validate_dynamics(g, dyn);
  return dyn;
}

NetworkDynamics dynamics_from_edge_functions(
    const ValidatedDigraph& g,
    const std::map<std::pair<int, int>, Polynomial>& edge_f) {
  for (const auto& [edge, f] : edge_f) {
    if (!g.has_edge(edge.first, edge.second))
      fail("SchemaError", "edge function given for non-edge (" +
                              std::to_string(edge.first) + "," +
                              std::to_string(edge.second) + ")");
    if (f.arity() != 1)
      fail("SchemaError", "edge functions must be univariate");
  }
  NetworkDynamics dyn;
  dyn.mode = DynamicsMode::Additive;
  dyn.phi.assign(g.n() + 1, Polynomial(0));
  for (int i = 1; i <= g.n(); ++i) {
    int arity = static_cast<int>(g.in_neighbors(i).size());
    Polynomial p(arity);
    for (int v = 0; v < arity; ++v) {
      auto it = edge_f.find({i, g.in_neighbors(i)[v]});
      if (it == edge_f.end())
        fail("SchemaError", "missing edge function for (" + std::to_string(i) + "," +
                                std::to_string(g.in_neighbors(i)[v]) + ")");
      p = p + it->second.remap(arity, {v});
    }
    dyn.phi[i] = p;
  }
  validate_dynamics(g, dyn);
  return dyn;
}

}  // namespace netident
