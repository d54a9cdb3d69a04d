#include "netident/examples.hpp"

#include <algorithm>

#include "netident/errors.hpp"

namespace netident {

namespace {

Digraph make(int n, std::vector<std::pair<int, int>> edges, std::set<int> excited,
             std::map<std::pair<int, int>, long> delays = {}) {
  std::sort(edges.begin(), edges.end());
  Digraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.excited = std::move(excited);
  g.delays = std::move(delays);
  return g;
}

}  // namespace

std::vector<std::string> bundled_example_names() {
  return {"fig3", "fig4", "fig5", "fig6", "fig7"};
}

Digraph bundled_example(const std::string& name) {
  // Pairs are (i, j) = "j -> i".
  if (name == "fig3") {
    return make(3, {{2, 1}, {3, 1}, {3, 2}}, {1});
  }
  if (name == "fig4") {
    // Delays are the node-position differences, hence path-independent.
    std::vector<std::pair<int, int>> e = {{2, 1}, {4, 2}, {4, 3}, {5, 4}, {6, 3},
                                          {6, 4}, {6, 5}, {7, 6}, {8, 6}};
    std::map<std::pair<int, int>, long> d;
    for (const auto& [i, j] : e) d[{i, j}] = i - j;
    return make(8, e, {}, d);
  }
  if (name == "fig5") {
    return make(5, {{3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 3}, {5, 4}}, {1, 2});
  }
  if (name == "fig6") {
    return make(10,
                {{4, 1}, {5, 2}, {6, 2}, {6, 3}, {7, 5}, {8, 4}, {8, 6}, {9, 6}, {10, 7},
                 {10, 8}, {10, 9}},
                {1, 2, 3});
  }
  if (name == "fig7") {
    return make(7, {{3, 1}, {4, 1}, {4, 2}, {5, 2}, {6, 4}, {7, 3}, {7, 5}, {7, 6}}, {1, 2});
  }
  fail("SchemaError", "unknown bundled example '" + name + "' (have fig3..fig7)");
}

std::map<std::string, Digraph> bundled_examples() {
  std::map<std::string, Digraph> out;
  for (const auto& name : bundled_example_names()) out[name] = bundled_example(name);
  return out;
}

}  // namespace netident
