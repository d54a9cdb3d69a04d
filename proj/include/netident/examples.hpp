#pragma once
/*
 * The five bundled example networks used throughout the documentation and
 * golden tests: fig3, a 3-node chain with a shortcut; fig4, an 8-node
 * delayed network (the only one shipping explicit per-edge delays); fig5,
 * the 5-node two-layer graph whose coincident middle outputs admit a swap
 * ambiguity; fig6, a 10-node graph with a full 3-path disjoint family; and
 * fig7, a 7-node graph whose middle bottleneck separates the additive from
 * the unrestricted model.
 *
 * Edges follow the file convention: a pair (i, j) means j -> i.
 */

#include <map>
#include <string>
#include <vector>

#include "netident/digraph.hpp"

namespace netident {

// Names in deterministic order: fig3, fig4, fig5, fig6, fig7.
std::vector<std::string> bundled_example_names();

// The raw (unvalidated) graph for a bundled name. SchemaError on unknown
// names. All bundled graphs pass validate().
Digraph bundled_example(const std::string& name);

std::map<std::string, Digraph> bundled_examples();

}  // namespace netident
