#pragma once
/*
 * Per-node and network-level generic identifiability analysis under full
 * measurement.
 *
 * The decision engine is combinatorial: node i's incoming edge functions are
 * generically identifiable when there is a family of |N_i| vertex-disjoint
 * paths from the excited nodes to the in-neighborhood N_i. The path family
 * is returned as the positive witness. When the family falls short, max-flow
 * duality yields a minimum disconnecting set D with |D| < |N_i|, the seed of
 * a negative certificate.
 *
 * How a shortfall is labelled depends on the function class:
 *   - Polynomial: the condition is an exact characterization, so a deficient
 *     node is NotIdentifiable (and a polynomial certificate exists).
 *   - Analytic: the condition is proven sufficient; a shortfall is only
 *     conjectured to imply non-identifiability, hence UnknownConjectured.
 *   - Additive (each phi a sum of univariate functions): the shortfall
 *     implies nothing — there are networks where a deficient node is still
 *     identifiable within the additive class — hence Unknown.
 */

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "netident/disjoint_paths.hpp"
#include "netident/dynamics.hpp"

namespace netident {

enum class FunctionClass { Polynomial, Analytic, Additive };

enum class Verdict {
  GenericallyIdentifiable,
  NotIdentifiable,
  UnknownConjectured,  // deficient, analytic class: conjectured not identifiable
  Unknown,             // deficient, additive class: genuinely undecided
};

std::string to_string(FunctionClass c);
std::string to_string(Verdict v);
FunctionClass function_class_from_string(const std::string& s);  // SchemaError on junk

struct NodeVerdict {
  int node = 0;
  Verdict verdict = Verdict::Unknown;
  std::vector<int> targets;                      // N_i, ascending
  int required = 0;                              // |N_i|
  int achieved = 0;                              // max vertex-disjoint paths
  std::optional<PathFamily> witness;             // present iff identifiable
  std::optional<DisconnectingSet> deficiency;    // present iff deficient
  std::vector<std::string> notes;
};

struct SourceViolation {
  int node = 0;          // unexcited source with at least one outgoing edge
  std::string message;
};

struct Advisory {
  int node = 0;          // excited node whose excitation cannot help
  std::string message;
};

struct IdentifiabilityReport {
  FunctionClass fclass = FunctionClass::Analytic;
  Verdict network_verdict = Verdict::GenericallyIdentifiable;
  std::vector<NodeVerdict> nodes;              // nodes with incoming edges, ascending
  std::vector<SourceViolation> source_violations;
  std::vector<Advisory> advisories;
};

// Unexcited sources that feed other nodes. Identification of the outgoing
// edge function of such a source is impossible in any class (its output
// never moves), so a non-empty result already settles the network verdict.
std::vector<SourceViolation> check_sources(const ValidatedDigraph& g);

// Excited nodes whose excitation cannot contribute to identifying any edge
// function (nodes with no outgoing edges). Suppressed for a single-node
// network, where there is nothing to identify at all.
std::vector<Advisory> sink_excitation_advice(const ValidatedDigraph& g);

// Full analysis. Errors: NotFullMeasurement when a measured set other than
// all nodes was specified.
IdentifiabilityReport analyze(const ValidatedDigraph& g, FunctionClass fclass);

// Specialized exact decision for trees (every node has at most one
// in-neighbor): identifiable, in any function class, iff every source is
// excited. Errors: NotATree.
Verdict tree_verdict(const ValidatedDigraph& g);

struct ExcitationSuggestion {
  std::set<int> excited;    // proposed full excitation set (superset of current)
  std::vector<int> added;   // nodes added, in the order chosen
  bool already_sufficient = false;
};

// Greedy minimal-ish augmentation of the excitation set until every node
// with incoming edges reaches its full disjoint-path count. Never proposes a
// node without outgoing edges. Always succeeds: exciting all of N_i yields
// |N_i| length-0 paths, and the disjoint-path count is the rank function of
// a gammoid, so some single candidate always improves a deficient node.
ExcitationSuggestion excitation_suggestion(const ValidatedDigraph& g);

}  // namespace netident
