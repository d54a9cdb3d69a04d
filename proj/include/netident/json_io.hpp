#pragma once
/*
 * JSON schemas and (de)serialization for every file the toolkit reads or
 * writes. Parsing is strict: unknown shapes, wrong types, and out-of-range
 * values raise SchemaError naming the offending field, which the CLI maps
 * to exit code 2. Serialization uses insertion-ordered objects and
 * canonical rational strings, so identical inputs produce byte-identical
 * files.
 *
 * Schemas (1-based node ids; an edge pair [i, j] means j -> i):
 *   graph      {"n": int, "edges": [[i,j],...], "excited": [ids],
 *               "measured": [ids]?, "delays": {"i,j": int}?}
 *   polynomial {"arity": int, "terms": [{"exp": [ints], "coef": "p/q"}]}
 *   dynamics   {"mode": "additive"|"general", "phi": {"i": polynomial}}
 *              (variables of phi_i follow N_i in ascending node order;
 *               sources may be omitted and default to 0)
 *   schedule   {"horizon": int, "inputs": {"i": ["p/q", ...]}}
 *
 * Rational values are emitted as strings "p" or "p/q"; parsers also accept
 * plain JSON integers.
 */

#include <string>

#include <json.hpp>

#include "netident/certificates.hpp"
#include "netident/digraph.hpp"
#include "netident/dynamics.hpp"
#include "netident/identifiability.hpp"
#include "netident/network_matrix.hpp"
#include "netident/simulator.hpp"

namespace netident {

using ordered_json = nlohmann::ordered_json;

// Text <-> tree (SchemaError on malformed JSON; dump is canonical:
// two-space indent, trailing newline).
ordered_json parse_json_text(const std::string& text);
std::string dump_json_text(const ordered_json& j);

std::string read_text_file(const std::string& path);  // SchemaError on I/O failure
void write_text_file(const std::string& path, const std::string& text);

// --- parsers ---
Digraph graph_from_json(const ordered_json& j);
Polynomial polynomial_from_json(const ordered_json& j);
NetworkDynamics dynamics_from_json(const ordered_json& j, const ValidatedDigraph& g);
InputSchedule schedule_from_json(const ordered_json& j);
Certificate certificate_from_json(const ordered_json& j);
Rational rational_from_json(const ordered_json& j);

// --- serializers ---
ordered_json graph_to_json(const Digraph& g);
ordered_json polynomial_to_json(const Polynomial& p);
ordered_json dynamics_to_json(const NetworkDynamics& dyn);
ordered_json schedule_to_json(const InputSchedule& s);
ordered_json trajectory_to_json(const Trajectory& t);
ordered_json certificate_to_json(const Certificate& c);
ordered_json report_to_json(const IdentifiabilityReport& r);
ordered_json path_family_to_json(const PathFamily& f);
ordered_json disconnecting_to_json(const DisconnectingSet& d);
ordered_json delay_report_to_json(const DelayAssignment& a, const DelayTable& t);
ordered_json rank_probe_to_json(const RankProbe& p);
ordered_json suggestion_to_json(const ExcitationSuggestion& s);

}  // namespace netident
