#include "netident/json_io.hpp"

#include <fstream>
#include <sstream>

#include "netident/errors.hpp"

namespace netident {

namespace {

[[noreturn]] void bad(const std::string& ctx, const std::string& what) {
  fail("SchemaError", ctx + ": " + what);
}

const ordered_json& field(const ordered_json& j, const char* name, const std::string& ctx) {
  if (!j.is_object()) bad(ctx, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(ctx, std::string("missing field '") + name + "'");
  return *it;
}

const ordered_json* opt_field(const ordered_json& j, const char* name, const std::string& ctx) {
  if (!j.is_object()) bad(ctx, "expected an object");
  auto it = j.find(name);
  return it == j.end() ? nullptr : &*it;
}

long as_long(const ordered_json& j, const std::string& ctx) {
  if (!j.is_number_integer()) bad(ctx, "expected an integer");
  return j.get<long>();
}

int as_int(const ordered_json& j, const std::string& ctx) {
  long v = as_long(j, ctx);
  if (v < -1000000000L || v > 1000000000L) bad(ctx, "integer out of range");
  return static_cast<int>(v);
}

std::string as_string(const ordered_json& j, const std::string& ctx) {
  if (!j.is_string()) bad(ctx, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const ordered_json& j, const std::string& ctx) {
  if (!j.is_boolean()) bad(ctx, "expected a boolean");
  return j.get<bool>();
}

std::vector<int> as_int_array(const ordered_json& j, const std::string& ctx) {
  if (!j.is_array()) bad(ctx, "expected an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(as_int(e, ctx));
  return out;
}

std::pair<int, int> parse_pair_key(const std::string& key, const std::string& ctx) {
  auto comma = key.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 >= key.size())
    bad(ctx, "key '" + key + "' is not of the form \"i,j\"");
  try {
    std::size_t usedA = 0, usedB = 0;
    int a = std::stoi(key.substr(0, comma), &usedA);
    int b = std::stoi(key.substr(comma + 1), &usedB);
    if (usedA != comma || usedB != key.size() - comma - 1)
      bad(ctx, "key '" + key + "' is not of the form \"i,j\"");
    return {a, b};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad(ctx, "key '" + key + "' is not of the form \"i,j\"");
  }
}

int parse_node_key(const std::string& key, const std::string& ctx) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) bad(ctx, "key '" + key + "' is not a node id");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad(ctx, "key '" + key + "' is not a node id");
  }
}

std::string pair_key(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("SchemaError", std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("SchemaError", "cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) fail("SchemaError", "error while reading file '" + path + "'");
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("SchemaError", "cannot write file '" + path + "'");
  out << text;
  if (!out) fail("SchemaError", "error while writing file '" + path + "'");
}

Rational rational_from_json(const ordered_json& j) {
  if (j.is_number_integer()) {
    return Rational(static_cast<long>(j.get<long>()));
  }
  if (j.is_string()) return rat_parse(j.get<std::string>());
  fail("SchemaError", "expected a rational as \"p/q\" string or integer");
}

namespace {

ordered_json rat_json_array(const std::vector<Rational>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : v) arr.push_back(rat_str(r));
  return arr;
}

}  // namespace

Digraph graph_from_json(const ordered_json& j) {
  const std::string ctx = "graph";
  Digraph g;
  g.n = as_int(field(j, "n", ctx), ctx + ".n");
  const auto& edges = field(j, "edges", ctx);
  if (!edges.is_array()) bad(ctx + ".edges", "expected an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) bad(ctx + ".edges", "each edge must be a pair [i, j]");
    g.edges.emplace_back(as_int(e[0], ctx + ".edges"), as_int(e[1], ctx + ".edges"));
  }
  if (const auto* ex = opt_field(j, "excited", ctx)) {
    for (int v : as_int_array(*ex, ctx + ".excited")) g.excited.insert(v);
  }
  if (const auto* me = opt_field(j, "measured", ctx)) {
    std::set<int> m;
    for (int v : as_int_array(*me, ctx + ".measured")) m.insert(v);
    g.measured = std::move(m);
  }
  if (const auto* de = opt_field(j, "delays", ctx)) {
    if (!de->is_object()) bad(ctx + ".delays", "expected an object keyed by \"i,j\"");
    for (const auto& [key, val] : de->items())
      g.delays[parse_pair_key(key, ctx + ".delays")] = as_long(val, ctx + ".delays");
  }
  return g;
}

ordered_json graph_to_json(const Digraph& g) {
  ordered_json j;
  j["n"] = g.n;
  j["edges"] = ordered_json::array();
  for (const auto& [i, k] : g.edges) j["edges"].push_back({i, k});
  j["excited"] = g.excited;
  if (g.measured) j["measured"] = *g.measured;
  if (!g.delays.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [e, m] : g.delays) d[pair_key(e.first, e.second)] = m;
    j["delays"] = d;
  }
  return j;
}

Polynomial polynomial_from_json(const ordered_json& j) {
  const std::string ctx = "polynomial";
  int arity = as_int(field(j, "arity", ctx), ctx + ".arity");
  if (arity < 0) bad(ctx + ".arity", "arity must be non-negative");
  Polynomial p(arity);
  const auto& terms = field(j, "terms", ctx);
  if (!terms.is_array()) bad(ctx + ".terms", "expected an array");
  for (const auto& t : terms) {
    std::vector<int> exp = as_int_array(field(t, "exp", ctx + ".terms"), ctx + ".terms.exp");
    if (static_cast<int>(exp.size()) != arity)
      bad(ctx + ".terms.exp", "exponent vector length must equal arity");
    for (int e : exp)
      if (e < 0) bad(ctx + ".terms.exp", "exponents must be non-negative");
    p.add_term(exp, rational_from_json(field(t, "coef", ctx + ".terms")));
  }
  return p;
}

ordered_json polynomial_to_json(const Polynomial& p) {
  ordered_json j;
  j["arity"] = p.arity();
  j["terms"] = ordered_json::array();
  for (const auto& [exp, coef] : p.terms()) {
    ordered_json t;
    t["exp"] = exp;
    t["coef"] = rat_str(coef);
    j["terms"].push_back(t);
  }
  return j;
}

NetworkDynamics dynamics_from_json(const ordered_json& j, const ValidatedDigraph& g) {
  const std::string ctx = "dynamics";
  NetworkDynamics dyn;
  std::string mode = as_string(field(j, "mode", ctx), ctx + ".mode");
  if (mode == "additive") {
    dyn.mode = DynamicsMode::Additive;
  } else if (mode == "general") {
    dyn.mode = DynamicsMode::General;
  } else {
    bad(ctx + ".mode", "expected \"additive\" or \"general\"");
  }
  dyn.phi.assign(static_cast<std::size_t>(g.n()) + 1, Polynomial(0));
  const auto& phi = field(j, "phi", ctx);
  if (!phi.is_object()) bad(ctx + ".phi", "expected an object keyed by node id");
  std::set<int> given;
  for (const auto& [key, val] : phi.items()) {
    int node = parse_node_key(key, ctx + ".phi");
    if (node < 1 || node > g.n()) bad(ctx + ".phi", "node id " + key + " out of range");
    dyn.phi[static_cast<std::size_t>(node)] = polynomial_from_json(val);
    given.insert(node);
  }
  for (int i = 1; i <= g.n(); ++i) {
    if (!g.in_neighbors(i).empty() && !given.count(i))
      bad(ctx + ".phi", "missing node function for node " + std::to_string(i));
    if (g.in_neighbors(i).empty() && !given.count(i))
      dyn.phi[static_cast<std::size_t>(i)] = Polynomial(0);
  }
  return dyn;
}

ordered_json dynamics_to_json(const NetworkDynamics& dyn) {
  ordered_json j;
  j["mode"] = dyn.mode == DynamicsMode::Additive ? "additive" : "general";
  ordered_json phi = ordered_json::object();
  for (std::size_t i = 1; i < dyn.phi.size(); ++i)
    phi[std::to_string(i)] = polynomial_to_json(dyn.phi[i]);
  j["phi"] = phi;
  return j;
}

InputSchedule schedule_from_json(const ordered_json& j) {
  const std::string ctx = "schedule";
  InputSchedule s;
  s.horizon = as_int(field(j, "horizon", ctx), ctx + ".horizon");
  if (s.horizon < 0) bad(ctx + ".horizon", "horizon must be non-negative");
  const auto& inputs = field(j, "inputs", ctx);
  if (!inputs.is_object()) bad(ctx + ".inputs", "expected an object keyed by node id");
  for (const auto& [key, val] : inputs.items()) {
    int node = parse_node_key(key, ctx + ".inputs");
    if (!val.is_array()) bad(ctx + ".inputs", "sequence for node " + key + " must be an array");
    std::vector<Rational> seq;
    seq.reserve(val.size());
    for (const auto& v : val) seq.push_back(rational_from_json(v));
    s.inputs[node] = std::move(seq);
  }
  return s;
}

ordered_json schedule_to_json(const InputSchedule& s) {
  ordered_json j;
  j["horizon"] = s.horizon;
  ordered_json inputs = ordered_json::object();
  for (const auto& [node, seq] : s.inputs) inputs[std::to_string(node)] = rat_json_array(seq);
  j["inputs"] = inputs;
  return j;
}

ordered_json trajectory_to_json(const Trajectory& t) {
  ordered_json j;
  j["horizon"] = t.horizon;
  ordered_json y = ordered_json::object();
  for (std::size_t i = 1; i < t.y.size(); ++i) y[std::to_string(i)] = rat_json_array(t.y[i]);
  j["y"] = y;
  j["warnings"] = t.warnings;
  return j;
}

namespace {

ordered_json verification_to_json(const Verification& v) {
  ordered_json j;
  j["verified"] = v.verified;
  j["replays"] = v.replays;
  j["evidence"] = v.evidence;
  j["digest"] = v.digest;
  return j;
}

Verification verification_from_json(const ordered_json& j) {
  const std::string ctx = "certificate.verification";
  Verification v;
  v.verified = as_bool(field(j, "verified", ctx), ctx + ".verified");
  v.replays = as_int(field(j, "replays", ctx), ctx + ".replays");
  for (const auto& e : field(j, "evidence", ctx)) v.evidence.push_back(as_string(e, ctx));
  v.digest = as_string(field(j, "digest", ctx), ctx + ".digest");
  return v;
}

}  // namespace

ordered_json certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["kind"] = to_string(c.kind);
  j["node"] = c.node;
  j["targets"] = c.targets;
  j["phi"] = polynomial_to_json(c.phi);
  j["phi_tilde"] = polynomial_to_json(c.phi_tilde);
  j["delta"] = polynomial_to_json(c.delta);
  j["delta_pretty"] = c.delta.str();
  j["z_nodes"] = c.z_nodes;
  j["G"] = ordered_json::array();
  for (const auto& p : c.G) j["G"].push_back(polynomial_to_json(p));
  j["M"] = c.M;
  j["N"] = c.N;
  j["bound"] = c.bound;
  j["sigma"] = c.sigma;
  j["source"] = c.source;
  j["psi"] = polynomial_to_json(c.psi);
  j["notes"] = c.notes;
  j["verification"] = verification_to_json(c.verification);
  return j;
}

Certificate certificate_from_json(const ordered_json& j) {
  const std::string ctx = "certificate";
  Certificate c;
  c.kind = cert_kind_from_string(as_string(field(j, "kind", ctx), ctx + ".kind"));
  c.node = as_int(field(j, "node", ctx), ctx + ".node");
  c.targets = as_int_array(field(j, "targets", ctx), ctx + ".targets");
  c.phi = polynomial_from_json(field(j, "phi", ctx));
  c.phi_tilde = polynomial_from_json(field(j, "phi_tilde", ctx));
  c.delta = polynomial_from_json(field(j, "delta", ctx));
  c.z_nodes = as_int_array(field(j, "z_nodes", ctx), ctx + ".z_nodes");
  for (const auto& p : field(j, "G", ctx)) c.G.push_back(polynomial_from_json(p));
  c.M = as_int(field(j, "M", ctx), ctx + ".M");
  c.N = as_int(field(j, "N", ctx), ctx + ".N");
  c.bound = as_long(field(j, "bound", ctx), ctx + ".bound");
  c.sigma = as_int_array(field(j, "sigma", ctx), ctx + ".sigma");
  c.source = as_int(field(j, "source", ctx), ctx + ".source");
  c.psi = polynomial_from_json(field(j, "psi", ctx));
  for (const auto& n : field(j, "notes", ctx)) c.notes.push_back(as_string(n, ctx + ".notes"));
  c.verification = verification_from_json(field(j, "verification", ctx));
  return c;
}

ordered_json path_family_to_json(const PathFamily& f) {
  ordered_json j;
  j["A"] = f.A;
  j["B"] = f.B;
  j["count"] = f.count();
  j["paths"] = f.paths;
  return j;
}

ordered_json disconnecting_to_json(const DisconnectingSet& d) {
  ordered_json j;
  j["A"] = d.A;
  j["B"] = d.B;
  j["size"] = d.size();
  j["nodes"] = d.nodes;
  return j;
}

ordered_json report_to_json(const IdentifiabilityReport& r) {
  ordered_json j;
  j["function_class"] = to_string(r.fclass);
  j["network_verdict"] = to_string(r.network_verdict);
  j["nodes"] = ordered_json::array();
  for (const auto& nv : r.nodes) {
    ordered_json n;
    n["node"] = nv.node;
    n["verdict"] = to_string(nv.verdict);
    n["targets"] = nv.targets;
    n["required"] = nv.required;
    n["achieved"] = nv.achieved;
    if (nv.witness) n["witness"] = path_family_to_json(*nv.witness);
    if (nv.deficiency) n["deficiency"] = disconnecting_to_json(*nv.deficiency);
    n["notes"] = nv.notes;
    j["nodes"].push_back(n);
  }
  j["source_violations"] = ordered_json::array();
  for (const auto& v : r.source_violations)
    j["source_violations"].push_back({{"node", v.node}, {"message", v.message}});
  j["advisories"] = ordered_json::array();
  for (const auto& a : r.advisories)
    j["advisories"].push_back({{"node", a.node}, {"message", a.message}});
  return j;
}

ordered_json delay_report_to_json(const DelayAssignment& a, const DelayTable& t) {
  ordered_json j;
  ordered_json edges = ordered_json::object();
  for (const auto& [e, m] : a.m) edges[pair_key(e.first, e.second)] = m;
  j["edges"] = edges;
  bool uniform = true;
  ordered_json pairs = ordered_json::array();
  for (const auto& [key, pd] : t) {
    ordered_json p;
    p["target"] = key.first;
    p["source"] = key.second;
    p["uniform"] = pd.uniform;
    if (pd.uniform) {
      p["T"] = pd.T;
    } else {
      uniform = false;
      p["path_a"] = pd.path_a;
      p["total_a"] = pd.total_a;
      p["path_b"] = pd.path_b;
      p["total_b"] = pd.total_b;
    }
    pairs.push_back(p);
  }
  j["path_independent"] = uniform;
  j["pairs"] = pairs;
  return j;
}

ordered_json rank_probe_to_json(const RankProbe& p) {
  ordered_json j;
  j["A"] = p.A;
  j["B"] = p.B;
  j["degree"] = p.degree;
  j["samples"] = p.samples;
  j["seed"] = p.seed;
  j["ranks"] = p.ranks;
  j["generic_rank"] = p.generic_rank;
  j["degenerate_samples"] = p.degenerate;
  return j;
}

ordered_json suggestion_to_json(const ExcitationSuggestion& s) {
  ordered_json j;
  j["excited"] = s.excited;
  j["added"] = s.added;
  j["already_sufficient"] = s.already_sufficient;
  return j;
}

}  // namespace netident
