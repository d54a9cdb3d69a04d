#include "netident/identifiability.hpp"

#include <algorithm>
#include <sstream>

#include "netident/errors.hpp"

namespace netident {

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Polynomial: return "polynomial";
    case FunctionClass::Analytic: return "analytic";
    case FunctionClass::Additive: return "additive";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::GenericallyIdentifiable: return "GenericallyIdentifiable";
    case Verdict::NotIdentifiable: return "NotIdentifiable";
    case Verdict::UnknownConjectured: return "UnknownConjectured";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

FunctionClass function_class_from_string(const std::string& s) {
  if (s == "polynomial") return FunctionClass::Polynomial;
  if (s == "analytic") return FunctionClass::Analytic;
  if (s == "additive") return FunctionClass::Additive;
  fail("SchemaError", "unknown function class '" + s + "' (expected polynomial|analytic|additive)");
}

std::vector<SourceViolation> check_sources(const ValidatedDigraph& g) {
  std::vector<SourceViolation> out;
  for (int s : g.sources()) {
    if (!g.out_neighbors(s).empty() && !g.excited().count(s)) {
      std::ostringstream os;
      os << "source " << s << " feeds other nodes but is not excited; its outgoing edge "
         << "functions cannot be identified in any function class";
      out.push_back({s, os.str()});
    }
  }
  return out;
}

std::vector<Advisory> sink_excitation_advice(const ValidatedDigraph& g) {
  std::vector<Advisory> out;
  if (g.n() <= 1) return out;
  for (int e : g.excited()) {
    if (g.out_neighbors(e).empty()) {
      std::ostringstream os;
      os << "node " << e << " has no outgoing edges; exciting it cannot help identify any "
         << "edge function";
      out.push_back({e, os.str()});
    }
  }
  return out;
}

namespace {

// Severity order used to fold node verdicts into the network verdict.
int severity(Verdict v) {
  switch (v) {
    case Verdict::NotIdentifiable: return 3;
    case Verdict::UnknownConjectured: return 2;
    case Verdict::Unknown: return 1;
    case Verdict::GenericallyIdentifiable: return 0;
  }
  return 0;
}

// Excited strict ancestors of i — the excitations that can influence N_i.
std::set<int> excited_ancestors(const ValidatedDigraph& g, int i) {
  std::set<int> anc = g.ancestors(i);
  std::set<int> A;
  for (int e : g.excited())
    if (anc.count(e)) A.insert(e);
  return A;
}

}  // namespace

IdentifiabilityReport analyze(const ValidatedDigraph& g, FunctionClass fclass) {
  if (!g.fully_measured())
    fail("NotFullMeasurement", "analysis requires every node to be measured");

  IdentifiabilityReport rep;
  rep.fclass = fclass;
  rep.source_violations = check_sources(g);
  rep.advisories = sink_excitation_advice(g);

  for (int i = 1; i <= g.n(); ++i) {
    const auto& nb = g.in_neighbors(i);
    if (nb.empty()) continue;  // sources carry no incoming edge functions

    NodeVerdict nv;
    nv.node = i;
    nv.targets = nb;
    nv.required = static_cast<int>(nb.size());

    std::set<int> A = excited_ancestors(g, i);
    std::set<int> B(nb.begin(), nb.end());

    if (A.empty()) {
      nv.achieved = 0;
      DisconnectingSet d;
      d.B.assign(B.begin(), B.end());
      nv.deficiency = d;
    } else {
      PathFamily fam = max_vertex_disjoint(g, A, B);
      nv.achieved = fam.count();
      if (nv.achieved == nv.required) {
        nv.witness = std::move(fam);
      } else {
        nv.deficiency = min_disconnecting_set(g, A, B);
      }
    }

    if (nv.achieved == nv.required) {
      nv.verdict = Verdict::GenericallyIdentifiable;
    } else {
      std::ostringstream os;
      os << "only " << nv.achieved << " of " << nv.required
         << " disjoint paths from excitations to the in-neighborhood";
      switch (fclass) {
        case FunctionClass::Polynomial:
          nv.verdict = Verdict::NotIdentifiable;
          os << "; a polynomial certificate of non-identifiability exists (see certify)";
          break;
        case FunctionClass::Analytic:
          nv.verdict = Verdict::UnknownConjectured;
          os << "; conjectured not identifiable for analytic dynamics (unproven)";
          break;
        case FunctionClass::Additive:
          nv.verdict = Verdict::Unknown;
          os << "; inconclusive for additive dynamics — deficient nodes can remain "
                "identifiable in this class (try the additive ambiguity search)";
          break;
      }
      nv.notes.push_back(os.str());
    }
    rep.nodes.push_back(std::move(nv));
  }

  Verdict net = Verdict::GenericallyIdentifiable;
  for (const auto& nv : rep.nodes)
    if (severity(nv.verdict) > severity(net)) net = nv.verdict;
  rep.network_verdict = net;
  return rep;
}

Verdict tree_verdict(const ValidatedDigraph& g) {
  if (!g.is_tree()) fail("NotATree", "tree analysis requires at most one in-neighbor per node");
  for (int s : g.sources()) {
    if (!g.out_neighbors(s).empty() && !g.excited().count(s))
      return Verdict::NotIdentifiable;
  }
  return Verdict::GenericallyIdentifiable;
}

ExcitationSuggestion excitation_suggestion(const ValidatedDigraph& g) {
  ExcitationSuggestion out;
  out.excited = g.excited();

  // Sources that feed anyone must be excited in every identifiable network,
  // so seed the suggestion with them.
  for (int s : g.sources())
    if (!g.out_neighbors(s).empty() && !out.excited.count(s)) {
      out.excited.insert(s);
      out.added.push_back(s);
    }

  auto flow_for = [&](int i) {
    std::set<int> anc = g.ancestors(i);
    std::set<int> A;
    for (int e : out.excited)
      if (anc.count(e)) A.insert(e);
    const auto& nb = g.in_neighbors(i);
    std::set<int> B(nb.begin(), nb.end());
    if (A.empty()) return 0;
    return max_vertex_disjoint(g, A, B).count();
  };

  for (int i = 1; i <= g.n(); ++i) {
    if (g.in_neighbors(i).empty()) continue;
    int required = static_cast<int>(g.in_neighbors(i).size());
    while (flow_for(i) < required) {
      // Candidates that can enlarge the family: unexcited strict ancestors
      // with outgoing edges (members of N_i qualify and always suffice).
      std::set<int> anc = g.ancestors(i);
      int before = flow_for(i);
      bool progressed = false;
      for (int c : anc) {
        if (out.excited.count(c) || g.out_neighbors(c).empty()) continue;
        out.excited.insert(c);
        if (flow_for(i) > before) {
          out.added.push_back(c);
          progressed = true;
          break;
        }
        out.excited.erase(c);
      }
      if (!progressed)
        fail("SearchExhausted", "no single excitation improves a deficient node (unexpected)");
    }
  }
  // A sufficient original set already excites every feeding source, so the
  // seeding step adds nothing in that case and this test is exact.
  out.already_sufficient = out.added.empty();
  return out;
}

}  // namespace netident
