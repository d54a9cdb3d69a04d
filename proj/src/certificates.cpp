#include "netident/certificates.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include "netident/disjoint_paths.hpp"
#include "netident/errors.hpp"
#include "netident/kernel.hpp"
#include "netident/rng.hpp"
#include "netident/simulator.hpp"

namespace netident {

namespace {

constexpr std::uint64_t kVerifySeed = 424242;  // pinned: verification is deterministic
constexpr int kVerifyReplays = 100;
constexpr std::size_t kMaxCandidates = 20000;
constexpr std::size_t kMaxRows = 200000;
constexpr std::size_t kMaxPropagationTerms = 1000000;
constexpr int kMaxPropagationDegree = 64;

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::SwapWitness: return "SwapWitness";
    case CertKind::SourcePerturbation: return "SourcePerturbation";
    case CertKind::Implicitization: return "Implicitization";
    case CertKind::AdditiveAmbiguity: return "AdditiveAmbiguity";
  }
  return "?";
}

CertKind cert_kind_from_string(const std::string& s) {
  if (s == "SwapWitness") return CertKind::SwapWitness;
  if (s == "SourcePerturbation") return CertKind::SourcePerturbation;
  if (s == "Implicitization") return CertKind::Implicitization;
  if (s == "AdditiveAmbiguity") return CertKind::AdditiveAmbiguity;
  fail("SchemaError", "unknown certificate kind '" + s + "'");
}

long guaranteed_relation_degree(int n, int m, int N) {
  if (n < 1 || m < 0 || N < 0) fail("SchemaError", "guaranteed_relation_degree needs n >= 1, m >= 0, N >= 0");
  // With N >= 1 and no more polynomials than variables the candidate space
  // C(M+n, n) = O(M^n) can never outgrow the target space C(N*M+m, m).
  if (N >= 1 && n <= m) return -1;
  Integer lhs, rhs;
  for (long M = 1; M <= 4096; ++M) {
    mpz_bin_uiui(lhs.get_mpz_t(), static_cast<unsigned long>(M + n),
                 static_cast<unsigned long>(n));
    mpz_bin_uiui(rhs.get_mpz_t(), static_cast<unsigned long>(static_cast<long>(N) * M + m),
                 static_cast<unsigned long>(m));
    if (lhs > rhs) return M;
  }
  return -1;
}

namespace {

// Memoized products G_1^{a_1}...G_n^{a_n}, filled in ascending total-degree
// order so each product reuses a predecessor with one exponent lowered.
class ProductTable {
 public:
  ProductTable(const std::vector<Polynomial>& G, int m) : G_(G) {
    table_.emplace(std::vector<int>(G.size(), 0), Polynomial::constant(m, 1));
  }
  const Polynomial& get(const std::vector<int>& a) {
    auto it = table_.find(a);
    if (it != table_.end()) return it->second;
    std::size_t k = 0;
    while (a[k] == 0) ++k;
    std::vector<int> b = a;
    --b[k];
    Polynomial p = get(b) * G_[k];
    if (p.term_count() > kMaxPropagationTerms)
      fail("TooLarge", "implicitization candidate products exceed the term budget");
    return table_.emplace(a, std::move(p)).first->second;
  }

 private:
  const std::vector<Polynomial>& G_;
  std::map<std::vector<int>, Polynomial> table_;
};

// Columns of z-monomial coefficients for the given candidate products, over
// the (deterministically indexed) union of their monomials.
std::vector<std::vector<Rational>> build_columns(const std::vector<std::vector<int>>& cands,
                                                 ProductTable& products) {
  std::map<std::vector<int>, int> row_of;
  for (const auto& a : cands)
    for (const auto& [e, c] : products.get(a).terms()) {
      (void)c;
      row_of.emplace(e, 0);
    }
  int r = 0;
  for (auto& [e, idx] : row_of) {
    (void)e;
    idx = r++;
  }
  if (cands.size() > kMaxCandidates || row_of.size() > kMaxRows)
    fail("TooLarge", "implicitization matrix exceeds the size budget");
  std::vector<std::vector<Rational>> cols(
      cands.size(), std::vector<Rational>(static_cast<std::size_t>(r), Rational(0)));
  for (std::size_t c = 0; c < cands.size(); ++c)
    for (const auto& [e, coef] : products.get(cands[c]).terms())
      cols[c][static_cast<std::size_t>(row_of.at(e))] = coef;
  return cols;
}

// Shared ascending-degree kernel scan over a caller-chosen candidate basis.
// candidates_for(M) must return the full basis for degree M, a superset of
// the one for M-1, in a deterministic order.
template <typename CandidateFn>
std::optional<std::pair<Polynomial, int>> kernel_scan(const std::vector<Polynomial>& G,
                                                      int n_vars, int maxdeg,
                                                      CandidateFn candidates_for) {
  int m = G.empty() ? 0 : G[0].arity();
  ProductTable products(G, m);
  for (int M = 1; M <= maxdeg; ++M) {
    std::vector<std::vector<int>> cands = candidates_for(M);
    if (cands.empty()) continue;
    auto cols = build_columns(cands, products);
    // Full column rank modulo a prime proves independence over the
    // rationals, so only genuinely undecided degrees pay for exact algebra.
    if (columns_independent_certain(cols)) continue;
    auto kv = exact_kernel_vector(cols);
    if (!kv) continue;  // the modular screen flagged a false alarm
    Polynomial delta(n_vars);
    for (std::size_t c = 0; c < cands.size(); ++c)
      if ((*kv)[c] != 0) delta.add_term(cands[c], (*kv)[c]);
    return std::make_pair(delta.primitive_normalized(), M);
  }
  return std::nullopt;
}

}  // namespace

ImplicitizationResult implicitization_certificate(const std::vector<Polynomial>& G, int maxdeg) {
  if (G.empty()) fail("EmptySet", "implicitization needs at least one polynomial");
  if (maxdeg < 1) fail("SchemaError", "maxdeg must be at least 1");
  const int n = static_cast<int>(G.size());
  const int m = G[0].arity();
  for (const auto& p : G)
    if (p.arity() != m)
      fail("ArityMismatch", "all parametrization polynomials must share one variable space");
  int N = 0;
  for (const auto& p : G) N = std::max(N, std::max(0, p.degree()));

  ImplicitizationResult res;
  res.bound = guaranteed_relation_degree(n, m, N);

  // Products with total degree <= M, including the constant 1: the scan
  // basis is a prefix of the (total degree, lex) enumeration, so the first
  // hit reports the minimal degree.
  auto all = exponents_up_to(n, maxdeg);
  auto candidates_for = [&](int M) {
    std::vector<std::vector<int>> out;
    for (const auto& a : all) {
      int total = 0;
      for (int e : a) total += e;
      if (total <= M) out.push_back(a);
    }
    return out;
  };

  auto found = kernel_scan(G, n, maxdeg, candidates_for);
  if (found) {
    res.delta = std::move(found->first);
    res.M = found->second;
    return res;
  }

  std::ostringstream os;
  if (res.bound >= 0 && maxdeg < res.bound) {
    os << "DimensionNotExceeded: no dependence among products up to degree " << maxdeg
       << "; the dimension count guarantees one at degree " << res.bound
       << " (absence below it proves nothing)";
  } else if (res.bound < 0) {
    os << "DimensionNotExceeded: " << n << " polynomials in " << m
       << " variables — the candidate space never outgrows the target space, so no degree "
          "bound guarantees a dependence";
  } else {
    os << "no dependence found up to degree " << maxdeg
       << " despite the dimension bound " << res.bound << " (degenerate input?)";
  }
  res.hint = os.str();
  return res;
}

namespace {

// Outputs of the in-neighbors of i as polynomials in the outputs z of the
// disconnecting set D: static propagation over the ancestors of i with the
// members of D replaced by free variables and all excitations silenced
// (sound because every excitation influencing N_i is separated by D).
std::vector<Polynomial> parametrize_targets(const ValidatedDigraph& g,
                                            const NetworkDynamics& dyn, int i,
                                            const std::vector<int>& D) {
  std::map<int, int> zidx;
  for (std::size_t k = 0; k < D.size(); ++k) zidx[D[k]] = static_cast<int>(k);
  const int m = static_cast<int>(D.size());
  std::set<int> anc = g.ancestors(i);
  std::map<int, Polynomial> P;
  for (int v : g.topological_order()) {
    if (!anc.count(v)) continue;
    auto z = zidx.find(v);
    if (z != zidx.end()) {
      P.emplace(v, Polynomial::variable(m, z->second));
      continue;
    }
    const auto& nb = g.in_neighbors(v);
    Polynomial p(m);
    if (nb.empty()) {
      p = Polynomial::constant(m, dyn.phi_of(v).eval({}));
    } else {
      std::vector<Polynomial> args;
      args.reserve(nb.size());
      for (int q : nb) args.push_back(P.at(q));
      p = dyn.phi_of(v).compose(args);
    }
    if (p.term_count() > kMaxPropagationTerms || p.degree() > kMaxPropagationDegree)
      fail("TooLarge", "static propagation exceeds the term or degree budget");
    P.emplace(v, std::move(p));
  }
  std::vector<Polynomial> G;
  for (int j : g.in_neighbors(i)) G.push_back(P.at(j));
  return G;
}

struct SeparationSetup {
  std::vector<int> targets;
  std::vector<int> D;
  std::vector<Polynomial> G;
  int flow = 0;
};

SeparationSetup separation_setup(const ValidatedDigraph& g, const NetworkDynamics& dyn, int i) {
  SeparationSetup s;
  s.targets = g.in_neighbors(i);
  std::set<int> anc = g.ancestors(i);
  std::set<int> A;
  for (int e : g.excited())
    if (anc.count(e)) A.insert(e);
  std::set<int> B(s.targets.begin(), s.targets.end());
  if (!A.empty()) {
    s.flow = max_vertex_disjoint(g, A, B).count();
    s.D = min_disconnecting_set(g, A, B).nodes;
  }
  s.G = parametrize_targets(g, dyn, i, s.D);
  return s;
}

int max_poly_degree(const std::vector<Polynomial>& G) {
  int N = 0;
  for (const auto& p : G) N = std::max(N, std::max(0, p.degree()));
  return N;
}

}  // namespace

Certificate node_nonident_certificate(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                                      int i, int maxdeg) {
  if (i < 1 || i > g.n()) fail("SchemaError", "node id out of range");
  validate_dynamics(g, dyn);
  if (g.in_neighbors(i).empty())
    fail("NotApplicable", "node " + std::to_string(i) + " has no incoming edge functions");

  SeparationSetup s = separation_setup(g, dyn, i);
  const int required = static_cast<int>(s.targets.size());
  if (s.flow == required) {
    std::ostringstream os;
    os << "node " << i << " is generically identifiable (a full family of " << required
       << " vertex-disjoint paths exists); no certificate can be built from a disconnecting set";
    fail("NotApplicable", os.str());
  }

  ImplicitizationResult impl = implicitization_certificate(s.G, maxdeg);
  if (!impl.delta)
    fail("SearchExhausted", impl.hint + "; raise maxdeg and retry");

  Certificate c;
  c.kind = CertKind::Implicitization;
  c.node = i;
  c.targets = s.targets;
  c.phi = dyn.phi_of(i);
  c.delta = *impl.delta;
  c.phi_tilde = c.phi + c.delta;
  c.z_nodes = s.D;
  c.G = s.G;
  c.M = impl.M;
  c.N = max_poly_degree(s.G);
  c.bound = impl.bound;
  {
    std::ostringstream os;
    os << "disconnecting set {" << join(s.D) << "} of size " << s.D.size()
       << " separates all excitations from the in-neighborhood {" << join(s.targets)
       << "} (required " << required << ")";
    c.notes.push_back(os.str());
    std::ostringstream os2;
    os2 << "relation found at product degree " << c.M << " (dimension bound "
        << (c.bound >= 0 ? std::to_string(c.bound) : std::string("none")) << ")";
    c.notes.push_back(os2.str());
  }
  c.verification = verify(g, dyn, c);
  return c;
}

namespace {

// Terms of an unrolled measured output keyed by sparse {(node, shift): exp}
// maps, with an extra uniform shift applied — the delay-aligned canonical
// form two outputs are compared in.
std::map<std::map<std::pair<int, int>, int>, Rational> sparse_terms(const MeasuredFunction& mf,
                                                                    long shift) {
  std::map<std::map<std::pair<int, int>, int>, Rational> out;
  for (const auto& [exps, c] : mf.F.terms()) {
    std::map<std::pair<int, int>, int> key;
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] > 0)
        key[{mf.vars[v].first, mf.vars[v].second + static_cast<int>(shift)}] = exps[v];
    out[key] = c;
  }
  return out;
}

std::string sparse_monomial_str(const std::map<std::pair<int, int>, int>& key) {
  if (key.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [vs, e] : key) {
    if (!first) os << "*";
    first = false;
    os << "u" << vs.first << "[k-" << vs.second << "]";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

// First monomial on which two sparse term maps disagree (assumes they do).
std::string first_difference(const std::map<std::map<std::pair<int, int>, int>, Rational>& a,
                             const std::map<std::map<std::pair<int, int>, int>, Rational>& b) {
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) return sparse_monomial_str(k);
  }
  for (const auto& [k, v] : b) {
    (void)v;
    if (!a.count(k)) return sparse_monomial_str(k);
  }
  return "?";
}

}  // namespace

Certificate swap_witness(const ValidatedDigraph& g, const NetworkDynamics& dyn, int i,
                         const std::map<int, int>& sigma) {
  if (i < 1 || i > g.n()) fail("SchemaError", "node id out of range");
  validate_dynamics(g, dyn);
  const auto& nb = g.in_neighbors(i);
  if (nb.empty()) fail("NotApplicable", "node has no incoming edge functions to permute");

  std::set<int> nbset(nb.begin(), nb.end()), keys, vals;
  for (const auto& [k, v] : sigma) {
    keys.insert(k);
    vals.insert(v);
  }
  if (keys != nbset || vals != nbset)
    fail("SchemaError", "sigma must be a permutation of the in-neighborhood {" + join(nb) + "}");

  DelayAssignment delays = effective_delays(g);

  // The delayed output seen in slot j of node i is F_j shifted by the edge
  // delay; a swap is invisible exactly when the swapped slots see identical
  // shifted outputs.
  for (int j : nb) {
    int sj = sigma.at(j);
    if (sj == j) continue;
    MeasuredFunction fa = measured_function(g, dyn, delays, j);
    MeasuredFunction fb = measured_function(g, dyn, delays, sj);
    auto sa = sparse_terms(fa, delays.edge_delay(i, j));
    auto sb = sparse_terms(fb, delays.edge_delay(i, sj));
    if (sa != sb) {
      std::ostringstream os;
      os << "delay-aligned outputs of nodes " << j << " and " << sj << " differ at node " << i
         << " (monomial " << first_difference(sa, sb) << ")";
      fail("OutputsDiffer", os.str());
    }
  }

  const int n = static_cast<int>(nb.size());
  std::map<int, int> slot;
  for (int r = 0; r < n; ++r) slot[nb[static_cast<std::size_t>(r)]] = r;
  std::vector<Polynomial> args;
  args.reserve(nb.size());
  for (int j : nb) args.push_back(Polynomial::variable(n, slot.at(sigma.at(j))));

  Certificate c;
  c.kind = CertKind::SwapWitness;
  c.node = i;
  c.targets = nb;
  c.phi = dyn.phi_of(i);
  c.phi_tilde = c.phi.compose(args);
  c.delta = c.phi_tilde - c.phi;
  if (c.delta.is_zero())
    fail("NotApplicable",
         "the node function is symmetric under sigma, so the permutation changes nothing — "
         "not a counterexample");
  for (int j : nb) c.sigma.push_back(sigma.at(j));
  {
    std::ostringstream os;
    os << "in-neighbors (" << join(nb) << ") permuted to (" << join(c.sigma)
       << "); their delay-aligned outputs coincide exactly";
    c.notes.push_back(os.str());
  }
  c.verification = verify(g, dyn, c);
  return c;
}

Certificate source_perturbation_witness(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                                        int j, const Polynomial& psi) {
  if (j < 1 || j > g.n()) fail("SchemaError", "node id out of range");
  validate_dynamics(g, dyn);
  if (psi.arity() != 1) fail("ArityMismatch", "psi must be univariate");
  if (psi.is_zero()) fail("PsiViolation", "psi must be nonzero");
  if (psi.eval({Rational(0)}) != 0) fail("PsiViolation", "psi(0) must be 0");

  const auto& nb = g.in_neighbors(j);
  std::vector<int> source_in;
  for (int s : nb)
    if (g.in_neighbors(s).empty()) source_in.push_back(s);
  if (source_in.empty())
    fail("NotApplicable", "node " + std::to_string(j) + " has no source in-neighbor");
  int s = 0;
  for (int cand : source_in)
    if (!g.excited().count(cand)) {
      s = cand;
      break;
    }
  if (s == 0)
    fail("SourceExcited",
         "every source in-neighbor of node " + std::to_string(j) + " is excited");
  if (dyn.phi_of(s).eval({}) != 0)
    fail("NotApplicable", "source " + std::to_string(s) +
                              " has a nonzero rest output; its perturbation would be visible");

  const int n = static_cast<int>(nb.size());
  int slot = static_cast<int>(std::find(nb.begin(), nb.end(), s) - nb.begin());

  Certificate c;
  c.kind = CertKind::SourcePerturbation;
  c.node = j;
  c.targets = nb;
  c.phi = dyn.phi_of(j);
  c.delta = psi.remap(n, {slot});
  c.phi_tilde = c.phi + c.delta;
  c.source = s;
  c.psi = psi;
  {
    std::ostringstream os;
    os << "source " << s << " is unexcited and rests at 0, so adding psi(y_" << s
       << ") to the node function is invisible in every measurement";
    c.notes.push_back(os.str());
  }
  c.verification = verify(g, dyn, c);
  return c;
}

std::optional<Certificate> additive_ambiguity_search(const ValidatedDigraph& g,
                                                     const NetworkDynamics& dyn, int i,
                                                     int maxdeg) {
  if (i < 1 || i > g.n()) fail("SchemaError", "node id out of range");
  if (dyn.mode != DynamicsMode::Additive)
    fail("NotApplicable", "the ambiguity search is defined for additive-mode dynamics");
  validate_dynamics(g, dyn);
  if (maxdeg < 1) fail("SchemaError", "maxdeg must be at least 1");
  if (g.in_neighbors(i).empty())
    fail("NotApplicable", "node " + std::to_string(i) + " has no incoming edge functions");

  SeparationSetup s = separation_setup(g, dyn, i);
  const int n = static_cast<int>(s.targets.size());

  // Additive alternatives differ by sums of univariate terms, so the
  // candidate basis holds only the pure powers x_j^d, d >= 1.
  auto candidates_for = [&](int M) {
    std::vector<std::vector<int>> out;
    for (int d = 1; d <= M; ++d)
      for (int j = 0; j < n; ++j) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(j)] = d;
        out.push_back(e);
      }
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      int ta = 0, tb = 0;
      for (int x : a) ta += x;
      for (int x : b) tb += x;
      if (ta != tb) return ta < tb;
      return a < b;
    });
    return out;
  };

  auto found = kernel_scan(s.G, n, maxdeg, candidates_for);
  if (!found) return std::nullopt;

  Certificate c;
  c.kind = CertKind::AdditiveAmbiguity;
  c.node = i;
  c.targets = s.targets;
  c.phi = dyn.phi_of(i);
  c.delta = found->first;
  c.phi_tilde = c.phi + c.delta;
  c.z_nodes = s.D;
  c.G = s.G;
  c.M = found->second;
  c.N = max_poly_degree(s.G);
  c.bound = guaranteed_relation_degree(n, static_cast<int>(s.D.size()), c.N);
  {
    std::ostringstream os;
    os << "additive-shape relation (sums of univariate terms) found at degree " << c.M;
    c.notes.push_back(os.str());
  }
  c.verification = verify(g, dyn, c);
  return c;
}

Verification verify(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                    const Certificate& cert) {
  validate_dynamics(g, dyn);
  if (cert.node < 1 || cert.node > g.n()) fail("SchemaError", "certificate node out of range");
  if (cert.targets != g.in_neighbors(cert.node))
    fail("SchemaError", "certificate target list does not match the node's in-neighborhood");
  if (cert.phi != dyn.phi_of(cert.node))
    fail("SchemaError", "certificate's original function differs from the supplied dynamics");
  if (cert.phi + cert.delta != cert.phi_tilde)
    fail("SchemaError", "certificate is inconsistent: phi_tilde != phi + delta");
  if (!cert.G.empty()) {
    if (cert.G.size() != cert.targets.size())
      fail("SchemaError", "certificate carries a parametrization of the wrong length");
    if (!cert.delta.compose(cert.G).is_zero())
      fail("SchemaError", "certificate's stored relation does not compose to zero");
  }

  Verification ver;
  if (cert.delta.is_zero()) {
    ver.verified = false;
    ver.evidence.push_back("alternative coincides with the original function — not a counterexample");
    ver.digest = hex64(fnv1a(to_string(cert.kind) + "|degenerate"));
    return ver;
  }

  NetworkDynamics alt = dyn;
  alt.phi[static_cast<std::size_t>(cert.node)] = cert.phi_tilde;
  if (alt.mode == DynamicsMode::Additive && !decompose(cert.phi_tilde).cross.is_zero())
    alt.mode = DynamicsMode::General;
  validate_dynamics(g, alt);

  DelayAssignment delays = effective_delays(g);

  // Layer 1: the unrolled measured output of every node must be the same
  // exact polynomial in delayed excitation samples under both dynamics.
  for (int v : g.measured()) {
    MeasuredFunction f1 = measured_function(g, dyn, delays, v);
    MeasuredFunction f2 = measured_function(g, alt, delays, v);
    auto s1 = sparse_terms(f1, 0);
    auto s2 = sparse_terms(f2, 0);
    if (s1 != s2) {
      std::ostringstream os;
      os << "measured output of node " << v << " differs between the networks (monomial "
         << first_difference(s1, s2) << ")";
      fail("SymbolicMismatch", os.str());
    }
  }
  {
    std::ostringstream os;
    os << "symbolic: unrolled measured outputs of all " << g.measured().size()
       << " measured nodes are identical";
    ver.evidence.push_back(os.str());
  }

  // Layer 2: exact replay on random rational schedules from rest.
  long need = 0;
  {
    const long NEG = std::numeric_limits<long>::min() / 4;
    std::vector<long> far(static_cast<std::size_t>(g.n()) + 1, NEG);
    for (int e : g.excited()) far[static_cast<std::size_t>(e)] = 0;
    for (int i : g.topological_order())
      for (int j : g.in_neighbors(i))
        if (far[static_cast<std::size_t>(j)] > NEG)
          far[static_cast<std::size_t>(i)] =
              std::max(far[static_cast<std::size_t>(i)],
                       far[static_cast<std::size_t>(j)] + delays.edge_delay(i, j));
    for (int i = 1; i <= g.n(); ++i)
      if (far[static_cast<std::size_t>(i)] > NEG) need = std::max(need, far[static_cast<std::size_t>(i)] + 1);
  }
  const int horizon = static_cast<int>(need) + 2;

  for (int r = 0; r < kVerifyReplays; ++r) {
    Rng rng(Rng::derive(kVerifySeed, static_cast<std::uint64_t>(r)));
    InputSchedule sched;
    sched.horizon = horizon;
    for (int e : g.excited()) {
      std::vector<Rational> seq;
      seq.reserve(static_cast<std::size_t>(horizon) + 1);
      for (int t = 0; t <= horizon; ++t) seq.push_back(rng.rational(10));
      sched.inputs[e] = std::move(seq);
    }
    Trajectory t1 = simulate(g, dyn, delays, sched);
    Trajectory t2 = simulate(g, alt, delays, sched);
    for (int v = 1; v <= g.n(); ++v)
      for (int k = 0; k <= horizon; ++k)
        if (t1.y[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] !=
            t2.y[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)]) {
          std::ostringstream os;
          os << "trajectories differ at node " << v << ", time " << k << ", replay " << r;
          fail("DynamicMismatch", os.str());
        }
  }
  ver.replays = kVerifyReplays;
  {
    std::ostringstream os;
    os << "dynamic: " << kVerifyReplays << " random schedules (horizon " << horizon
       << ") replayed identically on both networks";
    ver.evidence.push_back(os.str());
  }

  ver.verified = true;
  std::ostringstream canon;
  canon << to_string(cert.kind) << "|" << cert.node << "|" << cert.phi.str() << "|"
        << cert.phi_tilde.str() << "|" << cert.delta.str() << "|z{" << join(cert.z_nodes)
        << "}|M" << cert.M << "|replays" << ver.replays;
  ver.digest = hex64(fnv1a(canon.str()));
  return ver;
}

}  // namespace netident
