#pragma once
/*
 * Constructive non-identifiability witnesses and their machine verification.
 *
 * A certificate exhibits an alternative node function phi-tilde != phi that
 * produces exactly the same measured data, in one of four shapes:
 *
 *   - Implicitization: the outputs of node i's in-neighbors, written as
 *     polynomials G_j in the outputs z of a disconnecting set smaller than
 *     |N_i|, satisfy a nonzero polynomial relation DeltaPhi(G_1..G_n) = 0;
 *     then phi + DeltaPhi is indistinguishable from phi. The relation is
 *     found as an exact rational kernel vector over the products
 *     G_1^{a_1}...G_n^{a_n} with a_1+...+a_n <= M; a dimension count
 *     guarantees existence once C(M+n, n) > C(N*M+m, m) where m = |D| and
 *     N bounds the degrees of the G_j.
 *   - SwapWitness: a permutation of in-neighbors whose (delay-aligned)
 *     output functions coincide exactly; permuting phi's arguments is then
 *     invisible in every measurement.
 *   - SourcePerturbation: an unexcited source s never moves from 0, so
 *     adding any psi with psi(0) = 0 in the slot reading y_s changes nothing.
 *   - AdditiveAmbiguity: an implicitization restricted to sums of univariate
 *     terms (the additive model's shape); its absence up to a degree bound is
 *     reported as None — bounded evidence that the additive model can stay
 *     identifiable where the unrestricted one provably is not.
 *
 * verify() is the acceptance gate: (1) symbolic — the measured output of
 * every node, unrolled exactly into delayed excitation samples, must be
 * identical under phi and phi-tilde; (2) dynamic — both networks are
 * simulated from rest on many random rational input schedules and all
 * trajectories compared exactly. For at-rest networks with phi(0) = 0 the
 * symbolic layer implies the dynamic one; both run anyway.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netident/digraph.hpp"
#include "netident/dynamics.hpp"

namespace netident {

enum class CertKind { SwapWitness, SourcePerturbation, Implicitization, AdditiveAmbiguity };

std::string to_string(CertKind k);
CertKind cert_kind_from_string(const std::string& s);  // SchemaError on junk

struct Verification {
  bool verified = false;
  int replays = 0;                    // random schedules replayed exactly
  std::vector<std::string> evidence;  // human-readable audit trail
  std::string digest;                 // stable hash of the canonical content
};

struct Certificate {
  CertKind kind = CertKind::Implicitization;
  int node = 0;               // target node i whose function is replaced
  std::vector<int> targets;   // N_i ascending; variable order of phi / delta
  Polynomial phi;             // original node function (arity |N_i|)
  Polynomial phi_tilde;       // alternative; phi_tilde = phi + delta
  Polynomial delta;           // the nonzero difference

  // Implicitization / AdditiveAmbiguity payload:
  std::vector<int> z_nodes;   // disconnecting set D, ascending (z variable order)
  std::vector<Polynomial> G;  // per target, its output in the z variables
  int M = 0;                  // minimal product degree at which the relation appeared
  int N = 0;                  // max total degree among the G_j
  long bound = -1;            // dimension-count degree bound (-1: none exists)

  // SwapWitness payload: sigma[r] = image of targets[r] under the permutation.
  std::vector<int> sigma;

  // SourcePerturbation payload:
  int source = 0;             // the unexcited source in-neighbor s
  Polynomial psi;             // univariate, psi(0) = 0

  std::vector<std::string> notes;
  Verification verification;
};

// Smallest M >= 1 with C(M+n, n) > C(N*M+m, m), the degree at which the
// candidate products must become linearly dependent; -1 when no such M
// exists (n <= m with N >= 1) or none is found below an internal cap.
long guaranteed_relation_degree(int n, int m, int N);

struct ImplicitizationResult {
  std::optional<Polynomial> delta;  // over n variables, nonzero, total degree <= M
  int M = 0;                        // smallest degree at which a dependence exists
  long bound = -1;                  // see guaranteed_relation_degree
  std::string hint;                 // set when nothing was found (not a proof of absence)
};

// Exact kernel search over products of the G up to total degree maxdeg,
// scanning degrees in ascending order so the reported M is minimal.
// The G must share one arity (ArityMismatch). A miss below the bound is
// reported through `hint` (DimensionNotExceeded), never as an exception.
ImplicitizationResult implicitization_certificate(const std::vector<Polynomial>& G, int maxdeg);

// Full pipeline for one deficient node: minimum disconnecting set D,
// static propagation of the in-neighbor outputs as polynomials in the
// outputs of D, implicitization, phi_tilde = phi + delta, verification.
// Errors: NotApplicable (node is generically identifiable, or has no
// incoming edges); SearchExhausted (nothing below maxdeg; message carries
// the guaranteed bound).
Certificate node_nonident_certificate(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                                      int i, int maxdeg);

// Permutation witness at node i; sigma maps each in-neighbor to its image.
// Errors: SchemaError (not a permutation of N_i); OutputsDiffer (the
// delay-aligned outputs of a swapped pair differ — witness refused);
// NotApplicable (phi symmetric under sigma, so phi_tilde = phi).
Certificate swap_witness(const ValidatedDigraph& g, const NetworkDynamics& dyn, int i,
                         const std::map<int, int>& sigma);

// Perturbation of node j's function by psi(y_s) for its smallest unexcited
// source in-neighbor s. Errors: ArityMismatch (psi not univariate);
// PsiViolation (psi = 0 or psi(0) != 0); SourceExcited (every source
// in-neighbor is excited); NotApplicable (no source in-neighbor).
Certificate source_perturbation_witness(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                                        int j, const Polynomial& psi);

// Kernel search restricted to sums of univariate terms sum_j df_j(x_j),
// df_j(0) = 0 — the shape an additive alternative must take. Returns the
// certificate if one exists up to maxdeg, None otherwise (bounded evidence,
// not proof). Errors: NotApplicable (dynamics not in additive mode).
std::optional<Certificate> additive_ambiguity_search(const ValidatedDigraph& g,
                                                     const NetworkDynamics& dyn, int i,
                                                     int maxdeg);

// Two-layer exact verification against the supplied dynamics (delays taken
// from the graph file or the canonical assignment). Throws SymbolicMismatch
// or DynamicMismatch with the offending node/monomial/time; returns
// verified = false (without throwing) only when phi_tilde = phi.
// Errors: SchemaError (certificate inconsistent with the dynamics).
Verification verify(const ValidatedDigraph& g, const NetworkDynamics& dyn,
                    const Certificate& cert);

}  // namespace netident
