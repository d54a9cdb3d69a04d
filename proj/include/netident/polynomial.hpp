#pragma once
/*
 * Exact multivariate polynomials over the rationals.
 *
 * This is the single carrier for every function the toolkit manipulates:
 * node dynamics, their univariate/cross decomposition, measured input-output
 * functions, symbolic Jacobian entries, and non-identifiability witnesses.
 *
 * Representation: arity (number of variables) plus a sorted map from
 * exponent vectors (length == arity) to nonzero rational coefficients.
 * Zero coefficients are never stored, so structural equality of the maps is
 * semantic equality — the canonical form all certificate checks rely on.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netident/rational.hpp"
#include "netident/rng.hpp"

namespace netident {

class Polynomial {
 public:
  using Terms = std::map<std::vector<int>, Rational>;

  // Zero polynomial in `arity` variables (arity 0 = rational constants).
  explicit Polynomial(int arity = 0) : arity_(arity) {}

  static Polynomial constant(int arity, const Rational& c);
  static Polynomial variable(int arity, int index);
  static Polynomial monomial(int arity, std::vector<int> exps, const Rational& c);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Max total degree over stored terms; -1 for the zero polynomial.
  int degree() const;
  // Number of stored monomials.
  size_t term_count() const { return terms_.size(); }

  // True iff variable `index` occurs with positive exponent somewhere.
  bool uses_variable(int index) const;

  bool operator==(const Polynomial& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const Rational& c) const;
  Polynomial pow(int e) const;

  // Exact composition: substitutes inners[v] for variable v. Requires
  // inners.size() == arity() and all inners of one common arity, which is
  // the arity of the result.
  Polynomial compose(const std::vector<Polynomial>& inners) const;

  // Exact partial derivative with respect to variable `index`.
  Polynomial diff(int index) const;

  // Exact evaluation; point.size() must equal arity().
  Rational eval(const std::vector<Rational>& point) const;
  // Double-precision evaluation, used only by finite-difference oracles.
  double eval_double(const std::vector<double>& point) const;

  // Same polynomial over a larger/permuted variable space: variable v
  // becomes var_map[v]; requires distinct targets within [0, new_arity).
  Polynomial remap(int new_arity, const std::vector<int>& var_map) const;

  // Scales to the canonical representative of the ray {c*p : c > 0 rational}:
  // integer coefficients with overall content 1 and first stored term
  // positive. Used to make kernel-derived witnesses reproducible.
  Polynomial primitive_normalized() const;

  void add_term(const std::vector<int>& exps, const Rational& c);

  // Human-oriented rendering like "3/2*x0^2*x1 - x2"; deterministic.
  std::string str() const;

 private:
  int arity_;
  Terms terms_;
};

// All exponent vectors with total degree in [min_total, max_total], in
// ascending (total degree, lex) order — the candidate enumeration order used
// everywhere a deterministic monomial basis is needed.
std::vector<std::vector<int>> exponents_up_to(int arity, int max_total,
                                              int min_total = 0);

// Dense random polynomial: every monomial with total degree between
// (include_constant ? 0 : 1) and K gets a coefficient with numerator in
// [-bound, bound]\{0} and denominator in [1, bound]. Every coefficient is
// nonzero by construction, so each declared variable genuinely enters.
Polynomial random_polynomial(int arity, int K, Rng& rng, long bound = 10,
                             bool include_constant = true);

// Splits a polynomial into per-variable univariate parts (degree >= 1, so
// each part vanishes at 0) and the cross part (constant term plus every
// monomial involving two or more variables). parts[v] keeps the full arity;
// sum(parts) + cross reassembles the input exactly.
struct Decomposition {
  std::vector<Polynomial> parts;
  Polynomial cross;
  Polynomial recompose() const;
};
Decomposition decompose(const Polynomial& phi);

}  // namespace netident
