#include "netident/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "netident/errors.hpp"

namespace netident {

namespace {

int total_degree(const std::vector<int>& exps) {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity())
    fail("ArityMismatch", "polynomials have arities " + std::to_string(a.arity()) +
                              " and " + std::to_string(b.arity()));
}

}  // namespace

Polynomial Polynomial::constant(int arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(std::vector<int>(arity, 0), c);
  return p;
}

Polynomial Polynomial::variable(int arity, int index) {
  if (index < 0 || index >= arity)
    fail("ArityMismatch", "variable index " + std::to_string(index) +
                              " out of range for arity " + std::to_string(arity));
  std::vector<int> e(arity, 0);
  e[index] = 1;
  return monomial(arity, e, rat(1));
}

Polynomial Polynomial::monomial(int arity, std::vector<int> exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != arity)
    fail("ArityMismatch", "exponent vector length does not match arity");
  Polynomial p(arity);
  p.add_term(exps, c);
  return p;
}

void Polynomial::add_term(const std::vector<int>& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != arity_)
    fail("ArityMismatch", "exponent vector length does not match arity");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    Rational cc = c;
    cc.canonicalize();
    terms_.emplace(exps, cc);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Polynomial::uses_variable(int index) const {
  for (const auto& [e, c] : terms_)
    if (e[index] > 0) return true;
  return false;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_arity(*this, o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_arity(*this, o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, Rational(-c));
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(-c));
  return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
  Polynomial r(arity_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) {
    Rational v = k * c;
    v.canonicalize();
    r.terms_.emplace(e, v);
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_arity(*this, o);
  Polynomial r(arity_);
  std::vector<int> e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int v = 0; v < arity_; ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, Rational(ca * cb));
    }
  }
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) fail("InternalError", "negative exponent");
  Polynomial r = Polynomial::constant(arity_, rat(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& inners) const {
  if (static_cast<int>(inners.size()) != arity_)
    fail("ArityMismatch", "compose expects " + std::to_string(arity_) +
                              " inner polynomials, got " + std::to_string(inners.size()));
  int inner_arity = inners.empty() ? 0 : inners[0].arity();
  for (const auto& p : inners)
    if (p.arity() != inner_arity)
      fail("ArityMismatch", "inner polynomials must share one arity");

  // Cache inner powers up to the maximum exponent each variable reaches.
  std::vector<int> max_exp(arity_, 0);
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < arity_; ++v) max_exp[v] = std::max(max_exp[v], e[v]);
  std::vector<std::vector<Polynomial>> pows(arity_);
  for (int v = 0; v < arity_; ++v) {
    pows[v].reserve(max_exp[v] + 1);
    pows[v].push_back(Polynomial::constant(inner_arity, rat(1)));
    for (int k = 1; k <= max_exp[v]; ++k) pows[v].push_back(pows[v].back() * inners[v]);
  }

  Polynomial r(inner_arity);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(inner_arity, c);
    for (int v = 0; v < arity_; ++v)
      if (e[v] > 0) t = t * pows[v][e[v]];
    r = r + t;
  }
  return r;
}

Polynomial Polynomial::diff(int index) const {
  if (index < 0 || index >= arity_)
    fail("ArityMismatch", "derivative variable out of range");
  Polynomial r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    std::vector<int> d = e;
    d[index] -= 1;
    r.add_term(d, Rational(c * e[index]));
  }
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    fail("ArityMismatch", "evaluation point has wrong length");
  std::vector<int> max_exp(arity_, 0);
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < arity_; ++v) max_exp[v] = std::max(max_exp[v], e[v]);
  std::vector<std::vector<Rational>> pows(arity_);
  for (int v = 0; v < arity_; ++v) {
    pows[v].reserve(max_exp[v] + 1);
    pows[v].push_back(rat(1));
    for (int k = 1; k <= max_exp[v]; ++k) {
      Rational nx = pows[v].back() * point[v];
      nx.canonicalize();
      pows[v].push_back(nx);
    }
  }
  Rational acc = rat(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < arity_; ++v)
      if (e[v] > 0) t *= pows[v][e[v]];
    acc += t;
  }
  acc.canonicalize();
  return acc;
}

double Polynomial::eval_double(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    fail("ArityMismatch", "evaluation point has wrong length");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = rat_double(c);
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= point[v];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::remap(int new_arity, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != arity_)
    fail("ArityMismatch", "variable map length does not match arity");
  for (int t : var_map)
    if (t < 0 || t >= new_arity)
      fail("ArityMismatch", "variable map target out of range");
  Polynomial r(new_arity);
  std::vector<int> e(new_arity);
  for (const auto& [old_e, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int v = 0; v < arity_; ++v) e[var_map[v]] += old_e[v];
    r.add_term(e, c);
  }
  return r;
}

Polynomial Polynomial::primitive_normalized() const {
  if (terms_.empty()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (terms_.begin()->second * factor < 0) factor = -factor;
  return scale(factor);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = total_degree(e) > 0;
    if (!has_vars || a != 1) os << rat_str(a);
    bool star = !has_vars || a != 1;
    for (int v = 0; v < arity_; ++v) {
      if (e[v] == 0) continue;
      if (star) os << "*";
      os << "x" << v;
      if (e[v] > 1) os << "^" << e[v];
      star = true;
    }
  }
  return os.str();
}

std::vector<std::vector<int>> exponents_up_to(int arity, int max_total, int min_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(arity, 0);
  // Recursive enumeration per total degree gives (total, lex) order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == arity) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  for (int total = std::max(0, min_total); total <= max_total; ++total)
    rec(rec, 0, total);
  return out;
}

Polynomial random_polynomial(int arity, int K, Rng& rng, long bound,
                             bool include_constant) {
  Polynomial p(arity);
  for (const auto& e : exponents_up_to(arity, K, include_constant ? 0 : 1))
    p.add_term(e, rng.rational(bound));
  return p;
}

Polynomial Decomposition::recompose() const {
  Polynomial acc = cross;
  for (const auto& p : parts) acc = acc + p;
  return acc;
}

Decomposition decompose(const Polynomial& phi) {
  Decomposition d;
  d.parts.assign(phi.arity(), Polynomial(phi.arity()));
  d.cross = Polynomial(phi.arity());
  for (const auto& [e, c] : phi.terms()) {
    int support = 0, var = -1;
    for (int v = 0; v < phi.arity(); ++v)
      if (e[v] > 0) {
        ++support;
        var = v;
      }
    if (support == 1)
      d.parts[var].add_term(e, c);
    else
      d.cross.add_term(e, c);  // constant term (support 0) or >= 2 variables
  }
  return d;
}

}  // namespace netident
