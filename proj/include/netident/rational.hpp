#pragma once
/*
 * Exact rational numbers. Thin layer over GMP's mpq_class: the toolkit's
 * verdicts and certificates are exact objects, so every core computation
 * runs on arbitrary-precision rationals. Floating point appears only in the
 * dedicated finite-difference oracles (see rat_double).
 *
 * Serialization is the canonical GMP string: "p" for integers, "p/q"
 * otherwise, always in lowest terms with the sign on the numerator. That
 * canonical form is what makes report bytes reproducible.
 */

#include <gmpxx.h>

#include <string>
#include <vector>

namespace netident {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p" / "p/q" rendering.
std::string rat_str(const Rational& r);

// Parses "p" or "p/q" (optional leading '-'); throws SchemaError on junk or
// zero denominator.
Rational rat_parse(const std::string& s);

inline double rat_double(const Rational& r) { return r.get_d(); }

std::string rat_vec_str(const std::vector<Rational>& v);

}  // namespace netident
