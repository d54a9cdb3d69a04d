#pragma once
/*
 * Deterministic random numbers with identical bytes on every platform.
 *
 * The standard <random> engines are portable, but the standard
 * distributions are implementation-defined, which would break the
 * byte-identical-reports guarantee. So the generator is splitmix64 (a tiny,
 * fully specified mixer) plus explicit rejection sampling, and nothing else.
 *
 * Substreams: derive(seed, index) produces an independent stream seed as a
 * pure function of (seed, index). Samplers that run per edge / per node /
 * per sample index each take their own substream, so results never depend
 * on iteration or execution order.
 */

#include <cstdint>

#include "netident/rational.hpp"

namespace netident {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // splitmix64 step.
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Seed for substream `index` of stream `seed`; pure function, no state.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return r.next();
  }

  // Uniform integer in [lo, hi], unbiased via rejection.
  long uniform_int(long lo, long hi);

  // Uniform in [-bound, bound] excluding 0.
  long nonzero_int(long bound);

  // Exact rational with numerator in [-bound, bound]\{0} and denominator in
  // [1, bound]; the stock coefficient/sample-point distribution.
  Rational rational(long bound);

  // Uniform rational in [-1/2, 1/2] on a fixed 1/1024 grid (used where
  // finite-difference oracles need small magnitudes).
  Rational small_rational();

 private:
  std::uint64_t state_;
};

}  // namespace netident
