#include "netident/rng.hpp"

#include "netident/errors.hpp"

namespace netident {

long Rng::uniform_int(long lo, long hi) {
  if (lo > hi) fail("InternalError", "uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

long Rng::nonzero_int(long bound) {
  long v;
  do {
    v = uniform_int(-bound, bound);
  } while (v == 0);
  return v;
}

Rational Rng::rational(long bound) {
  return rat(nonzero_int(bound), uniform_int(1, bound));
}

Rational Rng::small_rational() {
  return rat(uniform_int(-512, 512), 1024);
}

}  // namespace netident
