#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "netident/errors.hpp"
#include "netident/rational.hpp"
#include "netident/rng.hpp"

using namespace netident;

TEST_CASE("rational canonical string form") {
  CHECK(rat_str(rat(3)) == "3");
  CHECK(rat_str(rat(-3)) == "-3");
  CHECK(rat_str(rat(0)) == "0");
  CHECK(rat_str(rat(1, 2)) == "1/2");
  CHECK(rat_str(rat(2, 4)) == "1/2");    // reduced
  CHECK(rat_str(rat(3, -6)) == "-1/2");  // sign on numerator
  CHECK(rat_str(rat(-4, -8)) == "1/2");
}

TEST_CASE("rational parse round-trips and rejects junk") {
  for (const char* s : {"0", "7", "-7", "1/2", "-22/7", "1000000000000000000000/3"}) {
    CHECK(rat_str(rat_parse(s)) == s);
  }
  CHECK(rat_parse("4/8") == rat(1, 2));  // parses then canonicalizes
  CHECK_THROWS_AS(rat_parse(""), Error);
  CHECK_THROWS_AS(rat_parse("abc"), Error);
  CHECK_THROWS_AS(rat_parse("1/0"), Error);
  CHECK_THROWS_AS(rat_parse("1/2/3"), Error);
  CHECK_THROWS_AS(rat_parse("1.5"), Error);
  CHECK_THROWS_WITH_AS(rat_parse("x"), doctest::Contains("SchemaError"), Error);
}

TEST_CASE("rational arithmetic is exact at scale") {
  // 1/1 + 1/2 + ... + 1/20 has a well-known exact value.
  Rational sum = 0;
  for (long k = 1; k <= 20; ++k) sum += rat(1, k);
  CHECK(rat_str(sum) == "55835135/15519504");
}

TEST_CASE("splitmix64 reference values") {
  // Known-answer test: splitmix64 from seed 1234567 produces this sequence
  // (values cross-checked against the published reference implementation).
  Rng r(1234567);
  CHECK(r.next() == 6457827717110365317ULL);
  CHECK(r.next() == 3203168211198807973ULL);
  CHECK(r.next() == 9817491932198370423ULL);
}

TEST_CASE("uniform_int stays in range and hits both endpoints") {
  Rng r(42);
  std::set<long> seen;
  for (int i = 0; i < 2000; ++i) {
    long v = r.uniform_int(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);  // all of -3..3 appear
  CHECK(r.uniform_int(5, 5) == 5);
}

TEST_CASE("nonzero_int never returns zero") {
  Rng r(7);
  for (int i = 0; i < 2000; ++i) {
    long v = r.nonzero_int(4);
    CHECK(v != 0);
    CHECK(v >= -4);
    CHECK(v <= 4);
  }
}

TEST_CASE("rational draw has the advertised support") {
  Rng r(99);
  for (int i = 0; i < 500; ++i) {
    Rational q = r.rational(10);
    CHECK(q != 0);
    // |q| <= 10 and denominator <= 10 before reduction.
    CHECK(abs(q) <= 10);
  }
}

TEST_CASE("small_rational lies in [-1/2, 1/2]") {
  Rng r(5);
  for (int i = 0; i < 500; ++i) {
    Rational q = r.small_rational();
    CHECK(q >= rat(-1, 2));
    CHECK(q <= rat(1, 2));
  }
}

TEST_CASE("derive gives order-independent substreams") {
  // Same (seed, index) always gives the same stream seed; different indices
  // give different ones.
  CHECK(Rng::derive(1, 0) == Rng::derive(1, 0));
  CHECK(Rng::derive(1, 0) != Rng::derive(1, 1));
  CHECK(Rng::derive(1, 0) != Rng::derive(2, 0));
  // Streams derived in any order agree with streams derived in index order.
  std::vector<std::uint64_t> fwd, rev;
  for (int i = 0; i < 8; ++i) fwd.push_back(Rng::derive(77, static_cast<std::uint64_t>(i)));
  for (int i = 7; i >= 0; --i) rev.push_back(Rng::derive(77, static_cast<std::uint64_t>(i)));
  for (int i = 0; i < 8; ++i) CHECK(fwd[static_cast<std::size_t>(i)] == rev[static_cast<std::size_t>(7 - i)]);
}

TEST_CASE("identical seeds give identical draw sequences") {
  Rng a(31337), b(31337);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.uniform_int(0, 1000) == b.uniform_int(0, 1000));
  }
}

TEST_CASE("error kinds surface in what()") {
  try {
    fail("TooLarge", "synthetic");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == "TooLarge");
    CHECK(std::string(e.what()) == "TooLarge: synthetic");
  }
}
