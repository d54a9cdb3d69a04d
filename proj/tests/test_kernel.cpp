#include <doctest.h>

#include <vector>

#include "netident/kernel.hpp"
#include "netident/rng.hpp"

using namespace netident;

namespace {

using Cols = std::vector<std::vector<Rational>>;

bool combination_is_zero(const Cols& cols, const std::vector<Rational>& v) {
  if (cols.empty()) return false;
  std::size_t rows = cols[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) acc += cols[c][r] * v[c];
    if (acc != 0) return false;
  }
  return true;
}

bool nonzero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return true;
  return false;
}

}  // namespace

TEST_CASE("independent columns are certified independent") {
  Cols cols = {{rat(1), rat(0)}, {rat(0), rat(1)}};
  CHECK(columns_independent_certain(cols));
  CHECK(!exact_kernel_vector(cols).has_value());
  CHECK(!kernel_vector_by_elimination(cols).has_value());
}

TEST_CASE("an exact dependence is found and verified") {
  // col2 = 3*col0 - 1/2*col1
  Cols cols = {{rat(1), rat(2), rat(-1)},
               {rat(4), rat(0), rat(6)},
               {rat(1), rat(6), rat(-6)}};
  auto v = exact_kernel_vector(cols);
  REQUIRE(v.has_value());
  CHECK(nonzero(*v));
  CHECK(combination_is_zero(cols, *v));
  auto w = kernel_vector_by_elimination(cols);
  REQUIRE(w.has_value());
  CHECK(combination_is_zero(cols, *w));
  // Normalized output: integer entries, positive leading nonzero.
  for (const auto& x : *v) CHECK(x.get_den() == 1);
}

TEST_CASE("single zero column has the trivial kernel vector") {
  Cols cols = {{rat(0), rat(0), rat(0)}};
  auto v = exact_kernel_vector(cols);
  REQUIRE(v.has_value());
  CHECK((*v)[0] != 0);
  CHECK(!columns_independent_certain(cols));
}

TEST_CASE("wide matrices always have kernels") {
  // 4 columns, 2 rows: kernel guaranteed by dimension count.
  Rng rng(77);
  Cols cols(4, std::vector<Rational>(2));
  for (auto& col : cols)
    for (auto& x : col) x = rng.rational(9);
  CHECK(!columns_independent_certain(cols));
  auto v = exact_kernel_vector(cols);
  REQUIRE(v.has_value());
  CHECK(nonzero(*v));
  CHECK(combination_is_zero(cols, *v));
}

TEST_CASE("fast path agrees with elimination oracle on random instances") {
  for (int trial = 0; trial < 40; ++trial) {
    Rng rng(Rng::derive(0xC0DE, static_cast<std::uint64_t>(trial)));
    int rows = static_cast<int>(rng.uniform_int(1, 6));
    int ncols = static_cast<int>(rng.uniform_int(1, 6));
    Cols cols(static_cast<std::size_t>(ncols), std::vector<Rational>(static_cast<std::size_t>(rows)));
    for (auto& col : cols)
      for (auto& x : col)
        if (rng.uniform_int(0, 3) > 0) x = rng.rational(8);
    // Force an exact dependence half the time by overwriting the last column.
    if (ncols >= 2 && rng.uniform_int(0, 1) == 1) {
      for (int r = 0; r < rows; ++r) {
        cols.back()[static_cast<std::size_t>(r)] =
            cols[0][static_cast<std::size_t>(r)] * rat(2, 3) -
            cols[static_cast<std::size_t>(ncols / 2)][static_cast<std::size_t>(r)];
      }
    }
    auto fast = exact_kernel_vector(cols);
    auto slow = kernel_vector_by_elimination(cols);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(nonzero(*fast));
      CHECK(combination_is_zero(cols, *fast));
      CHECK(combination_is_zero(cols, *slow));
    }
  }
}

TEST_CASE("huge coefficients survive the modular round trip") {
  // Entries far beyond one 31-bit prime force genuine CRT reconstruction.
  Rational big1 = rat_parse("123456789012345678901234567/9876543210987654321");
  Rational big2 = rat_parse("-98765432109876543210987/1234567890123456789");
  Cols cols = {{big1, big2}, {big1 * 2, big2 * 2}};
  auto v = exact_kernel_vector(cols);
  REQUIRE(v.has_value());
  CHECK(combination_is_zero(cols, *v));
}

TEST_CASE("deterministic prime sequence") {
  CHECK(kernel_prime(0) == 2147483647u);  // 2^31 - 1
  CHECK(kernel_prime(0) == kernel_prime(0));
  CHECK(kernel_prime(1) < kernel_prime(0));
  // All listed primes are odd and distinct.
  for (int i = 0; i < 10; ++i) {
    CHECK((kernel_prime(i) & 1u) == 1u);
    for (int j = i + 1; j < 10; ++j) CHECK(kernel_prime(i) != kernel_prime(j));
  }
}

TEST_CASE("kernel output is deterministic") {
  Cols cols = {{rat(1), rat(2)}, {rat(2), rat(4)}, {rat(1, 3), rat(5)}};
  auto a = exact_kernel_vector(cols);
  auto b = exact_kernel_vector(cols);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);
}
