#include "netident/kernel.hpp"

#include <algorithm>

#include "netident/errors.hpp"

namespace netident {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, exact for n < 3,215,031,751 with these bases.
bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 inv_mod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

u32 mod_of(const Integer& z, u32 p) {
  // mpz_fdiv_ui yields the non-negative remainder even for negative z.
  return static_cast<u32>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

struct IntColumns {
  std::vector<std::vector<Integer>> cols;
  std::vector<Integer> scale;  // original col c = int col c / scale[c]
  size_t rows = 0;
};

IntColumns integerize(const std::vector<std::vector<Rational>>& cols) {
  IntColumns out;
  out.rows = cols.empty() ? 0 : cols[0].size();
  for (const auto& col : cols) {
    if (col.size() != out.rows)
      fail("InternalError", "kernel columns must share one length");
    Integer lcm = 1;
    for (const auto& x : col)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Integer> ic;
    ic.reserve(col.size());
    for (const auto& x : col) {
      Rational v = x * lcm;
      v.canonicalize();
      ic.push_back(v.get_num());
    }
    out.cols.push_back(std::move(ic));
    out.scale.push_back(lcm);
  }
  return out;
}

// Row echelon modulo p on the matrix whose columns are given; returns rank
// and fills pivot_rows (original row indices, in pivot order) and
// first_free_col (-1 if full column rank).
int echelon_mod_p(const IntColumns& m, u32 p, std::vector<int>* pivot_rows,
                  int* first_free_col) {
  size_t R = m.rows, C = m.cols.size();
  std::vector<std::vector<u64>> w(R, std::vector<u64>(C));
  for (size_t c = 0; c < C; ++c)
    for (size_t r = 0; r < R; ++r) w[r][c] = mod_of(m.cols[c][r], p);
  std::vector<int> perm(R);
  for (size_t r = 0; r < R; ++r) perm[r] = static_cast<int>(r);
  if (pivot_rows) pivot_rows->clear();
  if (first_free_col) *first_free_col = -1;
  size_t rank = 0;
  for (size_t c = 0; c < C; ++c) {
    size_t piv = R;
    for (size_t r = rank; r < R; ++r)
      if (w[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == R) {
      if (first_free_col && *first_free_col < 0) *first_free_col = static_cast<int>(c);
      continue;
    }
    std::swap(w[rank], w[piv]);
    std::swap(perm[rank], perm[piv]);
    u64 inv = inv_mod(w[rank][c], p);
    for (size_t r = rank + 1; r < R; ++r) {
      if (w[r][c] == 0) continue;
      u64 factor = mulmod(w[r][c], inv, p);
      for (size_t cc = c; cc < C; ++cc) {
        u64 sub = mulmod(factor, w[rank][cc], p);
        w[r][cc] = (w[r][cc] + p - sub) % p;
      }
    }
    if (pivot_rows) pivot_rows->push_back(perm[rank]);
    ++rank;
    if (rank == R) {
      if (first_free_col && *first_free_col < 0 && C > R)
        *first_free_col = static_cast<int>(c + 1 < C ? c + 1 : -1);
      break;
    }
  }
  if (first_free_col && *first_free_col < 0 && rank < C)
    *first_free_col = static_cast<int>(rank);  // all rows exhausted
  return static_cast<int>(rank);
}

// Solves the f x f system A x = b modulo p, where A's columns are the first
// f integer columns restricted to `rows` and b is column f restricted the
// same way. Returns false if singular mod p.
bool solve_mod_p(const IntColumns& m, const std::vector<int>& rows, int f, u32 p,
                 std::vector<u64>* x) {
  int n = f;
  std::vector<std::vector<u64>> a(n, std::vector<u64>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = mod_of(m.cols[c][rows[r]], p);
    // Right-hand side: -column f.
    u64 v = mod_of(m.cols[f][rows[r]], p);
    a[r][n] = v == 0 ? 0 : p - v;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(a[c], a[piv]);
    u64 inv = inv_mod(a[c][c], p);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      u64 factor = mulmod(a[r][c], inv, p);
      for (int cc = c; cc <= n; ++cc) {
        u64 sub = mulmod(factor, a[c][cc], p);
        a[r][cc] = (a[r][cc] + p - sub) % p;
      }
    }
  }
  // Gauss-Jordan above leaves the system diagonal: x_r = rhs_r / a_rr.
  x->assign(n, 0);
  for (int r = 0; r < n; ++r) (*x)[r] = mulmod(a[r][n], inv_mod(a[r][r], p), p);
  return true;
}

// Wang rational reconstruction: given x mod m, find n/d with
// |n|, d <= sqrt(m/2) and n == x*d (mod m). Returns false if none.
bool rational_reconstruct(const Integer& x, const Integer& m, Rational* out) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  Integer n = r1, d = t1;
  if (d < 0) {
    d = -d;
    n = -n;
  }
  if (d > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    // n/d must be in lowest terms for n == x*d (mod m) to pin it uniquely.
    n /= g;
    d /= g;
  }
  Rational q(n, d);
  q.canonicalize();
  *out = q;
  return true;
}

bool exact_verify(const std::vector<std::vector<Rational>>& cols,
                  const std::vector<Rational>& v) {
  size_t R = cols.empty() ? 0 : cols[0].size();
  for (size_t r = 0; r < R; ++r) {
    Rational acc = rat(0);
    for (size_t c = 0; c < cols.size(); ++c) {
      if (v[c] == 0) continue;
      acc += cols[c][r] * v[c];
    }
    acc.canonicalize();
    if (acc != 0) return false;
  }
  return true;
}

std::vector<Rational> normalize_vector(std::vector<Rational> v) {
  Integer den_lcm = 1, num_gcd = 0;
  for (auto& x : v) {
    x.canonicalize();
    if (x == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (num_gcd == 0) return v;  // zero vector; callers never produce it
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  for (const auto& x : v)
    if (x != 0) {
      if (x * factor < 0) factor = -factor;
      break;
    }
  for (auto& x : v) {
    x *= factor;
    x.canonicalize();
  }
  return v;
}

}  // namespace

std::uint32_t kernel_prime(int index) {
  static std::vector<u32> cache;
  if (cache.empty()) cache.push_back(2147483647u);  // 2^31 - 1 is prime
  while (static_cast<int>(cache.size()) <= index) {
    u32 cand = cache.back() - 2;
    while (!is_prime_u32(cand)) cand -= 2;
    cache.push_back(cand);
  }
  return cache[index];
}

bool columns_independent_certain(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return true;
  IntColumns m = integerize(cols);
  if (m.rows < cols.size()) return false;  // rank cannot reach column count
  int rank = echelon_mod_p(m, kernel_prime(0), nullptr, nullptr);
  return rank == static_cast<int>(cols.size());
}

std::optional<std::vector<Rational>> kernel_vector_by_elimination(
    const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return std::nullopt;
  size_t R = cols[0].size(), C = cols.size();
  for (const auto& c : cols)
    if (c.size() != R) fail("InternalError", "kernel columns must share one length");
  // Row-echelon over Q, columns left to right; record pivot column per row.
  std::vector<std::vector<Rational>> w(R, std::vector<Rational>(C, rat(0)));
  for (size_t c = 0; c < C; ++c)
    for (size_t r = 0; r < R; ++r) w[r][c] = cols[c][r];
  std::vector<int> pivot_col;
  size_t rank = 0;
  int first_free = -1;
  for (size_t c = 0; c < C; ++c) {
    size_t piv = R;
    for (size_t r = rank; r < R; ++r)
      if (w[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == R) {
      if (first_free < 0) first_free = static_cast<int>(c);
      continue;
    }
    std::swap(w[rank], w[piv]);
    Rational inv = 1 / w[rank][c];
    for (size_t cc = c; cc < C; ++cc) {
      w[rank][cc] *= inv;
      w[rank][cc].canonicalize();
    }
    for (size_t r = 0; r < R; ++r) {
      if (r == rank || w[r][c] == 0) continue;
      Rational factor = w[r][c];
      for (size_t cc = c; cc < C; ++cc) {
        w[r][cc] -= factor * w[rank][cc];
        w[r][cc].canonicalize();
      }
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
    if (rank == R && first_free < 0 && c + 1 < C) {
      first_free = static_cast<int>(c + 1);
      break;
    }
  }
  if (first_free < 0) return std::nullopt;
  std::vector<Rational> v(C, rat(0));
  v[first_free] = rat(1);
  // Row r of the reduced form reads: x_{pivot_col[r]} + w[r][first_free] * 1 = 0.
  for (size_t r = 0; r < pivot_col.size() && pivot_col[r] < first_free; ++r)
    v[pivot_col[r]] = -w[r][first_free];
  std::vector<Rational> out = normalize_vector(std::move(v));
  if (!exact_verify(cols, out))
    fail("InternalError", "elimination produced a non-kernel vector");
  return out;
}

std::optional<std::vector<Rational>> exact_kernel_vector(
    const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return std::nullopt;
  IntColumns m = integerize(cols);
  size_t C = cols.size();

  std::vector<int> pivot_rows;
  int first_free = -1;
  int rank = echelon_mod_p(m, kernel_prime(0), &pivot_rows, &first_free);
  if (rank == static_cast<int>(C)) return std::nullopt;  // certain
  if (first_free < 0) first_free = rank;
  int f = first_free;
  std::vector<int> rows(pivot_rows.begin(),
                        pivot_rows.begin() + std::min<size_t>(pivot_rows.size(), f));
  if (static_cast<int>(rows.size()) < f) {
    // Modulo-p structure too degenerate to set up the square solve; use the
    // exact path directly.
    auto exact = kernel_vector_by_elimination(cols);
    if (!exact) return std::nullopt;
    return exact;
  }

  constexpr int kBatch = 16;
  constexpr int kMaxPrimes = 512;
  Integer modulus = 1;
  std::vector<Integer> acc(f, Integer(0));
  int prime_index = 1;
  int used_primes = 0;
  while (used_primes < kMaxPrimes) {
    for (int b = 0; b < kBatch && used_primes < kMaxPrimes; ++b, ++prime_index) {
      u32 p = kernel_prime(prime_index);
      std::vector<u64> x;
      if (!solve_mod_p(m, rows, f, p, &x)) continue;  // singular mod p: skip
      if (modulus == 1) {
        for (int c = 0; c < f; ++c) acc[c] = static_cast<unsigned long>(x[c]);
        modulus = p;
      } else {
        // CRT: acc' = acc + modulus * ((x - acc) * modulus^{-1} mod p).
        u64 minv = inv_mod(mod_of(modulus, p), p);
        for (int c = 0; c < f; ++c) {
          u64 cur = mod_of(acc[c], p);
          u64 diff = (x[c] + p - cur) % p;
          u64 t = mulmod(diff, minv, p);
          acc[c] += modulus * static_cast<unsigned long>(t);
        }
        modulus *= p;
      }
      ++used_primes;
    }
    if (modulus == 1) continue;
    // Attempt reconstruction + exact verification.
    std::vector<Rational> v(C, rat(0));
    bool ok = true;
    for (int c = 0; c < f && ok; ++c) {
      Rational q;
      if (rational_reconstruct(acc[c], modulus, &q)) {
        // Undo the per-column integer scaling: int col = orig col * scale.
        v[c] = q * m.scale[c];
        v[c].canonicalize();
      } else {
        ok = false;
      }
    }
    if (ok) {
      Rational ff(m.scale[f]);
      v[f] = ff;
      std::vector<Rational> out = normalize_vector(v);
      if (exact_verify(cols, out)) return out;
    }
  }
  // Modular path failed (either a p-artifact kernel that does not exist
  // over Q, or pathological entry growth): decide exactly.
  auto exact = kernel_vector_by_elimination(cols);
  return exact;
}

}  // namespace netident
