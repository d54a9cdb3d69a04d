#pragma once
/*
 * Exact right-kernel extraction for column collections over the rationals.
 *
 * The certificate search needs two things from linear algebra, both exact:
 *   (a) a *certain* "these columns are independent" answer (to rule out a
 *       witness at a given degree), and
 *   (b) one exact kernel vector when a dependence exists.
 *
 * Doing (b) directly with rational elimination is the bottleneck at
 * certificate scale, so the implementation reduces modulo 31-bit primes:
 * full-column-rank modulo any single prime already proves independence
 * over Q (rank can only drop under reduction). When a dependence is likely,
 * the kernel vector is assembled from solves modulo a deterministic prime
 * sequence (Chinese remaindering + rational reconstruction) and then
 * checked *exactly* against the original columns; only that exact check can
 * declare success. A plain exact rational elimination serves as fallback
 * (and as an independent test oracle), so no probabilistic error can reach
 * a caller.
 *
 * Determinism: fixed prime sequence, fixed batch schedule, and the returned
 * vector is normalized to primitive integer form with positive leading
 * entry — a pure function of the input columns.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "netident/rational.hpp"

namespace netident {

// All columns must share one length (the row count may be 0 only if all
// columns are empty, in which case every vector is in the kernel).

// Certain independence test: true means the columns are linearly
// independent over Q (witnessed modulo the first prime of the sequence).
// False means a dependence is likely but not yet proven.
bool columns_independent_certain(const std::vector<std::vector<Rational>>& cols);

// One exact kernel vector v (Σ_c cols[c] * v[c] = 0, v != 0), or nullopt if
// the kernel is trivial. The result is exact in both directions: a vector
// is returned only after exact verification, and nullopt only after either
// a modular full-rank witness or an exact elimination.
std::optional<std::vector<Rational>> exact_kernel_vector(
    const std::vector<std::vector<Rational>>& cols);

// Exact rational elimination (reduced row echelon) kernel vector; the slow
// certain path, exposed as an independent oracle for tests.
std::optional<std::vector<Rational>> kernel_vector_by_elimination(
    const std::vector<std::vector<Rational>>& cols);

// The deterministic prime sequence used for modular work: descending primes
// starting at 2^31 - 1.
std::uint32_t kernel_prime(int index);

}  // namespace netident
