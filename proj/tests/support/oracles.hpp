#pragma once

// Slow, independent reference computations used only by the tests.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "arrcover/arrangement.hpp"
#include "arrcover/exactlin.hpp"

namespace arrcover::check {

/// Number of 1 <= j <= k with gcd(j, k) = 1.
unsigned long phi_by_counting(unsigned long k);

/// Rank as the size of the largest nonvanishing minor (Laplace expansion).
std::size_t rank_by_minors(const CycMatrix& m);

/// Integer determinant by Laplace expansion.
Integer determinant(const std::vector<std::vector<Integer>>& m);

/// Invariant factors d_k / d_{k-1}, d_k = gcd of the k x k minors.
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m);

struct OracleFlat {
    std::size_t codim = 0;
    long mobius = 0;
};

/**
 * Every subset S of hyperplanes with nonempty intersection, grouped by the
 * set of hyperplanes containing that intersection. mu(Y) is the Whitney sum
 * of (-1)^|S| over the subsets whose intersection is exactly Y.
 */
std::map<HyperplaneMask, OracleFlat> lattice_by_subsets(const Arrangement& a);

/// P(A, t) = sum over S with nonempty intersection of (-1)^|S| (-t)^rank S.
IntPoly poincare_by_subsets(const Arrangement& a);

/// A^H: the other hyperplanes restricted to H, duplicates merged, parallels dropped.
Arrangement restriction(const Arrangement& a, std::size_t h);

/// Hyperplane order[i] of a becomes hyperplane i.
Arrangement permuted(const Arrangement& a, const std::vector<std::size_t>& order);

/// Random arrangement of n distinct hyperplanes in C^dim over Q(zeta_d)
/// with small integer coordinates; essential unless the draw fails repeatedly.
Arrangement random_arrangement(std::mt19937& rng, std::size_t dim, std::size_t n, unsigned d, bool central);

/// Random matrix with entries in [-bound, bound].
IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound);

/// Product of random elementary integer operations; determinant +-1.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n);

} // namespace arrcover::check
