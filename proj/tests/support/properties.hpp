#pragma once

// Property checks shared by the unit suites and the acceptance binary.
// Each returns a list of human-readable failures; empty means it held.

#include <random>
#include <string>
#include <vector>

#include "arrcover/covers.hpp"

namespace arrcover::check {

using Failures = std::vector<std::string>;

/// D^{q+1} D^q = 0 for weights 1 and a few random integer weights.
Failures aomoto_square_zero(const Arrangement& a, std::mt19937& rng);

/// |NBC_q| equals the q-th Poincare coefficient.
Failures nbc_counts_match_poincare(const Arrangement& a);

/// P(A) = P(A minus H) + t P(A^H) for every H.
Failures deletion_restriction(const Arrangement& a);

/// Cohomology dimensions (over Q and mod N) do not depend on hyperplane order.
Failures permutation_invariance(const Arrangement& a, std::mt19937& rng);

/// P(cone A, t) = (1 + t) P(A, t).
Failures cone_identity(const Arrangement& a);

/**
 * For m = 1..max_m: Euler identity chi(X_m) = m chi(M), deg Delta_q = b_q(X_m),
 * sum over k | m of phi(k) d_{k,q} = b_q(X_m), and b_q(X_k) <= b_q(X_m) for k | m.
 */
Failures cover_identities(const CoverCalculator& calc, unsigned long max_m, const Resolution& resolution = {});

/// b_q(X_m) = p_{q, m mod N}(m) for m = 1..max_m.
Failures periodicity_cross_check(const CoverCalculator& calc, unsigned long max_m, const Resolution& resolution = {});

/// Library lattice (supports, codims, mu) equals the all-subsets oracle.
Failures lattice_matches_oracle(const Arrangement& a);

/// Smith invariant factors equal the determinant-divisor oracle.
Failures snf_matches_oracle(const IntMatrix& m);

} // namespace arrcover::check
