#pragma once

#include <cstddef>
#include <vector>

#include "arrcover/osalgebra.hpp"

namespace arrcover {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit IntMatrix(const SparseIntMatrix& sparse);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SnfResult {
    std::vector<Integer> invariant_factors; // nonzero diagonal entries, d1 | d2 | ...
    std::size_t rank = 0;
};

/// Smith normal form by unimodular row and column operations, pivoting on
/// the smallest nonzero absolute value (ties broken by row, then column).
SnfResult smith_normal_form(const IntMatrix& m);

/// Rank over Q.
std::size_t rank_rational(const IntMatrix& m);

/// Rank over Z/p; p must be prime.
std::size_t rank_mod_prime(const IntMatrix& m, unsigned long p);

struct CohomologyProfile {
    enum class Ring { rationals, integers_mod };
    Ring ring = Ring::rationals;
    unsigned long modulus = 0; // 0 over Q
    std::vector<std::size_t> dims;

    friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

/// dim H^q over Q of the complex; equals dim H^q(A, a_lambda) for lambda = k/N.
CohomologyProfile cohomology_Q(const AomotoComplex& c);

/**
 * Minimal number of generators of H^q of the complex reduced mod N,
 * computed through Smith normal forms over Z. Throws for N < 2.
 */
CohomologyProfile cohomology_modN(const AomotoComplex& c, unsigned long modulus);

/// Same quantity for prime p, by Gaussian elimination over Z/p.
CohomologyProfile cohomology_mod_prime(const AomotoComplex& c, unsigned long p);

bool is_prime(unsigned long n);

} // namespace arrcover
