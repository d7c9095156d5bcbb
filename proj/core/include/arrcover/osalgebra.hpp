#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "arrcover/arrangement.hpp"

namespace arrcover {

/// Strictly increasing tuple of hyperplane indices.
using NbcMonomial = std::vector<std::size_t>;

/// Sparse Z-combination of NBC monomials; zero coefficients are never stored.
using IntCombination = std::map<NbcMonomial, Integer>;

struct Triplet {
    std::size_t row;
    std::size_t col;
    Integer value;
};

struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Triplet> entries; // sorted by (row, col), no zeros, no repeats
};

/**
 * The complex (A_Z, a_k wedge) in the NBC basis. bases[q] spans A^q for
 * q = 0..ambient_dim; diff[q] maps degree q to q + 1, so its rows index
 * bases[q + 1] and its columns bases[q].
 */
struct AomotoComplex {
    std::vector<std::vector<NbcMonomial>> bases;
    std::vector<SparseIntMatrix> diff;

    std::size_t top_degree() const { return bases.size() - 1; }
};

/**
 * Orlik-Solomon algebra of an affine arrangement over Z, with respect to
 * the input hyperplane order. Relations: e_S = 0 when the hyperplanes in
 * S do not meet, and the boundary of every circuit vanishes.
 *
 * Construction precomputes the NBC basis and the left-multiplication
 * tables of every generator; the object is immutable afterwards.
 */
class OrlikSolomon {
public:
    explicit OrlikSolomon(const Arrangement& a);

    std::size_t hyperplane_count() const { return n_; }
    const IntersectionLattice& lattice() const { return lattice_; }
    const std::vector<std::vector<NbcMonomial>>& nbc_basis() const { return basis_; }

    /// Position of an NBC monomial within its degree, or npos.
    std::size_t index_of(const NbcMonomial& m) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Class of e_tuple in the NBC basis. Throws std::invalid_argument
    /// unless the tuple is strictly increasing and in range.
    IntCombination straighten(std::span<const std::size_t> tuple) const;

    /// Left multiplication by a_H on degree q, for hyperplane h.
    const SparseIntMatrix& multiplication(std::size_t q, std::size_t h) const { return mult_[q][h]; }

    /// Differentials of a_k = sum k_H a_H. Throws unless weights.size() == n.
    AomotoComplex aomoto_complex(std::span<const Integer> weights) const;
    AomotoComplex aomoto_complex(std::span<const long> weights) const;

private:
    HyperplaneMask broken_subset(HyperplaneMask s) const;
    IntCombination straighten_mask(HyperplaneMask s, std::map<HyperplaneMask, IntCombination>& memo) const;

    std::size_t n_;
    IntersectionLattice lattice_;
    std::vector<std::vector<NbcMonomial>> basis_;
    std::vector<std::map<NbcMonomial, std::size_t>> index_;
    std::vector<std::vector<SparseIntMatrix>> mult_; // [q][h]
};

std::vector<std::vector<NbcMonomial>> nbc_basis(const Arrangement& a);
IntCombination straighten(const Arrangement& a, std::span<const std::size_t> tuple);
AomotoComplex aomoto_matrices(const Arrangement& a, std::span<const long> weights);

} // namespace arrcover
