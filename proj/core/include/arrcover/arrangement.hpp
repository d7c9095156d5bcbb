#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrcover/cyclofield.hpp"

namespace arrcover {

/// Raised for structurally invalid arrangements (duplicates, zero forms,
/// non-essential input, inconsistent orders).
class ArrangementError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The affine hyperplane constant + sum coeffs[i] * x_i = 0.
struct Hyperplane {
    CycNum constant;
    std::vector<CycNum> coeffs;

    /// [coeffs..., constant]
    std::vector<CycNum> augmented_row() const;
    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

enum class Essentiality { required, not_required };

class Arrangement {
public:
    /**
     * Validates and builds an arrangement. Rejects zero linear parts,
     * coefficients outside Q(zeta_d), proportional (duplicate) affine forms
     * and, unless told otherwise, arrangements whose linear parts have rank
     * below the ambient dimension.
     */
    static Arrangement build(std::size_t ambient_dim, unsigned cyc_order,
                             std::vector<Hyperplane> hyperplanes,
                             Essentiality essentiality = Essentiality::required);

    std::size_t ambient_dim() const { return ambient_dim_; }
    unsigned cyc_order() const { return cyc_order_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
    std::size_t size() const { return hyperplanes_.size(); }
    bool is_central() const { return central_; }

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    Arrangement() = default;

    std::size_t ambient_dim_ = 0;
    unsigned cyc_order_ = 1;
    std::vector<Hyperplane> hyperplanes_;
    bool central_ = true;
};

/// Homogenize with a new first coordinate x0; {x0 = 0} is appended last.
Arrangement cone(const Arrangement& a);

/**
 * Dehomogenize a central arrangement, sending hyperplane `at` to infinity.
 * The chosen form becomes the new coordinate y0 = 1; its first nonzero
 * coordinate is eliminated and the others are kept in order.
 */
Arrangement decone(const Arrangement& c, std::size_t at);

using HyperplaneMask = std::uint64_t;
inline constexpr std::size_t kMaxLatticeHyperplanes = 64;

struct Flat {
    std::vector<std::size_t> support; // all hyperplanes containing the flat
    HyperplaneMask mask = 0;          // same set, as a bitmask
    std::size_t codim = 0;
    long mobius = 0;
    std::optional<bool> dense;        // set only by dense_edges

    std::size_t multiplicity() const { return support.size(); }
};

class IntersectionLattice {
public:
    explicit IntersectionLattice(std::vector<std::vector<Flat>> levels);

    /// Largest codimension present.
    std::size_t rank() const { return levels_.size() - 1; }
    const std::vector<Flat>& level(std::size_t codim) const { return levels_.at(codim); }
    const std::vector<std::vector<Flat>>& levels() const { return levels_; }
    std::size_t flat_count() const;

    /// Flat with exactly this support, if any.
    const Flat* find(HyperplaneMask mask) const;

    /**
     * The flat obtained by intersecting the hyperplanes in `mask`, or
     * nullptr if that intersection is empty.
     */
    const Flat* meet(HyperplaneMask mask) const;

    /// sum over Z <= Y of mu(Z) (-t)^codim Z, i.e. P of the localization at Y.
    IntPoly local_poincare(const Flat& y) const;

private:
    friend IntersectionLattice dense_edges(const Arrangement& a);
    std::vector<std::vector<Flat>> levels_;
};

IntersectionLattice intersection_lattice(const Arrangement& a);

/// P(A,t) = sum mu(Y) (-t)^codim Y.
IntPoly poincare_polynomial(const IntersectionLattice& lattice);
IntPoly poincare_polynomial(const Arrangement& a);

/// chi(M(A)) = P(A,-1).
Integer euler_characteristic(const Arrangement& a);

/// beta(A) = |chi(M(A))|.
Integer beta(const Arrangement& a);

/**
 * Lattice of the projective closure (computed as the lattice of cone(A),
 * whose last hyperplane is H_infinity). Every flat of codimension
 * 1..ambient_dim gets a dense flag: beta of a decone of the localization is
 * positive. The bottom flat and the cone vertex (an empty projective set)
 * are left unflagged.
 */
IntersectionLattice dense_edges(const Arrangement& a);

/// A with hyperplane i removed; the result need not be essential.
Arrangement deletion(const Arrangement& a, std::size_t i);

} // namespace arrcover
