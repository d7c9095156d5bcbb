#include "arrcover/arrangement.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace arrcover {

std::vector<CycNum> Hyperplane::augmented_row() const
{
    std::vector<CycNum> row = coeffs;
    row.push_back(constant);
    return row;
}

Arrangement Arrangement::build(std::size_t ambient_dim, unsigned cyc_order,
                               std::vector<Hyperplane> hyperplanes, Essentiality essentiality)
{
    if (cyc_order == 0)
        throw ArrangementError("cyclotomic order must be positive");
    const std::string where = "hyperplane ";
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
        const auto& h = hyperplanes[i];
        if (h.coeffs.size() != ambient_dim)
            throw ArrangementError(where + std::to_string(i) + ": expected " + std::to_string(ambient_dim) +
                                   " coefficients, got " + std::to_string(h.coeffs.size()));
        if (h.constant.order() != cyc_order ||
            std::any_of(h.coeffs.begin(), h.coeffs.end(),
                        [&](const CycNum& c) { return c.order() != cyc_order; }))
            throw ArrangementError(where + std::to_string(i) + ": coefficient outside Q(zeta_" +
                                   std::to_string(cyc_order) + ")");
        if (std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const CycNum& c) { return c.is_zero(); }))
            throw ArrangementError(where + std::to_string(i) + ": linear part is zero");
    }
    for (std::size_t i = 0; i < hyperplanes.size(); ++i)
        for (std::size_t j = i + 1; j < hyperplanes.size(); ++j)
            if (field_matrix_rank({hyperplanes[i].augmented_row(), hyperplanes[j].augmented_row()}) < 2)
                throw ArrangementError("duplicate hyperplane: " + std::to_string(j) +
                                       " is proportional to " + std::to_string(i));
    if (essentiality == Essentiality::required) {
        CycMatrix linear;
        for (const auto& h : hyperplanes)
            linear.push_back(h.coeffs);
        const std::size_t rank = field_matrix_rank(linear);
        if (rank != ambient_dim)
            throw ArrangementError("arrangement is not essential: linear parts have rank " +
                                   std::to_string(rank) + " in dimension " + std::to_string(ambient_dim));
    }
    Arrangement a;
    a.ambient_dim_ = ambient_dim;
    a.cyc_order_ = cyc_order;
    a.central_ = std::all_of(hyperplanes.begin(), hyperplanes.end(),
                             [](const Hyperplane& h) { return h.constant.is_zero(); });
    a.hyperplanes_ = std::move(hyperplanes);
    return a;
}

Arrangement cone(const Arrangement& a)
{
    const unsigned d = a.cyc_order();
    const CycNum zero(Rational(0), d);
    std::vector<Hyperplane> planes;
    planes.reserve(a.size() + 1);
    for (const auto& h : a.hyperplanes()) {
        Hyperplane c{zero, {h.constant}};
        c.coeffs.insert(c.coeffs.end(), h.coeffs.begin(), h.coeffs.end());
        planes.push_back(std::move(c));
    }
    Hyperplane infinity{zero, std::vector<CycNum>(a.ambient_dim() + 1, zero)};
    infinity.coeffs[0] = CycNum(Rational(1), d);
    planes.push_back(std::move(infinity));
    return Arrangement::build(a.ambient_dim() + 1, d, std::move(planes), Essentiality::not_required);
}

Arrangement decone(const Arrangement& c, std::size_t at)
{
    if (!c.is_central())
        throw ArrangementError("decone: arrangement is not central");
    if (at >= c.size())
        throw ArrangementError("decone: hyperplane index out of range");
    if (c.ambient_dim() == 0)
        throw ArrangementError("decone: ambient dimension is zero");
    const auto& alpha = c[at].coeffs;
    std::size_t pivot = 0;
    while (alpha[pivot].is_zero())
        ++pivot;
    const CycNum inv = alpha[pivot].inverse();

    std::vector<Hyperplane> planes;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == at)
            continue;
        const auto& b = c[i].coeffs;
        const CycNum ratio = b[pivot] * inv;
        Hyperplane h{ratio, {}};
        for (std::size_t j = 0; j < b.size(); ++j)
            if (j != pivot)
                h.coeffs.push_back(b[j] - ratio * alpha[j]);
        planes.push_back(std::move(h));
    }
    return Arrangement::build(c.ambient_dim() - 1, c.cyc_order(), std::move(planes),
                              Essentiality::not_required);
}

Arrangement deletion(const Arrangement& a, std::size_t i)
{
    if (i >= a.size())
        throw ArrangementError("deletion: hyperplane index out of range");
    std::vector<Hyperplane> planes = a.hyperplanes();
    planes.erase(planes.begin() + static_cast<std::ptrdiff_t>(i));
    return Arrangement::build(a.ambient_dim(), a.cyc_order(), std::move(planes), Essentiality::not_required);
}

// ----------------------------------------------------------------- lattice

IntersectionLattice::IntersectionLattice(std::vector<std::vector<Flat>> levels) : levels_(std::move(levels))
{
    if (levels_.empty())
        throw std::invalid_argument("IntersectionLattice: no levels");
}

std::size_t IntersectionLattice::flat_count() const
{
    std::size_t n = 0;
    for (const auto& l : levels_)
        n += l.size();
    return n;
}

const Flat* IntersectionLattice::find(HyperplaneMask mask) const
{
    for (const auto& level : levels_)
        for (const auto& f : level)
            if (f.mask == mask)
                return &f;
    return nullptr;
}

const Flat* IntersectionLattice::meet(HyperplaneMask mask) const
{
    // The intersection is the lowest-codimension flat whose support contains mask.
    for (const auto& level : levels_)
        for (const auto& f : level)
            if ((mask & ~f.mask) == 0)
                return &f;
    return nullptr;
}

IntPoly IntersectionLattice::local_poincare(const Flat& y) const
{
    std::vector<Integer> coeffs(y.codim + 1);
    for (std::size_t c = 0; c <= y.codim && c < levels_.size(); ++c)
        for (const auto& z : levels_[c])
            if ((z.mask & ~y.mask) == 0)
                coeffs[c] += (c % 2 ? -z.mobius : z.mobius);
    return IntPoly(std::move(coeffs));
}

namespace {

// Reduce row against an echelon form; zero result means row is in the span.
bool in_row_space(const EchelonForm& e, std::vector<CycNum> row)
{
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const std::size_t p = e.pivots[i];
        if (row[p].is_zero())
            continue;
        const CycNum f = row[p];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!e.rows[i][j].is_zero())
                row[j] -= f * e.rows[i][j];
    }
    return std::all_of(row.begin(), row.end(), [](const CycNum& x) { return x.is_zero(); });
}

} // namespace

IntersectionLattice intersection_lattice(const Arrangement& a)
{
    const std::size_t n = a.size();
    if (n > kMaxLatticeHyperplanes)
        throw ArrangementError("intersection lattice supports at most 64 hyperplanes");
    const std::size_t constant_col = a.ambient_dim();

    std::vector<std::vector<CycNum>> rows;
    rows.reserve(n);
    for (const auto& h : a.hyperplanes())
        rows.push_back(h.augmented_row());

    struct Node {
        Flat flat;
        EchelonForm system;
    };
    std::vector<std::vector<Node>> levels(1);
    levels[0].push_back(Node{Flat{{}, 0, 0, 1, std::nullopt}, EchelonForm{}});

    for (std::size_t c = 0;; ++c) {
        std::map<CycMatrix, std::size_t> seen;
        std::vector<Node> next;
        for (const auto& node : levels[c]) {
            for (std::size_t h = 0; h < n; ++h) {
                if (node.flat.mask >> h & 1u)
                    continue;
                CycMatrix system = node.system.rows;
                system.push_back(rows[h]);
                EchelonForm e = reduced_row_echelon(system);
                if (!e.pivots.empty() && e.pivots.back() == constant_col)
                    continue; // empty intersection
                if (seen.count(e.rows))
                    continue;
                Flat f;
                f.codim = c + 1;
                for (std::size_t k = 0; k < n; ++k) {
                    if (in_row_space(e, rows[k])) {
                        f.support.push_back(k);
                        f.mask |= HyperplaneMask{1} << k;
                    }
                }
                seen.emplace(e.rows, next.size());
                next.push_back(Node{std::move(f), std::move(e)});
            }
        }
        if (next.empty())
            break;
        std::sort(next.begin(), next.end(),
                  [](const Node& x, const Node& y) { return x.flat.support < y.flat.support; });
        levels.push_back(std::move(next));
    }

    std::vector<std::vector<Flat>> flats(levels.size());
    for (std::size_t c = 0; c < levels.size(); ++c)
        for (auto& node : levels[c])
            flats[c].push_back(std::move(node.flat));

    // mu(Y) = -sum over flats strictly below Y.
    for (std::size_t c = 1; c < flats.size(); ++c) {
        for (auto& y : flats[c]) {
            long sum = 0;
            for (std::size_t b = 0; b < c; ++b)
                for (const auto& z : flats[b])
                    if ((z.mask & ~y.mask) == 0)
                        sum += z.mobius;
            y.mobius = -sum;
        }
    }
    return IntersectionLattice(std::move(flats));
}

IntPoly poincare_polynomial(const IntersectionLattice& lattice)
{
    std::vector<Integer> coeffs(lattice.rank() + 1);
    for (std::size_t c = 0; c <= lattice.rank(); ++c)
        for (const auto& f : lattice.level(c))
            coeffs[c] += (c % 2 ? -f.mobius : f.mobius);
    return IntPoly(std::move(coeffs));
}

IntPoly poincare_polynomial(const Arrangement& a)
{
    return poincare_polynomial(intersection_lattice(a));
}

Integer euler_characteristic(const Arrangement& a)
{
    return poincare_polynomial(a).evaluate(-1);
}

Integer beta(const Arrangement& a)
{
    return abs(euler_characteristic(a));
}

IntersectionLattice dense_edges(const Arrangement& a)
{
    IntersectionLattice closure = intersection_lattice(cone(a));
    const IntPoly one_plus_t = IntPoly::from_ints({1, 1});
    for (std::size_t c = 1; c <= a.ambient_dim() && c <= closure.rank(); ++c) {
        for (auto& y : closure.levels_[c]) {
            const IntPoly deconed = closure.local_poincare(y).exact_divide(one_plus_t);
            y.dense = deconed.evaluate(-1) != 0;
        }
    }
    return closure;
}

} // namespace arrcover
