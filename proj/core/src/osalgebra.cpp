#include "arrcover/osalgebra.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace arrcover {

namespace {

HyperplaneMask bit(std::size_t i) { return HyperplaneMask{1} << i; }

NbcMonomial to_tuple(HyperplaneMask m)
{
    NbcMonomial t;
    while (m) {
        t.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return t;
}

// Sign of the shuffle placing every element of `left` before every element of `right`.
int shuffle_sign(HyperplaneMask left, HyperplaneMask right)
{
    int inversions = 0;
    for (HyperplaneMask r = right; r; r &= r - 1) {
        const auto i = static_cast<unsigned>(std::countr_zero(r));
        inversions += std::popcount(left & ~((bit(i) << 1) - 1));
    }
    return inversions % 2 ? -1 : 1;
}

void add_to(IntCombination& acc, const IntCombination& terms, const Integer& factor)
{
    for (const auto& [mono, c] : terms) {
        auto [it, inserted] = acc.emplace(mono, 0);
        it->second += factor * c;
        if (it->second == 0)
            acc.erase(it);
    }
}

SparseIntMatrix from_map(std::size_t rows, std::size_t cols, const std::map<std::pair<std::size_t, std::size_t>, Integer>& m)
{
    SparseIntMatrix out{rows, cols, {}};
    for (const auto& [rc, v] : m)
        if (v != 0)
            out.entries.push_back(Triplet{rc.first, rc.second, v});
    return out;
}

} // namespace

OrlikSolomon::OrlikSolomon(const Arrangement& a)
    : n_(a.size()), lattice_(intersection_lattice(a))
{
    const std::size_t top = a.ambient_dim();
    basis_.assign(top + 1, {});
    index_.assign(top + 1, {});
    basis_[0].push_back({});

    // Subsets of NBC sets are NBC, so extend each degree-q set by larger indices.
    std::vector<HyperplaneMask> current{0};
    for (std::size_t q = 0; q < top; ++q) {
        std::vector<HyperplaneMask> next;
        for (HyperplaneMask s : current) {
            const std::size_t start = s ? static_cast<std::size_t>(64 - std::countl_zero(s)) : 0;
            for (std::size_t h = start; h < n_; ++h) {
                const HyperplaneMask t = s | bit(h);
                const Flat* f = lattice_.meet(t);
                if (!f || f->codim != q + 1)
                    continue;
                if (broken_subset(t) == 0)
                    next.push_back(t);
            }
        }
        for (HyperplaneMask t : next)
            basis_[q + 1].push_back(to_tuple(t));
        current = std::move(next);
    }
    for (std::size_t q = 0; q <= top; ++q)
        for (std::size_t i = 0; i < basis_[q].size(); ++i)
            index_[q].emplace(basis_[q][i], i);

    std::map<HyperplaneMask, IntCombination> memo;
    mult_.assign(top, std::vector<SparseIntMatrix>(n_));
    for (std::size_t q = 0; q < top; ++q) {
        for (std::size_t h = 0; h < n_; ++h) {
            std::map<std::pair<std::size_t, std::size_t>, Integer> entries;
            for (std::size_t col = 0; col < basis_[q].size(); ++col) {
                HyperplaneMask s = 0;
                for (std::size_t i : basis_[q][col])
                    s |= bit(i);
                if (s & bit(h))
                    continue;
                const int sign = shuffle_sign(bit(h), s);
                for (const auto& [mono, c] : straighten_mask(s | bit(h), memo))
                    entries[{index_[q + 1].at(mono), col}] += sign * c;
            }
            mult_[q][h] = from_map(basis_[q + 1].size(), basis_[q].size(), entries);
        }
    }
}

std::size_t OrlikSolomon::index_of(const NbcMonomial& m) const
{
    if (m.size() >= index_.size())
        return npos;
    auto it = index_[m.size()].find(m);
    return it == index_[m.size()].end() ? npos : it->second;
}

// For an independent set s: a subset T whose flat contains a hyperplane
// smaller than min T (so T contains a broken circuit), or 0 if s is NBC.
HyperplaneMask OrlikSolomon::broken_subset(HyperplaneMask s) const
{
    const auto size = std::popcount(s);
    // Enumerate nonempty subsets of s, smallest first.
    for (int k = 1; k <= size; ++k) {
        for (HyperplaneMask t = s;; t = (t - 1) & s) {
            if (t && std::popcount(t) == k) {
                const Flat* f = lattice_.meet(t);
                const HyperplaneMask low = f->mask & (~f->mask + 1);
                if (!(low & t))
                    return t;
            }
            if (t == 0)
                break;
        }
    }
    return 0;
}

IntCombination OrlikSolomon::straighten_mask(HyperplaneMask s, std::map<HyperplaneMask, IntCombination>& memo) const
{
    if (auto it = memo.find(s); it != memo.end())
        return it->second;

    IntCombination result;
    const Flat* f = lattice_.meet(s);
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (!f || f->codim < size) {
        // Empty intersection, or a dependent set: the class vanishes.
    } else if (HyperplaneMask t = broken_subset(s); t == 0) {
        result.emplace(to_tuple(s), 1);
    } else {
        const Flat* ft = lattice_.meet(t);
        const HyperplaneMask h = ft->mask & (~ft->mask + 1);
        // Shrink t to a minimal B with h still containing the flat of B;
        // then C = B + {h} is a circuit with minimum h.
        HyperplaneMask b = t;
        for (HyperplaneMask rest = t; rest; rest &= rest - 1) {
            const HyperplaneMask e = rest & (~rest + 1);
            const Flat* fe = lattice_.meet(b & ~e);
            if ((b & ~e) != 0 && (fe->mask & h))
                b &= ~e;
        }
        const HyperplaneMask r = s & ~b;
        const int eps = shuffle_sign(b, r);
        // boundary(e_C) = 0 gives e_B = sum_{j>=1} (-1)^(j+1) e_{C - c_j}.
        const HyperplaneMask c = b | h;
        int j = 0;
        for (HyperplaneMask rest = c; rest; rest &= rest - 1, ++j) {
            if (j == 0)
                continue;
            const HyperplaneMask cj = rest & (~rest + 1);
            const HyperplaneMask term = c & ~cj;
            const int sign = eps * (j % 2 ? 1 : -1) * shuffle_sign(term, r);
            add_to(result, straighten_mask(term | r, memo), Integer(sign));
        }
    }
    memo.emplace(s, result);
    return result;
}

IntCombination OrlikSolomon::straighten(std::span<const std::size_t> tuple) const
{
    HyperplaneMask s = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] >= n_)
            throw std::invalid_argument("straighten: index " + std::to_string(tuple[i]) + " out of range");
        if (i && tuple[i] <= tuple[i - 1])
            throw std::invalid_argument("straighten: tuple is not strictly increasing");
        s |= bit(tuple[i]);
    }
    std::map<HyperplaneMask, IntCombination> memo;
    return straighten_mask(s, memo);
}

AomotoComplex OrlikSolomon::aomoto_complex(std::span<const Integer> weights) const
{
    if (weights.size() != n_)
        throw std::invalid_argument("aomoto_complex: expected " + std::to_string(n_) + " weights, got " +
                                    std::to_string(weights.size()));
    AomotoComplex out;
    out.bases = basis_;
    for (std::size_t q = 0; q + 1 < basis_.size(); ++q) {
        std::map<std::pair<std::size_t, std::size_t>, Integer> entries;
        for (std::size_t h = 0; h < n_; ++h) {
            if (weights[h] == 0)
                continue;
            for (const auto& t : mult_[q][h].entries)
                entries[{t.row, t.col}] += weights[h] * t.value;
        }
        out.diff.push_back(from_map(basis_[q + 1].size(), basis_[q].size(), entries));
    }
    return out;
}

AomotoComplex OrlikSolomon::aomoto_complex(std::span<const long> weights) const
{
    std::vector<Integer> w(weights.begin(), weights.end());
    return aomoto_complex(w);
}

std::vector<std::vector<NbcMonomial>> nbc_basis(const Arrangement& a)
{
    return OrlikSolomon(a).nbc_basis();
}

IntCombination straighten(const Arrangement& a, std::span<const std::size_t> tuple)
{
    return OrlikSolomon(a).straighten(tuple);
}

AomotoComplex aomoto_matrices(const Arrangement& a, std::span<const long> weights)
{
    return OrlikSolomon(a).aomoto_complex(weights);
}

} // namespace arrcover
