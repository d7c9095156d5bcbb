#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "oracles.hpp"

namespace arrcover::check {

namespace {

template <class T>
std::string str(const std::vector<T>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::vector<long> random_weights(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<long> dist(-3, 3);
    std::vector<long> w(n);
    for (auto& x : w)
        x = dist(rng);
    return w;
}

} // namespace

Failures aomoto_square_zero(const Arrangement& a, std::mt19937& rng)
{
    Failures f;
    const OrlikSolomon os(a);
    std::vector<std::vector<long>> systems{std::vector<long>(a.size(), 1)};
    for (int i = 0; i < 3; ++i)
        systems.push_back(random_weights(rng, a.size()));
    for (const auto& w : systems) {
        const AomotoComplex c = os.aomoto_complex(w);
        for (std::size_t q = 0; q + 1 < c.diff.size(); ++q)
            if (!(IntMatrix(c.diff[q + 1]) * IntMatrix(c.diff[q])).is_zero())
                f.push_back("D^" + std::to_string(q + 1) + " D^" + std::to_string(q) + " != 0 for weights " + str(w));
    }
    return f;
}

Failures nbc_counts_match_poincare(const Arrangement& a)
{
    Failures f;
    const auto basis = nbc_basis(a);
    const IntPoly p = poincare_polynomial(a);
    for (std::size_t q = 0; q < basis.size(); ++q)
        if (Integer(basis[q].size()) != p.coeff(q))
            f.push_back("|NBC_" + std::to_string(q) + "| = " + std::to_string(basis[q].size()) + " but P has " +
                        p.coeff(q).get_str());
    if (static_cast<long>(basis.size()) - 1 < p.degree())
        f.push_back("NBC basis stops below deg P");
    return f;
}

Failures deletion_restriction(const Arrangement& a)
{
    Failures f;
    const IntPoly p = poincare_polynomial(a);
    for (std::size_t h = 0; h < a.size(); ++h) {
        const IntPoly del = poincare_polynomial(deletion(a, h));
        const IntPoly res = poincare_polynomial(restriction(a, h));
        const IntPoly rhs = del + IntPoly::from_ints({0, 1}) * res;
        if (rhs != p)
            f.push_back("H" + std::to_string(h) + ": P(A') + t P(A'') = " + rhs.to_string() + " != " + p.to_string());
    }
    return f;
}

Failures permutation_invariance(const Arrangement& a, std::mt19937& rng)
{
    Failures f;
    const std::size_t n = a.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const OrlikSolomon os(a);
    std::vector<std::vector<long>> systems{std::vector<long>(n, 1), random_weights(rng, n)};
    for (int trial = 0; trial < 2; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        const OrlikSolomon pos(permuted(a, order));
        for (const auto& w : systems) {
            std::vector<long> pw(n);
            for (std::size_t i = 0; i < n; ++i)
                pw[i] = w[order[i]];
            const AomotoComplex c = os.aomoto_complex(w);
            const AomotoComplex pc = pos.aomoto_complex(pw);
            if (cohomology_Q(c).dims != cohomology_Q(pc).dims)
                f.push_back("dims over Q change under order " + str(order) + " for weights " + str(w));
            for (unsigned long N : {2ul, 3ul, 4ul})
                if (cohomology_modN(c, N).dims != cohomology_modN(pc, N).dims)
                    f.push_back("dims mod " + std::to_string(N) + " change under order " + str(order) +
                                " for weights " + str(w));
        }
    }
    return f;
}

Failures cone_identity(const Arrangement& a)
{
    const IntPoly expected = IntPoly::from_ints({1, 1}) * poincare_polynomial(a);
    const IntPoly got = poincare_polynomial(cone(a));
    if (got != expected)
        return {"P(cone) = " + got.to_string() + ", expected " + expected.to_string()};
    return {};
}

Failures cover_identities(const CoverCalculator& calc, unsigned long max_m, const Resolution& resolution)
{
    Failures f;
    const Integer chi = calc.euler_characteristic();
    std::vector<CoverReport> reports;
    for (unsigned long m = 1; m <= max_m; ++m) {
        const CoverReport rep = calc.cover_betti(m, resolution);
        const std::string at = "m=" + std::to_string(m);
        Integer alt = 0;
        for (std::size_t q = 0; q < rep.betti.size(); ++q)
            alt += (q % 2 ? -1 : 1) * Integer(rep.betti[q]);
        if (alt != chi * m)
            f.push_back(at + ": chi(X_m) = " + alt.get_str() + " != m chi(M) = " + Integer(chi * m).get_str());
        for (std::size_t q = 0; q < rep.betti.size(); ++q) {
            std::size_t sum = 0;
            for (const auto& [k, d] : rep.charpoly_exponents[q])
                sum += euler_phi(k) * d;
            if (sum != rep.betti[q])
                f.push_back(at + ", q=" + std::to_string(q) + ": sum phi(k) d_k = " + std::to_string(sum) +
                            " != b_q = " + std::to_string(rep.betti[q]));
            const Charpoly cp = calc.monodromy_charpoly(m, q, resolution);
            if (cp.expanded.degree() != static_cast<long>(rep.betti[q]))
                f.push_back(at + ", q=" + std::to_string(q) + ": deg Delta = " + std::to_string(cp.expanded.degree()) +
                            " != b_q = " + std::to_string(rep.betti[q]));
        }
        for (unsigned long k : divisors(m)) {
            if (k == m)
                continue;
            for (std::size_t q = 0; q < rep.betti.size(); ++q)
                if (reports[k - 1].betti[q] > rep.betti[q])
                    f.push_back("b_" + std::to_string(q) + "(X_" + std::to_string(k) + ") > b_" + std::to_string(q) +
                                "(X_" + std::to_string(m) + ")");
        }
        reports.push_back(rep);
    }
    return f;
}

Failures periodicity_cross_check(const CoverCalculator& calc, unsigned long max_m, const Resolution& resolution)
{
    Failures f;
    const PeriodicityReport per = calc.periodicity(resolution);
    for (unsigned long m = 1; m <= max_m; ++m) {
        const CoverReport rep = calc.cover_betti(m, resolution);
        for (std::size_t q = 0; q < rep.betti.size(); ++q)
            if (per.evaluate(q, m) != Integer(rep.betti[q]))
                f.push_back("m=" + std::to_string(m) + ", q=" + std::to_string(q) + ": p(m) = " +
                            per.evaluate(q, m).get_str() + " != b_q = " + std::to_string(rep.betti[q]));
    }
    return f;
}

Failures lattice_matches_oracle(const Arrangement& a)
{
    Failures f;
    const auto oracle = lattice_by_subsets(a);
    const IntersectionLattice lat = intersection_lattice(a);
    std::size_t seen = 0;
    for (const auto& level : lat.levels())
        for (const auto& flat : level) {
            ++seen;
            const auto it = oracle.find(flat.mask);
            if (it == oracle.end()) {
                f.push_back("flat " + str(flat.support) + " unknown to the oracle");
                continue;
            }
            if (it->second.codim != flat.codim || it->second.mobius != flat.mobius)
                f.push_back("flat " + str(flat.support) + ": codim/mu " + std::to_string(flat.codim) + "/" +
                            std::to_string(flat.mobius) + ", oracle " + std::to_string(it->second.codim) + "/" +
                            std::to_string(it->second.mobius));
        }
    if (seen != oracle.size())
        f.push_back(std::to_string(seen) + " flats, oracle has " + std::to_string(oracle.size()));
    return f;
}

Failures snf_matches_oracle(const IntMatrix& m)
{
    const auto got = smith_normal_form(m).invariant_factors;
    const auto want = invariant_factors_by_minors(m);
    if (got != want) {
        std::vector<std::string> g, w;
        for (const auto& x : got)
            g.push_back(x.get_str());
        for (const auto& x : want)
            w.push_back(x.get_str());
        return {"SNF " + str(g) + " != determinant divisors " + str(w)};
    }
    return {};
}

} // namespace arrcover::check
