#include <gtest/gtest.h>

#include "arrcover/covers.hpp"
#include "catalog.hpp"
#include "properties.hpp"

using namespace arrcover;

namespace {

const Arrangement& catalog(const char* key) { return cli::find_catalog_entry(key)->arrangement; }

// One calculator per catalog entry; the local Betti memo is shared across tests.
const CoverCalculator& calc(const char* key)
{
    static std::map<std::string, CoverCalculator> cache;
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, CoverCalculator(catalog(key))).first;
    return it->second;
}

using Betti = std::vector<std::size_t>;
using Exponents = std::map<unsigned long, std::size_t>;

IntPoly t_power_minus_one(std::size_t j, unsigned e) { return (IntPoly::monomial(1, j) - IntPoly::from_ints({1})).pow(e); }

Resolution ceva_paper_value()
{
    Resolution r;
    r.asserted[3][1] = 2;
    return r;
}

} // namespace

TEST(WeightSystem, InfinityWeight)
{
    const WeightSystem w = WeightSystem::uniform(5, 3);
    EXPECT_EQ(w.weight(0), Rational(Integer(1), Integer(3)));
    EXPECT_EQ(w.infinity_weight(), Rational(Integer(-5), Integer(3)));
}

TEST(Nonresonance, Stv)
{
    const CoverCalculator& s = calc("selberg");
    EXPECT_TRUE(s.stv_nonresonant(WeightSystem::uniform(5, 2)));
    EXPECT_FALSE(s.stv_nonresonant(WeightSystem::uniform(5, 3)));
    EXPECT_FALSE(s.stv_nonresonant(WeightSystem{std::vector<long>(5, 0), 7}));
    EXPECT_THROW(s.stv_nonresonant(WeightSystem::uniform(4, 2)), std::invalid_argument);
}

TEST(Nonresonance, Fast)
{
    EXPECT_TRUE(calc("selberg").fast_nonresonant(6));
    EXPECT_TRUE(calc("selberg").fast_nonresonant(2));
    EXPECT_FALSE(calc("selberg").fast_nonresonant(3));
    EXPECT_FALSE(calc("hessian-decone").fast_nonresonant(2));
    EXPECT_THROW(calc("selberg").fast_nonresonant(0), std::invalid_argument);
}

TEST(LocalBetti, SelbergAtThree)
{
    const LocalBetti lb = calc("selberg").local_betti(3);
    ASSERT_TRUE(lb.resolved());
    EXPECT_EQ(lb.method, LocalMethod::bounds);
    EXPECT_EQ(lb.values(), (Betti{0, 1, 3}));
    ASSERT_TRUE(lb.intervals[1].witness_shift.has_value());
    EXPECT_EQ(*lb.intervals[1].witness_shift, (std::vector<long>{0, 0, -1, 0, 0}));
    EXPECT_FALSE(lb.uses_assertion());
}

TEST(LocalBetti, TrivialAndNonresonant)
{
    EXPECT_EQ(calc("selberg").local_betti(1).values(), (Betti{1, 5, 6}));
    EXPECT_EQ(calc("selberg").local_betti(1).method, LocalMethod::trivial);
    const LocalBetti lb = calc("selberg").local_betti(4);
    EXPECT_EQ(lb.method, LocalMethod::nonresonant);
    EXPECT_EQ(lb.values(), (Betti{0, 0, 2}));
    EXPECT_THROW(calc("selberg").local_betti(0), std::invalid_argument);
}

TEST(LocalBetti, HessianDeconeResonantOrders)
{
    for (unsigned long k : {2ul, 4ul}) {
        const LocalBetti lb = calc("hessian-decone").local_betti(k);
        ASSERT_TRUE(lb.resolved()) << k;
        EXPECT_EQ(lb.values(), (Betti{0, 2, 20})) << k;
        EXPECT_EQ(lb.intervals[1].lower, 2u);
        EXPECT_TRUE(lb.intervals[1].witness_shift.has_value());
    }
}

TEST(LocalBetti, NonresonantBoundsBracketTheValue)
{
    // Selberg k=2 is nonresonant; the bounds still bracket (0, 0, 2).
    const CoverCalculator& s = calc("selberg");
    const OrlikSolomon& os = s.orlik_solomon();
    const auto upper = cohomology_modN(os.aomoto_complex(std::vector<long>(5, 1)), 2).dims;
    const auto lower = cohomology_Q(os.aomoto_complex(std::vector<long>(5, 1))).dims;
    const Betti exact{0, 0, 2};
    for (std::size_t q = 0; q < 3; ++q) {
        EXPECT_LE(lower[q], exact[q]);
        EXPECT_LE(exact[q], upper[q]);
    }
}

TEST(LocalBetti, CevaAtThreeStaysOpen)
{
    const LocalBetti lb = calc("ceva3").local_betti(3);
    EXPECT_FALSE(lb.resolved());
    EXPECT_EQ(lb.intervals[1].upper, 2u);
    EXPECT_LE(lb.intervals[1].lower, 1u);
    EXPECT_THROW(lb.values(), std::logic_error);
}

TEST(LocalBetti, AssertionsCloseAndAreChecked)
{
    std::map<std::size_t, std::size_t> a{{1, 2}};
    const LocalBetti lb = calc("ceva3").local_betti(3, {}, a);
    ASSERT_TRUE(lb.resolved());
    EXPECT_TRUE(lb.uses_assertion());
    EXPECT_EQ(lb.values(), (Betti{0, 2, 13, 11}));
    std::map<std::size_t, std::size_t> outside{{1, 5}};
    EXPECT_THROW(calc("ceva3").local_betti(3, {}, outside), std::invalid_argument);
    // Selberg k=3 is resolved to b_2 = 3; a different value is rejected.
    EXPECT_THROW(calc("selberg").local_betti(3, {}, {{2, 4}}), std::invalid_argument);
}

TEST(LocalBetti, CentralSplitMatchesDecone)
{
    // M(A) = C* x M(dA): zero unless k | n, else b_q = b'_q + b'_{q-1}.
    for (unsigned long k = 2; k <= 12; ++k) {
        const LocalBetti lb = calc("hessian").local_betti(k);
        EXPECT_EQ(lb.method, LocalMethod::central_split);
        ASSERT_TRUE(lb.resolved()) << k;
        if (12 % k != 0) {
            EXPECT_EQ(lb.values(), (Betti{0, 0, 0, 0})) << k;
            continue;
        }
        const Betti d = calc("hessian-decone").local_betti(k).values();
        EXPECT_EQ(lb.values(), (Betti{0, d[1], d[2] + d[1], d[2]})) << k;
    }
}

TEST(LocalBetti, ShiftsOfWrongLengthThrow)
{
    ShiftSearchConfig s;
    s.extra_shifts.push_back({0, 1});
    EXPECT_THROW(calc("selberg").local_betti(3, s), std::invalid_argument);
}

TEST(CoverBetti, Examples)
{
    EXPECT_EQ(calc("maclane-decone").cover_betti(8).betti, (Betti{1, 7, 62}));
    EXPECT_EQ(calc("selberg").cover_betti(6).betti, (Betti{1, 7, 18}));
    EXPECT_EQ(calc("hessian-decone").cover_betti(12).betti, (Betti{1, 17, 232}));
    for (const char* key : {"selberg", "maclane-decone", "hessian", "ceva3"}) {
        const CoverReport r = calc(key).cover_betti(1);
        Betti p;
        for (const auto& c : calc(key).poincare().coeffs())
            p.push_back(c.get_ui());
        EXPECT_EQ(r.betti, p) << key;
        EXPECT_TRUE(r.exact);
    }
    EXPECT_THROW(calc("selberg").cover_betti(0), std::invalid_argument);
}

TEST(CoverBetti, SelbergCoprimeToThree)
{
    for (unsigned long m : {1ul, 2ul, 4ul, 5ul, 7ul, 8ul})
        EXPECT_EQ(calc("selberg").cover_betti(m).betti, (Betti{1, 5, 4 + 2 * m})) << m;
}

TEST(CoverBetti, CevaNeedsAnAssertion)
{
    try {
        calc("ceva3").cover_betti(3);
        FAIL() << "expected UnresolvedLocalBetti";
    } catch (const UnresolvedLocalBetti& e) {
        ASSERT_EQ(e.unresolved().size(), 1u);
        EXPECT_EQ(e.unresolved()[0].k, 3u);
        EXPECT_NE(std::string(e.what()).find("unresolved local Betti at k=3"), std::string::npos);
    }
    const CoverReport r = calc("ceva3").cover_betti(3, ceva_paper_value());
    EXPECT_FALSE(r.exact);
    EXPECT_EQ(r.betti, (Betti{1, 13, 50, 38}));
}

TEST(Charpoly, HessianDeconeTwelve)
{
    const Charpoly d1 = calc("hessian-decone").monodromy_charpoly(12, 1);
    EXPECT_EQ(d1.cyclotomic_exponents, (Exponents{{1, 11}, {2, 2}, {4, 2}}));
    EXPECT_EQ(d1.expanded, t_power_minus_one(1, 9) * t_power_minus_one(4, 2));
    ASSERT_TRUE(d1.power_form.has_value());
    EXPECT_EQ(*d1.power_form, (Exponents{{1, 9}, {4, 2}}));

    const Charpoly d2 = calc("hessian-decone").monodromy_charpoly(12, 2);
    EXPECT_EQ(d2.cyclotomic_exponents, (Exponents{{1, 28}, {2, 20}, {3, 18}, {4, 20}, {6, 18}, {12, 18}}));
    EXPECT_EQ(d2.expanded, t_power_minus_one(1, 8) * t_power_minus_one(4, 2) * t_power_minus_one(12, 18));
    EXPECT_EQ(d2.expanded.degree(), 232);
}

TEST(Charpoly, TrivialCover)
{
    for (std::size_t q = 0; q <= 2; ++q) {
        const Charpoly c = calc("selberg").monodromy_charpoly(1, q);
        EXPECT_EQ(c.expanded, t_power_minus_one(1, static_cast<unsigned>(calc("selberg").poincare().coeff(q).get_ui())));
    }
}

TEST(Periodicity, Selberg)
{
    const PeriodicityReport r = calc("selberg").periodicity();
    EXPECT_EQ(r.period, 60);
    for (const auto& c : r.classes) {
        const bool three = std::find(c.divisor_pattern.begin(), c.divisor_pattern.end(), 3ul) != c.divisor_pattern.end();
        EXPECT_EQ(c.polynomials[0], IntPoly::from_ints({1}));
        EXPECT_EQ(c.polynomials[1], IntPoly::from_ints({three ? 7 : 5}));
        EXPECT_EQ(c.polynomials[2], IntPoly::from_ints({three ? 6 : 4, 2}));
    }
    Integer residues = 0;
    for (const auto& c : r.classes)
        residues += c.residue_count;
    EXPECT_EQ(residues, 60);
}

TEST(Periodicity, MacLaneDecone)
{
    const PeriodicityReport r = calc("maclane-decone").periodicity();
    EXPECT_EQ(r.period, 420);
    for (const auto& c : r.classes) {
        EXPECT_EQ(c.polynomials[1], IntPoly::from_ints({7}));
        EXPECT_EQ(c.polynomials[2], IntPoly::from_ints({6, 7}));
    }
}

TEST(Periodicity, CrossCheckSelberg)
{
    const auto f = check::periodicity_cross_check(calc("selberg"), 30);
    EXPECT_TRUE(f.empty()) << (f.empty() ? "" : f.front());
}

TEST(Zeta, Examples)
{
    using Terms = std::vector<std::pair<unsigned long, std::size_t>>;
    const ZetaReport s = calc("selberg").zeta_coefficients(1);
    EXPECT_EQ(s.finite_terms, (Terms{{1, 5}, {3, 2}}));
    EXPECT_EQ(s.tail_beta, 0);
    const ZetaReport h = calc("hessian-decone").zeta_coefficients(1);
    EXPECT_EQ(h.finite_terms, (Terms{{1, 11}, {2, 2}, {4, 4}}));
    EXPECT_EQ(calc("maclane-decone").zeta_coefficients(1).finite_terms, (Terms{{1, 7}}));
    EXPECT_EQ(calc("selberg").zeta_coefficients(2).tail_beta, 2);
}

TEST(Invariants, CoverIdentitiesOnCatalog)
{
    for (const char* key : {"selberg", "maclane", "maclane-decone", "hessian", "hessian-decone"}) {
        const auto f = check::cover_identities(calc(key), 12);
        EXPECT_TRUE(f.empty()) << key << ": " << (f.empty() ? "" : f.front());
    }
    const auto f = check::cover_identities(calc("ceva3"), 12, ceva_paper_value());
    EXPECT_TRUE(f.empty()) << "ceva3: " << (f.empty() ? "" : f.front());
}

TEST(Invariants, DeconeChoiceDoesNotMatter)
{
    const Arrangement& maclane = catalog("maclane");
    for (std::size_t at : {3ul, 5ul}) {
        const CoverCalculator other(decone(maclane, at));
        for (unsigned long m : {2ul, 3ul, 8ul})
            EXPECT_EQ(other.cover_betti(m).betti, calc("maclane-decone").cover_betti(m).betti) << at << " " << m;
    }
    const CoverCalculator hessian_other(decone(catalog("hessian"), 7));
    EXPECT_EQ(hessian_other.cover_betti(12).betti, (Betti{1, 17, 232}));
    EXPECT_EQ(hessian_other.cover_betti(4).charpoly_exponents, calc("hessian-decone").cover_betti(4).charpoly_exponents);
}

TEST(Divisors, Small)
{
    EXPECT_EQ(divisors(12), (std::vector<unsigned long>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(1), (std::vector<unsigned long>{1}));
    EXPECT_EQ(divisors(49), (std::vector<unsigned long>{1, 7, 49}));
}
