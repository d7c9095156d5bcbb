#include <gtest/gtest.h>

#include <random>

#include "arrcover/exactlin.hpp"
#include "catalog.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace arrcover;

namespace {

const Arrangement& catalog(const char* key) { return cli::find_catalog_entry(key)->arrangement; }

AomotoComplex ones_complex(const char* key)
{
    const Arrangement& a = catalog(key);
    return OrlikSolomon(a).aomoto_complex(std::vector<long>(a.size(), 1));
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

using Dims = std::vector<std::size_t>;

} // namespace

TEST(Snf, Examples)
{
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).invariant_factors, ints({1, 1, 1}));
    EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).invariant_factors, ints({1, 6}));
    const SnfResult zero = smith_normal_form(IntMatrix(3, 4));
    EXPECT_TRUE(zero.invariant_factors.empty());
    EXPECT_EQ(zero.rank, 0u);
    EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).invariant_factors,
              ints({2, 6, 12}));
}

TEST(Snf, MatchesDeterminantDivisorOracle)
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 400; ++trial) {
        const IntMatrix m = check::random_matrix(rng, dim(rng), dim(rng), 9);
        const auto f = check::snf_matches_oracle(m);
        EXPECT_TRUE(f.empty()) << "trial " << trial << ": " << (f.empty() ? "" : f.front());
    }
}

TEST(Snf, LowRankMatricesMatchOracle)
{
    std::mt19937 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = check::random_matrix(rng, 5, 2, 3) * check::random_matrix(rng, 2, 4, 3);
        const auto f = check::snf_matches_oracle(m);
        EXPECT_TRUE(f.empty()) << "trial " << trial << ": " << (f.empty() ? "" : f.front());
    }
}

TEST(Snf, InvariantUnderUnimodularChanges)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = check::random_matrix(rng, 4, 5, 6);
        const IntMatrix moved = check::random_unimodular(rng, 4) * m * check::random_unimodular(rng, 5);
        EXPECT_EQ(smith_normal_form(moved).invariant_factors, smith_normal_form(m).invariant_factors);
    }
}

TEST(Rank, RationalAndModPrimeAgreeWithSnf)
{
    std::mt19937 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = check::random_matrix(rng, 4, 6, 4) * check::random_matrix(rng, 6, 5, 2);
        const SnfResult snf = smith_normal_form(m);
        EXPECT_EQ(rank_rational(m), snf.rank);
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
            std::size_t units = 0;
            for (const auto& f : snf.invariant_factors)
                units += f % p != 0;
            EXPECT_EQ(rank_mod_prime(m, p), units) << "p=" << p;
        }
    }
    EXPECT_THROW(rank_mod_prime(IntMatrix::identity(2), 4), std::invalid_argument);
}

TEST(Cohomology, ZeroDifferentialGivesBasisSizes)
{
    const Arrangement& a = catalog("selberg");
    const AomotoComplex c = OrlikSolomon(a).aomoto_complex(std::vector<long>(a.size(), 0));
    EXPECT_EQ(cohomology_Q(c).dims, (Dims{1, 5, 6}));
    EXPECT_EQ(cohomology_modN(c, 6).dims, (Dims{1, 5, 6}));
}

TEST(Cohomology, SelbergOverQ)
{
    const Arrangement& a = catalog("selberg");
    const OrlikSolomon os(a);
    const CohomologyProfile plain = cohomology_Q(os.aomoto_complex(std::vector<long>(5, 1)));
    EXPECT_EQ(plain.dims[0], 0u);
    EXPECT_EQ(static_cast<long>(plain.dims[0]) - static_cast<long>(plain.dims[1]) + static_cast<long>(plain.dims[2]), 2);
    const std::vector<long> shifted{1, 1, -2, 1, 1};
    EXPECT_EQ(cohomology_Q(os.aomoto_complex(shifted)).dims[1], 1u);
}

TEST(Cohomology, HessianDeconeModTwoAndFour)
{
    const AomotoComplex c = ones_complex("hessian-decone");
    EXPECT_EQ(cohomology_modN(c, 2).dims, (Dims{0, 2, 20}));
    EXPECT_EQ(cohomology_modN(c, 4).dims, (Dims{0, 2, 20}));
}

TEST(Cohomology, MacLaneDeconeVanishesBelowTop)
{
    const AomotoComplex c = ones_complex("maclane-decone");
    for (unsigned long n = 2; n <= 8; ++n)
        EXPECT_EQ(cohomology_modN(c, n).dims, (Dims{0, 0, 7})) << "N=" << n;
}

TEST(Cohomology, CevaModThree)
{
    EXPECT_EQ(cohomology_modN(ones_complex("ceva3"), 3).dims[1], 2u);
}

TEST(Cohomology, ModulusBelowTwoThrows)
{
    EXPECT_THROW(cohomology_modN(ones_complex("selberg"), 1), std::invalid_argument);
    EXPECT_THROW(cohomology_modN(ones_complex("selberg"), 0), std::invalid_argument);
}

TEST(Cohomology, EulerCharacteristicIgnoresTheDifferential)
{
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> w(-4, 4);
    for (const char* key : {"selberg", "maclane-decone", "hessian-decone", "ceva3"}) {
        const Arrangement& a = catalog(key);
        const OrlikSolomon os(a);
        long basis_chi = 0;
        for (std::size_t q = 0; q < os.nbc_basis().size(); ++q)
            basis_chi += (q % 2 ? -1 : 1) * static_cast<long>(os.nbc_basis()[q].size());
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<long> weights(a.size());
            for (auto& x : weights)
                x = w(rng);
            const auto dims = cohomology_Q(os.aomoto_complex(weights)).dims;
            long chi = 0;
            for (std::size_t q = 0; q < dims.size(); ++q)
                chi += (q % 2 ? -1 : 1) * static_cast<long>(dims[q]);
            EXPECT_EQ(chi, basis_chi) << key;
        }
    }
}

TEST(Cohomology, PrimeModulusPathsAgree)
{
    for (const char* key : {"selberg", "maclane-decone", "hessian-decone", "ceva3", "maclane"}) {
        const AomotoComplex c = ones_complex(key);
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
            EXPECT_EQ(cohomology_modN(c, p).dims, cohomology_mod_prime(c, p).dims) << key << " p=" << p;
    }
    EXPECT_THROW(cohomology_mod_prime(ones_complex("selberg"), 6), std::invalid_argument);
}

TEST(Cohomology, RationalBoundsModN)
{
    for (const char* key : {"selberg", "maclane-decone", "hessian-decone", "ceva3", "hessian", "maclane"}) {
        const AomotoComplex c = ones_complex(key);
        const Dims q = cohomology_Q(c).dims;
        for (unsigned long n = 2; n <= 8; ++n) {
            const Dims modn = cohomology_modN(c, n).dims;
            for (std::size_t i = 0; i < q.size(); ++i)
                EXPECT_LE(q[i], modn[i]) << key << " N=" << n << " q=" << i;
        }
    }
}
