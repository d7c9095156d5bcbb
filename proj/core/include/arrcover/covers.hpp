#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arrcover/arrangement.hpp"
#include "arrcover/exactlin.hpp"
#include "arrcover/osalgebra.hpp"

namespace arrcover {

/// Weights lambda_H = k_H / N on the hyperplanes of A.
struct WeightSystem {
    std::vector<long> k_vector;
    unsigned long modulus = 1;

    /// lambda = (1, ..., 1) / m, the system of the local system L^m_1.
    static WeightSystem uniform(std::size_t n, unsigned long m);

    Rational weight(std::size_t h) const { return Rational(Integer(k_vector.at(h)), Integer(modulus)); }
    /// Weight carried by H_infinity in the projective closure: -sum lambda_H.
    Rational infinity_weight() const;
};

/**
 * Candidate shifts m for the lower bound sup_m dim H^q(A, a_{lambda+m}).
 * With at most `exhaustive_limit` hyperplanes every m in {-1, 0}^n is
 * tried; `extra_shifts` are always tried as well.
 */
struct ShiftSearchConfig {
    std::size_t exhaustive_limit = 16;
    std::vector<std::vector<long>> extra_shifts;
};

struct BettiInterval {
    std::size_t degree = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::optional<std::vector<long>> witness_shift;
    bool asserted = false;        // value supplied by the caller
    bool euler_closed = false;    // value forced by the Euler characteristic

    bool resolved() const { return lower == upper; }
};

/**
 * How a local Betti vector was obtained. central_split uses
 * M(A) = C* x M(dA) for a central A: the C* loop is the product of all
 * meridians, so everything vanishes unless k | n, and otherwise
 * b_q = b'_q + b'_{q-1} with b' taken on the decone dA.
 */
enum class LocalMethod { trivial, nonresonant, bounds, central_split };

/// b_q(L^k_1) for q = 0..ambient_dim, as intervals.
struct LocalBetti {
    unsigned long k = 1;
    LocalMethod method = LocalMethod::trivial;
    std::vector<BettiInterval> intervals;

    bool resolved() const;
    bool uses_assertion() const;
    /// Resolved values; throws std::logic_error if any interval is open.
    std::vector<std::size_t> values() const;
};

/// Caller-supplied values, keyed by k then by degree q.
using AssertedValues = std::map<unsigned long, std::map<std::size_t, std::size_t>>;

struct Resolution {
    AssertedValues asserted;
    ShiftSearchConfig search;
};

/// Thrown when a cover invariant needs a local Betti number the bounds do not pin down.
class UnresolvedLocalBetti : public std::runtime_error {
public:
    explicit UnresolvedLocalBetti(std::vector<LocalBetti> unresolved);
    const std::vector<LocalBetti>& unresolved() const { return unresolved_; }

private:
    std::vector<LocalBetti> unresolved_;
};

struct CoverReport {
    unsigned long m = 1;
    std::vector<std::size_t> betti;
    /// charpoly_exponents[q][k] = d^(m)_{k,q} for every divisor k of m.
    std::vector<std::map<unsigned long, std::size_t>> charpoly_exponents;
    bool exact = true; // false if an asserted value was used
};

struct Charpoly {
    unsigned long m = 1;
    std::size_t degree_q = 0;
    std::map<unsigned long, std::size_t> cyclotomic_exponents; // k -> exponent of Phi_k, nonzero only
    IntPoly expanded;
    /// Exponents e_j with Delta = prod (t^j - 1)^{e_j}, when such a form exists.
    std::optional<std::map<unsigned long, std::size_t>> power_form;
    bool exact = true;
};

struct PeriodicityClass {
    std::vector<unsigned long> divisor_pattern; // {k <= n : k | i}
    Integer smallest_residue;
    Integer residue_count;
    std::vector<IntPoly> polynomials; // index q = 0..ambient_dim
};

struct PeriodicityReport {
    Integer period;
    std::vector<PeriodicityClass> classes;
    std::size_t hyperplane_count = 0;
    bool exact = true;

    const PeriodicityClass& class_for(unsigned long m) const;
    /// p_{q, m mod N}(m).
    Integer evaluate(std::size_t q, unsigned long m) const;
};

struct ZetaReport {
    std::size_t degree_q = 0;
    std::vector<std::pair<unsigned long, std::size_t>> finite_terms; // (k, phi(k) b_q(L^k_1)), nonzero
    Integer tail_beta;
    bool exact = true;
};

/**
 * Computations on the family of cyclic covers X_m(A). Construction builds
 * the Orlik-Solomon tables, the closure lattice with density flags and the
 * Poincare polynomial once; every query is a const, pure computation.
 */
class CoverCalculator {
public:
    explicit CoverCalculator(Arrangement a);

    const Arrangement& arrangement() const { return arrangement_; }
    const OrlikSolomon& orlik_solomon() const { return os_; }
    const IntersectionLattice& closure() const { return closure_; }
    const IntPoly& poincare() const { return poincare_; }
    Integer beta() const { return abs(euler_); }
    Integer euler_characteristic() const { return euler_; }
    std::size_t top_degree() const { return arrangement_.ambient_dim(); }

    bool stv_nonresonant(const WeightSystem& w) const;
    bool fast_nonresonant(unsigned long m) const;

    LocalBetti local_betti(unsigned long k, const ShiftSearchConfig& search = {},
                           const std::map<std::size_t, std::size_t>& asserted = {}) const;

    CoverReport cover_betti(unsigned long m, const Resolution& resolution = {}) const;
    Charpoly monodromy_charpoly(unsigned long m, std::size_t q, const Resolution& resolution = {}) const;
    PeriodicityReport periodicity(const Resolution& resolution = {}) const;
    ZetaReport zeta_coefficients(std::size_t q, const Resolution& resolution = {}) const;

private:
    LocalBetti compute_local_betti(unsigned long k, const ShiftSearchConfig& search,
                                   const std::map<std::size_t, std::size_t>& asserted) const;
    LocalBetti central_split(unsigned long k, const ShiftSearchConfig& search,
                             const std::map<std::size_t, std::size_t>& asserted) const;
    std::vector<LocalBetti> resolved_local(const std::vector<unsigned long>& ks, const Resolution& resolution) const;

    Arrangement arrangement_;
    OrlikSolomon os_;
    IntersectionLattice closure_;
    IntPoly poincare_;
    Integer euler_;
    std::shared_ptr<const CoverCalculator> decone_; // set for central A with ambient_dim >= 2

    // local_betti results by (k, exhaustive_limit, extra_shifts, asserted).
    using MemoKey = std::tuple<unsigned long, std::size_t, std::vector<std::vector<long>>,
                               std::map<std::size_t, std::size_t>>;
    struct Memo {
        std::mutex mutex;
        std::map<MemoKey, LocalBetti> entries;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

bool stv_nonresonant(const Arrangement& a, const WeightSystem& w);
bool fast_nonresonant(const Arrangement& a, unsigned long m);
LocalBetti local_betti(const Arrangement& a, unsigned long k, const ShiftSearchConfig& search = {});
CoverReport cover_betti(const Arrangement& a, unsigned long m, const Resolution& resolution = {});
Charpoly monodromy_charpoly(const Arrangement& a, unsigned long m, std::size_t q, const Resolution& resolution = {});
PeriodicityReport periodicity(const Arrangement& a, const Resolution& resolution = {});
ZetaReport zeta_coefficients(const Arrangement& a, std::size_t q, const Resolution& resolution = {});

/// Divisors of m in increasing order.
std::vector<unsigned long> divisors(unsigned long m);

} // namespace arrcover
