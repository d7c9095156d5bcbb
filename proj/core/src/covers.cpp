#include "arrcover/covers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

namespace arrcover {

WeightSystem WeightSystem::uniform(std::size_t n, unsigned long m)
{
    if (m == 0)
        throw std::invalid_argument("weight modulus must be positive");
    return WeightSystem{std::vector<long>(n, 1), m};
}

Rational WeightSystem::infinity_weight() const
{
    Integer total = 0;
    for (long k : k_vector)
        total += k;
    return Rational(-total, Integer(modulus));
}

bool LocalBetti::resolved() const
{
    return std::all_of(intervals.begin(), intervals.end(), [](const BettiInterval& b) { return b.resolved(); });
}

bool LocalBetti::uses_assertion() const
{
    // An Euler-closed value derived from an asserted one is covered by this too.
    return std::any_of(intervals.begin(), intervals.end(), [](const BettiInterval& b) { return b.asserted; });
}

std::vector<std::size_t> LocalBetti::values() const
{
    std::vector<std::size_t> v;
    for (const auto& b : intervals) {
        if (!b.resolved())
            throw std::logic_error("local Betti number at k=" + std::to_string(k) + ", q=" +
                                   std::to_string(b.degree) + " is unresolved");
        v.push_back(b.lower);
    }
    return v;
}

namespace {

std::string describe(const std::vector<LocalBetti>& unresolved)
{
    std::ostringstream os;
    os << "unresolved local Betti";
    for (const auto& lb : unresolved) {
        os << " at k=" << lb.k << ':';
        for (const auto& b : lb.intervals)
            if (!b.resolved())
                os << " q=" << b.degree << " in [" << b.lower << ".." << b.upper << ']';
    }
    return os.str();
}

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

} // namespace

UnresolvedLocalBetti::UnresolvedLocalBetti(std::vector<LocalBetti> unresolved)
    : std::runtime_error(describe(unresolved)), unresolved_(std::move(unresolved))
{
}

std::vector<unsigned long> divisors(unsigned long m)
{
    std::vector<unsigned long> d;
    for (unsigned long k = 1; k * k <= m; ++k)
        if (m % k == 0) {
            d.push_back(k);
            if (k * k != m)
                d.push_back(m / k);
        }
    std::sort(d.begin(), d.end());
    return d;
}

// ------------------------------------------------------------ calculator

CoverCalculator::CoverCalculator(Arrangement a)
    : arrangement_(std::move(a)),
      os_(arrangement_),
      closure_(dense_edges(arrangement_)),
      poincare_(poincare_polynomial(os_.lattice())),
      euler_(poincare_.evaluate(-1))
{
    if (arrangement_.is_central() && arrangement_.ambient_dim() >= 2)
        decone_ = std::make_shared<const CoverCalculator>(decone(arrangement_, 0));
}

bool CoverCalculator::stv_nonresonant(const WeightSystem& w) const
{
    const std::size_t n = arrangement_.size();
    if (w.k_vector.size() != n)
        throw std::invalid_argument("weight vector has " + std::to_string(w.k_vector.size()) +
                                    " entries for " + std::to_string(n) + " hyperplanes");
    if (w.modulus == 0)
        throw std::invalid_argument("weight modulus must be positive");
    std::vector<Rational> lambda;
    for (std::size_t h = 0; h < n; ++h)
        lambda.push_back(w.weight(h));
    lambda.push_back(w.infinity_weight());
    for (const auto& level : closure_.levels())
        for (const auto& y : level) {
            if (!y.dense.value_or(false))
                continue;
            Rational sum;
            for (std::size_t h : y.support)
                sum += lambda[h];
            if (sum.is_integer() && sum.sign() >= 0)
                return false;
        }
    return true;
}

bool CoverCalculator::fast_nonresonant(unsigned long m) const
{
    if (m == 0)
        throw std::invalid_argument("fast_nonresonant: m must be positive");
    if (m > arrangement_.size())
        return true;
    for (const auto& level : closure_.levels())
        for (const auto& y : level)
            if (y.dense.value_or(false) && gcd_ul(y.multiplicity(), m) != 1)
                return false;
    return true;
}

LocalBetti CoverCalculator::local_betti(unsigned long k, const ShiftSearchConfig& search,
                                        const std::map<std::size_t, std::size_t>& asserted) const
{
    MemoKey key{k, search.exhaustive_limit, search.extra_shifts, asserted};
    {
        std::lock_guard lock(memo_->mutex);
        if (auto it = memo_->entries.find(key); it != memo_->entries.end())
            return it->second;
    }
    LocalBetti result = compute_local_betti(k, search, asserted);
    std::lock_guard lock(memo_->mutex);
    return memo_->entries.emplace(std::move(key), std::move(result)).first->second;
}

LocalBetti CoverCalculator::compute_local_betti(unsigned long k, const ShiftSearchConfig& search,
                                                const std::map<std::size_t, std::size_t>& asserted) const
{
    if (k == 0)
        throw std::invalid_argument("local_betti: k must be positive");
    const std::size_t n = arrangement_.size();
    const std::size_t top = top_degree();
    const auto& basis = os_.nbc_basis();

    LocalBetti out;
    out.k = k;
    out.intervals.resize(top + 1);
    for (std::size_t q = 0; q <= top; ++q)
        out.intervals[q].degree = q;

    auto set_exact = [&](std::size_t q, std::size_t v) {
        out.intervals[q].lower = v;
        out.intervals[q].upper = v;
    };

    if (k == 1) {
        out.method = LocalMethod::trivial;
        for (std::size_t q = 0; q <= top; ++q)
            set_exact(q, basis[q].size());
    } else if (decone_) {
        out = central_split(k, search, asserted);
    } else if (fast_nonresonant(k) || stv_nonresonant(WeightSystem::uniform(n, k))) {
        out.method = LocalMethod::nonresonant;
        for (std::size_t q = 0; q < top; ++q)
            set_exact(q, 0);
        set_exact(top, beta().get_ui());
    } else {
        out.method = LocalMethod::bounds;
        const std::vector<long> ones(n, 1);
        const CohomologyProfile upper = cohomology_modN(os_.aomoto_complex(ones), k);

        std::vector<std::size_t> lower(top + 1, 0);
        std::vector<std::optional<std::vector<long>>> witness(top + 1);
        auto try_shift = [&](const std::vector<long>& shift) {
            if (shift.size() != n)
                throw std::invalid_argument("shift vector has " + std::to_string(shift.size()) +
                                            " entries for " + std::to_string(n) + " hyperplanes");
            std::vector<long> weights(n);
            for (std::size_t h = 0; h < n; ++h)
                weights[h] = 1 + static_cast<long>(k) * shift[h];
            const CohomologyProfile dims = cohomology_Q(os_.aomoto_complex(weights));
            for (std::size_t q = 0; q <= top; ++q)
                if (dims.dims[q] > lower[q]) {
                    lower[q] = dims.dims[q];
                    witness[q] = shift;
                }
        };
        if (n <= search.exhaustive_limit && n < 64) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<long> shift(n, 0);
                for (std::size_t h = 0; h < n; ++h)
                    if (mask >> h & 1u)
                        shift[h] = -1;
                try_shift(shift);
            }
        } else {
            try_shift(std::vector<long>(n, 0));
        }
        for (const auto& s : search.extra_shifts)
            try_shift(s);

        for (std::size_t q = 0; q <= top; ++q) {
            auto& b = out.intervals[q];
            b.lower = lower[q];
            b.upper = upper.dims[q];
            b.witness_shift = witness[q];
            if (b.lower > b.upper)
                throw std::logic_error("local_betti: lower bound exceeds upper bound at q=" + std::to_string(q));
        }
        // A nontrivial rank-one local system has no invariants.
        set_exact(0, 0);
        out.intervals[0].witness_shift.reset();
    }

    for (const auto& [q, v] : asserted) {
        if (q > top)
            throw std::invalid_argument("asserted degree " + std::to_string(q) + " exceeds " + std::to_string(top));
        auto& b = out.intervals[q];
        if (v < b.lower || v > b.upper)
            throw std::invalid_argument("asserted value b_" + std::to_string(q) + " = " + std::to_string(v) +
                                        " at k=" + std::to_string(k) + " lies outside [" +
                                        std::to_string(b.lower) + ".." + std::to_string(b.upper) + "]");
        if (!b.resolved()) {
            set_exact(q, v);
            b.asserted = true;
        }
    }

    // Close a single open degree with sum (-1)^q b_q = chi(M(A)).
    std::vector<std::size_t> open;
    for (std::size_t q = 0; q <= top; ++q)
        if (!out.intervals[q].resolved())
            open.push_back(q);
    if (open.size() == 1) {
        const std::size_t q0 = open.front();
        Integer rest = euler_;
        for (std::size_t q = 0; q <= top; ++q)
            if (q != q0)
                rest -= (q % 2 ? -1 : 1) * Integer(out.intervals[q].lower);
        const Integer value = q0 % 2 ? Integer(-rest) : rest;
        auto& b = out.intervals[q0];
        if (value >= b.lower && value <= b.upper) {
            set_exact(q0, value.get_ui());
            b.euler_closed = true;
        }
    }
    return out;
}

// Intervals only; local_betti applies the caller's assertions and the Euler
// constraint afterwards, as for the other methods.
LocalBetti CoverCalculator::central_split(unsigned long k, const ShiftSearchConfig& search,
                                          const std::map<std::size_t, std::size_t>& asserted) const
{
    const std::size_t n = arrangement_.size();
    const std::size_t top = top_degree();
    LocalBetti out;
    out.k = k;
    out.method = LocalMethod::central_split;
    out.intervals.resize(top + 1);
    for (std::size_t q = 0; q <= top; ++q)
        out.intervals[q].degree = q;
    if (n % k != 0)
        return out;

    // Decone hyperplanes are those of A without index 0, in order.
    ShiftSearchConfig inner{search.exhaustive_limit, {}};
    for (const auto& s : search.extra_shifts) {
        if (s.size() != n)
            throw std::invalid_argument("shift vector has " + std::to_string(s.size()) + " entries for " +
                                        std::to_string(n) + " hyperplanes");
        inner.extra_shifts.emplace_back(s.begin() + 1, s.end());
    }

    // b_q = b'_q + b'_{q-1}: an asserted b_q pins b'_q once b'_{q-1} is known.
    std::map<std::size_t, std::size_t> inner_asserted;
    LocalBetti d;
    for (bool changed = true; changed;) {
        changed = false;
        d = decone_->local_betti(k, inner, inner_asserted);
        for (const auto& [q, v] : asserted) {
            if (q >= top || d.intervals[q].resolved() || inner_asserted.count(q))
                continue;
            const std::size_t below = q == 0 ? 0 : d.intervals[q - 1].lower;
            if (q > 0 && !d.intervals[q - 1].resolved())
                continue;
            if (v < below + d.intervals[q].lower || v > below + d.intervals[q].upper)
                continue; // reported as out of range by local_betti
            inner_asserted[q] = v - below;
            changed = true;
            break;
        }
    }

    for (std::size_t q = 0; q <= top; ++q) {
        auto& b = out.intervals[q];
        for (std::size_t p : {q, q - 1}) {
            if (p >= top) // also skips p = -1
                continue;
            const auto& inner_b = d.intervals[p];
            b.lower += inner_b.lower;
            b.upper += inner_b.upper;
            b.asserted = b.asserted || inner_b.asserted;
            b.euler_closed = b.euler_closed || inner_b.euler_closed;
        }
    }
    return out;
}

std::vector<LocalBetti> CoverCalculator::resolved_local(const std::vector<unsigned long>& ks,
                                                        const Resolution& resolution) const
{
    std::vector<LocalBetti> result;
    std::vector<LocalBetti> unresolved;
    static const std::map<std::size_t, std::size_t> none;
    for (unsigned long k : ks) {
        auto it = resolution.asserted.find(k);
        LocalBetti lb = local_betti(k, resolution.search, it == resolution.asserted.end() ? none : it->second);
        if (!lb.resolved())
            unresolved.push_back(lb);
        result.push_back(std::move(lb));
    }
    if (!unresolved.empty())
        throw UnresolvedLocalBetti(std::move(unresolved));
    return result;
}

CoverReport CoverCalculator::cover_betti(unsigned long m, const Resolution& resolution) const
{
    if (m == 0)
        throw std::invalid_argument("cover_betti: m must be positive");
    const std::size_t top = top_degree();
    CoverReport out;
    out.m = m;
    out.betti.assign(top + 1, 0);
    out.charpoly_exponents.assign(top + 1, {});
    for (const auto& lb : resolved_local(divisors(m), resolution)) {
        const auto values = lb.values();
        const std::size_t phi = euler_phi(lb.k);
        for (std::size_t q = 0; q <= top; ++q) {
            out.betti[q] += phi * values[q];
            out.charpoly_exponents[q][lb.k] = values[q];
        }
        out.exact = out.exact && !lb.uses_assertion();
    }
    return out;
}

Charpoly CoverCalculator::monodromy_charpoly(unsigned long m, std::size_t q, const Resolution& resolution) const
{
    if (q > top_degree())
        throw std::invalid_argument("charpoly: degree " + std::to_string(q) + " exceeds " +
                                    std::to_string(top_degree()));
    const CoverReport report = cover_betti(m, resolution);
    Charpoly out;
    out.m = m;
    out.degree_q = q;
    out.exact = report.exact;
    out.expanded = IntPoly::from_ints({1});
    for (const auto& [k, e] : report.charpoly_exponents[q]) {
        if (e == 0)
            continue;
        out.cyclotomic_exponents[k] = e;
        out.expanded = out.expanded * cyclotomic_polynomial(k).pow(static_cast<unsigned>(e));
    }

    // t^j - 1 = prod_{d | j} Phi_d, so d_k = sum over multiples j of k of e_j.
    const auto ds = divisors(m);
    std::map<unsigned long, long> e;
    bool ok = true;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
        const unsigned long j = *it;
        long v = static_cast<long>(report.charpoly_exponents[q].at(j));
        for (const auto& [jj, ee] : e)
            if (jj % j == 0)
                v -= ee;
        if (v < 0) {
            ok = false;
            break;
        }
        e[j] = v;
    }
    if (ok) {
        std::map<unsigned long, std::size_t> form;
        for (const auto& [j, v] : e)
            if (v > 0)
                form[j] = static_cast<std::size_t>(v);
        out.power_form = std::move(form);
    }
    return out;
}

PeriodicityReport CoverCalculator::periodicity(const Resolution& resolution) const
{
    const std::size_t n = arrangement_.size();
    const std::size_t top = top_degree();
    if (n == 0 || top == 0)
        throw std::invalid_argument("periodicity: arrangement must be nonempty");

    std::vector<unsigned long> ks(n);
    std::iota(ks.begin(), ks.end(), 1ul);
    const auto locals = resolved_local(ks, resolution);

    PeriodicityReport out;
    out.hyperplane_count = n;
    out.exact = std::none_of(locals.begin(), locals.end(), [](const LocalBetti& lb) { return lb.uses_assertion(); });

    // N = product of the maximal prime powers p^e <= n.
    std::vector<std::pair<unsigned long, unsigned>> primes;
    out.period = 1;
    for (unsigned long p = 2; p <= n; ++p) {
        if (!is_prime(p))
            continue;
        unsigned e = 0;
        for (unsigned long pe = p; pe <= n; pe *= p)
            ++e;
        primes.emplace_back(p, e);
        for (unsigned i = 0; i < e; ++i)
            out.period *= p;
    }

    // A residue class is fixed by the truncated valuations min(v_p(i), e_p).
    std::vector<unsigned> exps(primes.size(), 0);
    for (;;) {
        PeriodicityClass cls;
        cls.smallest_residue = 1;
        cls.residue_count = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const auto [p, e] = primes[i];
            Integer pa = 1;
            for (unsigned j = 0; j < exps[i]; ++j)
                pa *= p;
            cls.smallest_residue *= pa;
            if (exps[i] < e) {
                Integer count = 1; // p^(e-a) - p^(e-a-1)
                for (unsigned j = 0; j + 1 < e - exps[i]; ++j)
                    count *= p;
                cls.residue_count *= count * (p - 1);
            }
        }
        for (unsigned long k = 1; k <= n; ++k)
            if (mpz_divisible_ui_p(cls.smallest_residue.get_mpz_t(), k))
                cls.divisor_pattern.push_back(k);

        cls.polynomials.assign(top + 1, IntPoly());
        cls.polynomials[0] = IntPoly::from_ints({1});
        Integer alternating = 1; // 1 + sum_{q=1}^{top-1} (-1)^q p_q
        for (std::size_t q = 1; q < top; ++q) {
            Integer value = 0;
            for (unsigned long k : cls.divisor_pattern)
                value += Integer(euler_phi(k)) * Integer(locals[k - 1].values()[q]);
            cls.polynomials[q] = IntPoly({value});
            alternating += (q % 2 ? -value : value);
        }
        const Integer constant = top % 2 ? alternating : Integer(-alternating);
        cls.polynomials[top] = IntPoly({constant, beta()});
        out.classes.push_back(std::move(cls));

        std::size_t i = 0;
        while (i < primes.size() && exps[i] == primes[i].second)
            exps[i++] = 0;
        if (i == primes.size())
            break;
        ++exps[i];
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const PeriodicityClass& a, const PeriodicityClass& b) { return a.smallest_residue < b.smallest_residue; });
    return out;
}

const PeriodicityClass& PeriodicityReport::class_for(unsigned long m) const
{
    if (m == 0)
        throw std::invalid_argument("class_for: m must be positive");
    std::vector<unsigned long> pattern;
    for (unsigned long k = 1; k <= hyperplane_count; ++k)
        if (m % k == 0)
            pattern.push_back(k);
    for (const auto& c : classes)
        if (c.divisor_pattern == pattern)
            return c;
    throw std::logic_error("class_for: no residue class for m=" + std::to_string(m));
}

Integer PeriodicityReport::evaluate(std::size_t q, unsigned long m) const
{
    return class_for(m).polynomials.at(q).evaluate(Integer(m));
}

ZetaReport CoverCalculator::zeta_coefficients(std::size_t q, const Resolution& resolution) const
{
    const std::size_t top = top_degree();
    if (q > top)
        throw std::invalid_argument("zeta: degree " + std::to_string(q) + " exceeds " + std::to_string(top));
    std::vector<unsigned long> ks(arrangement_.size());
    std::iota(ks.begin(), ks.end(), 1ul);
    ZetaReport out;
    out.degree_q = q;
    out.tail_beta = q == top ? beta() : Integer(0);
    for (const auto& lb : resolved_local(ks, resolution)) {
        const std::size_t c = euler_phi(lb.k) * lb.values()[q];
        if (c != 0)
            out.finite_terms.emplace_back(lb.k, c);
        out.exact = out.exact && !lb.uses_assertion();
    }
    return out;
}

// --------------------------------------------------------- free functions

bool stv_nonresonant(const Arrangement& a, const WeightSystem& w) { return CoverCalculator(a).stv_nonresonant(w); }

bool fast_nonresonant(const Arrangement& a, unsigned long m) { return CoverCalculator(a).fast_nonresonant(m); }

LocalBetti local_betti(const Arrangement& a, unsigned long k, const ShiftSearchConfig& search)
{
    return CoverCalculator(a).local_betti(k, search);
}

CoverReport cover_betti(const Arrangement& a, unsigned long m, const Resolution& resolution)
{
    return CoverCalculator(a).cover_betti(m, resolution);
}

Charpoly monodromy_charpoly(const Arrangement& a, unsigned long m, std::size_t q, const Resolution& resolution)
{
    return CoverCalculator(a).monodromy_charpoly(m, q, resolution);
}

PeriodicityReport periodicity(const Arrangement& a, const Resolution& resolution)
{
    return CoverCalculator(a).periodicity(resolution);
}

ZetaReport zeta_coefficients(const Arrangement& a, std::size_t q, const Resolution& resolution)
{
    return CoverCalculator(a).zeta_coefficients(q, resolution);
}

} // namespace arrcover
