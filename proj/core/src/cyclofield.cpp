#include "arrcover/cyclofield.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace arrcover {

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("malformed rational \"" + std::string(text) + "\""); };
    auto parse_int = [&](std::string_view s, bool allow_sign) {
        if (s.empty())
            throw bad();
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            throw bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw bad();
        std::string digits(s);
        if (digits[0] == '+')
            digits.erase(0, 1);
        return Integer(digits, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, true));
    const Integer num = parse_int(text.substr(0, slash), true);
    const Integer den = parse_int(text.substr(slash + 1), true);
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational \"" + std::string(text) + "\"");
    return Rational(num, den);
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

// ----------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Integer& coeff, std::size_t degree)
{
    std::vector<Integer> c(degree + 1);
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs)
{
    std::vector<Integer> c;
    for (long v : coeffs)
        c.emplace_back(v);
    return IntPoly(std::move(c));
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer IntPoly::evaluate(const Integer& t) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(unsigned exponent) const
{
    IntPoly result = IntPoly::from_ints({1});
    IntPoly base = *this;
    while (exponent) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

IntPoly IntPoly::exact_divide(const IntPoly& divisor) const
{
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        throw std::domain_error("IntPoly::exact_divide: divisor must be monic");
    std::vector<Integer> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() < divisor.coeffs_.size()) {
        if (!is_zero())
            throw std::domain_error("IntPoly::exact_divide: nonzero remainder");
        return IntPoly();
    }
    std::vector<Integer> quot(rem.size() - dd);
    for (std::size_t i = rem.size(); i-- > dd;) {
        const Integer q = rem[i];
        quot[i - dd] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] -= q * divisor.coeffs_[j];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw std::domain_error("IntPoly::exact_divide: nonzero remainder");
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1)
            os << mag.get_str();
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

// ------------------------------------------------------- totient, Phi_k

unsigned long euler_phi(unsigned long k)
{
    if (k == 0)
        throw std::invalid_argument("euler_phi: argument must be positive");
    unsigned long result = k;
    unsigned long n = k;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace {

const IntPoly& cached_cyclotomic(unsigned long k)
{
    // Per-thread memo; values are immutable once inserted.
    thread_local std::map<unsigned long, IntPoly> cache;
    if (auto it = cache.find(k); it != cache.end())
        return it->second;
    IntPoly poly = IntPoly::monomial(1, k) - IntPoly::from_ints({1});
    for (unsigned long d = 1; d < k; ++d)
        if (k % d == 0)
            poly = poly.exact_divide(cached_cyclotomic(d));
    return cache.emplace(k, std::move(poly)).first->second;
}

} // namespace

IntPoly cyclotomic_polynomial(unsigned long k)
{
    if (k == 0)
        throw std::invalid_argument("cyclotomic_polynomial: argument must be positive");
    return cached_cyclotomic(k);
}

// ------------------------------------------------------------------ CycNum

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

QPoly to_qpoly(const IntPoly& p)
{
    QPoly q;
    q.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        q.emplace_back(c);
    return q;
}

// Remainder of p by a monic modulus, written into a vector of exactly deg(mod) entries.
QPoly remainder_monic(QPoly p, const IntPoly& mod)
{
    const std::size_t dm = static_cast<std::size_t>(mod.degree());
    const auto& mc = mod.coeffs();
    for (std::size_t i = p.size(); i-- > dm;) {
        if (p[i].is_zero())
            continue;
        const Rational q = p[i];
        for (std::size_t j = 0; j <= dm; ++j)
            if (mc[j] != 0)
                p[i - dm + j] -= q * Rational(mc[j]);
    }
    p.resize(dm);
    return p;
}

// Division with remainder in Q[x]; b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, QPoly b)
{
    trim(a);
    trim(b);
    if (a.size() < b.size())
        return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1);
    const Rational lead = b.back();
    for (std::size_t top = a.size(); top >= b.size(); --top) {
        const std::size_t shift = top - b.size();
        const Rational c = a[top - 1] / lead;
        q[shift] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                c[i + j] += a[i] * b[j];
    }
    return c;
}

QPoly sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

CycNum::CycNum(const Rational& value, unsigned order)
    : order_(order)
{
    if (order == 0)
        throw std::invalid_argument("CycNum: order must be positive");
    coeffs_.assign(euler_phi(order), Rational());
    coeffs_[0] = value;
}

CycNum CycNum::reduce(std::span<const Rational> raw, unsigned order)
{
    if (order == 0)
        throw std::invalid_argument("CycNum: order must be positive");
    CycNum out;
    out.order_ = order;
    out.coeffs_ = remainder_monic(QPoly(raw.begin(), raw.end()), cached_cyclotomic(order));
    return out;
}

CycNum CycNum::from_coeffs(std::vector<Rational> coeffs, unsigned order)
{
    if (order == 0)
        throw std::invalid_argument("CycNum: order must be positive");
    if (coeffs.size() != euler_phi(order))
        throw std::invalid_argument("CycNum: expected " + std::to_string(euler_phi(order)) +
                                    " coefficients for order " + std::to_string(order) + ", got " +
                                    std::to_string(coeffs.size()));
    CycNum out;
    out.order_ = order;
    out.coeffs_ = std::move(coeffs);
    return out;
}

CycNum CycNum::zeta(unsigned order, unsigned power)
{
    if (order == 0)
        throw std::invalid_argument("CycNum: order must be positive");
    std::vector<Rational> raw(power % order + 1);
    raw.back() = 1;
    return reduce(raw, order);
}

bool CycNum::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool CycNum::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

void CycNum::check_order(const CycNum& other) const
{
    if (order_ != other.order_)
        throw std::invalid_argument("CycNum: mismatched cyclotomic orders " + std::to_string(order_) +
                                    " and " + std::to_string(other.order_));
}

CycNum CycNum::operator-() const
{
    CycNum out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& rhs)
{
    check_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs)
{
    check_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs)
{
    check_order(rhs);
    if (coeffs_.size() == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    coeffs_ = remainder_monic(mul(coeffs_, rhs.coeffs_), cached_cyclotomic(order_));
    return *this;
}

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw std::domain_error("CycNum: division by zero");
    if (coeffs_.size() == 1)
        return CycNum(Rational(1) / coeffs_[0], order_);
    // Extended Euclid: track s with s*b == r (mod Phi_d).
    QPoly r0 = to_qpoly(cached_cyclotomic(order_));
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since Phi_d is irreducible.
    const Rational c = Rational(1) / r1[0];
    for (auto& x : s1)
        x *= c;
    CycNum out;
    out.order_ = order_;
    out.coeffs_ = remainder_monic(std::move(s1), cached_cyclotomic(order_));
    return out;
}

CycNum& CycNum::operator/=(const CycNum& rhs)
{
    check_order(rhs);
    return *this *= rhs.inverse();
}

std::string CycNum::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag.to_string();
            continue;
        }
        if (mag != Rational(1))
            os << mag.to_string() << '*';
        os << 'z';
        if (i >= 2)
            os << '^' << i;
    }
    return first ? "0" : os.str();
}

// --------------------------------------------------------- linear algebra

namespace {

void check_rectangular(const CycMatrix& m)
{
    if (m.empty())
        return;
    const std::size_t cols = m.front().size();
    const unsigned order = cols ? m.front().front().order() : 1;
    for (const auto& row : m) {
        if (row.size() != cols)
            throw std::invalid_argument("matrix is ragged");
        for (const auto& x : row)
            if (x.order() != order)
                throw std::invalid_argument("matrix mixes cyclotomic orders");
    }
}

} // namespace

EchelonForm reduced_row_echelon(const CycMatrix& input)
{
    check_rectangular(input);
    CycMatrix m = input;
    EchelonForm out;
    if (m.empty())
        return out;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        const CycNum inv = m[r][c].inverse();
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            const CycNum f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero())
                    m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::size_t field_matrix_rank(const CycMatrix& m)
{
    check_rectangular(m);
    if (m.empty() || m.front().empty())
        return 0;
    CycMatrix a = m;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[rank], a[p]);
        const CycNum inv = a[rank][c].inverse();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c].is_zero())
                continue;
            const CycNum f = a[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace arrcover
