#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace arrcover {

using Integer = mpz_class;

/**
 * Rational: an exact fraction, always stored in lowest terms with a
 * positive denominator. Zero is 0/1.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& num, const Integer& den);

    /// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Canonical text: "p" for integers, "p/q" otherwise.
    std::string to_string() const;

private:
    mpq_class value_;
};

/// Integer polynomial, coefficients low degree first; no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    static IntPoly monomial(const Integer& coeff, std::size_t degree);
    static IntPoly from_ints(std::initializer_list<long> coeffs);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    Integer evaluate(const Integer& t) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    IntPoly pow(unsigned exponent) const;

    /// Exact quotient by a monic divisor; throws std::domain_error when the
    /// remainder is nonzero or the divisor is not monic.
    IntPoly exact_divide(const IntPoly& divisor) const;

    /// e.g. "1 + 5t + 6t^2"
    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Euler's totient. Throws std::invalid_argument for k = 0.
unsigned long euler_phi(unsigned long k);

/// Phi_k(t), by exact division of t^k - 1 by the Phi_d(t), d | k, d < k.
IntPoly cyclotomic_polynomial(unsigned long k);

/**
 * CycNum: an element of Q(zeta_d) written in the power basis
 * 1, zeta, ..., zeta^(phi(d)-1). The coefficient vector always has length
 * phi(d), so equality is coefficientwise.
 */
class CycNum {
public:
    CycNum() : order_(1), coeffs_(1) {}
    explicit CycNum(const Rational& value, unsigned order = 1);

    /// Reduces sum raw[i] zeta_d^i modulo Phi_d.
    static CycNum reduce(std::span<const Rational> raw, unsigned order);
    /// Wraps an already-canonical coefficient vector; throws on wrong length.
    static CycNum from_coeffs(std::vector<Rational> coeffs, unsigned order);
    static CycNum zeta(unsigned order, unsigned power = 1);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;

    CycNum operator-() const;
    CycNum inverse() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    friend bool operator==(const CycNum& a, const CycNum& b) = default;
    friend auto operator<=>(const CycNum& a, const CycNum& b)
    {
        if (auto c = a.order_ <=> b.order_; c != 0)
            return c;
        return a.coeffs_ <=> b.coeffs_;
    }

    /// e.g. "1 - 2*z + z^2/3" with z = zeta_d.
    std::string to_string() const;

private:
    void check_order(const CycNum& other) const;

    unsigned order_;
    std::vector<Rational> coeffs_;
};

using CycMatrix = std::vector<std::vector<CycNum>>;

/// Rank over Q(zeta_d) by Gaussian elimination. Throws on ragged input or mixed orders.
std::size_t field_matrix_rank(const CycMatrix& m);

struct EchelonForm {
    CycMatrix rows;                  // nonzero rows of the reduced echelon form
    std::vector<std::size_t> pivots; // pivot column of each row
};

/// Reduced row-echelon form; canonical for the row space.
EchelonForm reduced_row_echelon(const CycMatrix& m);

} // namespace arrcover
