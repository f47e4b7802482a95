#pragma once

/**
 * @file exact.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision rationals and real
 *        quadratic extensions Q(sqrt(d)) with exact sign determination.
 *
 * No floating point anywhere in this module: every guard test downstream
 * branches on exact zero/sign tests, where rounding would change the answer.
 * All values are immutable after construction and all operations are pure.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "loopnt/errors.hpp"

namespace loopnt {

using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Arbitrary-precision fraction in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}            // NOLINT: deliberately implicit
    Rational(long long n) : num_(n), den_(1) {}      // NOLINT
    Rational(Int n) : num_(std::move(n)), den_(1) {} // NOLINT
    Rational(Int n, Int d);                          // throws DivisionByZero if d == 0

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const; // throws DivisionByZero on zero

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    bool operator==(const Rational& y) const { return num_ == y.num_ && den_ == y.den_; }
    std::strong_ordering operator<=>(const Rational& y) const;

    /// "p/q", or "p" when q = 1.
    std::string str() const;

private:
    Int num_;
    Int den_; // > 0, coprime with num_
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses the rational grammar "int [/ posint]" with optional whitespace.
Rational parse_rational(std::string_view text);

// ---------------------------------------------------------------------------
// sqrt_normalize
// ---------------------------------------------------------------------------

struct SqrtParts {
    Rational coef; // >= 0
    Int radicand;  // squarefree, >= 1
};

/// Trial-division bound for squarefree decomposition. Defaults to 10^6;
/// the environment variable LOOPNT_FACTOR_BOUND overrides it (read once).
const Int& default_factor_bound();

/// Writes sqrt(x) = coef * sqrt(radicand) with coef rational and radicand a
/// squarefree integer. x = 0 maps to (0, 1).
///
/// Throws NegativeInput for x < 0, and RadicandTooLarge when the squarefree
/// decomposition would require factoring an integer all of whose prime
/// factors exceed the trial-division bound.
SqrtParts sqrt_normalize(const Rational& x);
SqrtParts sqrt_normalize(const Rational& x, const Int& factor_bound);

// ---------------------------------------------------------------------------
// QuadNum
// ---------------------------------------------------------------------------

/// Element a + b*sqrt(d) of the real quadratic extension Q(sqrt(d)).
///
/// Canonical form: d squarefree and >= 1; rational values always carry
/// (b, d) = (0, 1). Two values combine in arithmetic only when their
/// radicands are equal or one operand is rational.
class QuadNum {
public:
    QuadNum() : rat_(0), quad_(0), rad_(1) {}
    QuadNum(int n) : rat_(n), quad_(0), rad_(1) {}                   // NOLINT
    QuadNum(Rational a) : rat_(std::move(a)), quad_(0), rad_(1) {}   // NOLINT
    QuadNum(Rational a, Rational b, Int d); // normalizes, throws NegativeInput on d < 0

    const Rational& rat_part() const { return rat_; }
    const Rational& quad_part() const { return quad_; }
    const Int& radicand() const { return rad_; }

    bool is_zero() const { return rat_.is_zero() && quad_.is_zero(); }
    bool is_rational() const { return quad_.is_zero(); }

    /// Exact sign of the real value, computed without floating point: when
    /// the two parts agree in sign the answer is immediate; otherwise a^2 is
    /// compared against b^2*d and combined with the parts' signs.
    int sign() const;

    QuadNum operator-() const;
    QuadNum abs() const { return sign() < 0 ? -*this : *this; }

    friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator/(const QuadNum& x, const QuadNum& y);

    QuadNum& operator+=(const QuadNum& y) { return *this = *this + y; }
    QuadNum& operator-=(const QuadNum& y) { return *this = *this - y; }
    QuadNum& operator*=(const QuadNum& y) { return *this = *this * y; }
    QuadNum& operator/=(const QuadNum& y) { return *this = *this / y; }

    bool operator==(const QuadNum& y) const {
        return rat_ == y.rat_ && quad_ == y.quad_ && rad_ == y.rad_;
    }

    /// "p/q + r/s*sqrt(d)" with zero terms omitted and unit coefficients
    /// contracted, e.g. "-1+sqrt(17)", "1/4*sqrt(2)", "3".
    std::string str() const;

private:
    Rational rat_;  // a
    Rational quad_; // b
    Int rad_;       // d
};

std::ostream& operator<<(std::ostream& os, const QuadNum& q);

/// Parses the scalar grammar: a rational, a sqrt term "[r*]sqrt(d)", or a
/// sum/difference of one of each, with optional whitespace.
QuadNum parse_scalar(std::string_view text);

/// Shared radicand for combining x and y; IncompatibleRadicands when both
/// are irrational over different radicands.
Int common_radicand(const QuadNum& x, const QuadNum& y);

} // namespace loopnt
