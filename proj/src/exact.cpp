#include "loopnt/exact.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <utility>

namespace loopnt {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

void Rational::normalize() {
    if (den_ == 0)
        throw DivisionByZero();
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = mp::gcd(mp::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_ == 0)
        throw DivisionByZero();
    return Rational(den_, num_);
}

Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0)
        throw DivisionByZero();
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& y) const {
    // a/b <=> c/d iff a*d <=> c*b, denominators positive
    Int lhs = num_ * y.den_;
    Int rhs = y.num_ * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

// ---------------------------------------------------------------------------
// sqrt_normalize
// ---------------------------------------------------------------------------

const Int& default_factor_bound() {
    static const Int bound = [] {
        if (const char* s = std::getenv("LOOPNT_FACTOR_BOUND")) {
            try {
                Int b(s);
                if (b >= 2)
                    return b;
            } catch (const std::exception&) {
                // fall through to the default
            }
        }
        return Int(1000000);
    }();
    return bound;
}

namespace {

// 2, 3, then 6k +/- 1. Composite candidates are harmless: their prime
// factors were divided out earlier.
Int next_candidate(const Int& p) {
    if (p == 2)
        return 3;
    if (p == 3)
        return 5;
    return p + (p % 6 == 1 ? 4 : 2);
}

// m = outside^2 * inside with inside squarefree. Throws RadicandTooLarge
// when the remaining cofactor cannot be certified squarefree without
// factoring past `bound`.
void squarefree_split(Int m, const Int& bound, Int& outside, Int& inside) {
    outside = 1;
    inside = 1;
    Int p = 2;
    while (m > 1) {
        if (p * p > m) {
            inside *= m; // remaining cofactor is prime
            return;
        }
        if (p > bound) {
            Int root = mp::sqrt(m);
            if (root * root == m) {
                outside *= root; // exact square, no factoring needed
                return;
            }
            if (m <= bound * bound) {
                inside *= m; // all factors exceed bound, so m is prime
                return;
            }
            throw RadicandTooLarge("squarefree decomposition of " + m.str() +
                                   " needs a factor beyond the trial-division bound " +
                                   bound.str());
        }
        if (m % p == 0) {
            unsigned exp = 0;
            do {
                m /= p;
                ++exp;
            } while (m % p == 0);
            if (exp & 1u)
                inside *= p;
            for (unsigned i = 0; i < exp / 2; ++i)
                outside *= p;
        }
        p = next_candidate(p);
    }
}

} // namespace

SqrtParts sqrt_normalize(const Rational& x) {
    return sqrt_normalize(x, default_factor_bound());
}

SqrtParts sqrt_normalize(const Rational& x, const Int& factor_bound) {
    if (x.sign() < 0)
        throw NegativeInput("sqrt of negative value " + x.str());
    if (x.is_zero())
        return {Rational(0), Int(1)};
    // sqrt(p/q) = sqrt(p*q) / q
    Int outside, inside;
    squarefree_split(x.num() * x.den(), factor_bound, outside, inside);
    return {Rational(outside, x.den()), inside};
}

// ---------------------------------------------------------------------------
// QuadNum
// ---------------------------------------------------------------------------

QuadNum::QuadNum(Rational a, Rational b, Int d)
    : rat_(std::move(a)), quad_(std::move(b)), rad_(std::move(d)) {
    if (rad_ < 0)
        throw NegativeInput("negative radicand " + rad_.str());
    if (quad_.is_zero() || rad_ == 0) {
        quad_ = Rational(0);
        rad_ = 1;
        return;
    }
    if (rad_ != 1) {
        SqrtParts sp = sqrt_normalize(Rational(rad_));
        if (sp.radicand != rad_) {
            quad_ *= sp.coef;
            rad_ = sp.radicand;
        }
    }
    if (rad_ == 1) { // value is rational: fold
        rat_ += quad_;
        quad_ = Rational(0);
    }
}

int QuadNum::sign() const {
    int sa = rat_.sign();
    int sb = quad_.sign();
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decides, via a^2 vs b^2*d.
    Rational a2 = rat_ * rat_;
    Rational b2d = quad_ * quad_ * Rational(rad_);
    auto c = a2 <=> b2d;
    if (c == std::strong_ordering::equal)
        return 0; // unreachable for canonical d > 1; kept for safety
    return c == std::strong_ordering::greater ? sa : sb;
}

QuadNum QuadNum::operator-() const {
    QuadNum r;
    r.rat_ = -rat_;
    r.quad_ = -quad_;
    r.rad_ = rad_;
    return r;
}

Int common_radicand(const QuadNum& x, const QuadNum& y) {
    if (x.radicand() == y.radicand())
        return x.radicand();
    if (x.is_rational())
        return y.radicand();
    if (y.is_rational())
        return x.radicand();
    throw IncompatibleRadicands();
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
    Int d = common_radicand(x, y);
    return QuadNum(x.rat_ + y.rat_, x.quad_ + y.quad_, d);
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
    Int d = common_radicand(x, y);
    return QuadNum(x.rat_ - y.rat_, x.quad_ - y.quad_, d);
}

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    Int d = common_radicand(x, y);
    // (a + b√d)(e + f√d) = ae + bfd + (af + be)√d
    return QuadNum(x.rat_ * y.rat_ + x.quad_ * y.quad_ * Rational(d),
                   x.rat_ * y.quad_ + x.quad_ * y.rat_, d);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) {
    if (y.is_zero())
        throw DivisionByZero();
    Int d = common_radicand(x, y);
    // 1/(e + f√d) = (e - f√d) / (e^2 - f^2 d); the norm is nonzero because
    // √d is irrational for canonical d > 1, and f = 0 otherwise.
    Rational norm = y.rat_ * y.rat_ - y.quad_ * y.quad_ * Rational(d);
    QuadNum conj(y.rat_ / norm, -(y.quad_ / norm), d);
    return x * conj;
}

namespace {

// Renders b*sqrt(d) for b != 0, contracting unit coefficients.
std::string quad_term_str(const Rational& b, const Int& d) {
    std::string s;
    if (b == Rational(-1))
        s = "-";
    else if (!(b == Rational(1)))
        s = b.str() + "*";
    s += "sqrt(" + d.str() + ")";
    return s;
}

} // namespace

std::string QuadNum::str() const {
    if (quad_.is_zero())
        return rat_.str();
    if (rat_.is_zero())
        return quad_term_str(quad_, rad_);
    if (quad_.sign() > 0)
        return rat_.str() + "+" + quad_term_str(quad_, rad_);
    return rat_.str() + "-" + quad_term_str(-quad_, rad_);
}

std::ostream& operator<<(std::ostream& os, const QuadNum& q) {
    return os << q.str();
}

// ---------------------------------------------------------------------------
// Scalar parsing
// ---------------------------------------------------------------------------

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c))
            fail(std::string("expected '") + c + "' " + what);
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw SyntaxError(msg, 1, pos + 1);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = accept('-');
        skip_ws();
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            fail("expected an integer");
        if (pos < text.size() && text[pos] == '.')
            fail("decimal literals are not supported; use a fraction");
        Int v(std::string(text.substr(digits, pos - digits)));
        (void)start;
        return neg ? Int(-v) : v;
    }

    Rational rational() {
        Int n = integer();
        if (accept('/')) {
            Int d = integer();
            if (d <= 0)
                fail("denominator must be a positive integer");
            return Rational(n, d);
        }
        return Rational(std::move(n));
    }

    bool at_sqrt() {
        skip_ws();
        return text.substr(pos, 4) == "sqrt";
    }

    // [rational '*'] 'sqrt' '(' int ')' | rational
    // The sign has already been consumed by the caller.
    QuadNum unsigned_part() {
        if (at_sqrt()) {
            pos += 4;
            expect('(', "after sqrt");
            Int d = integer();
            if (d < 0)
                fail("radicand must be nonnegative");
            expect(')', "to close sqrt");
            return QuadNum(Rational(0), Rational(1), d);
        }
        Rational r = rational();
        if (accept('*')) {
            if (!at_sqrt())
                fail("expected sqrt(...) after '*'");
            pos += 4;
            expect('(', "after sqrt");
            Int d = integer();
            if (d < 0)
                fail("radicand must be nonnegative");
            expect(')', "to close sqrt");
            return QuadNum(Rational(0), r, d);
        }
        return QuadNum(std::move(r));
    }
};

} // namespace

Rational parse_rational(std::string_view text) {
    Scanner sc{text};
    Rational r = sc.rational();
    if (!sc.eof())
        sc.fail("trailing characters after rational");
    return r;
}

QuadNum parse_scalar(std::string_view text) {
    Scanner sc{text};
    bool neg = sc.accept('-');
    QuadNum v = sc.unsigned_part();
    if (neg)
        v = -v;
    while (sc.peek() == '+' || sc.peek() == '-') {
        bool minus = sc.accept('-');
        if (!minus)
            sc.accept('+');
        QuadNum t = sc.unsigned_part();
        v = minus ? v - t : v + t;
    }
    if (!sc.eof())
        sc.fail("trailing characters after scalar");
    return v;
}

} // namespace loopnt
