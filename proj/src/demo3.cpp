#include "loopnt/demo3.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <cctype>
#include <map>

namespace loopnt {

namespace mp = boost::multiprecision;

LoopSpec p3_spec() {
    LoopSpec spec;
    spec.var_names = {"x1", "x2", "x3"};
    spec.A = RatMat::diagonal({Rational(2), Rational(3), Rational(5)});
    spec.B = RatMat(1, 3, {Rational(1), Rational(2), Rational(1)});
    spec.guard_strict = {false};
    return spec;
}

std::vector<Rational> boundary_point(std::size_t n) {
    auto inv_pow = [n](unsigned base) {
        return Rational(Int(1), mp::pow(Int(base), static_cast<unsigned>(n)));
    };
    return {inv_pow(2), -inv_pow(3), inv_pow(5)};
}

BoundaryCheck check_boundary_guard(std::size_t K) {
    BoundaryCheck out;
    // B p_0 = 1 - 2 + 1
    out.base_on_guard_line = (Int(1) - 2 + 1) == 0;
    out.values.reserve(K);
    out.all_positive = true;
    Int p2 = 1, p3 = 1, p5 = 1;
    for (std::size_t k = 1; k <= K; ++k) {
        p2 *= 2;
        p3 *= 3;
        p5 *= 5;
        Int v = p2 - 2 * p3 + p5;
        if (v <= 0)
            out.all_positive = false;
        out.values.push_back(std::move(v));
    }
    return out;
}

bool tau_member(const std::vector<Rational>& x) {
    if (x.size() != 3)
        throw DimensionMismatch("tau lives in three variables");
    Rational q = Rational(9) * (x[0] * x[0] + x[1] * x[1]) - x[2] * x[2];
    return q.sign() < 0 && x[2].sign() > 0;
}

// ---------------------------------------------------------------------------
// Poly3
// ---------------------------------------------------------------------------

std::string Poly3::str() const {
    if (monomials.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        const Mono& m = monomials[i];
        Rational a = m.coef.abs();
        if (i == 0)
            out += m.coef.sign() < 0 ? "-" : "";
        else
            out += m.coef.sign() < 0 ? " - " : " + ";
        std::string vars;
        auto add_var = [&](const char* name, unsigned e) {
            if (e == 0)
                return;
            if (!vars.empty())
                vars += "*";
            vars += name;
            if (e > 1)
                vars += "^" + std::to_string(e);
        };
        add_var("x1", m.a);
        add_var("x2", m.b);
        add_var("x3", m.g);
        if (vars.empty())
            out += a.str();
        else if (a == Rational(1))
            out += vars;
        else
            out += a.str() + "*" + vars;
    }
    return out;
}

namespace {

struct PolyScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
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
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, 1, pos + 1); }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected an integer");
        if (pos < text.size() && text[pos] == '.')
            fail("decimal literals are not supported; use a fraction");
        return Int(std::string(text.substr(start, pos - start)));
    }

    Rational rational() {
        Int n = integer();
        if (accept('/')) {
            Int d = integer();
            if (d == 0)
                fail("denominator must be positive");
            return Rational(n, d);
        }
        return Rational(std::move(n));
    }

    // x1 | x2 | x3, optionally followed by ^exp
    bool variable(unsigned& var_index, unsigned& exp) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x')
            return false;
        if (pos + 1 >= text.size() || text[pos + 1] < '1' || text[pos + 1] > '3')
            fail("expected x1, x2 or x3");
        var_index = static_cast<unsigned>(text[pos + 1] - '1');
        pos += 2;
        exp = 1;
        if (accept('^')) {
            Int e = integer();
            if (e < 0 || e > 1000000)
                fail("exponent out of range");
            exp = static_cast<unsigned>(e);
        }
        return true;
    }

    // [rational] {'*' variable | variable}
    void term(Rational& coef, unsigned exps[3]) {
        coef = Rational(1);
        exps[0] = exps[1] = exps[2] = 0;
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = rational();
            saw_factor = true;
            if (!accept('*')) {
                skip_ws();
                if (pos < text.size() && text[pos] == 'x')
                    fail("expected '*' between coefficient and variable");
                return; // constant term
            }
        }
        for (;;) {
            unsigned v, e;
            if (!variable(v, e))
                fail("expected a variable");
            exps[v] += e;
            saw_factor = true;
            if (!accept('*'))
                break;
        }
        if (!saw_factor)
            fail("empty term");
    }
};

} // namespace

Poly3 parse_poly3(std::string_view text) {
    PolyScanner sc{text};
    std::map<std::array<unsigned, 3>, Rational> acc;
    int sign = 1;
    if (sc.accept('-'))
        sign = -1;
    else
        sc.accept('+');
    for (;;) {
        Rational coef;
        unsigned exps[3];
        sc.term(coef, exps);
        std::array<unsigned, 3> key{exps[0], exps[1], exps[2]};
        acc[key] += Rational(sign) * coef;
        if (sc.accept('+'))
            sign = 1;
        else if (sc.accept('-'))
            sign = -1;
        else
            break;
    }
    sc.skip_ws();
    if (sc.pos < sc.text.size())
        sc.fail("trailing characters after polynomial");

    Poly3 f;
    for (const auto& [key, coef] : acc)
        if (!coef.is_zero())
            f.monomials.push_back({coef, key[0], key[1], key[2]});
    // graded-lex descending, for stable display
    std::sort(f.monomials.begin(), f.monomials.end(),
              [](const Poly3::Mono& x, const Poly3::Mono& y) {
                  unsigned dx = x.a + x.b + x.g, dy = y.a + y.b + y.g;
                  if (dx != dy)
                      return dx > dy;
                  return std::tie(x.a, x.b, x.g) > std::tie(y.a, y.b, y.g);
              });
    return f;
}

// ---------------------------------------------------------------------------
// Boundary-sequence evaluation and the non-vanishing bound
// ---------------------------------------------------------------------------

Int boundary_eval_scaled(const Poly3& f, std::size_t n) {
    // f(p_n) = sum_i b_i (-1)^{b_i exponent} 2^{-a_i n} 3^{-b_i n} 5^{-g_i n}.
    // Clear the coefficient denominators and the largest power of each base;
    // the scale is positive, so sign and vanishing carry over.
    unsigned max_a = 0, max_b = 0, max_g = 0;
    Int den_lcm = 1;
    for (const auto& m : f.monomials) {
        max_a = std::max(max_a, m.a);
        max_b = std::max(max_b, m.b);
        max_g = std::max(max_g, m.g);
        den_lcm = mp::lcm(den_lcm, m.coef.den());
    }
    Int sum = 0;
    for (const auto& m : f.monomials) {
        Int term = m.coef.num() * (den_lcm / m.coef.den());
        unsigned nn = static_cast<unsigned>(n);
        term *= mp::pow(Int(2), (max_a - m.a) * nn);
        term *= mp::pow(Int(3), (max_b - m.b) * nn);
        term *= mp::pow(Int(5), (max_g - m.g) * nn);
        if (m.b % 2 == 1) // x2 = -3^-n contributes (-1)^exponent
            term = -term;
        sum += term;
    }
    return sum;
}

std::size_t nonvanishing_bound(const Poly3& f) {
    if (f.is_zero())
        throw ZeroPolynomial();
    if (f.monomials.size() == 1)
        return 0; // a single monomial never vanishes on the sequence

    // Monomial values t_i = (1/2)^a (1/3)^b (1/5)^g are pairwise distinct
    // because 2^a 3^b 5^g determines (a, b, g).
    struct Term {
        Rational t;
        Rational abs_coef;
    };
    std::vector<Term> terms;
    terms.reserve(f.monomials.size());
    for (const auto& m : f.monomials) {
        Rational t(Int(1), mp::pow(Int(2), m.a) * mp::pow(Int(3), m.b) * mp::pow(Int(5), m.g));
        terms.push_back({t, m.coef.abs()});
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.t > y.t; });
    for (std::size_t i = 0; i + 1 < terms.size(); ++i)
        if (terms[i].t == terms[i + 1].t)
            throw InternalInvariantViolation("monomial values must be pairwise distinct");

    // Smallest N with |c_1| (t_1/t_2)^N > sum_{j>=2} |c_j|; the ratio
    // exceeds 1, so the inequality persists for every n >= N.
    Rational tail(0);
    for (std::size_t j = 1; j < terms.size(); ++j)
        tail += terms[j].abs_coef;
    Rational ratio = terms[0].t / terms[1].t;
    Rational lead = terms[0].abs_coef;
    std::size_t n = 0;
    while (!(lead > tail)) {
        lead *= ratio;
        ++n;
    }
    return n;
}

} // namespace loopnt
