#pragma once

/**
 * @file demo3.hpp
 * @brief The three-variable demonstrator: a concrete loop whose NT set has
 *        no finite polynomial description. Everything here is the computable
 *        side of that fact: an exactly-checkable boundary sequence, a
 *        forward-invariant inner region, and a constructive bound past which
 *        no fixed polynomial can vanish on the sequence.
 */

#include <cstddef>
#include <string_view>
#include <vector>

#include "loopnt/frontend.hpp"

namespace loopnt {

/// while (x1 + 2*x2 + x3 >= 0) { x := diag(2,3,5) x }
LoopSpec p3_spec();

/// The sequence point p_n = (2^-n, -3^-n, 5^-n).
std::vector<Rational> boundary_point(std::size_t n);

/// Exact bignum audit of the sequence's guard behavior:
/// B p_0 = 0, and B A^k p_0 = 2^k - 2*3^k + 5^k > 0 for k = 1..K.
struct BoundaryCheck {
    bool base_on_guard_line; // B p_0 == 0
    std::vector<Int> values; // values[k-1] = 2^k - 2*3^k + 5^k
    bool all_positive;
};
BoundaryCheck check_boundary_guard(std::size_t K);

/// The inner cone tau = {9(x1^2 + x2^2) - x3^2 < 0, x3 > 0}, evaluated
/// exactly. tau is forward-invariant and contained in NT.
bool tau_member(const std::vector<Rational>& x);

// ---------------------------------------------------------------------------
// Polynomials in x1, x2, x3
// ---------------------------------------------------------------------------

struct Poly3 {
    struct Mono {
        Rational coef; // nonzero
        unsigned a, b, g; // exponents of x1, x2, x3
    };
    std::vector<Mono> monomials; // distinct exponent triples

    bool is_zero() const { return monomials.empty(); }
    std::string str() const;
};

/// Parses "c*x1^a*x2^b*x3^g" terms joined by +/-; like terms are combined
/// and zero coefficients dropped. Throws SyntaxError.
Poly3 parse_poly3(std::string_view text);

/// f(p_n) scaled by a positive integer (the cleared common denominator), so
/// the sign and vanishing behavior are preserved exactly.
Int boundary_eval_scaled(const Poly3& f, std::size_t n);

/// Constructive bound N such that f(p_n) != 0 for every n >= N, from the
/// dominant-monomial argument: with effective coefficients c_i = b_i *
/// (-1)^{beta_i} and monomial values t_i = (1/2)^a (1/3)^b (1/5)^g (pairwise
/// distinct), the largest t_1 dominates once |c_1| (t_1/t_2)^n exceeds the
/// sum of the other |c_j|. Single monomials return 0. The bound is crude but
/// certified; callers audit it by exact evaluation.
/// Throws ZeroPolynomial.
std::size_t nonvanishing_bound(const Poly3& f);

} // namespace loopnt
