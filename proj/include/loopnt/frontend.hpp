#pragma once

/**
 * @file frontend.hpp
 * @brief Loop DSL parser producing the validated LoopSpec IR.
 *
 * Grammar (line comments "// ..." and whitespace ignored):
 *
 *   loop    = "while" "(" guard ")" "{" {assign} "}"
 *   guard   = cmp {"&&" cmp}
 *   cmp     = linexpr (">" | ">=") linexpr
 *   assign  = var ":=" linexpr ";"
 *   linexpr = ["-"] term {("+"|"-") term}
 *   term    = [rat "*"] var | rat
 *   rat     = int ["/" posint]
 *   var     = identifier ("x1", "x2", ... or alphabetic names)
 *
 * Assignments are SIMULTANEOUS (one vector assignment x := Ax): every
 * right-hand side refers to pre-update values. "x1 := x2; x2 := x1;" is the
 * swap matrix, not two sequential moves. Variables never assigned keep their
 * value (an identity row).
 *
 * Comparisons are normalized by moving everything to the left-hand side;
 * any residual constant (in a guard or an assignment) is NonHomogeneous.
 * Coefficients are exact rational literals; decimals are rejected.
 */

#include <string>
#include <string_view>
#include <vector>

#include "loopnt/linalg.hpp"

namespace loopnt {

/// IR of a homogeneous linear loop: while (B x > 0) { x := A x }, with a
/// per-row strictness flag (true = ">", false = ">=").
struct LoopSpec {
    std::vector<std::string> var_names;
    RatMat A;                       // n x n update
    RatMat B;                       // m x n guard rows
    std::vector<bool> guard_strict; // one per guard row

    std::size_t dim() const { return var_names.size(); }
    std::size_t guard_rows() const { return B.rows(); }

    bool operator==(const LoopSpec& o) const = default;
};

/// Throws SyntaxError, NonLinearTerm, NonHomogeneous, UnknownVariable or
/// DuplicateAssignment, each carrying a 1-based source position.
LoopSpec parse_loop(std::string_view text);

/// Renders back to DSL text; parse_loop(render_loop(s)) == s.
std::string render_loop(const LoopSpec& spec);

/// The closed-form analysis needs exactly two variables and strict guards;
/// throws UnsupportedDimension or UnsupportedGuard otherwise. The simulator
/// accepts any dimension and either strictness.
void validate_for_analysis(const LoopSpec& spec);

} // namespace loopnt
