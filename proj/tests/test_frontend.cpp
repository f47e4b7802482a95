#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopnt/frontend.hpp"
#include "loopnt/oracle.hpp"

using namespace loopnt;

TEST_CASE("parsing the running two-variable example") {
    LoopSpec s = parse_loop("while (4*x1 + x2 > 0) { x1 := -2*x1 + 4*x2; x2 := 4*x1; }");
    CHECK(s.var_names == std::vector<std::string>{"x1", "x2"});
    CHECK(s.B == RatMat(1, 2, {Rational(4), Rational(1)}));
    CHECK(s.A == RatMat(2, 2, {Rational(-2), Rational(4), Rational(4), Rational(0)}));
    CHECK(s.guard_strict == std::vector<bool>{true});
}

TEST_CASE("parsing the three-variable demonstrator") {
    LoopSpec s = parse_loop(
        "while (x1 + 2*x2 + x3 >= 0) { x1 := 2*x1; x2 := 3*x2; x3 := 5*x3; }");
    CHECK(s.var_names == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(s.B == RatMat(1, 3, {Rational(1), Rational(2), Rational(1)}));
    CHECK(s.A == RatMat::diagonal({Rational(2), Rational(3), Rational(5)}));
    CHECK(s.guard_strict == std::vector<bool>{false});
}

TEST_CASE("assignments are simultaneous") {
    LoopSpec s = parse_loop("while (x1 > 0) { x1 := x2; x2 := x1; }");
    CHECK(s.A == RatMat(2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)}));
}

TEST_CASE("unassigned variables keep their value") {
    LoopSpec s = parse_loop("while (x1 + x2 > 0) { x1 := 2*x1; }");
    CHECK(s.A == RatMat(2, 2, {Rational(2), Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_loop("while (x1 > 0) { x1 := x1*x2; x2 := x2; }"), NonLinearTerm);
    CHECK_THROWS_AS(parse_loop("while (x1 > 0) { x1 := x1^2; }"), NonLinearTerm);
    CHECK_THROWS_AS(parse_loop("while (x1 > 0) { x1 := x1 + 1; }"), NonHomogeneous);
    CHECK_THROWS_AS(parse_loop("while (x1 > 1) { x1 := x1; }"), NonHomogeneous);
    CHECK_THROWS_AS(parse_loop("while (x1 > 0) { x1 := x1; x1 := 2*x1; }"),
                    DuplicateAssignment);
    CHECK_THROWS_AS(parse_loop("while (x1 > 0) { x1 := y; }"), UnknownVariable);
    CHECK_THROWS_AS(parse_loop("while (x1 > 0) { x1 := 1.5*x1; }"), SyntaxError);
    CHECK_THROWS_AS(parse_loop("while (x1 > 0) { x1 = x1; }"), SyntaxError);
    CHECK_THROWS_AS(parse_loop(""), SyntaxError);

    try {
        parse_loop("while (x1 > 0) {\n  x1 := x1 +\n}");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 3); // the dangling '+' is noticed at '}'
        CHECK(e.col >= 1);
    }
}

TEST_CASE("guards normalize by moving the right-hand side over") {
    LoopSpec s = parse_loop("while (2*x1 > x2) { x1 := x1; x2 := x2; }");
    CHECK(s.B == RatMat(1, 2, {Rational(2), Rational(-1)}));
    // multi-row guard
    LoopSpec m = parse_loop("while (x1 > 0 && x2 >= 0) { x1 := x1; x2 := x2; }");
    CHECK(m.guard_rows() == 2);
    CHECK(m.guard_strict == std::vector<bool>{true, false});
}

TEST_CASE("comments and whitespace are ignored") {
    LoopSpec s = parse_loop("// header\nwhile (x1 > 0) { // guard\n  x1 := 1/3*x1; }");
    CHECK(s.A == RatMat(1, 1, {Rational(1, 3)}));
}

TEST_CASE("alphabetic identifiers use first-mention order") {
    LoopSpec s = parse_loop("while (b + a > 0) { a := 2*a; b := 3*b; }");
    CHECK(s.var_names == std::vector<std::string>{"b", "a"});
    CHECK(s.B == RatMat(1, 2, {Rational(1), Rational(1)}));
    CHECK(s.A == RatMat(2, 2, {Rational(3), Rational(0), Rational(0), Rational(2)}));
}

TEST_CASE("indexed names sort numerically") {
    LoopSpec s = parse_loop("while (x2 > 0) { x2 := x1; x1 := x2; }");
    CHECK(s.var_names == std::vector<std::string>{"x1", "x2"});
    CHECK(s.B == RatMat(1, 2, {Rational(0), Rational(1)}));
}

TEST_CASE("validate_for_analysis") {
    LoopSpec two = parse_loop("while (4*x1 + x2 > 0) { x1 := -2*x1 + 4*x2; x2 := 4*x1; }");
    CHECK_NOTHROW(validate_for_analysis(two));

    LoopSpec three = parse_loop(
        "while (x1 + 2*x2 + x3 >= 0) { x1 := 2*x1; x2 := 3*x2; x3 := 5*x3; }");
    CHECK_THROWS_AS(validate_for_analysis(three), UnsupportedDimension);

    LoopSpec closed = parse_loop("while (x1 >= 0) { x1 := x1; x2 := x2; }");
    CHECK_THROWS_AS(validate_for_analysis(closed), UnsupportedGuard);
}

TEST_CASE("render-parse round-trip") {
    auto roundtrip = [](const std::string& text) {
        LoopSpec s = parse_loop(text);
        LoopSpec again = parse_loop(render_loop(s));
        CHECK(again == s);
    };
    roundtrip("while (4*x1 + x2 > 0) { x1 := -2*x1 + 4*x2; x2 := 4*x1; }");
    roundtrip("while (x1 + 2*x2 + x3 >= 0) { x1 := 2*x1; x2 := 3*x2; x3 := 5*x3; }");
    roundtrip("while (x1 > 0 && -1/2*x2 > 0) { x1 := 0*x1; x2 := x1 - 5/3*x2; }");

    Rng rng(303);
    for (int i = 0; i < 200; ++i) {
        LoopSpec s = random_loop2(rng, 5);
        LoopSpec again = parse_loop(render_loop(s));
        CHECK(again == s);
    }
}
