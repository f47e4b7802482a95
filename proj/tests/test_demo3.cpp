#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopnt/demo3.hpp"
#include "loopnt/oracle.hpp"

using namespace loopnt;

TEST_CASE("p3_spec matches its display") {
    LoopSpec s = p3_spec();
    CHECK(s.B == RatMat(1, 3, {Rational(1), Rational(2), Rational(1)}));
    CHECK(s.A == RatMat::diagonal({Rational(2), Rational(3), Rational(5)}));
    CHECK(s.guard_strict == std::vector<bool>{false});
    CHECK(s.var_names == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("boundary_point") {
    CHECK(boundary_point(0) == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
    CHECK(boundary_point(1) ==
          std::vector<Rational>{Rational(1, 2), Rational(-1, 3), Rational(1, 5)});
    CHECK(boundary_point(2) ==
          std::vector<Rational>{Rational(1, 4), Rational(-1, 9), Rational(1, 25)});
}

TEST_CASE("check_boundary_guard: exact values") {
    BoundaryCheck c = check_boundary_guard(300);
    CHECK(c.base_on_guard_line);
    CHECK(c.all_positive);
    REQUIRE(c.values.size() == 300);
    CHECK(c.values[0] == 1);  // 2 - 6 + 5
    CHECK(c.values[1] == 11); // 4 - 18 + 25
    CHECK(c.values[2] == 79); // 8 - 54 + 125

    // independent recomputation via the loop itself: B A^k p0 scaled by
    // the cleared denominator must have the same sign as the closed form
    LoopSpec spec = p3_spec();
    std::vector<Rational> x{Rational(1), Rational(-1), Rational(1)};
    for (int k = 1; k <= 20; ++k) {
        x = mat_apply(spec.A, x);
        Rational guard = dot(spec.B.row(0), x);
        CHECK(guard == Rational(c.values[static_cast<std::size_t>(k - 1)]));
    }
}

TEST_CASE("boundary points survive simulation") {
    LoopSpec spec = p3_spec();
    for (std::size_t n = 0; n <= 20; ++n) {
        SimResult r = simulate(spec, boundary_point(n), 50);
        CHECK_FALSE(r.terminated());
    }
}

TEST_CASE("tau membership examples") {
    CHECK(tau_member({Rational(0), Rational(0), Rational(1)}));
    CHECK_FALSE(tau_member({Rational(1), Rational(0), Rational(1)})); // 9 - 1 = 8, not < 0
    CHECK_FALSE(tau_member({Rational(0), Rational(0), Rational(-1)}));
    CHECK_FALSE(tau_member({Rational(0), Rational(0), Rational(0)}));
    CHECK(tau_member({Rational(1, 10), Rational(-1, 10), Rational(1)}));
}

TEST_CASE("tau is forward-invariant and inside the guard") {
    LoopSpec spec = p3_spec();
    Rng rng(555);
    std::size_t found = 0;
    while (found < 10000) {
        Rational x3(Int(rng.range(1, 600)), Int(rng.range(1, 60)));
        Rational x1 = Rational(Int(rng.range(-119, 119)), Int(360)) * x3;
        Rational x2 = Rational(Int(rng.range(-119, 119)), Int(360)) * x3;
        std::vector<Rational> x{x1, x2, x3};
        if (!tau_member(x))
            continue;
        ++found;
        // guard holds strictly on tau
        CHECK(dot(spec.B.row(0), x).sign() > 0);
        // the update keeps tau
        CHECK(tau_member(mat_apply(spec.A, x)));
    }
    // a tau point survives the full simulation budget
    std::vector<Rational> deep{Rational(1, 100), Rational(-1, 100), Rational(2)};
    CHECK_FALSE(simulate(spec, deep, 50).terminated());
}

TEST_CASE("poly3 parsing") {
    Poly3 f = parse_poly3("2*x1^2 - 1/3*x2");
    REQUIRE(f.monomials.size() == 2);
    CHECK(f.str() == "2*x1^2 - 1/3*x2");

    CHECK(parse_poly3("x1*x2 + x3").monomials.size() == 2);
    CHECK(parse_poly3("0").is_zero());
    CHECK(parse_poly3("x1 - x1").is_zero());
    CHECK(parse_poly3("x1*x1").monomials[0].a == 2);
    CHECK(parse_poly3("- x1 + 2*x1").str() == "x1");
    CHECK_THROWS_AS(parse_poly3("x4"), SyntaxError);
    CHECK_THROWS_AS(parse_poly3("2 x1"), SyntaxError);
    CHECK_THROWS_AS(parse_poly3(""), SyntaxError);
}

TEST_CASE("boundary_eval_scaled: signs match the direct rational evaluation") {
    Rng rng(888);
    for (int trial = 0; trial < 60; ++trial) {
        Poly3 f;
        int terms = static_cast<int>(rng.range(1, 4));
        for (int t = 0; t < terms; ++t)
            f.monomials.push_back({Rational(Int(rng.range(1, 9)) * (rng.below(2) ? 1 : -1)),
                                   static_cast<unsigned>(rng.range(0, 3)),
                                   static_cast<unsigned>(rng.range(0, 3)),
                                   static_cast<unsigned>(rng.range(0, 3))});
        // dedupe exponent triples by brute force
        std::vector<Poly3::Mono> unique;
        for (const auto& m : f.monomials) {
            bool dup = false;
            for (const auto& u : unique)
                dup |= (u.a == m.a && u.b == m.b && u.g == m.g);
            if (!dup)
                unique.push_back(m);
        }
        f.monomials = unique;
        for (std::size_t n = 0; n <= 6; ++n) {
            std::vector<Rational> p = boundary_point(n);
            Rational direct(0);
            for (const auto& m : f.monomials) {
                Rational term = m.coef;
                for (unsigned i = 0; i < m.a; ++i)
                    term *= p[0];
                for (unsigned i = 0; i < m.b; ++i)
                    term *= p[1];
                for (unsigned i = 0; i < m.g; ++i)
                    term *= p[2];
                direct += term;
            }
            Int scaled = boundary_eval_scaled(f, n);
            CHECK(direct.sign() == (scaled == 0 ? 0 : (scaled < 0 ? -1 : 1)));
        }
    }
}

TEST_CASE("nonvanishing_bound: worked examples") {
    Poly3 single = parse_poly3("x1");
    CHECK(nonvanishing_bound(single) == 0);

    Poly3 diff = parse_poly3("x1 - x2");
    std::size_t n = nonvanishing_bound(diff);
    CHECK(n == 1); // |1| * (3/2)^1 > |1|
    // f(p_n) = 2^-n + 3^-n stays positive for every n, including below N
    for (std::size_t k = 0; k <= 40; ++k)
        CHECK(boundary_eval_scaled(diff, k) > 0);

    CHECK_THROWS_AS(nonvanishing_bound(parse_poly3("0")), ZeroPolynomial);
}

TEST_CASE("nonvanishing_bound: audited on random polynomials") {
    Rng rng(4711);
    for (int trial = 0; trial < 25; ++trial) {
        Poly3 f;
        std::map<std::array<unsigned, 3>, bool> seen;
        int terms = static_cast<int>(rng.range(1, 5));
        for (int t = 0; t < terms; ++t) {
            unsigned a = static_cast<unsigned>(rng.range(0, 4));
            unsigned b = static_cast<unsigned>(rng.range(0, 4));
            unsigned g = static_cast<unsigned>(rng.range(0, 4));
            if (seen[{a, b, g}])
                continue;
            seen[{a, b, g}] = true;
            long long c = rng.range(1, 9) * (rng.below(2) ? 1 : -1);
            f.monomials.push_back({Rational(Int(c)), a, b, g});
        }
        std::size_t N = nonvanishing_bound(f);
        for (std::size_t n = N; n <= N + 200; ++n)
            CHECK(boundary_eval_scaled(f, n) != 0);
    }
}
