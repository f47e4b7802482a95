#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "loopnt/exact.hpp"
#include "loopnt/oracle.hpp"

using namespace loopnt;

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

// Independent high-precision evaluation, for sign cross-checks away from 0.
BigFloat approx(const Rational& r) {
    return BigFloat(r.num()) / BigFloat(r.den());
}
BigFloat approx(const QuadNum& q) {
    return approx(q.rat_part()) + approx(q.quad_part()) * sqrt(BigFloat(q.radicand()));
}

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

QuadNum random_quad(Rng& rng, const Int& d) {
    return QuadNum(rng.rational(50, 20), rng.rational(50, 20), d);
}

} // namespace

TEST_CASE("rational arithmetic on the worked examples") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-2, 4) * Rational(6, 3) == Rational(-1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), DivisionByZero);
}

TEST_CASE("rational canonical form") {
    Rational r(Int(-6), Int(-8));
    CHECK(r.num() == 3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
}

TEST_CASE("rational ordering and string round-trip") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(parse_rational(" -14 / 21 ") == Rational(-2, 3));
    for (long long n = -30; n <= 30; ++n)
        for (long long d = 1; d <= 9; ++d) {
            Rational r{Int(n), Int(d)};
            CHECK(parse_rational(r.str()) == r);
        }
}

TEST_CASE("sqrt_normalize examples with the round-trip oracle") {
    auto check_roundtrip = [](const Rational& x) {
        SqrtParts sp = sqrt_normalize(x);
        CHECK(sp.coef * sp.coef * Rational(sp.radicand) == x);
        CHECK(sp.coef.sign() >= 0);
        // radicand squarefree: re-normalizing it must be the identity
        SqrtParts again = sqrt_normalize(Rational(sp.radicand));
        CHECK(again.coef == Rational(1));
        CHECK(again.radicand == sp.radicand);
        return sp;
    };

    SqrtParts s17 = check_roundtrip(Rational(17));
    CHECK(s17.coef == Rational(1));
    CHECK(s17.radicand == 17);

    SqrtParts s8 = check_roundtrip(Rational(8));
    CHECK(s8.coef == Rational(2));
    CHECK(s8.radicand == 2);

    SqrtParts s94 = check_roundtrip(Rational(9, 4));
    CHECK(s94.coef == Rational(3, 2));
    CHECK(s94.radicand == 1);

    SqrtParts s0 = sqrt_normalize(Rational(0));
    CHECK(s0.coef == Rational(0));
    CHECK(s0.radicand == 1);

    CHECK_THROWS_AS(sqrt_normalize(Rational(-1)), NegativeInput);
}

TEST_CASE("sqrt_normalize beyond the trial-division bound") {
    // Two distinct primes above the default bound 10^6: squarefree, but
    // certifying that requires factoring, so the call must refuse.
    long long p = 1000003, q = 1000033;
    REQUIRE(is_prime(p));
    REQUIRE(is_prime(q));
    CHECK_THROWS_AS(sqrt_normalize(Rational(Int(p) * Int(q))), RadicandTooLarge);

    // A perfect square of a large prime needs no factoring.
    SqrtParts sp = sqrt_normalize(Rational(Int(p) * Int(p)));
    CHECK(sp.coef == Rational(Int(p)));
    CHECK(sp.radicand == 1);

    // A small cofactor times a large prime square is caught exactly.
    CHECK_THROWS_AS(sqrt_normalize(Rational(Int(p) * Int(p) * Int(q))), RadicandTooLarge);

    // With a custom bound the same input factors fine.
    SqrtParts ok = sqrt_normalize(Rational(Int(p) * Int(q)), Int(2000000));
    CHECK(ok.coef == Rational(1));
    CHECK(ok.radicand == Int(p) * Int(q));
}

TEST_CASE("sqrt_normalize round-trip on random inputs") {
    Rng rng(101);
    for (int i = 0; i < 2000; ++i) {
        Rational x = rng.positive_rational(100000, 1000);
        SqrtParts sp = sqrt_normalize(x);
        CHECK(sp.coef * sp.coef * Rational(sp.radicand) == x);
    }
}

TEST_CASE("quadratic arithmetic on the worked examples") {
    QuadNum a(Rational(1), Rational(1), 17);  // 1 + sqrt(17)
    QuadNum b(Rational(1), Rational(-1), 17); // 1 - sqrt(17)
    CHECK(a * b == QuadNum(-16));

    QuadNum r2(Rational(0), Rational(1), 2);
    CHECK(r2 * r2 == QuadNum(2));

    QuadNum l1(Rational(-1), Rational(1), 17);
    QuadNum l2(Rational(-1), Rational(-1), 17);
    CHECK(l1 + l2 == QuadNum(-2)); // trace of the example's eigenvalue pair
}

TEST_CASE("quadratic canonical form folds rational values") {
    // radicand 8 = 4*2 normalizes; radicand 1 folds into the rational part
    QuadNum x(Rational(1), Rational(1), 8);
    CHECK(x.radicand() == 2);
    CHECK(x.quad_part() == Rational(2));

    QuadNum y(Rational(3), Rational(5), 1);
    CHECK(y == QuadNum(8));
    QuadNum z(Rational(3), Rational(5), 0);
    CHECK(z == QuadNum(3));

    QuadNum w(Rational(2), Rational(0), 17);
    CHECK(w.radicand() == 1); // b = 0 forces d = 1
}

TEST_CASE("quad_sign examples") {
    CHECK(QuadNum(Rational(-1), Rational(1), 17).sign() == 1); // positive eigenvalue
    CHECK(QuadNum(Rational(3), Rational(-1), 10).sign() == -1); // 9 < 10
    CHECK(QuadNum(Rational(0), Rational(0), 17).sign() == 0);
    CHECK(QuadNum(Rational(3), Rational(-1), 8).sign() == 1); // 9 > 8
    CHECK(QuadNum(Rational(-5), Rational(2), 6).sign() == -1); // 25 > 24
}

TEST_CASE("incompatible radicands refuse to combine") {
    QuadNum a(Rational(0), Rational(1), 2);
    QuadNum b(Rational(0), Rational(1), 3);
    CHECK_THROWS_AS(a + b, IncompatibleRadicands);
    CHECK_THROWS_AS(a * b, IncompatibleRadicands);
    CHECK_NOTHROW(a + QuadNum(Rational(1, 2))); // rationals combine with anything
}

TEST_CASE("quadratic division via the conjugate") {
    QuadNum x(Rational(1, 4), Rational(1, 4), 17);
    QuadNum inv = QuadNum(1) / x;
    CHECK(x * inv == QuadNum(1));
    CHECK_THROWS_AS(x / QuadNum(0), DivisionByZero);
}

TEST_CASE("scalar rendering and parsing") {
    QuadNum dir(Rational(1, 4), Rational(1, 4), 17);
    CHECK(dir.str() == "1/4+1/4*sqrt(17)");
    CHECK(parse_scalar("1/4+1/4*sqrt(17)") == dir);
    CHECK(parse_scalar(" 1/4 + 1/4 * sqrt( 17 ) ") == dir);

    CHECK(QuadNum(Rational(-1), Rational(1), 17).str() == "-1+sqrt(17)");
    CHECK(QuadNum(Rational(-1), Rational(-1), 17).str() == "-1-sqrt(17)");
    CHECK(QuadNum(Rational(0), Rational(1), 2).str() == "sqrt(2)");
    CHECK(QuadNum(Rational(0), Rational(-1), 2).str() == "-sqrt(2)");
    CHECK(QuadNum(Rational(-5, 6)).str() == "-5/6");

    CHECK(parse_scalar("-sqrt(2)") == QuadNum(Rational(0), Rational(-1), 2));
    CHECK(parse_scalar("2-3*sqrt(5)") == QuadNum(Rational(2), Rational(-3), 5));
    CHECK(parse_scalar("sqrt(8)") == QuadNum(Rational(0), Rational(2), 2));

    CHECK_THROWS_AS(parse_scalar("1.5"), SyntaxError);
    CHECK_THROWS_AS(parse_scalar("1 + "), SyntaxError);
    CHECK_THROWS_AS(parse_scalar("sqrt(-2)"), SyntaxError);

    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        QuadNum q = random_quad(rng, 17);
        CHECK(parse_scalar(q.str()) == q);
    }
}

TEST_CASE("field axioms on random samples") {
    Rng rng(42);
    const Int d = 5;
    for (int i = 0; i < 2000; ++i) {
        QuadNum x = random_quad(rng, d);
        QuadNum y = random_quad(rng, d);
        QuadNum z = random_quad(rng, d);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero())
            CHECK(x * (QuadNum(1) / x) == QuadNum(1));
    }
}

TEST_CASE("sign consistency: multiplicativity and high-precision cross-check") {
    Rng rng(4242);
    const Int d = 13;
    int cross_checked = 0;
    for (int i = 0; i < 10000; ++i) {
        QuadNum x = random_quad(rng, d);
        QuadNum y = random_quad(rng, d);
        CHECK((x * y).sign() == x.sign() * y.sign());

        QuadNum s = x + y;
        BigFloat f = approx(s);
        if (abs(f) > BigFloat("1e-50")) { // evaluation error is far below this
            ++cross_checked;
            CHECK(s.sign() == (f > 0 ? 1 : -1));
        } else {
            CHECK(s.sign() == 0);
        }
    }
    CHECK(cross_checked > 9000);
}

TEST_CASE("canonical-form idempotence") {
    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        QuadNum q = random_quad(rng, 12); // 12 = 4*3 exercises normalization
        CHECK(q.radicand() == (q.quad_part().is_zero() ? Int(1) : Int(3)));
        QuadNum again(q.rat_part(), q.quad_part(), q.radicand());
        CHECK(again == q);
    }
}
