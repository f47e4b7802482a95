#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopnt/linalg.hpp"
#include "loopnt/oracle.hpp"

using namespace loopnt;

namespace {

RatMat m22(long long a, long long b, long long c, long long d) {
    return RatMat(2, 2, {Rational(a), Rational(b), Rational(c), Rational(d)});
}

// A v = lambda v, checked coordinate by coordinate in the extension field.
void check_eigenpair(const RatMat& A, const QuadNum& lambda, const QuadVec2& v) {
    QuadVec2 av = mat_apply2(A, v);
    CHECK(av.x1 == lambda * v.x1);
    CHECK(av.x2 == lambda * v.x2);
    CHECK_FALSE(v.is_zero());
}

// lambda^2 - trace*lambda + det == 0
void check_char_root(const RatMat& A, const QuadNum& lambda) {
    QuadNum trace{A.at(0, 0) + A.at(1, 1)};
    QuadNum det{A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0)};
    CHECK((lambda * lambda - trace * lambda + det).is_zero());
}

} // namespace

TEST_CASE("mat_apply") {
    RatMat A = m22(-2, 4, 4, 0);
    RatVec v{Rational(-1), Rational(4)};
    CHECK(mat_apply(A, v) == RatVec{Rational(18), Rational(-4)});

    RatMat I = RatMat::identity(3);
    RatVec w{Rational(3), Rational(-1, 2), Rational(7)};
    CHECK(mat_apply(I, w) == w);

    RatMat D = RatMat::diagonal({Rational(2), Rational(3), Rational(5)});
    CHECK(mat_apply(D, {Rational(1), Rational(-1), Rational(1)}) ==
          RatVec{Rational(2), Rational(-3), Rational(5)});

    CHECK_THROWS_AS(mat_apply(A, w), DimensionMismatch);
}

TEST_CASE("mat2_inverse") {
    CHECK(mat2_inverse(m22(2, 0, 0, -1)) ==
          RatMat(2, 2, {Rational(1, 2), Rational(0), Rational(0), Rational(-1)}));

    RatMat U = m22(1, 1, 0, 1);
    RatMat Uinv = mat2_inverse(U);
    CHECK(Uinv == m22(1, -1, 0, 1));

    CHECK_THROWS_AS(mat2_inverse(m22(1, 2, 2, 4)), SingularMatrix);

    Rng rng(5);
    int tested = 0;
    while (tested < 200) {
        RatMat A(2, 2, {rng.rational(9, 5), rng.rational(9, 5), rng.rational(9, 5),
                        rng.rational(9, 5)});
        Rational det = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
        if (det.is_zero())
            continue;
        ++tested;
        RatMat Ainv = mat2_inverse(A);
        // both one-sided products must be the identity
        for (int lr = 0; lr < 2; ++lr) {
            const RatMat& L = lr ? A : Ainv;
            const RatMat& R = lr ? Ainv : A;
            for (std::size_t i = 0; i < 2; ++i) {
                RatVec col{R.at(0, i), R.at(1, i)};
                RatVec prod = mat_apply(L, col);
                CHECK(prod[i] == Rational(1));
                CHECK(prod[1 - i] == Rational(0));
            }
        }
    }
}

TEST_CASE("eigen2 on the running example") {
    EigenInfo eig = eigen2(m22(-2, 4, 4, 0));
    REQUIRE(eig.kind == EigenKind::RealDistinct);
    REQUIRE(eig.values.has_value());
    CHECK(eig.values->first.str() == "-1+sqrt(17)");
    CHECK(eig.values->second.str() == "-1-sqrt(17)");
    REQUIRE(eig.vectors.size() == 2);
    CHECK(eig.vectors[0].x1 == QuadNum(1));
    CHECK(eig.vectors[0].x2.str() == "1/4+1/4*sqrt(17)");
    check_eigenpair(m22(-2, 4, 4, 0), eig.values->first, eig.vectors[0]);
    check_eigenpair(m22(-2, 4, 4, 0), eig.values->second, eig.vectors[1]);
}

TEST_CASE("eigen2 kinds") {
    CHECK(eigen2(m22(0, -1, 1, 0)).kind == EigenKind::ComplexPair);
    CHECK_FALSE(eigen2(m22(0, -1, 1, 0)).values.has_value());

    EigenInfo scalar = eigen2(m22(2, 0, 0, 2));
    CHECK(scalar.kind == EigenKind::RealRepeated);
    CHECK(scalar.full_plane);
    CHECK(scalar.values->first == QuadNum(2));
    CHECK(scalar.vectors.empty());

    EigenInfo defective = eigen2(m22(1, 1, 0, 1));
    CHECK(defective.kind == EigenKind::RealRepeated);
    CHECK_FALSE(defective.full_plane);
    REQUIRE(defective.vectors.size() == 1);
    // (A - I)v = 0 has the single solution direction (1, 0)
    CHECK(defective.vectors[0] == QuadVec2{QuadNum(1), QuadNum(0)});
    check_eigenpair(m22(1, 1, 0, 1), defective.values->first, defective.vectors[0]);
}

TEST_CASE("eigen2 invariants on random matrices") {
    Rng rng(2024);
    int real_seen = 0;
    for (int i = 0; i < 400; ++i) {
        RatMat A = m22(rng.range(-9, 9), rng.range(-9, 9), rng.range(-9, 9), rng.range(-9, 9));
        EigenInfo eig = eigen2(A);
        if (!eig.values)
            continue;
        ++real_seen;
        const auto& [l1, l2] = *eig.values;
        check_char_root(A, l1);
        check_char_root(A, l2);
        CHECK((l1 - l2).sign() >= 0);
        // trace and determinant match the root pair exactly
        CHECK(l1 + l2 == QuadNum(A.at(0, 0) + A.at(1, 1)));
        CHECK(l1 * l2 == QuadNum(A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0)));
        if (eig.kind == EigenKind::RealDistinct) {
            check_eigenpair(A, l1, eig.vectors[0]);
            check_eigenpair(A, l2, eig.vectors[1]);
        } else if (!eig.full_plane) {
            check_eigenpair(A, l1, eig.vectors[0]);
        }
    }
    CHECK(real_seen > 200);
}

TEST_CASE("kernel_dir") {
    CHECK(kernel_dir({Rational(4), Rational(1)}) == RatVec{Rational(-1), Rational(4)});
    CHECK(kernel_dir({Rational(1), Rational(0)}) == RatVec{Rational(0), Rational(1)});
    CHECK(kernel_dir({Rational(2), Rational(2)}) == RatVec{Rational(-1), Rational(1)});
    // fractions clear to primitive integers
    CHECK(kernel_dir({Rational(1, 2), Rational(3, 4)}) == RatVec{Rational(-3), Rational(2)});
    CHECK_THROWS_AS(kernel_dir({Rational(0), Rational(0)}), ZeroRow);

    Rng rng(77);
    for (int i = 0; i < 300; ++i) {
        RatVec B{rng.rational(9, 5), rng.rational(9, 5)};
        if (is_zero(B))
            continue;
        RatVec k = kernel_dir(B);
        CHECK(dot(B, k).is_zero());
        CHECK_FALSE(is_zero(k));
        CHECK(k[0].is_integer());
        CHECK(k[1].is_integer());
    }
}

TEST_CASE("canonical scalings") {
    QuadVec2 v{QuadNum(Rational(-2)), QuadNum(Rational(4))};
    CHECK(canonical_line(v) == QuadVec2{QuadNum(1), QuadNum(Rational(-2))});
    CHECK(canonical_ray(v) == QuadVec2{QuadNum(-1), QuadNum(2)});

    QuadVec2 w{QuadNum(0), QuadNum(Rational(-3))};
    CHECK(canonical_line(w) == QuadVec2{QuadNum(0), QuadNum(1)});
    CHECK(canonical_ray(w) == QuadVec2{QuadNum(0), QuadNum(-1)});

    CHECK(same_ray(v, canonical_ray(v)));
    CHECK_FALSE(same_ray(v, -v));
}
