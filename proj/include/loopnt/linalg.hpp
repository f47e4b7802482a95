#pragma once

/**
 * @file linalg.hpp
 * @brief Exact vectors and matrices: dimension-generic rational matrices for
 *        simulation, plus specialized 2x2 eigen-decomposition over Q(sqrt(d)).
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopnt/exact.hpp"

namespace loopnt {

using RatVec = std::vector<Rational>;

// ---------------------------------------------------------------------------
// RatMat
// ---------------------------------------------------------------------------

/// Dense rational matrix, row-major.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMat(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMat identity(std::size_t n);
    static RatMat diagonal(const RatVec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    RatVec row(std::size_t r) const;
    bool is_zero() const;

    bool operator==(const RatMat& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Exact matrix-vector product; DimensionMismatch if shapes do not conform.
RatVec mat_apply(const RatMat& A, const RatVec& v);

/// Row vector times matrix (for guard rows composed with the update).
RatVec row_times_mat(const RatVec& row, const RatMat& A);

Rational dot(const RatVec& x, const RatVec& y);
bool is_zero(const RatVec& v);
RatVec negate(const RatVec& v);

/// Inverse of a 2x2 rational matrix; SingularMatrix if det = 0.
RatMat mat2_inverse(const RatMat& A);

// ---------------------------------------------------------------------------
// QuadVec2
// ---------------------------------------------------------------------------

/// Plane vector with coordinates in one quadratic extension (rational
/// coordinates combine with any radicand).
struct QuadVec2 {
    QuadNum x1;
    QuadNum x2;

    bool is_zero() const { return x1.is_zero() && x2.is_zero(); }
    QuadVec2 operator-() const { return {-x1, -x2}; }
    bool operator==(const QuadVec2& o) const = default;

    std::string str() const { return "(" + x1.str() + ", " + x2.str() + ")"; }
};

QuadVec2 operator+(const QuadVec2& u, const QuadVec2& v);
QuadVec2 operator*(const QuadNum& k, const QuadVec2& v);

/// u.x1*v.x2 - u.x2*v.x1, the orientation test every cone predicate uses.
QuadNum cross(const QuadVec2& u, const QuadVec2& v);

/// Euclidean inner product (same-ray tests on collinear vectors).
QuadNum dot(const QuadVec2& u, const QuadVec2& v);

/// Guard row applied to a plane point: B[0]*x1 + B[1]*x2.
QuadNum guard_value(const RatVec& row, const QuadVec2& p);

/// Apply a rational 2x2 matrix to a plane point.
QuadVec2 mat_apply2(const RatMat& A, const QuadVec2& v);

QuadVec2 to_quadvec(const RatVec& v); // 2-vector only

/// Scale so the first nonzero coordinate becomes exactly 1 (line canonical
/// form; may flip direction).
QuadVec2 canonical_line(const QuadVec2& v);

/// Scale by a positive factor so the first nonzero coordinate becomes +/-1
/// (ray canonical form; never flips direction).
QuadVec2 canonical_ray(const QuadVec2& v);

/// Collinear and pointing the same way.
bool same_ray(const QuadVec2& u, const QuadVec2& v);

// ---------------------------------------------------------------------------
// Eigen decomposition
// ---------------------------------------------------------------------------

enum class EigenKind { ComplexPair, RealDistinct, RealRepeated };

/// Exact eigen-data of a 2x2 rational matrix. For real kinds the values are
/// ordered lambda1 >= lambda2 and each stored eigenvector v satisfies
/// A*v = lambda*v exactly, scaled so its first nonzero coordinate is 1.
struct EigenInfo {
    EigenKind kind;
    std::optional<std::pair<QuadNum, QuadNum>> values; // empty for ComplexPair
    std::vector<QuadVec2> vectors; // RealDistinct: {v1, v2}; RealRepeated: {v} or empty
    bool full_plane = false;       // RealRepeated with A = lambda*I
};

/// Roots of lambda^2 - trace*lambda + det, classified by the discriminant's
/// sign. Propagates RadicandTooLarge from sqrt_normalize.
EigenInfo eigen2(const RatMat& A);

/// Primitive integer direction of the kernel of a nonzero 1x2 row:
/// (-b2, b1) cleared to coprime integers, orientation preserved.
RatVec kernel_dir(const RatVec& B);

} // namespace loopnt
