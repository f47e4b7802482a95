#include "loopnt/linalg.hpp"

namespace loopnt {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// RatMat
// ---------------------------------------------------------------------------

RatMat::RatMat(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match matrix shape");
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

RatMat RatMat::diagonal(const RatVec& d) {
    RatMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

RatVec RatMat::row(std::size_t r) const {
    return RatVec(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool RatMat::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

RatVec mat_apply(const RatMat& A, const RatVec& v) {
    if (A.cols() != v.size())
        throw DimensionMismatch("matrix-vector shapes do not conform");
    RatVec out(A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r) {
        Rational acc(0);
        for (std::size_t c = 0; c < A.cols(); ++c)
            acc += A.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

RatVec row_times_mat(const RatVec& row, const RatMat& A) {
    if (row.size() != A.rows())
        throw DimensionMismatch("row-matrix shapes do not conform");
    RatVec out(A.cols());
    for (std::size_t c = 0; c < A.cols(); ++c) {
        Rational acc(0);
        for (std::size_t r = 0; r < A.rows(); ++r)
            acc += row[r] * A.at(r, c);
        out[c] = acc;
    }
    return out;
}

Rational dot(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size())
        throw DimensionMismatch("dot product shapes do not conform");
    Rational acc(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += x[i] * y[i];
    return acc;
}

bool is_zero(const RatVec& v) {
    for (const auto& e : v)
        if (!e.is_zero())
            return false;
    return true;
}

RatVec negate(const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = -v[i];
    return out;
}

RatMat mat2_inverse(const RatMat& A) {
    if (A.rows() != 2 || A.cols() != 2)
        throw DimensionMismatch("mat2_inverse needs a 2x2 matrix");
    Rational det = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
    if (det.is_zero())
        throw SingularMatrix();
    return RatMat(2, 2,
                  {A.at(1, 1) / det, -(A.at(0, 1) / det), -(A.at(1, 0) / det), A.at(0, 0) / det});
}

// ---------------------------------------------------------------------------
// QuadVec2
// ---------------------------------------------------------------------------

QuadVec2 operator+(const QuadVec2& u, const QuadVec2& v) {
    return {u.x1 + v.x1, u.x2 + v.x2};
}

QuadVec2 operator*(const QuadNum& k, const QuadVec2& v) {
    return {k * v.x1, k * v.x2};
}

QuadNum cross(const QuadVec2& u, const QuadVec2& v) {
    return u.x1 * v.x2 - u.x2 * v.x1;
}

QuadNum dot(const QuadVec2& u, const QuadVec2& v) {
    return u.x1 * v.x1 + u.x2 * v.x2;
}

QuadNum guard_value(const RatVec& row, const QuadVec2& p) {
    if (row.size() != 2)
        throw DimensionMismatch("guard row must have two entries");
    return QuadNum(row[0]) * p.x1 + QuadNum(row[1]) * p.x2;
}

QuadVec2 mat_apply2(const RatMat& A, const QuadVec2& v) {
    if (A.rows() != 2 || A.cols() != 2)
        throw DimensionMismatch("apply2 needs a 2x2 matrix");
    return {QuadNum(A.at(0, 0)) * v.x1 + QuadNum(A.at(0, 1)) * v.x2,
            QuadNum(A.at(1, 0)) * v.x1 + QuadNum(A.at(1, 1)) * v.x2};
}

QuadVec2 to_quadvec(const RatVec& v) {
    if (v.size() != 2)
        throw DimensionMismatch("expected a 2-vector");
    return {QuadNum(v[0]), QuadNum(v[1])};
}

QuadVec2 canonical_line(const QuadVec2& v) {
    if (!v.x1.is_zero())
        return {QuadNum(1), v.x2 / v.x1};
    if (!v.x2.is_zero())
        return {QuadNum(0), QuadNum(1)};
    return v;
}

QuadVec2 canonical_ray(const QuadVec2& v) {
    const QuadNum& lead = v.x1.is_zero() ? v.x2 : v.x1;
    if (lead.is_zero())
        return v;
    QuadNum scale = lead.abs();
    return {v.x1 / scale, v.x2 / scale};
}

bool same_ray(const QuadVec2& u, const QuadVec2& v) {
    return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

// ---------------------------------------------------------------------------
// Eigen decomposition
// ---------------------------------------------------------------------------

namespace {

// Kernel direction of A - lambda*I, assuming lambda is an eigenvalue (so the
// matrix is singular and some nonzero row determines the kernel).
QuadVec2 eigenvector_for(const RatMat& A, const QuadNum& lambda) {
    QuadNum m00 = QuadNum(A.at(0, 0)) - lambda;
    QuadNum m01{A.at(0, 1)};
    QuadNum m10{A.at(1, 0)};
    QuadNum m11 = QuadNum(A.at(1, 1)) - lambda;
    QuadVec2 v;
    if (!m00.is_zero() || !m01.is_zero())
        v = {-m01, m00};
    else if (!m10.is_zero() || !m11.is_zero())
        v = {-m11, m10};
    else
        throw InternalInvariantViolation("eigenvector_for called on a scalar matrix");
    return canonical_line(v);
}

} // namespace

EigenInfo eigen2(const RatMat& A) {
    if (A.rows() != 2 || A.cols() != 2)
        throw DimensionMismatch("eigen2 needs a 2x2 matrix");
    Rational trace = A.at(0, 0) + A.at(1, 1);
    Rational det = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
    Rational disc = trace * trace - Rational(4) * det;

    int ds = disc.sign();
    if (ds < 0)
        return {EigenKind::ComplexPair, std::nullopt, {}, false};

    Rational half_trace = trace / Rational(2);
    if (ds == 0) {
        QuadNum lambda{half_trace};
        bool scalar = A.at(0, 1).is_zero() && A.at(1, 0).is_zero() && A.at(0, 0) == A.at(1, 1);
        EigenInfo info{EigenKind::RealRepeated, std::make_pair(lambda, lambda), {}, scalar};
        if (!scalar)
            info.vectors.push_back(eigenvector_for(A, lambda));
        return info;
    }

    // disc = coef^2 * rad, so the roots are half_trace +/- (coef/2)*sqrt(rad).
    SqrtParts sp = sqrt_normalize(disc);
    Rational half_coef = sp.coef / Rational(2);
    QuadNum l1(half_trace, half_coef, sp.radicand);
    QuadNum l2(half_trace, -half_coef, sp.radicand);
    EigenInfo info{EigenKind::RealDistinct, std::make_pair(l1, l2), {}, false};
    info.vectors.push_back(eigenvector_for(A, l1));
    info.vectors.push_back(eigenvector_for(A, l2));
    return info;
}

RatVec kernel_dir(const RatVec& B) {
    if (B.size() != 2)
        throw DimensionMismatch("kernel_dir needs a 1x2 row");
    if (is_zero(B))
        throw ZeroRow();
    Rational u = -B[1];
    Rational v = B[0];
    // Clear denominators, then divide by the gcd; orientation is preserved.
    Int scale = mp::lcm(u.den(), v.den());
    Int ui = u.num() * (scale / u.den());
    Int vi = v.num() * (scale / v.den());
    Int g = mp::gcd(mp::abs(ui), mp::abs(vi));
    return {Rational(ui / g), Rational(vi / g)};
}

} // namespace loopnt
