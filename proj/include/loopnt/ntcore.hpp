#pragma once

/**
 * @file ntcore.hpp
 * @brief Non-termination sets of two-variable homogeneous loops: the planar
 *        cone representation, exact membership and intersection, and the
 *        eigenvalue case analysis that computes NT for a single guard row.
 *
 * An NT set is always empty, a ray from the origin, or a sector between two
 * rays. A sector of angle exactly pi (antiparallel generators) encodes an
 * open half-plane; its boundary flags are both open by construction. The
 * origin is never a member: a strict guard fails there.
 */

#include <string>
#include <utility>
#include <vector>

#include "loopnt/frontend.hpp"
#include "loopnt/linalg.hpp"

namespace loopnt {

// ---------------------------------------------------------------------------
// NTSet
// ---------------------------------------------------------------------------

class NTSet {
public:
    enum class Kind { Empty, Ray, Sector };

    NTSet() = default; // the empty set

    static NTSet empty();

    /// {k*dir : k > 0}.
    static NTSet ray(const QuadVec2& dir);

    /// Convex cone spanned by two independent generators, each carrying its
    /// own closure flag. Orders the pair so cross(right, left) > 0 and
    /// canonically scales both. Equal-direction generators collapse to a Ray
    /// (or Empty unless both flags are closed); antiparallel generators are
    /// rejected; build half-planes through half_plane()/half_plane_right().
    static NTSet sector(const QuadVec2& g1, bool g1_closed, const QuadVec2& g2, bool g2_closed);

    /// The open half-plane {x : row . x > 0} as a sector of angle pi.
    static NTSet half_plane(const RatVec& row);

    /// Open half-plane {p : cross(right, p) > 0} from its right boundary ray.
    static NTSet half_plane_right(const QuadVec2& right);

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }

    const QuadVec2& dir() const { return right_; } // Ray only
    const QuadVec2& right() const { return right_; }
    const QuadVec2& left() const { return left_; }
    bool right_closed() const { return right_closed_; }
    bool left_closed() const { return left_closed_; }

    /// Angle is exactly pi (antiparallel generators).
    bool is_half_plane() const;

    bool operator==(const NTSet& o) const = default;
    std::string str() const;

private:
    Kind kind_ = Kind::Empty;
    QuadVec2 right_{};
    QuadVec2 left_{};
    bool right_closed_ = false;
    bool left_closed_ = false;
};

/// Exact membership test. The origin is never a member. Decided by the signs
/// of cross products against the generators plus the closure flags.
bool member(const NTSet& s, const QuadVec2& p);

/// Exact intersection of two planar cones, normalized: empty interior plus
/// excluded boundaries collapse to Empty, a single surviving direction to
/// Ray.
NTSet intersect(const NTSet& s1, const NTSet& s2);

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

enum class CaseTag {
    ZeroMatrix,
    NoPositiveEigenvalue,
    Lemma4,
    Lemma5,
    Lemma6,
    Lemma7or8,
    Lemma9,
    Lemma10,
};

std::string to_string(CaseTag tag);

/// NT set of one guard row together with how it was derived: the branch tag,
/// the eigen-data, and the witness vectors the branch actually used.
struct AnalysisReport {
    NTSet nt;
    CaseTag tag;
    EigenInfo eigen;
    std::vector<std::pair<std::string, QuadVec2>> witnesses;
};

/// Case analysis for while (B x > 0) { x := A x } with a single guard row.
///
/// Branches, in evaluation order:
///   - A = 0 or B = 0                      -> Empty           (ZeroMatrix)
///   - no positive real eigenvalue          -> Empty           (NoPositiveEigenvalue)
///   - B A alpha0 = 0, B A xi > 0           -> half-plane Bx>0 (Lemma4)
///   - B A alpha0 = 0, B A xi <= 0          -> Empty           (Lemma5)
///   - an eigenvalue is 0 (other positive)  -> {Bx>0, BAx>0}   (Lemma6)
///   - l1 >= l2 > 0                         -> [beta2, alpha0) (Lemma7or8)
///   - l1 > 0 > l2, l1 >= |l2|              -> (alpha0, A^-1 alpha0) (Lemma9)
///   - l1 > 0 > l2, l1 < |l2|               -> ray(beta1)      (Lemma10)
///
/// where alpha0 spans the kernel of B, oriented so B A alpha0 >= 0, and
/// xi = B transposed (so B xi > 0 always).
AnalysisReport analyze_single(const RatMat& A, const RatVec& B);

/// Whole-loop result: per-row reports plus their intersection.
struct LoopAnalysis {
    NTSet nt;
    std::vector<AnalysisReport> rows;
};

/// Runs validate_for_analysis, then folds intersect over analyze_single of
/// every guard row.
LoopAnalysis analyze(const LoopSpec& spec);

} // namespace loopnt
