#include "loopnt/ntcore.hpp"

#include <algorithm>

namespace loopnt {

// ---------------------------------------------------------------------------
// NTSet construction
// ---------------------------------------------------------------------------

NTSet NTSet::empty() {
    return NTSet();
}

NTSet NTSet::ray(const QuadVec2& dir) {
    if (dir.is_zero())
        throw InternalInvariantViolation("ray direction must be nonzero");
    NTSet s;
    s.kind_ = Kind::Ray;
    s.right_ = canonical_ray(dir);
    return s;
}

NTSet NTSet::sector(const QuadVec2& g1, bool g1_closed, const QuadVec2& g2, bool g2_closed) {
    if (g1.is_zero() || g2.is_zero())
        throw InternalInvariantViolation("sector generators must be nonzero");
    QuadVec2 a = canonical_ray(g1);
    QuadVec2 b = canonical_ray(g2);
    int orient = cross(a, b).sign();
    if (orient == 0) {
        if (dot(a, b).sign() > 0) {
            // Equal directions: the span collapses to one ray, present only
            // when neither flag excludes it.
            return (g1_closed && g2_closed) ? ray(a) : empty();
        }
        throw InternalInvariantViolation(
            "antiparallel sector generators; half-planes carry an orientation");
    }
    NTSet s;
    s.kind_ = Kind::Sector;
    if (orient > 0) {
        s.right_ = a;
        s.left_ = b;
        s.right_closed_ = g1_closed;
        s.left_closed_ = g2_closed;
    } else {
        s.right_ = b;
        s.left_ = a;
        s.right_closed_ = g2_closed;
        s.left_closed_ = g1_closed;
    }
    return s;
}

NTSet NTSet::half_plane(const RatVec& row) {
    if (row.size() != 2)
        throw DimensionMismatch("half_plane needs a 1x2 guard row");
    if (is_zero(row))
        throw ZeroRow();
    // {B x > 0} lies counterclockwise of (b2, -b1): cross((b2,-b1), p) = B p.
    return half_plane_right(to_quadvec({row[1], -row[0]}));
}

NTSet NTSet::half_plane_right(const QuadVec2& right) {
    if (right.is_zero())
        throw InternalInvariantViolation("half-plane boundary must be nonzero");
    NTSet s;
    s.kind_ = Kind::Sector;
    s.right_ = canonical_ray(right);
    s.left_ = -s.right_;
    return s;
}

bool NTSet::is_half_plane() const {
    return kind_ == Kind::Sector && cross(right_, left_).is_zero();
}

std::string NTSet::str() const {
    switch (kind_) {
    case Kind::Empty: return "empty";
    case Kind::Ray: return "ray dir=" + right_.str();
    case Kind::Sector:
        return std::string(is_half_plane() ? "half-plane" : "sector") +
               " right=" + right_.str() + (right_closed_ ? " [closed]" : " [open]") +
               " left=" + left_.str() + (left_closed_ ? " [closed]" : " [open]");
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

bool member(const NTSet& s, const QuadVec2& p) {
    if (s.kind() == NTSet::Kind::Empty || p.is_zero())
        return false;
    if (s.kind() == NTSet::Kind::Ray)
        return same_ray(s.dir(), p);

    int scr = cross(s.right(), p).sign();
    if (s.is_half_plane()) {
        if (scr != 0)
            return scr > 0;
        // On the boundary line: the right or the left ray decides.
        return dot(p, s.right()).sign() > 0 ? s.right_closed() : s.left_closed();
    }
    int scl = cross(p, s.left()).sign();
    if (scr < 0 || scl < 0)
        return false;
    if (scr > 0 && scl > 0)
        return true;
    // On exactly one boundary ray (both-zero would mean p = 0).
    return scr == 0 ? s.right_closed() : s.left_closed();
}

namespace {

// Membership against the topological closure (flags treated as closed).
bool closed_member(const NTSet& s, const QuadVec2& p) {
    if (s.kind() == NTSet::Kind::Empty || p.is_zero())
        return false;
    if (s.kind() == NTSet::Kind::Ray)
        return same_ray(s.dir(), p);
    int scr = cross(s.right(), p).sign();
    if (s.is_half_plane())
        return scr >= 0;
    return scr >= 0 && cross(p, s.left()).sign() >= 0;
}

} // namespace

// ---------------------------------------------------------------------------
// Intersection
// ---------------------------------------------------------------------------

NTSet intersect(const NTSet& s1, const NTSet& s2) {
    if (s1.is_empty() || s2.is_empty())
        return NTSet::empty();
    // A cone's membership is invariant under positive scaling, so a ray is
    // contained in a cone iff its direction is a member.
    if (s1.kind() == NTSet::Kind::Ray)
        return member(s2, s1.dir()) ? s1 : NTSet::empty();
    if (s2.kind() == NTSet::Kind::Ray)
        return member(s1, s2.dir()) ? s2 : NTSet::empty();

    // Both sectors. Every extreme ray of the intersection is an extreme ray
    // of one input lying inside the closure of the other.
    std::vector<QuadVec2> survivors;
    for (const QuadVec2& c : {s1.right(), s1.left(), s2.right(), s2.left()}) {
        if (!closed_member(s1, c) || !closed_member(s2, c))
            continue;
        bool dup = std::any_of(survivors.begin(), survivors.end(),
                               [&](const QuadVec2& v) { return same_ray(v, c); });
        if (!dup)
            survivors.push_back(c);
    }

    auto included = [&](const QuadVec2& d) { return member(s1, d) && member(s2, d); };

    if (survivors.empty())
        return NTSet::empty();
    if (survivors.size() == 1)
        return included(survivors[0]) ? NTSet::ray(survivors[0]) : NTSet::empty();

    // An antiparallel survivor pair forces both inputs to be half-planes
    // over the same boundary line: either the same half-plane or opposite
    // ones (whose common points, if any, lie on the line itself).
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        for (std::size_t j = i + 1; j < survivors.size(); ++j) {
            const QuadVec2& u = survivors[i];
            const QuadVec2& v = survivors[j];
            if (!(cross(u, v).is_zero() && dot(u, v).sign() < 0))
                continue;
            if (!s1.is_half_plane() || !s2.is_half_plane())
                throw InternalInvariantViolation("antiparallel rays inside a proper sector");
            if (same_ray(s1.right(), s2.right()))
                return NTSet::half_plane_right(s1.right());
            bool u_in = included(u);
            bool v_in = included(v);
            if (u_in && v_in)
                throw InternalInvariantViolation("cone intersection is a full line");
            if (u_in)
                return NTSet::ray(u);
            if (v_in)
                return NTSet::ray(v);
            return NTSet::empty();
        }
    }

    // All survivors lie in one cone of angle < pi, so the cross-product sign
    // orders them; take the clockwise-most and counterclockwise-most.
    QuadVec2 right = survivors[0];
    QuadVec2 left = survivors[0];
    for (const QuadVec2& v : survivors) {
        if (cross(right, v).sign() < 0)
            right = v;
        if (cross(v, left).sign() < 0)
            left = v;
    }
    return NTSet::sector(right, included(right), left, included(left));
}

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::ZeroMatrix: return "ZeroMatrix";
    case CaseTag::NoPositiveEigenvalue: return "NoPositiveEigenvalue";
    case CaseTag::Lemma4: return "Lemma4";
    case CaseTag::Lemma5: return "Lemma5";
    case CaseTag::Lemma6: return "Lemma6";
    case CaseTag::Lemma7or8: return "Lemma7or8";
    case CaseTag::Lemma9: return "Lemma9";
    case CaseTag::Lemma10: return "Lemma10";
    }
    return "?";
}

AnalysisReport analyze_single(const RatMat& A, const RatVec& B) {
    if (A.rows() != 2 || A.cols() != 2 || B.size() != 2)
        throw DimensionMismatch("analyze_single needs a 2x2 update and a 1x2 guard row");

    EigenInfo eig = eigen2(A);
    if (A.is_zero() || is_zero(B))
        return {NTSet::empty(), CaseTag::ZeroMatrix, eig, {}};
    if (eig.kind == EigenKind::ComplexPair)
        return {NTSet::empty(), CaseTag::NoPositiveEigenvalue, eig, {}};

    const QuadNum& l1 = eig.values->first; // l1 >= l2
    const QuadNum& l2 = eig.values->second;
    if (l1.sign() <= 0)
        return {NTSet::empty(), CaseTag::NoPositiveEigenvalue, eig, {}};

    // alpha0 spans ker B, oriented so B A alpha0 >= 0.
    RatVec alpha0 = kernel_dir(B);
    RatVec BA = row_times_mat(B, A);
    Rational ba0 = dot(BA, alpha0);
    if (ba0.sign() < 0) {
        alpha0 = negate(alpha0);
        ba0 = -ba0;
    }
    QuadVec2 alpha0q = to_quadvec(alpha0);

    if (ba0.is_zero()) {
        // alpha0 is an eigenvector orthogonal to the guard; everything is
        // decided by one probe xi with B xi > 0.
        RatVec xi = B;
        Rational ba_xi = dot(BA, xi);
        std::vector<std::pair<std::string, QuadVec2>> wit{{"alpha0", alpha0q},
                                                          {"xi", to_quadvec(xi)}};
        if (ba_xi.sign() > 0)
            return {NTSet::half_plane(B), CaseTag::Lemma4, eig, std::move(wit)};
        return {NTSet::empty(), CaseTag::Lemma5, eig, std::move(wit)};
    }

    if (l2.sign() == 0) {
        // One eigenvalue zero, the other positive: {Bx>0, BAx>0}, which may
        // normalize down when the two half-planes degenerate.
        NTSet nt = intersect(NTSet::half_plane(B), NTSet::half_plane(BA));
        return {nt, CaseTag::Lemma6, eig, {{"alpha0", alpha0q}}};
    }

    if (l2.sign() > 0) {
        // l1 >= l2 > 0. beta2 is the eigenvector of the smaller eigenvalue,
        // or the unique direction when the repeated eigenvalue is defective.
        if (eig.full_plane)
            throw InternalInvariantViolation(
                "scalar matrix must have taken the B A alpha0 = 0 branch");
        QuadVec2 beta2 = eig.kind == EigenKind::RealRepeated ? eig.vectors[0] : eig.vectors[1];
        int sb = guard_value(B, beta2).sign();
        if (sb == 0)
            throw InternalInvariantViolation(
                "B beta2 = 0 must have taken the B A alpha0 = 0 branch");
        if (sb < 0)
            beta2 = -beta2;
        NTSet nt = NTSet::sector(beta2, /*closed*/ true, alpha0q, /*open*/ false);
        return {nt, CaseTag::Lemma7or8, eig, {{"alpha0", alpha0q}, {"beta2", beta2}}};
    }

    // l1 > 0 > l2; compare l1 against |l2| through the trace.
    Rational trace = A.at(0, 0) + A.at(1, 1);
    if (trace.sign() >= 0) {
        RatMat a_inv;
        try {
            a_inv = mat2_inverse(A);
        } catch (const SingularMatrix&) {
            throw InternalInvariantViolation("A singular despite two nonzero eigenvalues");
        }
        QuadVec2 am1 = to_quadvec(mat_apply(a_inv, alpha0));
        NTSet nt = NTSet::sector(alpha0q, false, am1, false);
        return {nt, CaseTag::Lemma9, eig, {{"alpha0", alpha0q}, {"alpha_minus1", am1}}};
    }

    QuadVec2 beta1 = eig.vectors[0];
    int sb = guard_value(B, beta1).sign();
    if (sb == 0)
        throw InternalInvariantViolation("B beta1 = 0 must have taken the B A alpha0 = 0 branch");
    if (sb < 0)
        beta1 = -beta1;
    return {NTSet::ray(beta1), CaseTag::Lemma10, eig, {{"beta", beta1}}};
}

LoopAnalysis analyze(const LoopSpec& spec) {
    validate_for_analysis(spec);
    LoopAnalysis out;
    for (std::size_t r = 0; r < spec.guard_rows(); ++r) {
        AnalysisReport rep = analyze_single(spec.A, spec.B.row(r));
        out.nt = r == 0 ? rep.nt : intersect(out.nt, rep.nt);
        out.rows.push_back(std::move(rep));
    }
    return out;
}

} // namespace loopnt
