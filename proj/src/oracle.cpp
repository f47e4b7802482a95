#include "loopnt/oracle.hpp"

namespace loopnt {

// ---------------------------------------------------------------------------
// Simulation
// ---------------------------------------------------------------------------

std::string SimResult::str() const {
    if (outcome == Outcome::Terminated)
        return "Terminated(" + std::to_string(steps) + ")";
    return "Survived(" + std::to_string(steps) + ") [inconclusive]";
}

namespace {

template <class Scalar>
bool guard_holds_impl(const LoopSpec& spec, const std::vector<Scalar>& x) {
    for (std::size_t r = 0; r < spec.guard_rows(); ++r) {
        Scalar acc{0};
        for (std::size_t c = 0; c < spec.dim(); ++c)
            acc += Scalar(spec.B.at(r, c)) * x[c];
        int s = acc.sign();
        if (spec.guard_strict[r] ? s <= 0 : s < 0)
            return false;
    }
    return true;
}

template <class Scalar>
std::vector<Scalar> step(const LoopSpec& spec, const std::vector<Scalar>& x) {
    std::vector<Scalar> out(x.size(), Scalar{0});
    for (std::size_t r = 0; r < spec.dim(); ++r) {
        Scalar acc{0};
        for (std::size_t c = 0; c < spec.dim(); ++c)
            acc += Scalar(spec.A.at(r, c)) * x[c];
        out[r] = acc;
    }
    return out;
}

template <class Scalar>
SimResult simulate_impl(const LoopSpec& spec, std::vector<Scalar> x, std::size_t max_steps) {
    if (max_steps == 0)
        throw StepBudgetZero();
    if (x.size() != spec.dim())
        throw DimensionMismatch("initial state has " + std::to_string(x.size()) +
                                " coordinates, loop has " + std::to_string(spec.dim()));
    for (std::size_t k = 0;; ++k) {
        if (!guard_holds_impl(spec, x))
            return {SimResult::Outcome::Terminated, k};
        if (k == max_steps)
            return {SimResult::Outcome::Survived, max_steps};
        x = step(spec, x);
    }
}

} // namespace

SimResult simulate(const LoopSpec& spec, const std::vector<Rational>& x0, std::size_t max_steps) {
    return simulate_impl(spec, x0, max_steps);
}

SimResult simulate(const LoopSpec& spec, const std::vector<QuadNum>& x0, std::size_t max_steps) {
    return simulate_impl(spec, x0, max_steps);
}

bool guard_holds(const LoopSpec& spec, const std::vector<QuadNum>& x) {
    return guard_holds_impl(spec, x);
}

bool guard_holds(const LoopSpec& spec, const std::vector<Rational>& x) {
    return guard_holds_impl(spec, x);
}

// ---------------------------------------------------------------------------
// Rng
// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index + 1)));
}

long long Rng::below(long long n) {
    return n <= 1 ? 0 : static_cast<long long>(bits() % static_cast<std::uint64_t>(n));
}

long long Rng::range(long long lo, long long hi) {
    return lo + below(hi - lo + 1);
}

Rational Rng::rational(long long max_abs_num, long long max_den) {
    return Rational(Int(range(-max_abs_num, max_abs_num)), Int(range(1, max_den)));
}

Rational Rng::positive_rational(long long max_num, long long max_den) {
    return Rational(Int(range(1, max_num)), Int(range(1, max_den)));
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

std::vector<QuadVec2> sample_points(const NTSet& nt, Rng& rng, std::size_t count) {
    std::vector<QuadVec2> pts;
    pts.reserve(count);

    auto push = [&](QuadVec2 p) {
        if (pts.size() < count && !p.is_zero())
            pts.push_back(std::move(p));
    };

    if (nt.kind() == NTSet::Kind::Ray) {
        const QuadVec2& d = nt.dir();
        push(d);
        push(QuadNum(rng.positive_rational(9, 9)) * d);
        push(-d);
        push({-d.x2, d.x1}); // orthogonal probe
        push(d + QuadVec2{-d.x2, d.x1});
    } else if (nt.kind() == NTSet::Kind::Sector) {
        const QuadVec2& r = nt.right();
        const QuadVec2& l = nt.left();
        // Boundary points: the generators and positive multiples.
        push(r);
        push(l);
        push(QuadNum(rng.positive_rational(9, 9)) * r);
        push(QuadNum(rng.positive_rational(9, 9)) * l);
        // Exterior: negations and reflected combinations, which leave the
        // closed cone by construction.
        push(-r);
        push(-l);
        QuadNum k1{rng.positive_rational(9, 9)};
        QuadNum k2{rng.positive_rational(9, 9)};
        push(k1 * r + (-k2) * l);
        push((-k1) * r + k2 * l);
        // Interior: positive combinations. A half-plane needs an inward
        // perpendicular instead, since its generators only span the boundary
        // line.
        if (nt.is_half_plane()) {
            QuadVec2 inward{-r.x2, r.x1}; // 90 degrees counterclockwise of right
            push(inward);
            while (pts.size() < count) {
                QuadNum a{rng.rational(9, 9)};
                QuadNum b{rng.positive_rational(9, 9)};
                push(a * r + b * inward);
            }
        } else {
            while (pts.size() < count) {
                QuadNum a{rng.positive_rational(9, 9)};
                QuadNum b{rng.positive_rational(9, 9)};
                push(a * r + b * l);
            }
        }
    }

    // Top up with uniform random rational points (primary source for Empty).
    while (pts.size() < count)
        push({QuadNum(rng.rational(9, 4)), QuadNum(rng.rational(9, 4))});
    return pts;
}

// ---------------------------------------------------------------------------
// Fuzzing
// ---------------------------------------------------------------------------

LoopSpec make_loop2(const RatMat& A, const RatVec& B) {
    LoopSpec spec;
    spec.var_names = {"x1", "x2"};
    spec.A = A;
    spec.B = RatMat(1, 2, {B[0], B[1]});
    spec.guard_strict = {true};
    return spec;
}

LoopSpec random_loop2(Rng& rng, long long coeff_bound) {
    auto entry = [&] { return Rational(Int(rng.range(-coeff_bound, coeff_bound))); };
    RatMat A(2, 2);
    do {
        A = RatMat(2, 2, {entry(), entry(), entry(), entry()});
    } while (A.is_zero());
    RatVec B;
    do {
        B = {entry(), entry()};
    } while (is_zero(B));
    return make_loop2(A, B);
}

FuzzReport fuzz_compare(const FuzzConfig& cfg) {
    if (cfg.trials == 0 || cfg.points_per_loop == 0 || cfg.max_steps == 0 ||
        cfg.coeff_bound <= 0)
        throw Error("fuzz_compare requires positive counts");

    FuzzReport rep;
    rep.trials = cfg.trials;
    rep.seed = cfg.seed;

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(cfg.seed, t);
        LoopSpec spec = cfg.loop_gen ? cfg.loop_gen(rng) : random_loop2(rng, cfg.coeff_bound);
        ++rep.loops_generated;

        AnalysisReport ar = analyze_single(spec.A, spec.B.row(0));
        const NTSet& nt = ar.nt;
        std::string loop_text = render_loop(spec);

        auto complain = [&](const QuadVec2& p, const std::string& claim, const std::string& sim) {
            rep.violations.push_back({loop_text, p.str(), claim, sim});
        };

        std::vector<QuadVec2> pts = sample_points(nt, rng, cfg.points_per_loop);
        for (const QuadVec2& p : pts) {
            ++rep.points_checked;
            bool claimed = member(nt, p);
            // Rational points take the cheaper rational simulator.
            SimResult sr =
                p.x1.is_rational() && p.x2.is_rational()
                    ? simulate(spec, std::vector<Rational>{p.x1.rat_part(), p.x2.rat_part()},
                               cfg.max_steps)
                    : simulate(spec, std::vector<QuadNum>{p.x1, p.x2}, cfg.max_steps);
            if (claimed && sr.terminated())
                complain(p, "inside NT", sr.str());
            // (terminated => claimed-out is the contrapositive of the above;
            // stated separately in reports for readability)

            // Forward invariance: p in NT <=> guard(p) && A p in NT.
            bool guard_ok = guard_value(spec.B.row(0), p).sign() > 0;
            bool next_in = member(nt, mat_apply2(spec.A, p));
            if (claimed != (guard_ok && next_in))
                complain(p, claimed ? "inside NT" : "outside NT",
                         std::string("forward invariance: guard ") +
                             (guard_ok ? "holds" : "fails") + ", successor " +
                             (next_in ? "inside" : "outside"));

            // Cone: membership is invariant under positive scaling.
            QuadNum k{rng.positive_rational(9, 9)};
            if (member(nt, k * p) != claimed)
                complain(p, claimed ? "inside NT" : "outside NT",
                         "scaled copy classified differently");
        }

        // Convexity spot checks on pairs of claimed members.
        for (std::size_t i = 0; i + 1 < pts.size() && i < 6; i += 2) {
            const QuadVec2& p = pts[i];
            const QuadVec2& q = pts[i + 1];
            if (member(nt, p) && member(nt, q)) {
                QuadVec2 mid = QuadNum(Rational(1, 2)) * (p + q);
                if (!member(nt, mid))
                    complain(mid, "midpoint of two members", "classified outside");
            }
        }
    }
    return rep;
}

} // namespace loopnt
