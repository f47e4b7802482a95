#pragma once

/**
 * @file oracle.hpp
 * @brief Independent exact loop simulation and the differential fuzzing
 *        harness that cross-checks the case analysis against it.
 *
 * Simulation can only refute non-termination, never confirm it: Survived
 * means the step budget ran out with the guard still holding, and is
 * reported as inconclusive everywhere.
 */

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "loopnt/ntcore.hpp"

namespace loopnt {

// ---------------------------------------------------------------------------
// Simulation
// ---------------------------------------------------------------------------

struct SimResult {
    enum class Outcome { Terminated, Survived };
    Outcome outcome;
    /// Terminated: completed iterations before the guard failed (the guard is
    /// checked before each update, so Terminated(0) fails at entry).
    /// Survived: the step budget.
    std::size_t steps;

    bool terminated() const { return outcome == Outcome::Terminated; }
    std::string str() const;
};

/// Runs the loop exactly from x0. The guard is checked max_steps+1 times at
/// most; Survived(max_steps) means every check passed.
/// Throws DimensionMismatch and StepBudgetZero.
SimResult simulate(const LoopSpec& spec, const std::vector<Rational>& x0, std::size_t max_steps);
SimResult simulate(const LoopSpec& spec, const std::vector<QuadNum>& x0, std::size_t max_steps);

/// Guard conjunction at a state, honoring per-row strictness.
bool guard_holds(const LoopSpec& spec, const std::vector<QuadNum>& x);
bool guard_holds(const LoopSpec& spec, const std::vector<Rational>& x);

// ---------------------------------------------------------------------------
// Deterministic randomness
// ---------------------------------------------------------------------------

/// mt19937_64 with helpers that avoid std::uniform_int_distribution, whose
/// algorithm is implementation-defined; reports must be reproducible from
/// the seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Generator state for one trial, derived from (seed, index) so trials
    /// could run concurrently without changing any report.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index);

    std::uint64_t bits() { return engine_(); }
    long long below(long long n); // uniform-ish in [0, n)
    long long range(long long lo, long long hi); // inclusive
    Rational rational(long long max_abs_num, long long max_den);
    Rational positive_rational(long long max_num, long long max_den);

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Point sampling
// ---------------------------------------------------------------------------

/// Sample points around an NT set: interior combinations of the generators,
/// the generators themselves (boundary), negated/reflected combinations
/// (exterior), topped up with uniform random rational points. Exact
/// membership of every returned point is decidable by construction.
std::vector<QuadVec2> sample_points(const NTSet& nt, Rng& rng, std::size_t count);

// ---------------------------------------------------------------------------
// Differential fuzzing
// ---------------------------------------------------------------------------

struct FuzzViolation {
    std::string loop;  // DSL text of the offending loop
    std::string point;
    std::string claim; // what the analysis asserted
    std::string sim;   // what simulation (or a property re-check) observed
};

struct FuzzConfig {
    std::size_t trials = 1000;
    long long coeff_bound = 5;
    std::size_t points_per_loop = 40;
    std::size_t max_steps = 64;
    std::uint64_t seed = 42;
    /// Replaces the default uniform-integer loop distribution when set.
    std::function<LoopSpec(Rng&)> loop_gen;
};

struct FuzzReport {
    std::size_t trials = 0;
    std::size_t loops_generated = 0;
    std::size_t points_checked = 0;
    std::vector<FuzzViolation> violations;
    std::uint64_t seed = 0;

    bool passed() const { return violations.empty(); }
};

/// Generates random 2-variable single-guard strict loops with integer
/// entries in [-coeff_bound, coeff_bound] (skipping A = 0 and B = 0), runs
/// the case analysis, and checks against exact simulation:
///   (i)  every point claimed inside NT survives the step budget,
///   (ii) every point that terminates within the budget was claimed outside,
/// plus forward-invariance, cone and convexity spot checks.
/// Deterministic given the seed. Violations are data, not errors.
FuzzReport fuzz_compare(const FuzzConfig& cfg);

/// Single-guard strict LoopSpec for a generated (A, B) pair.
LoopSpec make_loop2(const RatMat& A, const RatVec& B);

/// Random loop with integer entries in [-coeff_bound, coeff_bound]; A and B
/// are re-drawn while zero.
LoopSpec random_loop2(Rng& rng, long long coeff_bound);

} // namespace loopnt
