// loopnt: exact non-termination sets of simple homogeneous linear loops.
//
// Subcommands: analyze, member, simulate, fuzz, p3, render.
// Exit codes: 0 ok, 1 parse/input, 2 unsupported, 3 internal invariant,
//             4 radicand incompatibility, 5 fuzz violations, 6 IO.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "loopnt/demo3.hpp"
#include "loopnt/jsonio.hpp"
#include "loopnt/ntcore.hpp"
#include "loopnt/oracle.hpp"
#include "loopnt/svg.hpp"

namespace {

using namespace loopnt;
using nlohmann::json;

enum ExitCode : int {
    ExitOk = 0,
    ExitParse = 1,
    ExitUnsupported = 2,
    ExitInternal = 3,
    ExitRadicand = 4,
    ExitViolations = 5,
    ExitIo = 6,
};

struct Options {
    std::string format = "text";
    std::string color = "auto";
    bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "x1, x2" -> exact scalars (rational or a+b*sqrt(d))
std::vector<QuadNum> parse_point(const std::string& text) {
    std::vector<QuadNum> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? comma : comma - start);
        out.push_back(parse_scalar(part));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

void print_report_text(std::ostream& os, const AnalysisReport& r) {
    os << "NT: " << r.nt.str() << "\n";
    os << "case: " << to_string(r.tag) << "\n";
    if (r.eigen.values)
        os << "eigenvalues: " << r.eigen.values->first << ", " << r.eigen.values->second << "\n";
    else
        os << "eigenvalues: complex pair (no real eigen-data)\n";
    for (const auto& [name, v] : r.witnesses)
        os << "witness " << name << " = " << v.str() << "\n";
}

int cmd_analyze(const Options& opt, const std::string& file) {
    LoopSpec spec = parse_loop(read_file(file));
    LoopAnalysis a = analyze(spec);
    if (opt.json()) {
        std::cout << to_json(a).dump(2) << "\n";
    } else {
        if (a.rows.size() == 1) {
            print_report_text(std::cout, a.rows[0]);
        } else {
            std::cout << "NT: " << a.nt.str() << " (intersection of " << a.rows.size()
                      << " guard rows)\n";
            for (std::size_t i = 0; i < a.rows.size(); ++i) {
                std::cout << "-- row " << i + 1 << " --\n";
                print_report_text(std::cout, a.rows[i]);
            }
        }
    }
    return ExitOk;
}

int cmd_member(const Options& opt, const std::string& file, const std::string& point) {
    LoopSpec spec = parse_loop(read_file(file));
    LoopAnalysis a = analyze(spec);
    std::vector<QuadNum> coords = parse_point(point);
    if (coords.size() != 2)
        throw SyntaxError("expected exactly two coordinates", 1, 1);
    QuadVec2 p{coords[0], coords[1]};
    bool in = member(a.nt, p);

    // The deciding sign tests, phrased against the stored generators.
    json tests = json::array();
    auto add_test = [&](const std::string& what, int sign) {
        tests.push_back({{"test", what}, {"sign", sign}});
    };
    if (a.nt.kind() == NTSet::Kind::Ray) {
        add_test("cross(dir, p)", cross(a.nt.dir(), p).sign());
        add_test("dot(dir, p)", dot(a.nt.dir(), p).sign());
    } else if (a.nt.kind() == NTSet::Kind::Sector) {
        add_test("cross(right, p)", cross(a.nt.right(), p).sign());
        add_test("cross(p, left)", cross(p, a.nt.left()).sign());
    }

    if (opt.json()) {
        json j;
        j["member"] = in;
        j["point"] = json_scalar_pair(p);
        j["nt"] = to_json(a.nt);
        j["tests"] = tests;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (in ? "true" : "false") << "\n";
        std::cout << "point " << p.str() << " vs NT " << a.nt.str() << "\n";
        for (const auto& t : tests)
            std::cout << "  " << t["test"].get<std::string>() << " = "
                      << t["sign"].get<int>() << "\n";
    }
    return ExitOk;
}

int cmd_simulate(const Options& opt, const std::string& file, const std::string& point,
                 std::size_t max_steps, bool trace) {
    LoopSpec spec = parse_loop(read_file(file));
    std::vector<QuadNum> x = parse_point(point);
    SimResult res = simulate(spec, x, max_steps);

    std::vector<std::string> trail;
    if (trace) {
        std::vector<QuadNum> state = x;
        std::size_t upto = res.terminated() ? res.steps : res.steps;
        for (std::size_t k = 0; k <= upto; ++k) {
            std::string line = "(";
            for (std::size_t i = 0; i < state.size(); ++i)
                line += (i ? ", " : "") + state[i].str();
            line += ")";
            trail.push_back(line);
            if (k < upto) {
                std::vector<QuadNum> next(state.size(), QuadNum(0));
                for (std::size_t r = 0; r < spec.dim(); ++r) {
                    QuadNum acc{0};
                    for (std::size_t c = 0; c < spec.dim(); ++c)
                        acc += QuadNum(spec.A.at(r, c)) * state[c];
                    next[r] = acc;
                }
                state = next;
            }
        }
        if (res.terminated())
            trail.push_back("guard failed here");
    }

    if (opt.json()) {
        json j = to_json(res);
        if (trace)
            j["trace"] = trail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << res.str() << "\n";
        for (const auto& t : trail)
            std::cout << "  " << t << "\n";
    }
    return ExitOk;
}

int cmd_fuzz(const Options& opt, const FuzzConfig& cfg) {
    FuzzReport rep = fuzz_compare(cfg);
    if (opt.json()) {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "trials: " << rep.trials << "\n"
                  << "loops generated: " << rep.loops_generated << "\n"
                  << "points checked: " << rep.points_checked << "\n"
                  << "seed: " << rep.seed << "\n"
                  << "violations: " << rep.violations.size() << "\n";
        for (const auto& v : rep.violations)
            std::cout << "  point " << v.point << " claimed " << v.claim << " but " << v.sim
                      << "\n    in " << v.loop << "\n";
    }
    return rep.passed() ? ExitOk : ExitViolations;
}

int cmd_p3(const Options& opt, long long check_boundary, const std::string& poly,
           long long tau_samples) {
    if (check_boundary > 0) {
        auto K = static_cast<std::size_t>(check_boundary);
        BoundaryCheck c = check_boundary_guard(K);
        bool ok = c.base_on_guard_line && c.all_positive;
        if (opt.json()) {
            std::cout << to_json(c, 8).dump(2) << "\n";
        } else {
            std::cout << "boundary sequence p_n = (2^-n, -3^-n, 5^-n) for the loop\n"
                      << "  while (x1 + 2*x2 + x3 >= 0) { x := diag(2,3,5) x }\n";
            std::cout << "guard value at p0: " << (c.base_on_guard_line ? "0 (on the line)" : "NONZERO")
                      << "\n";
            std::cout << "2^k - 2*3^k + 5^k for k = 1.." << K << ": "
                      << (c.all_positive ? "all positive" : "NOT all positive") << "\n";
            for (std::size_t i = 0; i < c.values.size() && i < 5; ++i)
                std::cout << "  k=" << i + 1 << ": " << c.values[i] << "\n";
            if (K > 5)
                std::cout << "  ... (k=" << K << " has " << c.values.back().str().size()
                          << " digits)\n";
            std::cout << "so p0 starts on the guard line and every iterate satisfies the guard\n"
                         "strictly; the same follows for each p_n by A p_n = p_{n-1}. Every p_n\n"
                         "is a boundary point of the non-termination set. A set with infinitely\n"
                         "many such points on which no nonzero polynomial can vanish (see\n"
                         "--poly) has no finite polynomial description.\n";
        }
        return ok ? ExitOk : ExitInternal;
    }

    if (!poly.empty()) {
        Poly3 f = parse_poly3(poly);
        if (f.is_zero())
            throw ZeroPolynomial();
        std::size_t N = nonvanishing_bound(f);
        // Audit the bound by exact evaluation on a window past it.
        const std::size_t window = 200;
        std::size_t zeros = 0;
        for (std::size_t n = N; n <= N + window; ++n)
            if (boundary_eval_scaled(f, n) == 0)
                ++zeros;
        if (opt.json()) {
            json j;
            j["poly"] = f.str();
            j["bound"] = N;
            j["audited_window"] = {{"from", N}, {"to", N + window}};
            j["zeros_found"] = zeros;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "f = " << f.str() << "\n";
            std::cout << "N = " << N << ": f(p_n) != 0 certified for all n >= N\n";
            std::cout << "audit: exact evaluation on n in [" << N << ", " << N + window << "], "
                      << zeros << " zeros found\n";
            std::cout << "no nonzero polynomial vanishes on a tail of the boundary sequence;\n"
                         "combined with --check-boundary this rules out any description of the\n"
                         "non-termination set by finitely many polynomial (in)equalities.\n";
        }
        return zeros == 0 ? ExitOk : ExitInternal;
    }

    // tau sampling demo
    auto M = static_cast<std::size_t>(tau_samples);
    LoopSpec spec = p3_spec();
    Rng rng(20260809);
    std::size_t invariant_ok = 0, simulated = 0, survived = 0;
    for (std::size_t i = 0; i < M; ++i) {
        // Rejection-sample a rational point of tau.
        Rational x3(Int(rng.range(1, 400)), Int(rng.range(1, 40)));
        Rational x1 = Rational(Int(rng.range(-120, 120)), Int(360)) * x3;
        Rational x2 = Rational(Int(rng.range(-120, 120)), Int(360)) * x3;
        std::vector<Rational> x{x1, x2, x3};
        if (!tau_member(x)) {
            --i; // resample
            continue;
        }
        bool guard_ok = guard_holds(spec, x);
        std::vector<Rational> next = mat_apply(spec.A, x);
        if (guard_ok && tau_member(next))
            ++invariant_ok;
        if (simulated < 50) {
            ++simulated;
            if (!simulate(spec, x, 50).terminated())
                ++survived;
        }
    }
    bool ok = invariant_ok == M && survived == simulated;
    if (opt.json()) {
        json j;
        j["samples"] = M;
        j["forward_invariant"] = invariant_ok;
        j["simulated"] = simulated;
        j["survived_budget"] = survived;
        j["passed"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "tau samples: " << M << ", forward-invariant: " << invariant_ok
                  << ", simulated: " << simulated << ", survived budget: " << survived << "\n";
    }
    return ok ? ExitOk : ExitInternal;
}

int cmd_render(const std::string& file, const std::string& out) {
    LoopSpec spec = parse_loop(read_file(file));
    LoopAnalysis a = analyze(spec);
    std::string svg = render_svg(spec, a);
    std::ofstream os(out, std::ios::binary);
    if (!os)
        throw std::ios_base::failure("cannot open '" + out + "' for writing");
    os << svg;
    if (!os)
        throw std::ios_base::failure("failed writing '" + out + "'");
    std::cout << "wrote " << out << "\n";
    return ExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact non-termination sets of simple homogeneous linear loops"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags are accepted after the subcommand too

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--color", opt.color, "Color mode (reserved)")
        ->check(CLI::IsMember({"auto", "never"}))
        ->capture_default_str();

    std::string file, point, poly, svg_out;
    std::size_t max_steps = 100;
    bool trace = false;
    FuzzConfig fuzz;
    long long check_boundary = 0, tau_samples = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "Compute the NT set of a loop file");
    analyze_cmd->add_option("file", file, "Loop DSL file")->required();

    auto* member_cmd = app.add_subcommand("member", "Test a point against the NT set");
    member_cmd->add_option("file", file, "Loop DSL file")->required();
    member_cmd->add_option("--point", point, "Point \"x1, x2\" (exact scalars)")->required();

    auto* sim_cmd = app.add_subcommand("simulate", "Run the loop exactly from a point");
    sim_cmd->add_option("file", file, "Loop DSL file")->required();
    sim_cmd->add_option("--point", point, "Initial state (exact scalars)")->required();
    sim_cmd->add_option("--max-steps", max_steps, "Step budget")->capture_default_str();
    sim_cmd->add_flag("--trace", trace, "Print the visited states");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential check of analysis vs simulation");
    fuzz_cmd->add_option("--trials", fuzz.trials)->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz_cmd->add_option("--coeff-bound", fuzz.coeff_bound)->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz_cmd->add_option("--points", fuzz.points_per_loop)->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz_cmd->add_option("--max-steps", fuzz.max_steps)->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz_cmd->add_option("--seed", fuzz.seed)->capture_default_str();

    auto* p3_cmd = app.add_subcommand("p3", "Three-variable demonstrator checks");
    auto* opt_cb = p3_cmd->add_option("--check-boundary", check_boundary,
                                      "Verify the boundary sequence guard values for k = 1..K")
                       ->check(CLI::PositiveNumber);
    auto* opt_poly =
        p3_cmd->add_option("--poly", poly, "Non-vanishing bound for a polynomial in x1,x2,x3");
    auto* opt_tau = p3_cmd->add_option("--tau-samples", tau_samples,
                                       "Check forward invariance on M sampled points of tau")
                        ->check(CLI::PositiveNumber);
    opt_cb->excludes(opt_poly)->excludes(opt_tau);
    opt_poly->excludes(opt_tau);

    auto* render_cmd = app.add_subcommand("render", "Render the NT set as an SVG");
    render_cmd->add_option("file", file, "Loop DSL file")->required();
    render_cmd->add_option("--svg", svg_out, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ExitParse;
    }

    try {
        if (*analyze_cmd)
            return cmd_analyze(opt, file);
        if (*member_cmd)
            return cmd_member(opt, file, point);
        if (*sim_cmd)
            return cmd_simulate(opt, file, point, max_steps, trace);
        if (*fuzz_cmd)
            return cmd_fuzz(opt, fuzz);
        if (*p3_cmd) {
            if (check_boundary == 0 && poly.empty() && tau_samples == 0) {
                std::cerr << "p3: pick one of --check-boundary, --poly, --tau-samples\n";
                return ExitParse;
            }
            return cmd_p3(opt, check_boundary, poly, tau_samples);
        }
        if (*render_cmd)
            return cmd_render(file, svg_out);
    } catch (const UnsupportedDimension& e) {
        std::cerr << "unsupported: " << e.what()
                  << "\n(three-variable demonstrations live under the `p3` subcommand)\n";
        return ExitUnsupported;
    } catch (const UnsupportedGuard& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return ExitUnsupported;
    } catch (const InternalInvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return ExitInternal;
    } catch (const IncompatibleRadicands& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitRadicand;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return ExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitParse;
    }
    return ExitOk;
}
