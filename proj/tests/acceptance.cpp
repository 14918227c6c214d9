// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mcanon/bench.hpp"
#include "mcanon/canonical_form.hpp"
#include "mcanon/ideal_io.hpp"
#include "mcanon/invariance.hpp"
#include "mcanon/koszul_depth.hpp"
#include "mcanon/stanley_depth.hpp"
#include "oracles.hpp"

namespace {

using namespace mcanon;

constexpr std::uint64_t kSeed = 20240601;
constexpr double kMinBoxRatio = 9000.0;
constexpr double kMinSdepthSpeedup = 100.0;
constexpr double kRawTimeoutSeconds = 300.0;

struct Outcome {
    bool ok = true;
    std::string detail;
};

Factor factor_of(const std::string& text) { return parse_ideal_file(text).factor(); }

MonomialIdeal maximal_ideal(std::size_t n) {
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(Monomial(n).with_exponent(j, 1));
    return MonomialIdeal(n, gens);
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, Exponent max_exponent) {
    std::vector<Monomial> gens(1 + rng() % 5);
    for (auto& g : gens) {
        std::vector<Exponent> e(n);
        for (auto& x : e) x = std::uniform_int_distribution<Exponent>(0, max_exponent)(rng);
        g = Monomial(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

Outcome golden_forms() {
    struct Case {
        const char* input;
        const char* expected;
    };
    const Case cases[] = {
        {"ring x,y; I = x^4, x^3*y^7;", "ring x,y; I = x^2, x*y;"},
        {"ring x,y,z; I = x^10*y^5, x^4*y*z^7, z^7*y^3; J = x^10*y^20*z^2, x^3*y^4*z^13, x^9*y^2*z^7;",
         "ring x,y,z; I = x^4*y^5, x^2*y*z^2, y^3*z^2; J = x^4*y^6*z, x*y^4*z^3, x^3*y^2*z^2;"},
        {"ring x,y; I = x^4, y^10, x^2*y^7; J = x^20, y^30;", "ring x,y; I = x^2, y^2, x*y; J = x^3, y^3;"},
        {"ring x,y,z; I = x^100*y*z, x^50*y*z^50, x^50*y^50*z;", "ring x,y,z; I = x^2*y*z, x*y*z^2, x*y^2*z;"},
    };
    Outcome o;
    for (const auto& c : cases) {
        const auto in = parse_ideal_file(c.input);
        const Factor got = canonicalize(in.factor());
        const Factor want = factor_of(c.expected);
        // Printing both compares the degree-lex generator order as well.
        if (to_string(got, in.ring) != to_string(want, in.ring)) {
            o.ok = false;
            o.detail += to_string(got, in.ring) + " != " + to_string(want, in.ring) + "; ";
        }
    }
    const auto pair = parse_ideal_file(cases[2].input);
    const MonomialIdeal ci = canonicalize(pair.numerator);
    const MonomialIdeal cj = canonicalize(pair.denominator);
    bool rejected = false;
    try {
        Factor(ci, cj);
    } catch (const ValidationError&) {
        rejected = true;
    }
    if (ci != parse_ideal("x^2, y^2, x*y", pair.ring) || cj != parse_ideal("x, y", pair.ring) || !rejected) {
        o.ok = false;
        o.detail += "separate canonicalization of I and J not as expected; ";
    }
    if (o.ok) o.detail = "4 factors match; separate I/J forms rejected as a factor";
    return o;
}

Outcome idempotence() {
    std::mt19937_64 rng(kSeed);
    std::size_t squarefree = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng() % 4;
        const MonomialIdeal I = random_ideal(rng, n, 9);
        const MonomialIdeal c = canonicalize(I);
        if (canonicalize(c) != c || !is_canonical(c)) return {false, "not idempotent on instance " + std::to_string(i)};
        const MonomialIdeal s = random_ideal(rng, n, 1);
        ++squarefree;
        if (canonicalize(s) != s) return {false, "squarefree input moved on instance " + std::to_string(i)};
        const Factor f(s);
        if (canonicalize(f) != f) return {false, "squarefree factor moved on instance " + std::to_string(i)};
    }
    return {true, "500 random ideals idempotent, " + std::to_string(squarefree) + " squarefree inputs fixed"};
}

struct SuiteStats {
    std::size_t passed = 0, failed = 0, skipped = 0, forms = 0, predicate_mismatch = 0;
    std::string first_problem;
};

SuiteStats invariance_suite() {
    std::mt19937_64 rng(kSeed + 1);
    SuiteStats s;
    for (int i = 0; i < 240; ++i) {
        const Factor f = random_factor(rng, {3, 5, 0});
        const CheckReport r = check_invariance(f, rng);
        s.forms += r.forms_compared;
        if (r.verdict == Verdict::Pass) ++s.passed;
        if (r.verdict == Verdict::Skipped) ++s.skipped;
        if (r.verdict == Verdict::Fail) {
            ++s.failed;
            if (s.first_problem.empty() && !r.problems.empty()) s.first_problem = r.problems.front();
        }
        if (r.verdict != Verdict::Skipped && r.original.stanley_holds() != r.canonical.stanley_holds()) {
            ++s.predicate_mismatch;
        }
    }
    return s;
}

Outcome invariance(const SuiteStats& s) {
    std::ostringstream d;
    d << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped, " << s.forms
      << " forms compared";
    if (!s.first_problem.empty()) d << "; " << s.first_problem;
    return {s.failed == 0 && s.passed >= 200, d.str()};
}

Outcome stanley_predicate(const SuiteStats& s) {
    return {s.predicate_mismatch == 0 && s.passed >= 200,
            std::to_string(s.predicate_mismatch) + " disagreements over " + std::to_string(s.passed) + " factors"};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(kSeed + 2);
    std::size_t checked = 0;
    while (checked < 50) {
        const Factor f = random_factor(rng, {3, 3, 0});
        const auto g = join_exponents(f);
        oracle::ExhaustiveSdepth ref(f, g);
        const auto s = sdepth(f);
        if (s.value != ref.value()) {
            return {false, "sdepth " + std::to_string(s.value) + " vs exhaustive " + std::to_string(ref.value()) +
                               " on " + to_string(f, default_ring(f.nvars()))};
        }
        DepthOptions wide;
        wide.bound = g;
        for (auto& e : *wide.bound) ++e;
        if (koszul_depth(f).depth != koszul_depth(f, wide).depth) {
            return {false, "depth changes with the box on " + to_string(f, default_ring(f.nvars()))};
        }
        ++checked;
    }
    return {true, "50 factors: sdepth matches exhaustive enumeration, depth stable on [0,g+1]"};
}

Outcome known_values() {
    const Factor S3(MonomialIdeal::unit(3));
    struct Check {
        const char* name;
        std::size_t got;
        std::size_t want;
    };
    const Check checks[] = {
        {"sdepth (x)", sdepth(Factor(maximal_ideal(1))).value, 1},
        {"sdepth (x,y)", sdepth(Factor(maximal_ideal(2))).value, 1},
        {"sdepth (x,y,z)", sdepth(Factor(maximal_ideal(3))).value, 2},
        {"depth S/m", depth(Factor(MonomialIdeal::unit(3), maximal_ideal(3))), 0},
        {"depth S/(xy)", depth(factor_of("ring x,y; I = 1; J = x*y;")), 1},
        {"depth (x,y)", depth(Factor(maximal_ideal(2))), 1},
        {"depth S", depth(S3), 3},
        {"depth K[x1..x5]", depth(Factor(MonomialIdeal::unit(5))), 5},
    };
    for (const auto& c : checks) {
        if (c.got != c.want) {
            return {false, std::string(c.name) + " = " + std::to_string(c.got) + ", expected " + std::to_string(c.want)};
        }
    }
    std::mt19937_64 rng(kSeed + 3);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 2 + rng() % 4;
        const std::size_t c = 1 + rng() % n;
        const MonomialIdeal I = random_coprime_ideal(rng, n, c, 3);
        const std::size_t d = depth(Factor(MonomialIdeal::unit(n), I));
        if (d != n - c) {
            return {false, "complete intersection " + to_string(I, default_ring(n)) + " has depth " + std::to_string(d)};
        }
    }
    return {true, "8 fixed values and 20 complete intersections"};
}

Outcome performance() {
    const Factor raw = factor_of("ring x,y,z; I = x^100*y*z, x^50*y*z^50, x^50*y^50*z;");
    BenchOptions opts;
    opts.depth = false;
    opts.repeat = 5;
    opts.timeout_s = kRawTimeoutSeconds;
    const BenchReport r = run_bench(raw, "large exponents", opts);
    const auto& t = r.timings.front();
    std::ostringstream d;
    d << "box " << r.raw_box_volume << "/" << r.canonical_box_volume << " = " << r.box_ratio << " (>= " << kMinBoxRatio
      << "), sdepth raw " << t.raw_ms << " ms" << (t.raw_timed_out ? " (timeout)" : "") << " vs canonical "
      << t.canonical_ms << " ms = " << (t.raw_timed_out ? ">= " : "") << t.speedup << "x (>= " << kMinSdepthSpeedup
      << "x)";
    const bool ok = r.raw_box_volume == 262701 && r.canonical_box_volume == 27 && r.box_ratio >= kMinBoxRatio &&
                    t.speedup >= kMinSdepthSpeedup;
    return {ok, d.str()};
}

Outcome certificates() {
    std::mt19937_64 rng(kSeed + 4);
    std::size_t sdepth_runs = 0, depth_runs = 0;
    for (int i = 0; i < 200; ++i) {
        const Factor f = random_factor(rng, {3, 5, 0});
        for (const Factor& g : {f, canonicalize(f)}) {
            const auto s = sdepth(g);
            if (!verify_decomposition(g, s.bound, s.certificate, s.value)) {
                return {false, "certificate rejected for " + to_string(g, default_ring(g.nvars()))};
            }
            ++sdepth_runs;
            DepthOptions opts;
            opts.check_complex = true;
            // Throws InternalError on a nonzero d o d or non-rigid homology.
            koszul_depth(g, opts);
            ++depth_runs;
        }
    }
    return {true, std::to_string(sdepth_runs) + " certificates verified, " + std::to_string(depth_runs) +
                      " depth runs with complex and rigidity checks"};
}

// Not a pass/fail criterion: the raw box is far beyond the volume cap.
void stretch_ten_variables() {
    const Factor raw = factor_of(R"(ring x, y, z, t, v, a_1, a_2, a_3, a_4, a_5;
I = v^4*x^12*z^73, v^87*t^21*y^13, x^43*y^18*z^72*t^28, v*x*y, v*y*z, v*z*t, v*t*x, a_1^7000, a_2^413;
J = v^5*x^13*z^74, v^88*t^22*y^14, x^44*y^19*z^73*t^29, v^2*x^2*y^2, v^2*y^2*z^2, v^2*z^2*t^2, v^2*t^2*x^2;)");
    const auto start = std::chrono::steady_clock::now();
    const auto r = koszul_depth(canonicalize(raw));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("STRETCH ten variables: canonical depth %zu over a box of %llu points, raw box %llu points [%.2f s]\n",
                r.depth, static_cast<unsigned long long>(r.box_volume),
                static_cast<unsigned long long>(box_volume(join_exponents(raw))), secs);
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failures;
        std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
        std::fflush(stdout);
    };

    report(1, "golden canonical forms", golden_forms);
    report(2, "idempotence and fixed points", idempotence);
    SuiteStats suite;
    report(3, "invariance under canonicalization", [&] {
        suite = invariance_suite();
        return invariance(suite);
    });
    report(4, "Stanley predicate agreement", [&] { return stanley_predicate(suite); });
    report(5, "oracle equivalence", oracle_equivalence);
    report(6, "known values", known_values);
    report(7, "timing reproduction proxy", performance);
    report(8, "certificate soundness", certificates);
    try {
        stretch_ten_variables();
    } catch (const std::exception& e) {
        std::printf("STRETCH ten variables: not computed (%s)\n", e.what());
    }
    return failures == 0 ? 0 : 1;
}
