#include "mcanon/invariance.hpp"

#include <algorithm>
#include <numeric>

#include "mcanon/canonical_form.hpp"
#include "mcanon/ideal_io.hpp"

namespace mcanon {

namespace {

template <typename T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
    return std::uniform_int_distribution<T>(lo, hi)(rng);
}

std::string describe(const Factor& f) { return to_string(f, default_ring(f.nvars())); }

void compare(CheckReport& report, const std::string& label, const Invariants& base, const Invariants& other) {
    ++report.forms_compared;
    if (base.depth != other.depth) {
        report.problems.push_back(label + ": depth " + std::to_string(base.depth) + " != " +
                                  std::to_string(other.depth));
    }
    if (base.sdepth != other.sdepth) {
        report.problems.push_back(label + ": sdepth " + std::to_string(base.sdepth) + " != " +
                                  std::to_string(other.sdepth));
    }
}

}  // namespace

Factor random_factor(std::mt19937_64& rng, const RandomFactorOptions& options) {
    for (;;) {
        const std::size_t n =
            options.exact_vars ? options.exact_vars : uniform<std::size_t>(rng, 1, std::max<std::size_t>(1, options.max_vars));
        const std::size_t count = uniform<std::size_t>(rng, 1, 5);
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<Exponent> e(n);
            for (auto& x : e) x = uniform<Exponent>(rng, 0, options.max_exponent);
            gens.emplace_back(std::move(e));
        }
        MonomialIdeal I(n, std::move(gens));

        const std::size_t jcount = uniform<std::size_t>(rng, 0, 3);
        std::vector<Monomial> jgens;
        for (std::size_t i = 0; i < jcount; ++i) {
            const Monomial& base = I.gens()[uniform<std::size_t>(rng, 0, I.gens().size() - 1)];
            std::vector<Exponent> e(n);
            for (std::size_t j = 0; j < n; ++j) e[j] = base[j] + uniform<Exponent>(rng, 0, options.max_exponent - base[j]);
            jgens.emplace_back(std::move(e));
        }
        MonomialIdeal J(n, std::move(jgens));
        if (J.contains(I)) continue;
        return Factor(std::move(I), std::move(J));
    }
}

MonomialIdeal random_coprime_ideal(std::mt19937_64& rng, std::size_t nvars, std::size_t count,
                                   Exponent max_exponent) {
    if (count > nvars) throw PreconditionError("cannot place more coprime generators than variables");
    if (max_exponent == 0) throw PreconditionError("coprime generators need positive exponents");
    std::vector<std::size_t> vars(nvars);
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng);
    // Give every generator one variable, then scatter the rest (some stay unused).
    std::vector<std::size_t> owner(nvars, count);
    for (std::size_t i = 0; i < count; ++i) owner[vars[i]] = i;
    for (std::size_t i = count; i < nvars; ++i) owner[vars[i]] = uniform<std::size_t>(rng, 0, count);
    std::vector<Monomial> gens;
    for (std::size_t g = 0; g < count; ++g) {
        std::vector<Exponent> e(nvars, 0);
        for (std::size_t j = 0; j < nvars; ++j) {
            if (owner[j] == g) e[j] = uniform<Exponent>(rng, 1, max_exponent);
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

Invariants compute_invariants(const Factor& f, const InvariantOptions& options) {
    DepthOptions dopts;
    dopts.field = options.field;
    dopts.check_complex = options.check_complex;
    dopts.max_box_volume = options.limits.max_box_volume;
    dopts.deadline = options.limits.deadline;
    const auto d = koszul_depth(f, dopts);
    const auto s = sdepth(f, options.limits);
    if (!verify_decomposition(f, s.bound, s.certificate, s.value)) {
        throw InternalError("sdepth certificate rejected for " + describe(f));
    }
    return Invariants{d.depth, s.value};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

CheckReport check_invariance(const Factor& f, std::mt19937_64& rng, const CheckOptions& options) {
    CheckReport report;
    try {
        report.original = compute_invariants(f, options.invariants);
        const Factor canon = canonicalize(f);
        if (!is_canonical(canon)) report.problems.push_back("canonicalize produced a non-canonical factor");
        report.canonical = compute_invariants(canon, options.invariants);
        compare(report, "canonical form", report.original, report.canonical);
        if (report.original.stanley_holds() != report.canonical.stanley_holds()) {
            report.problems.push_back("Stanley predicate differs between the factor and its canonical form");
        }

        const std::size_t v = uniform<std::size_t>(rng, 0, f.nvars() - 1);
        const Exponent top = join_exponents(f)[v];
        const Exponent k = uniform<Exponent>(rng, 1, top + 1);
        compare(report, "shift_transform(v=" + std::to_string(v) + ", k=" + std::to_string(k) + ")",
                report.original, compute_invariants(shift_transform(f, v, k), options.invariants));

        if (options.gap_steps) {
            for (std::size_t var = 0; var < f.nvars(); ++var) {
                for (std::size_t j : gap_indices(f, var)) {
                    compare(report,
                            "collapse_gap_step(v=" + std::to_string(var) + ", j=" + std::to_string(j) + ")",
                            report.original,
                            compute_invariants(collapse_gap_step(f, var, j), options.invariants));
                }
            }
        }
    } catch (const ResourceError& e) {
        report.verdict = Verdict::Skipped;
        report.problems = {e.what()};
        return report;
    }
    report.verdict = report.problems.empty() ? Verdict::Pass : Verdict::Fail;
    return report;
}

CheckReport check_claimed_canonical(const Factor& f, const Factor& claimed, const CheckOptions& options) {
    CheckReport report;
    if (claimed.nvars() != f.nvars()) {
        report.verdict = Verdict::Fail;
        report.problems.push_back("claimed form lives in a different ring");
        return report;
    }
    if (!(canonicalize(f) == claimed)) report.problems.push_back("claimed form differs from the canonical form");
    if (!is_canonical(claimed)) report.problems.push_back("claimed form is not canonical");
    try {
        report.original = compute_invariants(f, options.invariants);
        report.canonical = compute_invariants(claimed, options.invariants);
        compare(report, "claimed canonical form", report.original, report.canonical);
        if (report.original.stanley_holds() != report.canonical.stanley_holds()) {
            report.problems.push_back("Stanley predicate differs between the factor and the claimed form");
        }
    } catch (const ResourceError& e) {
        if (report.problems.empty()) {
            report.verdict = Verdict::Skipped;
            report.problems = {e.what()};
            return report;
        }
    }
    report.verdict = report.problems.empty() ? Verdict::Pass : Verdict::Fail;
    return report;
}

}  // namespace mcanon
