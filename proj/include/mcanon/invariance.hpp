#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcanon/koszul_depth.hpp"
#include "mcanon/monomial.hpp"
#include "mcanon/stanley_depth.hpp"

namespace mcanon {

struct RandomFactorOptions {
    std::size_t max_vars = 3;
    Exponent max_exponent = 4;
    /// When nonzero, use exactly this many variables instead of drawing from [1, max_vars].
    std::size_t exact_vars = 0;
};

/// Draws 1..5 generators of I with exponents in [0, max_exponent], then J from
/// 0..3 multiples of random generators of I (exponents still capped), redrawing
/// until J is strictly contained in I.
Factor random_factor(std::mt19937_64& rng, const RandomFactorOptions& options);

/// Random ideal I generated by c pairwise coprime monomials (disjoint supports).
MonomialIdeal random_coprime_ideal(std::mt19937_64& rng, std::size_t nvars, std::size_t count,
                                   Exponent max_exponent);

struct Invariants {
    std::size_t depth = 0;
    std::size_t sdepth = 0;

    bool stanley_holds() const noexcept { return sdepth >= depth; }
    friend bool operator==(const Invariants&, const Invariants&) = default;
};

struct InvariantOptions {
    FieldChoice field = FieldChoice::rationals();
    SearchLimits limits;
    bool check_complex = true;
};

/// Depth and sdepth, with the sdepth certificate verified. Throws
/// InternalError if the certificate is rejected.
Invariants compute_invariants(const Factor& f, const InvariantOptions& options = {});

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct CheckReport {
    Verdict verdict = Verdict::Pass;
    Invariants original;
    Invariants canonical;
    /// Human-readable description of each comparison that failed, or of the skip reason.
    std::vector<std::string> problems;
    std::size_t forms_compared = 0;
};

struct CheckOptions {
    InvariantOptions invariants;
    /// Also compare every applicable collapse_gap_step of the input.
    bool gap_steps = true;
};

/// Compares depth, sdepth and the Stanley predicate of f against its
/// canonical form, one random shift_transform, and (optionally) every
/// single gap-collapse step. Resource exhaustion yields Skipped.
CheckReport check_invariance(const Factor& f, std::mt19937_64& rng, const CheckOptions& options = {});

/// Checks that `claimed` is the canonical form of f: structural equality with
/// canonicalize(f), and equal invariants.
CheckReport check_claimed_canonical(const Factor& f, const Factor& claimed, const CheckOptions& options = {});

}  // namespace mcanon
