#include <gtest/gtest.h>

#include <random>

#include "mcanon/canonical_form.hpp"
#include "mcanon/ideal_io.hpp"
#include "mcanon/invariance.hpp"
#include "mcanon/stanley_depth.hpp"
#include "oracles.hpp"

namespace mcanon {
namespace {

Factor factor_of(const std::string& text) { return parse_ideal_file(text).factor(); }

MonomialIdeal maximal_ideal(std::size_t n) {
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(Monomial(n).with_exponent(j, 1));
    return MonomialIdeal(n, gens);
}

Factor residue_field(std::size_t n) { return Factor(MonomialIdeal::unit(n), maximal_ideal(n)); }

TEST(Rho, Examples) {
    EXPECT_EQ(rho(std::vector<Exponent>{2, 0, 1}, std::vector<Exponent>{2, 1, 1}), 2u);
    EXPECT_EQ(rho(std::vector<Exponent>{}, std::vector<Exponent>{}), 0u);
    EXPECT_THROW(rho(std::vector<Exponent>{3}, std::vector<Exponent>{2}), PreconditionError);
    EXPECT_THROW(rho(std::vector<Exponent>{1}, std::vector<Exponent>{2, 2}), DimensionError);
}

TEST(BoxVolume, SaturatesInsteadOfOverflowing) {
    EXPECT_EQ(box_volume(std::vector<Exponent>{2, 1}), 6u);
    EXPECT_EQ(box_volume(std::vector<Exponent>{}), 1u);
    EXPECT_EQ(box_volume(std::vector<Exponent>(4, kMaxExponent)), UINT64_MAX);
}

TEST(CharacteristicPoset, Examples) {
    CharacteristicPoset p(factor_of("ring x,y; I = x^2, x*y;"));
    EXPECT_EQ(p.bound(), (Multidegree{2, 1}));
    EXPECT_EQ(p.box_volume(), 6u);
    EXPECT_EQ(p.size(), 3u);
    EXPECT_TRUE(p.contains(std::vector<Exponent>{1, 1}));
    EXPECT_TRUE(p.contains(std::vector<Exponent>{2, 0}));
    EXPECT_FALSE(p.contains(std::vector<Exponent>{1, 0}));
    EXPECT_FALSE(p.contains(std::vector<Exponent>{3, 0}));
    EXPECT_EQ(p.multidegree_of(p.index_of(std::vector<Exponent>{2, 1})), (Multidegree{2, 1}));

    CharacteristicPoset q(residue_field(3));
    EXPECT_EQ(q.size(), 1u);
    EXPECT_EQ(q.elements(), (std::vector<std::uint64_t>{0}));
}

TEST(CharacteristicPoset, BoundChecks) {
    Factor f = factor_of("ring x,y; I = x^2, x*y;");
    EXPECT_THROW(CharacteristicPoset(f, Multidegree{1, 1}), PreconditionError);
    EXPECT_THROW(CharacteristicPoset(f, Multidegree{2}), DimensionError);
    EXPECT_THROW(CharacteristicPoset(f, Multidegree{2, 1}, 5), ResourceError);
    EXPECT_NO_THROW(CharacteristicPoset(f, Multidegree{3, 3}));
}

TEST(ExistsPartition, Examples) {
    CharacteristicPoset m2(Factor(maximal_ideal(2)));
    EXPECT_TRUE(exists_partition(m2, 1));
    EXPECT_FALSE(exists_partition(m2, 2));
    EXPECT_THROW(exists_partition(m2, 3), PreconditionError);
    auto zero = exists_partition(m2, 0);
    ASSERT_TRUE(zero);
    EXPECT_EQ(zero->intervals.size(), 3u);
}

TEST(Sdepth, KnownValues) {
    EXPECT_EQ(sdepth(Factor(MonomialIdeal::unit(3))).value, 3u);
    EXPECT_EQ(sdepth(residue_field(2)).value, 0u);
    // Maximal ideal: ceil(n / 2).
    EXPECT_EQ(sdepth(Factor(maximal_ideal(1))).value, 1u);
    EXPECT_EQ(sdepth(Factor(maximal_ideal(2))).value, 1u);
    EXPECT_EQ(sdepth(Factor(maximal_ideal(3))).value, 2u);
    EXPECT_EQ(sdepth(Factor(maximal_ideal(4))).value, 2u);
    EXPECT_EQ(sdepth(Factor(maximal_ideal(5))).value, 3u);
    // Principal ideals are free.
    EXPECT_EQ(sdepth(factor_of("ring x,y,z; I = x^2*y;")).value, 3u);
    EXPECT_EQ(sdepth(factor_of("ring x,y; I = 1; J = x*y;")).value, 1u);
    EXPECT_EQ(sdepth(factor_of("ring x,y; I = x^4, x^3*y^7;")).value, 1u);
    EXPECT_EQ(sdepth(factor_of("ring x,y; I = x^2, x*y, y^2; J = x^3, y^3;")).value, 0u);
}

TEST(Sdepth, RawAndCanonicalTimingExample) {
    Factor raw = factor_of("ring x,y,z; I = x^100*y*z, x^50*y*z^50, x^50*y^50*z;");
    EXPECT_EQ(sdepth(canonicalize(raw)).value, 2u);
    const auto r = sdepth(raw);
    EXPECT_EQ(r.value, 2u);
    EXPECT_TRUE(verify_decomposition(raw, r.certificate, r.value));
}

TEST(Sdepth, CertificatesVerify) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        Factor f = random_factor(rng, {3, 4, 0});
        const auto r = sdepth(f);
        EXPECT_TRUE(verify_decomposition(f, r.bound, r.certificate, r.value));
        if (r.value < f.nvars()) EXPECT_FALSE(exists_partition(CharacteristicPoset(f), r.value + 1));
    }
}

TEST(Sdepth, MatchesExhaustiveOracle) {
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 150) {
        Factor f = random_factor(rng, {3, 3, 0});
        const auto g = join_exponents(f);
        if (box_volume(g) > 64) continue;
        oracle::ExhaustiveSdepth ref(f, g);
        const auto r = sdepth(f);
        EXPECT_EQ(r.value, ref.value()) << to_string(f, default_ring(f.nvars()));
        EXPECT_EQ(CharacteristicPoset(f).size(), ref.poset_size());
        ++checked;
    }
}

TEST(Sdepth, DecisionIsMonotone) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        Factor f = random_factor(rng, {3, 3, 0});
        CharacteristicPoset p(f);
        bool previous = true;
        for (std::size_t d = 0; d <= f.nvars(); ++d) {
            const bool now = exists_partition(p, d).has_value();
            if (!previous) EXPECT_FALSE(now);
            previous = now;
        }
    }
}

TEST(Sdepth, IndependentOfLargerBound) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 60; ++i) {
        Factor f = random_factor(rng, {3, 3, 0});
        auto g = join_exponents(f);
        const auto base = sdepth(f, g);
        for (auto& e : g) ++e;
        const auto wide = sdepth(f, g);
        EXPECT_EQ(wide.value, base.value);
        EXPECT_TRUE(verify_decomposition(f, g, wide.certificate, wide.value));
    }
}

TEST(VerifyDecomposition, RejectsBadPartitions) {
    Factor f(maximal_ideal(2));
    const auto r = sdepth(f);
    ASSERT_EQ(r.value, 1u);
    EXPECT_TRUE(verify_decomposition(f, r.certificate, 1));
    EXPECT_FALSE(verify_decomposition(f, r.certificate, 2));

    auto missing = r.certificate;
    missing.intervals.pop_back();
    EXPECT_FALSE(verify_decomposition(f, missing, 0));

    auto overlap = r.certificate;
    overlap.intervals.push_back({{1, 1}, {1, 1}});
    EXPECT_FALSE(verify_decomposition(f, overlap, 0));

    IntervalPartition outside{{{{0, 0}, {1, 1}}}};
    EXPECT_FALSE(verify_decomposition(f, outside, 0));

    IntervalPartition inverted{{{{1, 1}, {1, 0}}, {{0, 1}, {0, 1}}}};
    EXPECT_FALSE(verify_decomposition(f, inverted, 0));
}

TEST(Sdepth, ResourceLimits) {
    Factor raw = factor_of("ring x,y,z; I = x^100*y*z, x^50*y*z^50, x^50*y^50*z;");
    SearchLimits tiny;
    tiny.max_nodes = 1;
    EXPECT_THROW(sdepth(raw, tiny), ResourceError);
    SearchLimits small_box;
    small_box.max_box_volume = 1000;
    EXPECT_THROW(sdepth(raw, small_box), ResourceError);
    SearchLimits past;
    past.deadline = std::chrono::steady_clock::now();
    EXPECT_THROW(sdepth(raw, past), ResourceError);
    EXPECT_THROW(sdepth(factor_of("ring x,y,z; I = x^2000000*y^2000000*z^2000000;")), ResourceError);
}

TEST(Sdepth, DecompositionString) {
    Factor f(maximal_ideal(2));
    const auto r = sdepth(f);
    const std::string text = stanley_decomposition_string(r.certificate, r.bound, Ring{{"x", "y"}});
    // Two Stanley spaces, each with one free variable.
    EXPECT_TRUE(text == "y * K[x, y]\nx * K[x]\n" || text == "y * K[y]\nx * K[x, y]\n") << text;
    const auto s = sdepth(residue_field(2));
    EXPECT_EQ(stanley_decomposition_string(s.certificate, s.bound, Ring{{"x", "y"}}), "1 * K\n");
}

}  // namespace
}  // namespace mcanon
