#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcanon/ideal_io.hpp"
#include "mcanon/monomial.hpp"

namespace mcanon {

using Multidegree = std::vector<Exponent>;

inline constexpr std::uint64_t kDefaultBoxCap = 100'000'000;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// prod (g_j + 1), saturating at UINT64_MAX.
std::uint64_t box_volume(std::span<const Exponent> bound);

/// Number of coordinates where b reaches the bound g.
std::size_t rho(std::span<const Exponent> b, std::span<const Exponent> g);

struct SearchLimits {
    std::uint64_t max_box_volume = kDefaultBoxCap;
    std::uint64_t max_nodes = kDefaultNodeBudget;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// The multidegrees a <= g with x^a in I \ J, as a bitset over the box [0, g].
///
/// Box points are indexed lexicographically (x_1 most significant), which is a
/// linear extension of the componentwise order.
class CharacteristicPoset {
public:
    /// Uses g = join_exponents(f).
    explicit CharacteristicPoset(const Factor& f, std::uint64_t max_box_volume = kDefaultBoxCap);
    /// `bound` must dominate every generator exponent of I and J.
    CharacteristicPoset(const Factor& f, Multidegree bound, std::uint64_t max_box_volume = kDefaultBoxCap);

    std::size_t nvars() const noexcept { return bound_.size(); }
    const Multidegree& bound() const noexcept { return bound_; }
    std::uint64_t box_volume() const noexcept { return volume_; }
    std::uint64_t size() const noexcept { return count_; }

    bool in_box(std::span<const Exponent> a) const;
    bool contains(std::span<const Exponent> a) const;
    bool contains_index(std::uint64_t idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1u; }

    std::uint64_t index_of(std::span<const Exponent> a) const;
    Multidegree multidegree_of(std::uint64_t idx) const;
    std::span<const std::uint64_t> strides() const noexcept { return strides_; }

    /// Element indices in ascending (lexicographic) order.
    std::vector<std::uint64_t> elements() const;
    std::span<const std::uint64_t> words() const noexcept { return bits_; }

private:
    Multidegree bound_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t volume_ = 0;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Interval {
    Multidegree lower;
    Multidegree upper;

    friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
    std::vector<Interval> intervals;
};

/// A partition of the poset into intervals [a, b] with rho(b) >= d, or
/// nullopt when none exists. The search is exhaustive; exceeding the node
/// budget or deadline throws ResourceError instead of returning nullopt.
std::optional<IntervalPartition> exists_partition(const CharacteristicPoset& poset, std::size_t d,
                                                  const SearchLimits& limits = {});

struct SdepthResult {
    std::size_t value = 0;
    IntervalPartition certificate;
    Multidegree bound;
    std::uint64_t box_volume = 0;
};

SdepthResult sdepth(const Factor& f, const SearchLimits& limits = {});
SdepthResult sdepth(const Factor& f, Multidegree bound, const SearchLimits& limits = {});

/// The intervals are pairwise disjoint, cover exactly the poset of f over the
/// join bound, and every top b has rho(b) >= d.
bool verify_decomposition(const Factor& f, const IntervalPartition& partition, std::size_t d);
bool verify_decomposition(const Factor& f, const Multidegree& bound, const IntervalPartition& partition,
                          std::size_t d);

/// One Stanley space per line, "x^a * K[x_j : b_j = g_j]".
std::string stanley_decomposition_string(const IntervalPartition& partition, const Multidegree& bound,
                                         const Ring& ring);

}  // namespace mcanon
