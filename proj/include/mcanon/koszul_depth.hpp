#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mcanon/matrix_rank.hpp"
#include "mcanon/monomial.hpp"
#include "mcanon/stanley_depth.hpp"

namespace mcanon {

/// Largest variable count the Koszul engine accepts (slices have 2^n subsets).
inline constexpr std::size_t kMaxKoszulVars = 20;

/// The multidegree-a strand of the Koszul complex of I/J on x_1, ..., x_n.
///
/// Subset F of the variables (a bitmask) is present when a - e_F is a
/// nonnegative multidegree with x^(a - e_F) in I \ J. The differential sends
/// e_F to sum_{j in F} (-1)^pos(j, F) e_{F \ j}, restricted to present subsets.
class KoszulSlice {
public:
    KoszulSlice(const Factor& f, std::span<const Exponent> a);

    std::size_t nvars() const noexcept { return n_; }
    const Multidegree& multidegree() const noexcept { return a_; }
    bool present(std::uint32_t subset) const { return present_[subset] != 0; }
    bool empty() const noexcept { return count_ == 0; }
    std::size_t present_count() const noexcept { return count_; }

    /// Present subsets of size k, ascending bitmask order.
    const std::vector<std::uint32_t>& cells(std::size_t k) const { return cells_[k]; }

    /// Matrix of d_k : C_k -> C_{k-1}; rows index cells(k-1), columns cells(k).
    IntMatrix boundary(std::size_t k) const;

    /// dim H_k for k = 0..n.
    std::vector<std::size_t> homology_dims(const FieldChoice& field) const;

    /// d_{k-1} o d_k == 0 for every k.
    bool boundary_squares_to_zero() const;

private:
    std::size_t n_;
    Multidegree a_;
    std::vector<char> present_;
    std::vector<std::vector<std::uint32_t>> cells_;
    std::size_t count_ = 0;
};

/// (-1)^(number of elements of `subset` below j).
int koszul_sign(std::uint32_t subset, std::size_t j);

/// x^a lies in I and not in J.
bool support(const Factor& f, std::span<const Exponent> a);

std::vector<std::size_t> homology_dims(const Factor& f, std::span<const Exponent> a, const FieldChoice& field);

struct SliceTrace {
    Multidegree a;
    std::size_t present_count = 0;
    std::vector<std::size_t> homology;
};

struct DepthOptions {
    FieldChoice field = FieldChoice::rationals();
    std::uint64_t max_box_volume = kDefaultBoxCap;
    /// Scan [0, bound] instead of [0, join_exponents]; must dominate the join.
    std::optional<Multidegree> bound;
    /// Check d o d = 0 on every nonempty slice.
    bool check_complex = false;
    unsigned threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::function<void(const SliceTrace&)> trace;
};

struct DepthResult {
    std::size_t depth = 0;
    std::size_t pd = 0;
    /// nonzero[i]: H_i is nonzero in some multidegree of the box.
    std::vector<bool> nonzero;
    Multidegree bound;
    std::uint64_t box_volume = 0;
    std::uint64_t nonempty_slices = 0;
};

/// depth = n - max{i : H_i(x; I/J) != 0}. Throws InternalError if the
/// nonzero homology indices are not exactly 0..pd.
DepthResult koszul_depth(const Factor& f, const DepthOptions& options = {});

std::size_t depth(const Factor& f, const FieldChoice& field = FieldChoice::rationals());

/// Projective dimension; cross-checks n - depth against the top homology index.
std::size_t pd(const Factor& f, const FieldChoice& field = FieldChoice::rationals());

}  // namespace mcanon
