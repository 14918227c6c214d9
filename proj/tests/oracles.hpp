#pragma once

// Test-only reference implementations. They share no code with the library's
// search or elimination routines beyond the Factor membership test.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mcanon/matrix_rank.hpp"
#include "mcanon/monomial.hpp"

namespace mcanon::oracle {

/// Stanley depth by exhaustive enumeration of every interval partition of the
/// characteristic poset over [0, bound], maximizing the minimum top weight.
/// Supports posets whose box has at most 64 points.
class ExhaustiveSdepth {
public:
    ExhaustiveSdepth(const Factor& f, std::vector<Exponent> bound) : n_(f.nvars()), bound_(std::move(bound)) {
        std::vector<Exponent> a(n_, 0);
        for (;;) {
            points_.push_back(a);
            std::size_t j = n_;
            while (j > 0 && a[j - 1] == bound_[j - 1]) a[--j] = 0;
            if (j == 0) break;
            ++a[j - 1];
        }
        if (points_.size() > 64) throw std::invalid_argument("oracle box too large");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (f.supports(points_[i])) members_ |= bit(i);
        }
        // Every interval [lo, hi] of the box as a point mask, with its top weight.
        for (std::size_t lo = 0; lo < points_.size(); ++lo) {
            for (std::size_t hi = 0; hi < points_.size(); ++hi) {
                if (!leq(points_[lo], points_[hi])) continue;
                std::uint64_t mask = 0;
                for (std::size_t c = 0; c < points_.size(); ++c) {
                    if (leq(points_[lo], points_[c]) && leq(points_[c], points_[hi])) mask |= bit(c);
                }
                std::size_t weight = 0;
                for (std::size_t j = 0; j < n_; ++j) weight += points_[hi][j] == bound_[j];
                intervals_.push_back({mask, weight});
            }
        }
    }

    std::size_t value() { return best(members_); }
    std::size_t poset_size() const { return static_cast<std::size_t>(__builtin_popcountll(members_)); }

private:
    struct Iv {
        std::uint64_t mask;
        std::size_t weight;
    };

    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

    static bool leq(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j] > b[j]) return false;
        }
        return true;
    }

    // Max over partitions of `rest` into intervals of the minimum weight; the
    // empty partition has value n. Some interval must contain the lowest point.
    std::size_t best(std::uint64_t rest) {
        if (rest == 0) return n_;
        if (auto it = memo_.find(rest); it != memo_.end()) return it->second;
        const std::uint64_t low = rest & (~rest + 1);
        std::size_t result = 0;
        bool found = false;
        for (const auto& iv : intervals_) {
            if (!(iv.mask & low) || (iv.mask & ~rest)) continue;
            if (found && iv.weight <= result) continue;
            const std::size_t v = std::min(iv.weight, best(rest & ~iv.mask));
            if (!found || v > result) result = v;
            found = true;
        }
        memo_[rest] = result;
        return result;
    }

    std::size_t n_;
    std::vector<Exponent> bound_;
    std::vector<std::vector<Exponent>> points_;
    std::uint64_t members_ = 0;
    std::vector<Iv> intervals_;
    std::unordered_map<std::uint64_t, std::size_t> memo_;
};

/// Rank over the rationals by ordinary Gaussian elimination on mpq_class.
inline std::size_t rational_rank(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = static_cast<long>(m(r, c));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace mcanon::oracle
