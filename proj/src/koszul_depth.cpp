#include "mcanon/koszul_depth.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace mcanon {

namespace {

// Largest subset T with x^(a - e_F) divisible by m for every F inside T, or
// nullopt when m does not divide x^a.
std::optional<std::uint32_t> divisor_window(const Monomial& m, std::span<const Exponent> a) {
    std::uint32_t t = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (m[j] > a[j]) return std::nullopt;
        if (m[j] < a[j]) t |= std::uint32_t{1} << j;
    }
    return t;
}

std::vector<std::uint32_t> windows(const MonomialIdeal& ideal, std::span<const Exponent> a) {
    std::vector<std::uint32_t> out;
    for (const auto& g : ideal.gens()) {
        if (auto t = divisor_window(g, a)) out.push_back(*t);
    }
    return out;
}

bool subset_of_any(std::uint32_t t, const std::vector<std::uint32_t>& sets) {
    return std::any_of(sets.begin(), sets.end(), [&](std::uint32_t s) { return (t & ~s) == 0; });
}

// Both families of present-in-I and present-in-J subsets are down-closed, so
// the slice is empty iff every I-window lies inside some J-window.
bool slice_is_empty(const std::vector<std::uint32_t>& win_i, const std::vector<std::uint32_t>& win_j) {
    return std::all_of(win_i.begin(), win_i.end(), [&](std::uint32_t t) { return subset_of_any(t, win_j); });
}

void mark_submasks(std::vector<char>& flags, std::uint32_t t, char value) {
    for (std::uint32_t s = t;; s = (s - 1) & t) {
        flags[s] = value;
        if (s == 0) break;
    }
}

void check_nvars(std::size_t n) {
    if (n > kMaxKoszulVars) {
        throw ResourceError("Koszul slices support at most " + std::to_string(kMaxKoszulVars) + " variables, got " +
                            std::to_string(n));
    }
}

}  // namespace

int koszul_sign(std::uint32_t subset, std::size_t j) {
    const std::uint32_t below = subset & ((std::uint32_t{1} << j) - 1);
    return (std::popcount(below) & 1) ? -1 : 1;
}

bool support(const Factor& f, std::span<const Exponent> a) { return f.supports(a); }

KoszulSlice::KoszulSlice(const Factor& f, std::span<const Exponent> a)
    : n_(f.nvars()), a_(a.begin(), a.end()), cells_(f.nvars() + 1) {
    check_nvars(n_);
    if (a.size() != n_) throw DimensionError("multidegree does not match the ring");
    const auto win_i = windows(f.numerator(), a);
    const auto win_j = windows(f.denominator(), a);
    present_.assign(std::size_t{1} << n_, 0);
    if (slice_is_empty(win_i, win_j)) return;
    for (auto t : win_i) mark_submasks(present_, t, 1);
    for (auto t : win_j) mark_submasks(present_, t, 0);
    for (std::uint32_t s = 0; s < present_.size(); ++s) {
        if (present_[s]) {
            cells_[static_cast<std::size_t>(std::popcount(s))].push_back(s);
            ++count_;
        }
    }
}

IntMatrix KoszulSlice::boundary(std::size_t k) const {
    if (k == 0 || k > n_) throw PreconditionError("boundary index out of range");
    const auto& rows = cells_[k - 1];
    const auto& cols = cells_[k];
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::uint32_t s = cols[c];
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(rest));
            const std::uint32_t face = s & ~(std::uint32_t{1} << j);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            if (it != rows.end() && *it == face) {
                m(static_cast<std::size_t>(it - rows.begin()), c) = koszul_sign(s, j);
            }
        }
    }
    return m;
}

std::vector<std::size_t> KoszulSlice::homology_dims(const FieldChoice& field) const {
    std::vector<std::size_t> dims(n_ + 1, 0);
    if (empty()) return dims;
    std::vector<std::size_t> ranks(n_ + 2, 0);
    for (std::size_t k = 1; k <= n_; ++k) {
        if (!cells_[k].empty() && !cells_[k - 1].empty()) ranks[k] = matrix_rank(boundary(k), field);
    }
    for (std::size_t k = 0; k <= n_; ++k) dims[k] = cells_[k].size() - ranks[k] - ranks[k + 1];
    return dims;
}

bool KoszulSlice::boundary_squares_to_zero() const {
    for (std::size_t k = 2; k <= n_; ++k) {
        if (cells_[k].empty() || cells_[k - 2].empty()) continue;
        if (!(boundary(k - 1) * boundary(k)).is_zero()) return false;
    }
    return true;
}

std::vector<std::size_t> homology_dims(const Factor& f, std::span<const Exponent> a, const FieldChoice& field) {
    return KoszulSlice(f, a).homology_dims(field);
}

DepthResult koszul_depth(const Factor& f, const DepthOptions& options) {
    const std::size_t n = f.nvars();
    check_nvars(n);
    DepthResult result;
    result.bound = options.bound ? *options.bound : join_exponents(f);
    if (result.bound.size() != n) throw DimensionError("depth bound does not match the ring");
    const auto join = join_exponents(f);
    for (std::size_t j = 0; j < n; ++j) {
        if (result.bound[j] < join[j]) throw PreconditionError("depth bound must dominate every generator exponent");
    }
    result.box_volume = box_volume(result.bound);
    if (result.box_volume > options.max_box_volume) {
        throw ResourceError("Koszul box volume " + std::to_string(result.box_volume) + " exceeds the cap of " +
                            std::to_string(options.max_box_volume));
    }

    std::vector<std::uint64_t> strides(n, 1);
    for (std::size_t j = n; j-- > 1;) strides[j - 1] = strides[j] * (std::uint64_t{result.bound[j]} + 1);

    std::mutex mu;
    std::vector<bool> nonzero(n + 1, false);
    std::uint64_t nonempty = 0;
    std::exception_ptr failure;

    auto scan = [&](std::uint64_t begin, std::uint64_t end) {
        try {
            std::vector<bool> local(n + 1, false);
            std::uint64_t local_nonempty = 0;
            Multidegree a(n);
            std::uint64_t rem = begin;
            for (std::size_t j = 0; j < n; ++j) {
                a[j] = static_cast<Exponent>(rem / strides[j]);
                rem %= strides[j];
            }
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                if (options.deadline && (idx & 4095) == 0 && std::chrono::steady_clock::now() > *options.deadline) {
                    throw ResourceError("depth computation exceeded its deadline");
                }
                const auto win_i = windows(f.numerator(), a);
                if (!win_i.empty() && !slice_is_empty(win_i, windows(f.denominator(), a))) {
                    KoszulSlice slice(f, a);
                    if (options.check_complex && !slice.boundary_squares_to_zero()) {
                        throw InternalError("Koszul differential does not square to zero");
                    }
                    auto dims = slice.homology_dims(options.field);
                    for (std::size_t k = 0; k <= n; ++k) {
                        if (dims[k] != 0) local[k] = true;
                    }
                    ++local_nonempty;
                    if (options.trace) {
                        std::lock_guard lock(mu);
                        options.trace(SliceTrace{a, slice.present_count(), dims});
                    }
                }
                for (std::size_t j = n; j-- > 0;) {
                    if (a[j] < result.bound[j]) {
                        ++a[j];
                        break;
                    }
                    a[j] = 0;
                }
            }
            std::lock_guard lock(mu);
            for (std::size_t k = 0; k <= n; ++k) nonzero[k] = nonzero[k] || local[k];
            nonempty += local_nonempty;
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
        }
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        scan(0, result.box_volume);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (result.box_volume + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t b = std::min(result.box_volume, t * chunk);
            const std::uint64_t e = std::min(result.box_volume, b + chunk);
            if (b < e) pool.emplace_back(scan, b, e);
        }
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    // H_i(x; M) != 0 exactly for 0 <= i <= pd(M).
    std::size_t top = 0;
    bool any = false;
    for (std::size_t k = 0; k <= n; ++k) {
        if (nonzero[k]) {
            top = k;
            any = true;
        }
    }
    if (!any) throw InternalError("Koszul homology vanishes on a nonzero module");
    for (std::size_t k = 0; k <= top; ++k) {
        if (!nonzero[k]) {
            throw InternalError("Koszul homology is not rigid: H_" + std::to_string(k) + " vanishes below H_" +
                                std::to_string(top));
        }
    }
    result.nonzero = std::move(nonzero);
    result.pd = top;
    result.depth = n - top;
    result.nonempty_slices = nonempty;
    return result;
}

std::size_t depth(const Factor& f, const FieldChoice& field) {
    DepthOptions opts;
    opts.field = field;
    return koszul_depth(f, opts).depth;
}

std::size_t pd(const Factor& f, const FieldChoice& field) {
    DepthOptions opts;
    opts.field = field;
    const auto r = koszul_depth(f, opts);
    if (r.pd != f.nvars() - r.depth) throw InternalError("pd and depth disagree with Auslander-Buchsbaum");
    return r.pd;
}

}  // namespace mcanon
