#include "mcanon/stanley_depth.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

namespace mcanon {

namespace {

constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};

std::uint64_t low_mask(unsigned bits) { return bits >= 64 ? kAllOnes : ((std::uint64_t{1} << bits) - 1); }

// Bits [lo, hi] inclusive.
bool range_all_set(std::span<const std::uint64_t> w, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t wl = lo >> 6, wh = hi >> 6;
    if (wl == wh) {
        std::uint64_t m = low_mask(static_cast<unsigned>(hi - lo + 1)) << (lo & 63);
        return (w[wl] & m) == m;
    }
    std::uint64_t first = kAllOnes << (lo & 63);
    if ((w[wl] & first) != first) return false;
    for (std::uint64_t i = wl + 1; i < wh; ++i) {
        if (w[i] != kAllOnes) return false;
    }
    std::uint64_t last = low_mask(static_cast<unsigned>((hi & 63) + 1));
    return (w[wh] & last) == last;
}

void range_assign(std::span<std::uint64_t> w, std::uint64_t lo, std::uint64_t hi, bool value) {
    for (std::uint64_t wi = lo >> 6; wi <= (hi >> 6); ++wi) {
        std::uint64_t from = wi == (lo >> 6) ? (lo & 63) : 0;
        std::uint64_t to = wi == (hi >> 6) ? (hi & 63) : 63;
        std::uint64_t m = low_mask(static_cast<unsigned>(to - from + 1)) << from;
        if (value) {
            w[wi] |= m;
        } else {
            w[wi] &= ~m;
        }
    }
}

// Calls fn(first_index, last_index) for every run of the box [lower, upper]
// along the last (contiguous) coordinate. Stops when fn returns false.
template <typename Fn>
bool for_each_run(std::span<const std::uint64_t> strides, std::span<const Exponent> lower,
                  std::span<const Exponent> upper, Fn&& fn) {
    const std::size_t n = lower.size();
    if (n == 0) return fn(std::uint64_t{0}, std::uint64_t{0});
    std::vector<Exponent> cur(lower.begin(), lower.end());
    const std::size_t last = n - 1;
    for (;;) {
        std::uint64_t base = 0;
        for (std::size_t j = 0; j < last; ++j) base += cur[j] * strides[j];
        if (!fn(base + lower[last], base + upper[last])) return false;
        std::size_t j = last;
        for (;;) {
            if (j == 0) return true;
            --j;
            if (cur[j] < upper[j]) {
                ++cur[j];
                break;
            }
            cur[j] = lower[j];
        }
    }
}

std::uint64_t find_next_set(std::span<const std::uint64_t> w, std::uint64_t from, std::uint64_t limit) {
    if (from >= limit) return limit;
    std::uint64_t wi = from >> 6;
    std::uint64_t word = w[wi] & (kAllOnes << (from & 63));
    for (;;) {
        if (word != 0) {
            std::uint64_t idx = (wi << 6) + static_cast<std::uint64_t>(std::countr_zero(word));
            return std::min(idx, limit);
        }
        if (++wi >= w.size()) return limit;
        word = w[wi];
    }
}

class PartitionSearch {
public:
    PartitionSearch(const CharacteristicPoset& poset, std::size_t d, const SearchLimits& limits)
        : poset_(poset), d_(d), limits_(limits), n_(poset.nvars()),
          avail_(poset.words().begin(), poset.words().end()) {}

    std::optional<IntervalPartition> run() {
        const std::uint64_t volume = poset_.box_volume();
        std::uint64_t first = find_next_set(avail_, 0, volume);
        if (first == volume) return IntervalPartition{};
        if (n_ > 32) throw ResourceError("sdepth search supports at most 32 variables");
        if (!all_coverable(first)) return std::nullopt;
        std::vector<Frame> stack;
        stack.push_back(make_frame(first));
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (!advance(top)) {
                stack.pop_back();
                continue;
            }
            tick();
            std::uint64_t next = find_next_set(avail_, top.element + 1, volume);
            if (next == volume) return collect(stack);
            if (!all_coverable(next)) continue;
            stack.push_back(make_frame(next));
        }
        return std::nullopt;
    }

private:
    struct Frame {
        std::uint64_t element = 0;
        Multidegree lower;
        std::vector<Exponent> tops;  // candidate tops, n_ entries each, best first
        std::size_t next = 0;
        std::size_t chosen = kNone;
    };
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    void tick() {
        if (++nodes_ > limits_.max_nodes) {
            throw ResourceError("sdepth search exceeded the node budget of " + std::to_string(limits_.max_nodes));
        }
        if (limits_.deadline && (nodes_ & 255) == 1 && std::chrono::steady_clock::now() > *limits_.deadline) {
            throw ResourceError("sdepth search exceeded its deadline after " + std::to_string(nodes_) + " nodes");
        }
    }

    std::span<const Exponent> top_at(const Frame& f, std::size_t i) const {
        return std::span<const Exponent>(f.tops).subspan(i * n_, n_);
    }

    bool interval_available(std::span<const Exponent> lower, std::span<const Exponent> upper) const {
        return for_each_run(poset_.strides(), lower, upper,
                            [&](std::uint64_t lo, std::uint64_t hi) { return range_all_set(avail_, lo, hi); });
    }

    void assign(std::span<const Exponent> lower, std::span<const Exponent> upper, bool value) {
        for_each_run(poset_.strides(), lower, upper, [&](std::uint64_t lo, std::uint64_t hi) {
            range_assign(avail_, lo, hi, value);
            return true;
        });
    }

    // Undo the current choice of `f` and place its next available candidate.
    bool advance(Frame& f) {
        if (f.chosen != kNone) {
            assign(f.lower, top_at(f, f.chosen), true);
            f.chosen = kNone;
        }
        const std::size_t count = f.tops.size() / n_;
        while (f.next < count) {
            const std::size_t i = f.next++;
            if (interval_available(f.lower, top_at(f, i))) {
                assign(f.lower, top_at(f, i), false);
                f.chosen = i;
                return true;
            }
        }
        return false;
    }

    // An interval [a, b] containing c with rho(b) >= d contains, for each of
    // at least d coordinates j, the whole axis ray from c up to g_j. Returns
    // false when some available element from `from` on has fewer such rays.
    bool all_coverable(std::uint64_t from) {
        const auto& g = poset_.bound();
        const auto strides = poset_.strides();
        const std::uint64_t volume = poset_.box_volume();
        rays_.resize(volume);
        std::vector<Exponent> c = poset_.multidegree_of(volume - 1);
        for (std::uint64_t idx = volume; idx-- > from;) {
            std::uint32_t r = 0;
            if ((avail_[idx >> 6] >> (idx & 63)) & 1u) {
                std::size_t open = 0;
                for (std::size_t j = 0; j < n_; ++j) {
                    if (c[j] == g[j] || (rays_[idx + strides[j]] >> j) & 1u) {
                        r |= std::uint32_t{1} << j;
                        ++open;
                    }
                }
                if (open < d_) return false;
            }
            rays_[idx] = r;
            for (std::size_t j = n_; j-- > 0;) {
                if (c[j] > 0) {
                    --c[j];
                    break;
                }
                c[j] = g[j];
            }
        }
        return true;
    }

    // Candidate tops b >= a with rho(b) >= d, restricted per coordinate by how
    // far the axis ray from a stays available. Larger intervals come first.
    Frame make_frame(std::uint64_t element) {
        Frame f;
        f.element = element;
        f.lower = poset_.multidegree_of(element);
        const auto& g = poset_.bound();
        const auto strides = poset_.strides();
        std::vector<Exponent> reach(n_);
        std::size_t saturable = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            Exponent r = f.lower[j];
            std::uint64_t idx = element;
            while (r < g[j] && [&] {
                const std::uint64_t k = idx + strides[j];
                return ((avail_[k >> 6] >> (k & 63)) & 1u) != 0;
            }()) {
                ++r;
                idx += strides[j];
            }
            reach[j] = r;
            if (r == g[j]) ++saturable;
        }
        if (saturable < d_) return f;

        std::vector<std::pair<double, std::size_t>> order;
        std::vector<Exponent> flat;
        std::vector<Exponent> b(n_);
        enumerate(f.lower, reach, 0, 0, saturable, b, flat);
        const std::size_t count = flat.size() / n_;
        order.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            double vol = 1.0;
            for (std::size_t j = 0; j < n_; ++j) vol *= static_cast<double>(flat[i * n_ + j] - f.lower[j] + 1);
            order.emplace_back(-vol, i);
        }
        std::stable_sort(order.begin(), order.end());
        f.tops.reserve(flat.size());
        for (const auto& [vol, i] : order) {
            f.tops.insert(f.tops.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * n_),
                          flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
        }
        return f;
    }

    void enumerate(const Multidegree& a, const std::vector<Exponent>& reach, std::size_t j, std::size_t saturated,
                   std::size_t saturable_left, std::vector<Exponent>& b, std::vector<Exponent>& out) const {
        if (saturated + saturable_left < d_) return;
        if (j == n_) {
            out.insert(out.end(), b.begin(), b.end());
            return;
        }
        const auto& g = poset_.bound();
        const bool can_saturate = reach[j] == g[j];
        const std::size_t left = saturable_left - (can_saturate ? 1 : 0);
        // Descending values so that, within a shape, larger tops are generated first.
        for (Exponent v = reach[j] + 1; v-- > a[j];) {
            b[j] = v;
            enumerate(a, reach, j + 1, saturated + (v == g[j] ? 1 : 0), left, b, out);
        }
    }

    IntervalPartition collect(const std::vector<Frame>& stack) const {
        IntervalPartition p;
        p.intervals.reserve(stack.size());
        for (const auto& f : stack) {
            auto top = top_at(f, f.chosen);
            p.intervals.push_back({f.lower, Multidegree(top.begin(), top.end())});
        }
        return p;
    }

    const CharacteristicPoset& poset_;
    std::size_t d_;
    SearchLimits limits_;
    std::size_t n_;
    std::vector<std::uint64_t> avail_;
    std::uint64_t nodes_ = 0;
    std::vector<std::uint32_t> rays_;
};

}  // namespace

std::uint64_t box_volume(std::span<const Exponent> bound) {
    std::uint64_t v = 1;
    for (Exponent e : bound) {
        const std::uint64_t side = std::uint64_t{e} + 1;
        if (v > std::numeric_limits<std::uint64_t>::max() / side) return std::numeric_limits<std::uint64_t>::max();
        v *= side;
    }
    return v;
}

std::size_t rho(std::span<const Exponent> b, std::span<const Exponent> g) {
    if (b.size() != g.size()) throw DimensionError("rho: length mismatch");
    std::size_t r = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] > g[j]) throw PreconditionError("rho: b exceeds the bound");
        if (b[j] == g[j]) ++r;
    }
    return r;
}

CharacteristicPoset::CharacteristicPoset(const Factor& f, std::uint64_t max_box_volume)
    : CharacteristicPoset(f, join_exponents(f), max_box_volume) {}

CharacteristicPoset::CharacteristicPoset(const Factor& f, Multidegree bound, std::uint64_t max_box_volume)
    : bound_(std::move(bound)) {
    if (bound_.size() != f.nvars()) throw DimensionError("poset bound does not match the ring");
    const auto join = join_exponents(f);
    for (std::size_t j = 0; j < join.size(); ++j) {
        if (bound_[j] < join[j]) throw PreconditionError("poset bound must dominate every generator exponent");
    }
    volume_ = mcanon::box_volume(bound_);
    if (volume_ > max_box_volume) {
        throw ResourceError("characteristic poset box volume " +
                            (volume_ == std::numeric_limits<std::uint64_t>::max() ? std::string("(overflow)")
                                                                                   : std::to_string(volume_)) +
                            " exceeds the cap of " + std::to_string(max_box_volume));
    }
    const std::size_t n = bound_.size();
    strides_.assign(n, 1);
    for (std::size_t j = n; j-- > 1;) strides_[j - 1] = strides_[j] * (std::uint64_t{bound_[j]} + 1);
    bits_.assign((volume_ + 63) / 64, 0);

    Multidegree a(n, 0);
    for (std::uint64_t idx = 0; idx < volume_; ++idx) {
        if (f.supports(a)) {
            bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
            ++count_;
        }
        for (std::size_t j = n; j-- > 0;) {
            if (a[j] < bound_[j]) {
                ++a[j];
                break;
            }
            a[j] = 0;
        }
    }
}

bool CharacteristicPoset::in_box(std::span<const Exponent> a) const {
    if (a.size() != bound_.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > bound_[j]) return false;
    }
    return true;
}

bool CharacteristicPoset::contains(std::span<const Exponent> a) const {
    return in_box(a) && contains_index(index_of(a));
}

std::uint64_t CharacteristicPoset::index_of(std::span<const Exponent> a) const {
    if (!in_box(a)) throw PreconditionError("multidegree outside the poset box");
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < a.size(); ++j) idx += a[j] * strides_[j];
    return idx;
}

Multidegree CharacteristicPoset::multidegree_of(std::uint64_t idx) const {
    Multidegree a(bound_.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        a[j] = static_cast<Exponent>(idx / strides_[j]);
        idx %= strides_[j];
    }
    return a;
}

std::vector<std::uint64_t> CharacteristicPoset::elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(count_);
    for (std::uint64_t i = find_next_set(bits_, 0, volume_); i < volume_; i = find_next_set(bits_, i + 1, volume_)) {
        out.push_back(i);
    }
    return out;
}

std::optional<IntervalPartition> exists_partition(const CharacteristicPoset& poset, std::size_t d,
                                                  const SearchLimits& limits) {
    if (d > poset.nvars()) throw PreconditionError("exists_partition: d exceeds the number of variables");
    if (d == 0) {
        IntervalPartition p;
        for (auto idx : poset.elements()) {
            auto a = poset.multidegree_of(idx);
            p.intervals.push_back({a, a});
        }
        return p;
    }
    return PartitionSearch(poset, d, limits).run();
}

SdepthResult sdepth(const Factor& f, const SearchLimits& limits) { return sdepth(f, join_exponents(f), limits); }

SdepthResult sdepth(const Factor& f, Multidegree bound, const SearchLimits& limits) {
    CharacteristicPoset poset(f, std::move(bound), limits.max_box_volume);
    for (std::size_t d = poset.nvars() + 1; d-- > 0;) {
        if (auto p = exists_partition(poset, d, limits)) {
            return SdepthResult{d, std::move(*p), poset.bound(), poset.box_volume()};
        }
    }
    throw InternalError("no interval partition found even for d = 0");
}

bool verify_decomposition(const Factor& f, const IntervalPartition& partition, std::size_t d) {
    return verify_decomposition(f, join_exponents(f), partition, d);
}

bool verify_decomposition(const Factor& f, const Multidegree& bound, const IntervalPartition& partition,
                          std::size_t d) {
    CharacteristicPoset poset(f, bound);
    std::vector<std::uint64_t> covered(poset.words().size(), 0);
    std::uint64_t total = 0;
    for (const auto& iv : partition.intervals) {
        if (!poset.in_box(iv.lower) || !poset.in_box(iv.upper)) return false;
        for (std::size_t j = 0; j < iv.lower.size(); ++j) {
            if (iv.lower[j] > iv.upper[j]) return false;
        }
        if (rho(iv.upper, bound) < d) return false;
        bool ok = for_each_run(poset.strides(), iv.lower, iv.upper, [&](std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t i = lo; i <= hi; ++i) {
                if (!poset.contains_index(i)) return false;
                std::uint64_t& w = covered[i >> 6];
                const std::uint64_t bit = std::uint64_t{1} << (i & 63);
                if (w & bit) return false;
                w |= bit;
                ++total;
            }
            return true;
        });
        if (!ok) return false;
    }
    return total == poset.size();
}

std::string stanley_decomposition_string(const IntervalPartition& partition, const Multidegree& bound,
                                         const Ring& ring) {
    std::ostringstream os;
    for (const auto& iv : partition.intervals) {
        os << to_string(Monomial(iv.lower), ring) << " * K";
        std::string vars;
        for (std::size_t j = 0; j < bound.size(); ++j) {
            if (iv.upper[j] == bound[j]) vars += (vars.empty() ? "" : ", ") + ring.vars[j];
        }
        if (!vars.empty()) os << "[" << vars << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace mcanon
