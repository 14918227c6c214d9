#include "mcanon/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "mcanon/canonical_form.hpp"
#include "mcanon/koszul_depth.hpp"
#include "mcanon/stanley_depth.hpp"

namespace mcanon {

namespace {

using Clock = std::chrono::steady_clock;

struct Measured {
    double ms = 0;
    std::optional<std::int64_t> value;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Runs `fn` up to `repeat` times; a ResourceError after the deadline counts
// as a timeout and ends the series. Returns the median time.
Measured measure(std::uint32_t repeat, double timeout_s, bool allow_timeout,
                 const std::function<std::int64_t(Clock::time_point)>& fn) {
    std::vector<double> times;
    Measured out;
    for (std::uint32_t r = 0; r < std::max<std::uint32_t>(1, repeat); ++r) {
        const auto start = Clock::now();
        const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timeout_s));
        try {
            const std::int64_t v = fn(deadline);
            times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
            if (out.value && *out.value != v) throw InternalError("repeated runs returned different values");
            out.value = v;
        } catch (const ResourceError&) {
            if (!allow_timeout || Clock::now() < deadline) throw;
            times.push_back(timeout_s * 1000.0);
            out.value.reset();
            break;
        }
    }
    out.ms = median(times);
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const ComputationTiming& t) {
    j = nlohmann::json{{"computation", t.computation},
                       {"raw_ms", t.raw_ms},
                       {"canonical_ms", t.canonical_ms},
                       {"raw_value", t.raw_value ? nlohmann::json(*t.raw_value) : nlohmann::json(nullptr)},
                       {"canonical_value", t.canonical_value},
                       {"raw_timed_out", t.raw_timed_out},
                       {"speedup", t.speedup},
                       {"speedup_is_lower_bound", t.raw_timed_out}};
}

void from_json(const nlohmann::json& j, ComputationTiming& t) {
    j.at("computation").get_to(t.computation);
    j.at("raw_ms").get_to(t.raw_ms);
    j.at("canonical_ms").get_to(t.canonical_ms);
    const auto& rv = j.at("raw_value");
    t.raw_value = rv.is_null() ? std::nullopt : std::optional<std::int64_t>(rv.get<std::int64_t>());
    j.at("canonical_value").get_to(t.canonical_value);
    j.at("raw_timed_out").get_to(t.raw_timed_out);
    j.at("speedup").get_to(t.speedup);
}

void to_json(nlohmann::json& j, const BenchReport& r) {
    j = nlohmann::json{{"input", r.input},
                       {"raw_box_volume", r.raw_box_volume},
                       {"canonical_box_volume", r.canonical_box_volume},
                       {"box_ratio", r.box_ratio},
                       {"repeat", r.repeat},
                       {"timings", r.timings}};
}

void from_json(const nlohmann::json& j, BenchReport& r) {
    j.at("input").get_to(r.input);
    j.at("raw_box_volume").get_to(r.raw_box_volume);
    j.at("canonical_box_volume").get_to(r.canonical_box_volume);
    j.at("box_ratio").get_to(r.box_ratio);
    j.at("repeat").get_to(r.repeat);
    j.at("timings").get_to(r.timings);
}

BenchReport run_bench(const Factor& f, const std::string& input, const BenchOptions& options) {
    const Factor canon = canonicalize(f);
    BenchReport report;
    report.input = input;
    report.repeat = std::max<std::uint32_t>(1, options.repeat);
    report.raw_box_volume = box_volume(join_exponents(f));
    report.canonical_box_volume = box_volume(join_exponents(canon));
    report.box_ratio = static_cast<double>(report.raw_box_volume) / static_cast<double>(report.canonical_box_volume);

    auto depth_of = [&](const Factor& x) {
        return [&x, &options](Clock::time_point deadline) {
            DepthOptions o;
            o.field = options.field;
            o.threads = options.threads;
            o.deadline = deadline;
            return static_cast<std::int64_t>(koszul_depth(x, o).depth);
        };
    };
    auto sdepth_of = [&](const Factor& x) {
        return [&x](Clock::time_point deadline) {
            SearchLimits limits;
            limits.deadline = deadline;
            limits.max_nodes = std::numeric_limits<std::uint64_t>::max();
            return static_cast<std::int64_t>(sdepth(x, limits).value);
        };
    };

    auto time_pair = [&](const std::string& name, auto make) {
        ComputationTiming t;
        t.computation = name;
        // Canonical first: if even that exceeds the budget there is nothing to compare.
        const Measured c = measure(report.repeat, options.timeout_s, false, make(canon));
        const Measured r = measure(report.repeat, options.timeout_s, true, make(f));
        t.canonical_ms = c.ms;
        t.canonical_value = *c.value;
        t.raw_ms = r.ms;
        t.raw_value = r.value;
        t.raw_timed_out = !r.value.has_value();
        t.speedup = t.raw_ms / std::max(t.canonical_ms, 1e-6);
        if (t.raw_value && *t.raw_value != t.canonical_value) {
            throw InternalError(name + " differs between the input (" + std::to_string(*t.raw_value) +
                                ") and its canonical form (" + std::to_string(t.canonical_value) + ")");
        }
        report.timings.push_back(std::move(t));
    };
    if (options.depth) time_pair("depth", depth_of);
    if (options.sdepth) time_pair("sdepth", sdepth_of);
    return report;
}

}  // namespace mcanon
