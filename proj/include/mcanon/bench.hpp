#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcanon/matrix_rank.hpp"
#include "mcanon/monomial.hpp"

namespace mcanon {

/// Timing of one invariant on the raw input and on its canonical form.
struct ComputationTiming {
    std::string computation;  // "depth" or "sdepth"
    double raw_ms = 0;
    double canonical_ms = 0;
    /// Absent when the raw side hit the timeout.
    std::optional<std::int64_t> raw_value;
    std::int64_t canonical_value = 0;
    bool raw_timed_out = false;
    /// raw_ms / canonical_ms; a lower bound when raw_timed_out.
    double speedup = 0;

    friend bool operator==(const ComputationTiming&, const ComputationTiming&) = default;
};

struct BenchReport {
    std::string input;
    std::uint64_t raw_box_volume = 0;
    std::uint64_t canonical_box_volume = 0;
    double box_ratio = 0;
    std::uint32_t repeat = 1;
    std::vector<ComputationTiming> timings;

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

void to_json(nlohmann::json& j, const ComputationTiming& t);
void from_json(const nlohmann::json& j, ComputationTiming& t);
void to_json(nlohmann::json& j, const BenchReport& r);
void from_json(const nlohmann::json& j, BenchReport& r);

struct BenchOptions {
    bool depth = true;
    bool sdepth = true;
    std::uint32_t repeat = 1;
    /// Per-run wall-time budget for each raw computation, in seconds.
    double timeout_s = 300;
    unsigned threads = 1;
    FieldChoice field = FieldChoice::rationals();
};

/// Times depth and/or sdepth on f and on canonicalize(f) (median of `repeat`
/// runs on a monotonic clock). Throws InternalError when the raw and
/// canonical values disagree.
BenchReport run_bench(const Factor& f, const std::string& input, const BenchOptions& options = {});

}  // namespace mcanon
