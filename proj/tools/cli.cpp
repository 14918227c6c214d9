#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "mcanon/bench.hpp"
#include "mcanon/canonical_form.hpp"
#include "mcanon/ideal_io.hpp"
#include "mcanon/invariance.hpp"
#include "mcanon/koszul_depth.hpp"
#include "mcanon/stanley_depth.hpp"

namespace mcanon::cli {

namespace {

using nlohmann::json;

struct Loaded {
    Ring ring;
    Factor factor;
};

Loaded load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        IdealFile file = parse_ideal_file(buf.str());
        return Loaded{file.ring, file.factor()};
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.what(), e.line(), e.column());
    }
}

std::string type_string(const VariableType& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.powers.size(); ++i) s += (i ? ", " : "") + std::to_string(t.powers[i]);
    return s + ")";
}

json ideal_json(const MonomialIdeal& I, const Ring& ring) {
    json gens = json::array();
    for (const auto& g : I.gens()) gens.push_back(to_string(g, ring));
    return gens;
}

json factor_json(const Factor& f, const Ring& ring) {
    return json{{"I", ideal_json(f.numerator(), ring)},
                {"J", ideal_json(f.denominator(), ring)},
                {"text", to_string(f, ring)}};
}

json partition_json(const IntervalPartition& p) {
    json out = json::array();
    for (const auto& iv : p.intervals) out.push_back(json{{"lower", iv.lower}, {"upper", iv.upper}});
    return out;
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;
};

int cmd_canon(Context& cx, const std::string& path) {
    const Loaded in = load(path);
    const Factor canon = canonicalize(in.factor);
    if (cx.as_json) {
        json types = json::object();
        for (std::size_t v = 0; v < in.ring.nvars(); ++v) {
            types[in.ring.vars[v]] = type_wrt(in.factor, v).powers;
        }
        cx.out << json{{"input", factor_json(in.factor, in.ring)},
                       {"canonical", factor_json(canon, in.ring)},
                       {"types", types},
                       {"is_canonical_input", is_canonical(in.factor)}}
                      .dump()
               << "\n";
        return kOk;
    }
    cx.out << to_string(canon, in.ring) << "\n";
    cx.out << to_file_string(canon, in.ring);
    cx.out << "# type of the input with respect to each variable\n";
    for (std::size_t v = 0; v < in.ring.nvars(); ++v) {
        cx.out << "# " << in.ring.vars[v] << ": " << type_string(type_wrt(in.factor, v)) << "\n";
    }
    return kOk;
}

int cmd_type(Context& cx, const std::string& path) {
    const Loaded in = load(path);
    if (cx.as_json) {
        json types = json::object();
        for (std::size_t v = 0; v < in.ring.nvars(); ++v) {
            const auto t = type_wrt(in.factor, v);
            types[in.ring.vars[v]] = json{{"type", t.powers}, {"canonical", t.is_canonical()}};
        }
        cx.out << json{{"types", types}, {"is_canonical", is_canonical(in.factor)}}.dump() << "\n";
        return kOk;
    }
    for (std::size_t v = 0; v < in.ring.nvars(); ++v) {
        const auto t = type_wrt(in.factor, v);
        cx.out << in.ring.vars[v] << ": " << type_string(t) << (t.is_canonical() ? "" : "  (not canonical)") << "\n";
    }
    return kOk;
}

int cmd_depth(Context& cx, const std::string& path, bool no_canon, const std::string& field, bool trace,
              bool parallel) {
    const Loaded in = load(path);
    const Factor target = no_canon ? in.factor : canonicalize(in.factor);
    DepthOptions opts;
    opts.field = FieldChoice::parse(field);
    opts.check_complex = true;
    if (parallel) opts.threads = std::max(1u, std::thread::hardware_concurrency());
    json slices = json::array();
    if (trace) {
        opts.threads = 1;
        opts.trace = [&](const SliceTrace& s) {
            if (cx.as_json) {
                slices.push_back(json{{"a", s.a}, {"present", s.present_count}, {"homology", s.homology}});
            } else {
                cx.out << "slice a=" << json(s.a).dump() << " present=" << s.present_count
                       << " homology=" << json(s.homology).dump() << "\n";
            }
        };
    }
    const auto r = koszul_depth(target, opts);
    if (cx.as_json) {
        json j{{"depth", r.depth},       {"pd", r.pd},
               {"field", opts.field.to_string()}, {"canonicalized", !no_canon},
               {"form", factor_json(target, in.ring)}, {"box_volume", r.box_volume}};
        if (trace) j["slices"] = slices;
        cx.out << j.dump() << "\n";
        return kOk;
    }
    cx.out << "depth = " << r.depth << "\n";
    cx.out << "pd = " << r.pd << "\n";
    return kOk;
}

int cmd_sdepth(Context& cx, const std::string& path, bool no_canon, std::uint64_t max_nodes) {
    const Loaded in = load(path);
    const Factor target = no_canon ? in.factor : canonicalize(in.factor);
    SearchLimits limits;
    limits.max_nodes = max_nodes;
    const auto r = sdepth(target, limits);
    const bool verified = verify_decomposition(target, r.bound, r.certificate, r.value);
    if (!verified) throw InternalError("sdepth certificate failed verification");
    if (cx.as_json) {
        cx.out << json{{"sdepth", r.value},
                       {"canonicalized", !no_canon},
                       {"form", factor_json(target, in.ring)},
                       {"bound", r.bound},
                       {"certificate", partition_json(r.certificate)},
                       {"certificate_verified", verified}}
                      .dump()
               << "\n";
        return kOk;
    }
    cx.out << "sdepth = " << r.value << "\n";
    cx.out << "# Stanley decomposition of " << to_string(target, in.ring) << " (verified)\n";
    cx.out << stanley_decomposition_string(r.certificate, r.bound, in.ring);
    return kOk;
}

json check_json(const CheckReport& r, const std::string& label) {
    return json{{"instance", label},
                {"verdict", to_string(r.verdict)},
                {"depth", r.original.depth},
                {"sdepth", r.original.sdepth},
                {"canonical_depth", r.canonical.depth},
                {"canonical_sdepth", r.canonical.sdepth},
                {"forms_compared", r.forms_compared},
                {"problems", r.problems}};
}

void print_check(Context& cx, const CheckReport& r, const std::string& label) {
    cx.out << to_string(r.verdict) << " " << label;
    if (r.verdict != Verdict::Skipped) {
        cx.out << " depth=" << r.original.depth << " sdepth=" << r.original.sdepth;
    }
    cx.out << "\n";
    for (const auto& p : r.problems) cx.out << "  " << p << "\n";
}

int cmd_check(Context& cx, const std::string& path, const std::vector<std::uint64_t>& random,
              const std::string& against, std::uint64_t max_nodes) {
    CheckOptions opts;
    opts.invariants.limits.max_nodes = max_nodes;
    std::vector<std::pair<std::string, CheckReport>> results;
    if (!random.empty()) {
        if (random.size() != 4) throw CLI::ValidationError("--random", "expects: n gmax count seed");
        RandomFactorOptions ropts;
        ropts.max_vars = random[0];
        ropts.max_exponent = static_cast<Exponent>(random[1]);
        if (ropts.max_vars == 0 || ropts.max_vars > kMaxKoszulVars) {
            throw CLI::ValidationError("--random", "n must be between 1 and 20");
        }
        std::mt19937_64 rng(random[3]);
        for (std::uint64_t i = 0; i < random[2]; ++i) {
            const Factor f = random_factor(rng, ropts);
            results.emplace_back(to_string(f, default_ring(f.nvars())), check_invariance(f, rng, opts));
        }
    } else {
        const Loaded in = load(path);
        std::mt19937_64 rng(0);
        if (!against.empty()) {
            const Loaded claimed = load(against);
            results.emplace_back(to_string(in.factor, in.ring) + " vs " + to_string(claimed.factor, claimed.ring),
                                 check_claimed_canonical(in.factor, claimed.factor, opts));
        } else {
            results.emplace_back(to_string(in.factor, in.ring), check_invariance(in.factor, rng, opts));
        }
    }
    std::size_t pass = 0, fail = 0, skipped = 0;
    json lines = json::array();
    for (const auto& [label, r] : results) {
        if (r.verdict == Verdict::Pass) ++pass;
        if (r.verdict == Verdict::Fail) ++fail;
        if (r.verdict == Verdict::Skipped) ++skipped;
        if (cx.as_json) {
            lines.push_back(check_json(r, label));
        } else {
            print_check(cx, r, label);
        }
    }
    if (cx.as_json) {
        cx.out << json{{"results", lines}, {"passed", pass}, {"failed", fail}, {"skipped", skipped}}.dump() << "\n";
    } else {
        cx.out << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
    }
    if (fail) return kInvarianceViolation;
    return skipped ? kResourceExhausted : kOk;
}

int cmd_bench(Context& cx, const std::string& path, std::uint32_t repeat, double timeout, bool parallel,
              const std::string& which) {
    const Loaded in = load(path);
    BenchOptions opts;
    opts.repeat = repeat;
    opts.timeout_s = timeout;
    opts.depth = which == "depth" || which == "both";
    opts.sdepth = which == "sdepth" || which == "both";
    if (parallel) opts.threads = std::max(1u, std::thread::hardware_concurrency());
    const BenchReport report = run_bench(in.factor, path, opts);
    if (cx.as_json) {
        cx.out << json(report).dump() << "\n";
        return kOk;
    }
    cx.out << "input: " << to_string(in.factor, in.ring) << "\n";
    cx.out << "canonical: " << to_string(canonicalize(in.factor), in.ring) << "\n";
    cx.out << "box volume: raw " << report.raw_box_volume << ", canonical " << report.canonical_box_volume
           << ", ratio " << report.box_ratio << "\n";
    for (const auto& t : report.timings) {
        cx.out << t.computation << ": value " << t.canonical_value << ", raw "
               << (t.raw_timed_out ? ">= " : "") << t.raw_ms << " ms, canonical " << t.canonical_ms
               << " ms, speedup " << (t.raw_timed_out ? ">= " : "") << t.speedup << "x\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Canonical forms, depth and Stanley depth of factors of monomial ideals", "mcanon"};
    app.require_subcommand(1);
    Context cx{out, err};
    app.add_flag("--json", cx.as_json, "Emit a single JSON object");

    std::string file, against, field = "q", which = "both";
    bool no_canon = false, trace = false, parallel = false;
    std::vector<std::uint64_t> random;
    std::uint32_t repeat = 1;
    double timeout = 300;
    std::uint64_t max_nodes = kDefaultNodeBudget;

    auto* canon = app.add_subcommand("canon", "Print the canonical form and the type table");
    canon->add_option("file", file, "Ideal file")->required();
    auto* type = app.add_subcommand("type", "Print the type with respect to each variable");
    type->add_option("file", file, "Ideal file")->required();

    auto* depth_cmd = app.add_subcommand("depth", "Depth via multigraded Koszul homology");
    depth_cmd->add_option("file", file, "Ideal file")->required();
    depth_cmd->add_flag("--no-canon", no_canon, "Skip canonicalization");
    depth_cmd->add_option("--field", field, "q (rationals) or p<prime>");
    depth_cmd->add_flag("--trace", trace, "Print every nonempty Koszul slice");
    depth_cmd->add_flag("--parallel", parallel, "Scan the box with all hardware threads");

    auto* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth with a verified decomposition");
    sdepth_cmd->add_option("file", file, "Ideal file")->required();
    sdepth_cmd->add_flag("--no-canon", no_canon, "Skip canonicalization");
    sdepth_cmd->add_option("--max-nodes", max_nodes, "Search node budget");

    auto* check = app.add_subcommand("check", "Verify invariance of depth and sdepth under canonicalization");
    auto* file_opt = check->add_option("file", file, "Ideal file");
    auto* random_opt = check->add_option("--random", random, "n gmax count seed")->expected(4);
    check->add_option("--against", against, "File holding a claimed canonical form of <file>")->needs(file_opt);
    check->add_option("--max-nodes", max_nodes, "Search node budget per sdepth computation");
    file_opt->excludes(random_opt);

    auto* bench = app.add_subcommand("bench", "Time depth/sdepth on raw and canonical forms");
    bench->add_option("file", file, "Ideal file")->required();
    bench->add_option("--repeat", repeat, "Runs per measurement (median reported)")->check(CLI::PositiveNumber);
    bench->add_option("--timeout", timeout, "Seconds allowed per raw computation")->check(CLI::PositiveNumber);
    bench->add_flag("--parallel", parallel, "Allow multithreaded depth scans");
    bench->add_option("--which", which, "depth, sdepth or both")->check(CLI::IsMember({"depth", "sdepth", "both"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (check->parsed() && file.empty() && random.empty()) {
            throw CLI::RequiredError("check needs a file or --random n gmax count seed");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (canon->parsed()) return cmd_canon(cx, file);
        if (type->parsed()) return cmd_type(cx, file);
        if (depth_cmd->parsed()) return cmd_depth(cx, file, no_canon, field, trace, parallel);
        if (sdepth_cmd->parsed()) return cmd_sdepth(cx, file, no_canon, max_nodes);
        if (check->parsed()) return cmd_check(cx, file, random, against, max_nodes);
        if (bench->parsed()) return cmd_bench(cx, file, repeat, timeout, parallel, which);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResourceExhausted;
    } catch (const InternalError& e) {
        err << "invariance violation: " << e.what() << "\n";
        return kInvarianceViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace mcanon::cli
