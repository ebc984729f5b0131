#pragma once

// goldbach-lab <verify|audit|census|dc|sieve|partition> [flags]
//
// Exit codes: 0 success (failing relations and sweep failures are data),
// 2 invalid arguments, 1 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goldbach_lab/goldbach_lab.hpp"
#include "goldbach_lab/numeric_arg.hpp"

namespace goldbach_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string from = "1";
    std::string to = "1";
    std::string row_width = "10";
    std::string format = "json";
    std::string workers = "1";
    std::string output;
};

namespace detail {

inline Format require_format(const std::string& s, std::initializer_list<Format> allowed) {
    const auto f = parse_format(s);
    if (!f || std::find(allowed.begin(), allowed.end(), *f) == allowed.end()) {
        throw Error(Errc::InvalidArgument, "unsupported format '" + s + "'");
    }
    return *f;
}

inline unsigned parse_workers(const std::string& s) {
    const auto w = parse_natural(s, "--workers");
    if (w == 0 || w > 4096) throw Error(Errc::InvalidArgument, "--workers must be in [1, 4096]");
    return static_cast<unsigned>(w);
}

inline void emit(const std::string& text, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(output, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::Io, "cannot open output " + output);
    f << text;
    if (!f) throw Error(Errc::Io, "write failed for " + output);
}

inline report::Parameters range_parameters(const CommonFlags& f, std::uint64_t from, std::uint64_t to,
                                           std::optional<std::uint64_t> width) {
    report::Parameters p{{"from", std::to_string(from)}, {"to", std::to_string(to)}, {"format", f.format}};
    if (width) p["row_width"] = std::to_string(*width);
    return p;
}

}  // namespace detail

inline std::string cmd_audit(const CommonFlags& f, const std::string& relations_text) {
    const auto format = detail::require_format(f.format, {Format::Json, Format::Csv, Format::Text});
    const auto from = parse_natural(f.from, "--from");
    const auto to = parse_natural(f.to, "--to");
    const auto width = parse_natural(f.row_width, "--row-width");

    AuditOptions options;
    options.workers = detail::parse_workers(f.workers);
    if (!relations_text.empty()) {
        options.relations.clear();
        std::stringstream ss(relations_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto id = parse_relation(item);
            if (!id) throw Error(Errc::InvalidArgument, "unknown relation '" + item + "'");
            options.relations.push_back(*id);
        }
    }
    const auto audit = audit_range(Range(from, to), width, options);
    switch (format) {
        case Format::Csv: return report::audit_csv(audit);
        case Format::Text: return report::audit_text(audit);
        case Format::Json: break;
    }
    auto params = detail::range_parameters(f, from, to, width);
    if (!relations_text.empty()) params["relations"] = relations_text;
    return report::dump(report::envelope("audit", params, report::to_json(audit)));
}

inline std::string cmd_census(const CommonFlags& f) {
    const auto format = detail::require_format(f.format, {Format::Json, Format::Csv, Format::Text});
    const auto from = parse_natural(f.from, "--from");
    const auto to = parse_natural(f.to, "--to");
    const auto width = parse_natural(f.row_width, "--row-width");
    CensusOptions options;
    options.workers = detail::parse_workers(f.workers);
    const auto censuses = census_range(Range(from, to), width, options);
    switch (format) {
        case Format::Csv: return report::census_csv(censuses);
        case Format::Text: return report::census_text(censuses);
        case Format::Json: break;
    }
    return report::dump(report::envelope("census", detail::range_parameters(f, from, to, width), report::to_json(censuses)));
}

inline std::string cmd_dc(const std::string& target_text, bool list_pairs, const std::string& format_text) {
    const auto format = detail::require_format(format_text, {Format::Json, Format::Csv, Format::Text});
    const auto target = parse_natural(target_text, "A");
    const auto result = dc_min(target);
    std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> pairs;
    if (list_pairs) pairs = goldbach_pairs(target);

    if (format == Format::Text) {
        std::string out = report::dc_text(result);
        if (pairs) {
            out += std::to_string(pairs->size()) + " prime pairs:\n";
            for (const auto& [p, q] : *pairs) out += "  " + std::to_string(p) + " + " + std::to_string(q) + "\n";
        }
        return out;
    }
    if (format == Format::Csv) {
        std::string out = "A,value,witness\n" + std::to_string(result.target) + "," + std::to_string(result.value) + ",";
        for (std::size_t i = 0; i < result.witness.size(); ++i) out += (i ? "+" : "") + std::to_string(result.witness[i]);
        out += "\n";
        if (pairs) {
            out += "\np,q\n";
            for (const auto& [p, q] : *pairs) out += std::to_string(p) + "," + std::to_string(q) + "\n";
        }
        return out;
    }
    auto payload = report::to_json(result);
    if (pairs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [p, q] : *pairs) arr.push_back({p, q});
        payload["pairs"] = std::move(arr);
    }
    report::Parameters params{{"A", std::to_string(target)}, {"format", format_text},
                              {"list_pairs", list_pairs ? "true" : "false"}};
    return report::dump(report::envelope("dc", params, std::move(payload)));
}

inline std::string cmd_sieve(const CommonFlags& f, bool list) {
    const auto format = detail::require_format(f.format, {Format::Json, Format::Csv, Format::Text});
    const auto from = parse_natural(f.from, "--from");
    const auto to = parse_natural(f.to, "--to");
    const auto seg = sieve_segment(from, to);
    const auto count = seg.count();

    if (format == Format::Text) {
        std::string out = std::to_string(count) + " primes in [" + std::to_string(from) + ", " + std::to_string(to) + "]\n";
        if (list) {
            seg.for_each_prime([&](std::uint64_t p) { out += std::to_string(p) + "\n"; });
        }
        return out;
    }
    if (format == Format::Csv) {
        std::string out;
        if (list) {
            out = "prime\n";
            seg.for_each_prime([&](std::uint64_t p) { out += std::to_string(p) + "\n"; });
        } else {
            out = "from,to,prime_count\n" + std::to_string(from) + "," + std::to_string(to) + "," +
                  std::to_string(count) + "\n";
        }
        return out;
    }
    nlohmann::json payload{{"from", from}, {"to", to}, {"prime_count", count}};
    if (list) payload["primes"] = seg.primes();
    auto params = detail::range_parameters(f, from, to, std::nullopt);
    params["list"] = list ? "true" : "false";
    return report::dump(report::envelope("sieve", params, std::move(payload)));
}

inline std::string cmd_partition(const CommonFlags& f) {
    const auto format = detail::require_format(f.format, {Format::Json, Format::Csv, Format::Text});
    const auto from = parse_natural(f.from, "--from");
    const auto to = parse_natural(f.to, "--to");
    const auto width = parse_natural(f.row_width, "--row-width");
    const auto rows = partition_rows(Range(from, to), width);

    if (format != Format::Json) {
        std::string out = format == Format::Csv ? "row_start,row_end,successor_offset\n" : "";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string offset = i + 1 < rows.size() ? std::to_string(successor_offset(rows[i], rows[i + 1])) : "";
            if (format == Format::Csv) {
                out += std::to_string(rows[i].smallest()) + "," + std::to_string(rows[i].greatest()) + "," + offset + "\n";
            } else {
                out += "r(" + std::to_string(rows[i].smallest()) + ", " + std::to_string(rows[i].greatest()) + ")" +
                       (offset.empty() ? "" : "  next at +" + offset) + "\n";
            }
        }
        return out;
    }
    nlohmann::json arr = nlohmann::json::array();
    nlohmann::json offsets = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        arr.push_back(report::to_json(rows[i]));
        if (i + 1 < rows.size()) offsets.push_back(successor_offset(rows[i], rows[i + 1]));
    }
    nlohmann::json payload{{"rows", std::move(arr)}, {"successor_offsets", std::move(offsets)}};
    return report::dump(report::envelope("partition", detail::range_parameters(f, from, to, width), std::move(payload)));
}

inline std::string cmd_verify(const CommonFlags& f, const std::string& checkpoint, const std::string& stride,
                              const std::string& block) {
    const auto format = detail::require_format(f.format, {Format::Json, Format::Csv, Format::Text});
    SweepConfig config;
    config.from = parse_natural(f.from, "--from");
    config.to = parse_natural(f.to, "--to");
    config.workers = detail::parse_workers(f.workers);
    config.checkpoint_stride = parse_natural(stride, "--checkpoint-stride");
    config.block_evens = parse_natural(block, "--block-evens");
    if (!checkpoint.empty()) config.checkpoint = checkpoint;

    const auto run = run_sweep(config);
    const auto& s = run.summary;
    if (format == Format::Text) {
        std::ostringstream out;
        out << report::sweep_text(s) << "wall time: " << run.wall_seconds << " s\n";
        return out.str();
    }
    if (format == Format::Csv) {
        std::string failures;
        for (std::size_t i = 0; i < s.failures.size(); ++i) failures += (i ? ";" : "") + std::to_string(s.failures[i]);
        return "from,to,verified,failures\n" + std::to_string(s.from) + "," + std::to_string(s.to) + "," +
               std::to_string(s.verified) + "," + failures + "\n";
    }
    report::Parameters params{{"from", std::to_string(config.from)}, {"to", std::to_string(config.to)}, {"format", f.format}};
    auto env = report::envelope("verify", params, report::to_json(s));
    env["metadata"] = {{"wall_seconds", run.wall_seconds},
                       {"workers", config.workers},
                       {"resumed_after", run.resumed_after ? nlohmann::json(*run.resumed_after) : nlohmann::json(nullptr)}};
    return report::dump(env);
}

/// Full CLI entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"goldbach-lab: Row/Range census, DC search, inequality audit and Goldbach sweeps"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string relations, checkpoint, stride = std::to_string(std::uint64_t{1} << 20),
                                       block = std::to_string(std::uint64_t{1} << 16);
    std::string target;
    bool list_pairs = false, list_primes = false;

    auto add_range = [&](CLI::App* sub, bool width) {
        sub->add_option("--from", flags.from, "first element (underscores allowed)")->required();
        sub->add_option("--to", flags.to, "last element (underscores allowed)")->required();
        if (width) sub->add_option("--row-width", flags.row_width, "row width, must divide the range size");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", flags.format, "json | csv | text");
        sub->add_option("--output", flags.output, "output file (default: standard output)");
    };

    auto* verify = app.add_subcommand("verify", "check every even number in [from, to] has a prime pair");
    add_range(verify, false);
    add_output(verify);
    verify->add_option("--workers", flags.workers, "worker threads");
    verify->add_option("--checkpoint", checkpoint, "checkpoint file for resumable sweeps");
    verify->add_option("--checkpoint-stride", stride, "evens between checkpoint writes");
    verify->add_option("--block-evens", block, "evens per work block");

    auto* audit = app.add_subcommand("audit", "evaluate the numbered relations on every row of a range");
    add_range(audit, true);
    add_output(audit);
    audit->add_option("--workers", flags.workers, "worker threads");
    audit->add_option("--relations", relations, "comma-separated relation ids (default: all)");

    auto* census = app.add_subcommand("census", "even/odd/prime counts per row");
    add_range(census, true);
    add_output(census);
    census->add_option("--workers", flags.workers, "worker threads");

    auto* dc = app.add_subcommand("dc", "minimal number of primes summing to A");
    dc->add_option("A", target, "target (>= 2)")->required();
    dc->add_flag("--list-pairs", list_pairs, "also list every prime pair (even A)");
    add_output(dc);

    auto* sieve = app.add_subcommand("sieve", "primes in [from, to]");
    add_range(sieve, false);
    add_output(sieve);
    sieve->add_flag("--list", list_primes, "list the primes, not just the count");

    auto* partition = app.add_subcommand("partition", "cut a range into successive rows");
    add_range(partition, true);
    add_output(partition);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        std::string text;
        if (*verify) text = cmd_verify(flags, checkpoint, stride, block);
        else if (*audit) text = cmd_audit(flags, relations);
        else if (*census) text = cmd_census(flags);
        else if (*dc) text = cmd_dc(target, list_pairs, flags.format);
        else if (*sieve) text = cmd_sieve(flags, list_primes);
        else if (*partition) text = cmd_partition(flags);
        detail::emit(text, flags.output, out);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_usage_error(e.code()) ? kExitUsage : kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace goldbach_lab::cli
