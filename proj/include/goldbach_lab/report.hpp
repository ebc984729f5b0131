#pragma once

// Serialization of command payloads: canonical JSON (keys in lexicographic
// order, integers as integers, halves as x.5), flat CSV tables, and a short
// human-readable text form.

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "goldbach_lab/audit.hpp"
#include "goldbach_lab/census.hpp"
#include "goldbach_lab/dc.hpp"
#include "goldbach_lab/primes.hpp"
#include "goldbach_lab/rowrange.hpp"
#include "goldbach_lab/sweep.hpp"
#include "json.hpp"

namespace goldbach_lab {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Format { Json, Csv, Text };

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    return std::nullopt;
}

namespace report {

using nlohmann::json;
using Parameters = std::map<std::string, std::string>;

inline json to_json(const Half& h) {
    if (h.is_integral()) return h.integral();
    return h.to_double();
}

inline json to_json(const Row& row) { return {{"start", row.smallest()}, {"end", row.greatest()}}; }

inline json to_json(const RowCensus& c) {
    return {{"gamma_even", c.gamma_even}, {"gamma_odd", c.gamma_odd}, {"gamma_prime", c.gamma_prime}, {"m", c.m}};
}

inline json to_json(const RelationCheck& c) {
    json j{{"relation_id", std::string(label(c.id))},
           {"comparator", c.comparator},
           {"lhs", to_json(c.lhs)},
           {"holds", c.holds},
           {"detail", c.detail}};
    if (c.rhs.size() == 1) {
        j["rhs"] = to_json(c.rhs.front());
    } else {
        json arr = json::array();
        for (const auto& v : c.rhs) arr.push_back(to_json(v));
        j["rhs"] = std::move(arr);
    }
    return j;
}

inline json to_json(const VerdictSummary& s) {
    json j = json::object();
    for (const auto& [id, t] : s) j[std::string(label(id))] = {{"held", t.held}, {"failed", t.failed}};
    return j;
}

inline json to_json(const AuditReport& r) {
    json per_even = json::array();
    for (const auto& e : r.per_even) {
        json checks = json::array();
        for (const auto& c : e.checks) checks.push_back(to_json(c));
        per_even.push_back({{"A", e.target}, {"dc_value", e.dc_value}, {"checks", std::move(checks)}});
    }
    json row_checks = json::array();
    for (const auto& c : r.row_checks) row_checks.push_back(to_json(c));
    return {{"row", to_json(r.row)},
            {"census", to_json(r.census)},
            {"per_even", std::move(per_even)},
            {"row_checks", std::move(row_checks)},
            {"verdict_summary", to_json(r.summary)}};
}

inline json to_json(const RangeAudit& a) {
    json reports = json::array();
    for (const auto& r : a.reports) reports.push_back(to_json(r));
    return {{"reports", std::move(reports)}, {"verdict_summary", to_json(a.summary)}};
}

inline json to_json(const std::vector<std::pair<Row, RowCensus>>& censuses) {
    json rows = json::array();
    for (const auto& [row, c] : censuses) {
        json entry = to_json(c);
        entry["row"] = to_json(row);
        rows.push_back(std::move(entry));
    }
    return {{"censuses", std::move(rows)}};
}

inline json to_json(const DcResult& r) {
    return {{"A", r.target}, {"value", r.value}, {"witness", r.witness}};
}

inline json to_json(const SweepSummary& s) {
    return {{"from", s.from}, {"to", s.to}, {"verified", s.verified}, {"failures", s.failures}};
}

inline json envelope(const std::string& command, const Parameters& parameters, json payload) {
    json params = json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    return {{"tool_version", kToolVersion},
            {"command", command},
            {"parameters", std::move(params)},
            {"payload", std::move(payload)}};
}

/// Canonical byte form: two-space indent, newline-terminated.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- CSV ----

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string rhs_cell(const RelationCheck& c) {
    std::string out;
    for (std::size_t i = 0; i < c.rhs.size(); ++i) {
        if (i) out += ';';
        out += c.rhs[i].to_string();
    }
    return out;
}

/// Two tables separated by a blank line: row-level relations, then per-A relations.
inline std::string audit_csv(const RangeAudit& a) {
    std::ostringstream out;
    out << "row_start,row_end,gamma_even,gamma_odd,gamma_prime,m,relation_id,lhs,rhs,holds\n";
    for (const auto& r : a.reports) {
        for (const auto& c : r.row_checks) {
            out << r.row.smallest() << ',' << r.row.greatest() << ',' << r.census.gamma_even << ','
                << r.census.gamma_odd << ',' << r.census.gamma_prime << ',' << r.census.m << ','
                << label(c.id) << ',' << c.lhs.to_string() << ',' << rhs_cell(c) << ','
                << (c.holds ? "true" : "false") << '\n';
        }
    }
    out << '\n';
    out << "row_start,A,dc_value,relation_id,lhs,rhs,holds\n";
    for (const auto& r : a.reports) {
        for (const auto& e : r.per_even) {
            for (const auto& c : e.checks) {
                out << r.row.smallest() << ',' << e.target << ',' << e.dc_value << ',' << label(c.id) << ','
                    << c.lhs.to_string() << ',' << rhs_cell(c) << ',' << (c.holds ? "true" : "false") << '\n';
            }
        }
    }
    return out.str();
}

inline std::string census_csv(const std::vector<std::pair<Row, RowCensus>>& censuses) {
    std::ostringstream out;
    out << "row_start,row_end,gamma_even,gamma_odd,gamma_prime,m\n";
    for (const auto& [row, c] : censuses) {
        out << row.smallest() << ',' << row.greatest() << ',' << c.gamma_even << ',' << c.gamma_odd << ','
            << c.gamma_prime << ',' << c.m << '\n';
    }
    return out.str();
}

// ---- text ----

inline std::string audit_text(const RangeAudit& a) {
    std::ostringstream out;
    out << "rows audited: " << a.reports.size() << '\n';
    for (const auto& r : a.reports) {
        out << "row [" << r.row.smallest() << ", " << r.row.greatest() << "]  even=" << r.census.gamma_even
            << " odd=" << r.census.gamma_odd << " prime=" << r.census.gamma_prime << " m=" << r.census.m
            << "  evens audited=" << r.per_even.size() << '\n';
    }
    out << std::left << std::setw(10) << "relation" << std::right << std::setw(12) << "held" << std::setw(12)
        << "failed" << '\n';
    for (const auto& [id, t] : a.summary) {
        out << std::left << std::setw(10) << label(id) << std::right << std::setw(12) << t.held << std::setw(12)
            << t.failed << '\n';
    }
    return out.str();
}

inline std::string census_text(const std::vector<std::pair<Row, RowCensus>>& censuses) {
    std::ostringstream out;
    for (const auto& [row, c] : censuses) {
        out << "row [" << row.smallest() << ", " << row.greatest() << "]  even=" << c.gamma_even
            << " odd=" << c.gamma_odd << " prime=" << c.gamma_prime << " m=" << c.m << '\n';
    }
    return out.str();
}

inline std::string dc_text(const DcResult& r) {
    std::ostringstream out;
    out << "DC(" << r.target << ") = " << r.value << "  witness: ";
    for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? " + " : "") << r.witness[i];
    out << '\n';
    return out.str();
}

inline std::string sweep_text(const SweepSummary& s) {
    std::ostringstream out;
    out << "verified " << s.verified << " even numbers in [" << s.from << ", " << s.to << "], " << s.failures.size()
        << " failures\n";
    for (auto f : s.failures) out << "  no prime pair: " << f << '\n';
    return out.str();
}

}  // namespace report
}  // namespace goldbach_lab
