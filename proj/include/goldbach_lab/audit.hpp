#pragma once

// Row-by-row evaluation of the numbered inequalities in the Goldbach argument.
//
// Every relation is turned into a concrete comparison between integers (or
// halves, where m/2 or 1.5m appears) computed from a RowCensus and, for the
// per-target relations, DC(A). The auditor only reports truth values.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldbach_lab/census.hpp"
#include "goldbach_lab/dc.hpp"
#include "goldbach_lab/parallel.hpp"
#include "goldbach_lab/rowrange.hpp"

namespace goldbach_lab {

/// Exact value with denominator 1 or 2, stored as twice the value.
class Half {
public:
    constexpr Half() = default;
    static constexpr Half whole(std::int64_t v) { return Half(2 * v); }
    static constexpr Half halves(std::int64_t twice) { return Half(twice); }

    constexpr std::int64_t twice() const noexcept { return twice_; }
    constexpr bool is_integral() const noexcept { return twice_ % 2 == 0; }
    constexpr std::int64_t integral() const noexcept { return twice_ / 2; }
    double to_double() const noexcept { return static_cast<double>(twice_) / 2.0; }

    std::string to_string() const {
        if (is_integral()) return std::to_string(integral());
        const std::int64_t whole = twice_ / 2;
        std::string s = (twice_ < 0 && whole == 0) ? "-0" : std::to_string(whole);
        return s + ".5";
    }

    friend constexpr auto operator<=>(const Half&, const Half&) = default;

private:
    constexpr explicit Half(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_ = 0;
};

enum class RelationId {
    A1, A2, A3, R3, R4, R9, R10, R11_1, R11_2, R11_3, R19, R20, R21, R22,
    R23, R24, R25, R26, R27, R28, R29, R31, R33,
};

inline constexpr std::array<RelationId, 23> kAllRelations{
    RelationId::A1,    RelationId::A2,    RelationId::A3,    RelationId::R3,  RelationId::R4,  RelationId::R9,
    RelationId::R10,   RelationId::R11_1, RelationId::R11_2, RelationId::R11_3, RelationId::R19, RelationId::R20,
    RelationId::R21,   RelationId::R22,   RelationId::R23,   RelationId::R24, RelationId::R25, RelationId::R26,
    RelationId::R27,   RelationId::R28,   RelationId::R29,   RelationId::R31, RelationId::R33,
};

constexpr std::string_view label(RelationId id) noexcept {
    switch (id) {
        case RelationId::A1: return "A1";
        case RelationId::A2: return "A2";
        case RelationId::A3: return "A3";
        case RelationId::R3: return "(3)";
        case RelationId::R4: return "(4)";
        case RelationId::R9: return "(9)";
        case RelationId::R10: return "(10)";
        case RelationId::R11_1: return "(11-1)";
        case RelationId::R11_2: return "(11-2)";
        case RelationId::R11_3: return "(11-3)";
        case RelationId::R19: return "(19)";
        case RelationId::R20: return "(20)";
        case RelationId::R21: return "(21)";
        case RelationId::R22: return "(22)";
        case RelationId::R23: return "(23)";
        case RelationId::R24: return "(24)";
        case RelationId::R25: return "(25)";
        case RelationId::R26: return "(26)";
        case RelationId::R27: return "(27)";
        case RelationId::R28: return "(28)";
        case RelationId::R29: return "(29)";
        case RelationId::R31: return "(31)";
        case RelationId::R33: return "(33)";
    }
    return "?";
}

/// Accepts "A1", "(27)" or the bare "27" / "11-3".
inline std::optional<RelationId> parse_relation(std::string_view text) {
    for (auto id : kAllRelations) {
        const auto l = label(id);
        if (text == l) return id;
        if (l.front() == '(' && text == l.substr(1, l.size() - 2)) return id;
    }
    return std::nullopt;
}

/// True for relations that need a specific even target A.
constexpr bool depends_on_target(RelationId id) noexcept {
    switch (id) {
        case RelationId::R4:
        case RelationId::R9:
        case RelationId::R10:
        case RelationId::R11_1:
        case RelationId::R11_2:
        case RelationId::R11_3:
        case RelationId::R19:
        case RelationId::R20:
        case RelationId::R21:
        case RelationId::R22:
        case RelationId::R25:
        case RelationId::R26:
        case RelationId::R33:
            return true;
        default:
            return false;
    }
}

/// One evaluated relation. `rhs` holds one operand, or two for the compound
/// forms: [lower, upper] for "in", [bound1, bound2] for "<both", [q, r] for "implies".
struct RelationCheck {
    RelationId id{};
    std::string comparator;
    Half lhs;
    std::vector<Half> rhs;
    bool holds = false;
    std::string detail;

    friend bool operator==(const RelationCheck&, const RelationCheck&) = default;
};

struct Tally {
    std::uint64_t held = 0;
    std::uint64_t failed = 0;

    friend bool operator==(const Tally&, const Tally&) = default;
};

using VerdictSummary = std::map<RelationId, Tally>;

inline void tally(VerdictSummary& summary, const RelationCheck& check) {
    auto& t = summary[check.id];
    (check.holds ? t.held : t.failed) += 1;
}

inline void merge_into(VerdictSummary& into, const VerdictSummary& from) {
    for (const auto& [id, t] : from) {
        into[id].held += t.held;
        into[id].failed += t.failed;
    }
}

struct EvenAudit {
    std::uint64_t target = 0;
    unsigned dc_value = 0;
    std::vector<RelationCheck> checks;
};

struct AuditReport {
    Row row{1, 1};
    RowCensus census;
    std::vector<EvenAudit> per_even;
    std::vector<RelationCheck> row_checks;
    VerdictSummary summary;
};

struct RangeAudit {
    std::vector<AuditReport> reports;
    VerdictSummary summary;
};

struct AuditOptions {
    std::vector<RelationId> relations{kAllRelations.begin(), kAllRelations.end()};
    unsigned workers = 1;
};

struct Implication {
    bool conjunction = false;
    bool implication = false;

    friend bool operator==(const Implication&, const Implication&) = default;
};

/// p => (q & r), as a material implication.
constexpr Implication implication_eval(bool p, bool q, bool r) noexcept {
    const bool conj = q && r;
    return {conj, !p || conj};
}

namespace detail {

struct Gammas {
    std::int64_t even, odd, prime, m;

    explicit Gammas(const RowCensus& c)
        : even(static_cast<std::int64_t>(c.gamma_even)),
          odd(static_cast<std::int64_t>(c.gamma_odd)),
          prime(static_cast<std::int64_t>(c.gamma_prime)),
          m(static_cast<std::int64_t>(c.m)) {}

    std::int64_t doubled_bound() const { return 2 * (even + odd) - prime; }  // 2(Ge + Go) - Gf
    std::int64_t plus_four_bound() const { return even + odd + prime + 4; }  // Ge + Go + Gf + 4
};

inline RelationCheck compare(RelationId id, std::string_view op, Half lhs, Half rhs, std::string detail) {
    bool holds = false;
    if (op == "<=") holds = lhs <= rhs;
    else if (op == "<") holds = lhs < rhs;
    else if (op == ">") holds = lhs > rhs;
    else if (op == ">=") holds = lhs >= rhs;
    else if (op == "==") holds = lhs == rhs;
    return {id, std::string(op), lhs, {rhs}, holds, std::move(detail)};
}

inline Half num(std::int64_t v) { return Half::whole(v); }

inline RelationCheck evaluate_row_relation(RelationId id, const Gammas& g) {
    switch (id) {
        case RelationId::A1:
            return compare(id, ">=", num(g.prime), num(1), "gamma_prime >= 1");
        case RelationId::A2:
            return compare(id, "==", num(g.even), num(g.odd), "gamma_even == gamma_odd");
        case RelationId::A3:
            return compare(id, "<=", num(g.prime), num(g.odd), "gamma_prime <= gamma_odd");
        case RelationId::R3: {
            const bool holds = 1 <= g.prime && g.prime <= g.odd;
            return {id, "in", num(g.prime), {num(1), num(g.odd)}, holds, "1 <= gamma_prime <= gamma_odd"};
        }
        case RelationId::R23: {
            const std::int64_t left = g.doubled_bound();
            const std::int64_t first = g.plus_four_bound();
            const std::int64_t second = g.even + g.odd - 2 * g.prime - 4;
            return compare(id, "==", num(left), num(first + second),
                           "2(gamma_even + gamma_odd) - gamma_prime == [gamma_even + gamma_odd + gamma_prime + 4]"
                           " + [gamma_even + gamma_odd - 2 gamma_prime - 4] = " +
                               std::to_string(first) + " + " + std::to_string(second));
        }
        case RelationId::R24:
            return compare(id, "<", num(g.plus_four_bound()), num(g.doubled_bound()),
                           "gamma_even + gamma_odd + gamma_prime + 4 < 2(gamma_even + gamma_odd) - gamma_prime");
        case RelationId::R27:
            return compare(id, "<=", num(g.doubled_bound()), Half::halves(g.m),
                           "2(gamma_even + gamma_odd) - gamma_prime <= m/2 (exact halves)");
        case RelationId::R28:
            return compare(id, "<=", num(2 * g.m - g.prime), Half::halves(g.m), "2m - gamma_prime <= m/2");
        case RelationId::R29:
            return compare(id, "<=", Half::halves(3 * g.m), num(g.prime), "1.5m <= gamma_prime");
        case RelationId::R31:
            return compare(id, "<", num(g.m), num(g.prime), "m < gamma_prime");
        default:
            break;
    }
    throw Error(Errc::InvalidArgument, std::string(label(id)) + " is not a row-level relation");
}

inline RelationCheck evaluate_target_relation(RelationId id, const Gammas& g, std::int64_t dc) {
    switch (id) {
        case RelationId::R4:
            return compare(id, "<=", num(dc), num(g.even), "DC(A) <= gamma_even");
        case RelationId::R9:
        case RelationId::R11_2:
            return compare(id, "<=", num(dc), num(g.doubled_bound()), "DC(A) <= 2(gamma_even + gamma_odd) - gamma_prime");
        case RelationId::R10: {
            const bool holds = 2 <= dc && dc <= g.doubled_bound();
            return {id, "in", num(dc), {num(2), num(g.doubled_bound())}, holds,
                    "2 <= DC(A) <= 2(gamma_even + gamma_odd) - gamma_prime"};
        }
        case RelationId::R11_1:
            return compare(id, ">", num(dc), num(2), "DC(A) > 2");
        case RelationId::R11_3:
            return compare(id, "==", num(dc), num(2), "DC(A) == 2");
        case RelationId::R19:
            return compare(id, "<=", num(dc), num(g.odd + 2),
                           "DC(A) <= gamma_odd + 2; the '=' form DC(A) - 2 = gamma_odd is evaluated as <=");
        case RelationId::R20:
            return compare(id, "<=", num(dc), num(g.prime + 2),
                           "DC(A) <= gamma_prime + 2; the '=' form DC(A) - 2 = gamma_prime is evaluated as <=");
        case RelationId::R21:
            return compare(id, "<=", num(2 * dc), num(g.even + g.prime + 4), "2 DC(A) <= gamma_even + gamma_prime + 4");
        case RelationId::R22:
            return compare(id, "<=", num(2 * dc), num(g.plus_four_bound()),
                           "2 DC(A) <= gamma_even + gamma_odd + gamma_prime + 4; missing operator between "
                           "gamma_odd and gamma_prime reconstructed as +");
        case RelationId::R25: {
            const bool holds = dc < g.plus_four_bound() && dc < g.doubled_bound();
            return {id, "<both", num(dc), {num(g.plus_four_bound()), num(g.doubled_bound())}, holds,
                    "DC(A) < gamma_even + gamma_odd + gamma_prime + 4 and DC(A) < 2(gamma_even + gamma_odd) - "
                    "gamma_prime"};
        }
        case RelationId::R26:
            return compare(id, "<", num(dc), num(g.doubled_bound()), "DC(A) < 2(gamma_even + gamma_odd) - gamma_prime");
        case RelationId::R33: {
            const bool p = dc > 2;
            const bool q = dc < g.plus_four_bound();
            const bool r = dc < g.doubled_bound();
            const auto e = implication_eval(p, q, r);
            auto bit = [](bool b) { return std::string(b ? "1" : "0"); };
            return {id, "implies", num(p), {num(q), num(r)}, e.implication,
                    "p: DC(A) > 2 = " + bit(p) + "; q: DC(A) < gamma_even + gamma_odd + gamma_prime + 4 = " +
                        bit(q) + "; r: DC(A) < 2(gamma_even + gamma_odd) - gamma_prime = " + bit(r) +
                        "; q and r = " + bit(e.conjunction) + "; p implies (q and r) = " + bit(e.implication)};
        }
        default:
            break;
    }
    throw Error(Errc::InvalidArgument, std::string(label(id)) + " is not a per-target relation");
}

}  // namespace detail

/// Audit of one Row given its census.
inline AuditReport audit_row(const Row& row, const RowCensus& census, const AuditOptions& options = {}) {
    AuditReport report{row, census, {}, {}, {}};
    const detail::Gammas g(census);

    std::vector<RelationId> row_ids, target_ids;
    for (auto id : kAllRelations) {
        if (std::find(options.relations.begin(), options.relations.end(), id) == options.relations.end()) continue;
        (depends_on_target(id) ? target_ids : row_ids).push_back(id);
        report.summary[id] = Tally{};
    }

    for (auto id : row_ids) {
        report.row_checks.push_back(detail::evaluate_row_relation(id, g));
        tally(report.summary, report.row_checks.back());
    }

    std::uint64_t a = std::max<std::uint64_t>(row.smallest(), 4);
    if (a % 2) ++a;
    for (; a <= row.greatest(); a += 2) {
        const auto dc = dc_min(a);
        EvenAudit entry{a, dc.value, {}};
        for (auto id : target_ids) {
            entry.checks.push_back(detail::evaluate_target_relation(id, g, dc.value));
            tally(report.summary, entry.checks.back());
        }
        report.per_even.push_back(std::move(entry));
        if (row.greatest() - a < 2) break;
    }
    return report;
}

inline AuditReport audit_row(const Row& row, const AuditOptions& options = {}) {
    return audit_row(row, census_row(row), options);
}

/// One report per partition row, in row order; the aggregate sums the per-row tallies.
inline RangeAudit audit_range(const Range& range, std::uint64_t width, const AuditOptions& options = {}) {
    CensusOptions census_options;
    census_options.workers = options.workers;
    const auto censuses = census_range(range, width, census_options);

    RangeAudit out;
    out.reports.resize(censuses.size());
    parallel_for_blocks(options.workers, censuses.size(), [&](std::uint64_t i) {
        out.reports[i] = audit_row(censuses[i].first, censuses[i].second, options);
    });
    for (const auto& r : out.reports) merge_into(out.summary, r.summary);
    return out;
}

}  // namespace goldbach_lab
