#pragma once

// Rows and Ranges: finite runs of consecutive naturals, stored by endpoints.
//
// A candidate sequence is validated against the Row properties I-IV or the
// Range properties [1]-[6]; a Range can then be cut into equal-width Rows,
// each one the Successive Row (offset 1) of the one before it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goldbach_lab/error.hpp"

namespace goldbach_lab {

/// Closed interval {first, first+1, ..., last} of naturals, first >= 1.
template <class Tag>
class Interval {
public:
    Interval(std::uint64_t smallest, std::uint64_t greatest) : smallest_(smallest), greatest_(greatest) {
        if (smallest == 0 || smallest > greatest) {
            throw Error(Errc::InvalidInterval, std::string(Tag::name) + "(" + std::to_string(smallest) + ", " +
                                                   std::to_string(greatest) + ")");
        }
    }

    std::uint64_t smallest() const noexcept { return smallest_; }
    std::uint64_t greatest() const noexcept { return greatest_; }
    std::uint64_t cardinality() const noexcept { return greatest_ - smallest_ + 1; }

    bool contains(std::uint64_t x) const noexcept { return x >= smallest_ && x <= greatest_; }

    template <class Other>
    bool intersects(const Interval<Other>& other) const noexcept {
        return smallest_ <= other.greatest() && other.smallest() <= greatest_;
    }

    std::vector<std::uint64_t> elements() const {
        std::vector<std::uint64_t> out;
        out.reserve(cardinality());
        for (std::uint64_t x = smallest_;; ++x) {
            out.push_back(x);
            if (x == greatest_) break;
        }
        return out;
    }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    std::uint64_t smallest_;
    std::uint64_t greatest_;
};

struct RowTag {
    static constexpr const char* name = "Row";
};
struct RangeTag {
    static constexpr const char* name = "Range";
};

using Row = Interval<RowTag>;
using Range = Interval<RangeTag>;

struct Violation {
    std::string property;  // "I".."IV" for Rows, "[1]".."[6]" for Ranges
    std::string reason;

    friend bool operator==(const Violation&, const Violation&) = default;
};

template <class T>
struct ValidationVerdict {
    std::vector<Violation> violations;
    std::optional<T> value;  // set iff accepted

    bool accepted() const noexcept { return violations.empty(); }

    bool violates(std::string_view property) const {
        return std::any_of(violations.begin(), violations.end(),
                           [&](const Violation& v) { return v.property == property; });
    }
};

namespace detail {

struct ShapeFindings {
    std::optional<std::string> zero_element;
    std::optional<std::string> repeated_extreme;
    std::optional<std::string> descent;
    std::optional<std::string> gap;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
};

// The four structural facts shared by the Row and Range property lists.
inline ShapeFindings inspect_sequence(std::span<const std::uint64_t> seq) {
    ShapeFindings f;
    const auto [mn, mx] = std::minmax_element(seq.begin(), seq.end());
    f.min = *mn;
    f.max = *mx;

    if (std::find(seq.begin(), seq.end(), 0) != seq.end()) f.zero_element = "0 is not a natural number";

    const auto min_count = std::count(seq.begin(), seq.end(), f.min);
    const auto max_count = std::count(seq.begin(), seq.end(), f.max);
    if (min_count > 1) {
        f.repeated_extreme = "smallest element " + std::to_string(f.min) + " occurs " +
                             std::to_string(min_count) + " times";
    } else if (max_count > 1) {
        f.repeated_extreme = "greatest element " + std::to_string(f.max) + " occurs " +
                             std::to_string(max_count) + " times";
    }

    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (seq[k] > seq[k + 1]) {
            f.descent = std::to_string(seq[k]) + " at position " + std::to_string(k) + " precedes smaller " +
                        std::to_string(seq[k + 1]);
            break;
        }
    }

    std::vector<std::uint64_t> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
        if (sorted[k + 1] - sorted[k] != 1) {
            f.gap = "neighbours " + std::to_string(sorted[k]) + " and " + std::to_string(sorted[k + 1]) +
                    " differ by " + std::to_string(sorted[k + 1] - sorted[k]) + ", not 1";
            break;
        }
    }
    return f;
}

inline bool has_adjacent_pair(std::span<const std::uint64_t> seq) {
    std::vector<std::uint64_t> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() == 1) return true;
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
        if (sorted[k + 1] == sorted[k] + 1) return true;
    }
    return false;
}

}  // namespace detail

/// Checks Row properties I-IV on the sequence as given. Order matters:
/// III requires the given order to be ascending.
inline ValidationVerdict<Row> validate_row(std::span<const std::uint64_t> candidate) {
    if (candidate.empty()) throw Error(Errc::EmptyCandidate, "a Row needs at least one element");
    const auto f = detail::inspect_sequence(candidate);

    ValidationVerdict<Row> verdict;
    if (f.zero_element) verdict.violations.push_back({"I", *f.zero_element});
    if (f.repeated_extreme) verdict.violations.push_back({"II", *f.repeated_extreme});
    if (f.descent) verdict.violations.push_back({"III", *f.descent});
    if (f.gap) verdict.violations.push_back({"IV", *f.gap});
    if (verdict.accepted()) verdict.value = Row(f.min, f.max);
    return verdict;
}

/// Checks Range properties [1]-[6]. [3] (finite cardinality) holds for every
/// finite candidate; [2] asks for a sub-Row of consecutive elements.
inline ValidationVerdict<Range> validate_range(std::span<const std::uint64_t> candidate) {
    if (candidate.empty()) throw Error(Errc::EmptyCandidate, "a Range needs at least one element");
    const auto f = detail::inspect_sequence(candidate);

    ValidationVerdict<Range> verdict;
    if (f.zero_element) verdict.violations.push_back({"[1]", *f.zero_element});
    if (!detail::has_adjacent_pair(candidate)) {
        verdict.violations.push_back({"[2]", "no two consecutive naturals, so no Row is contained"});
    }
    if (f.repeated_extreme) verdict.violations.push_back({"[4]", *f.repeated_extreme});
    if (f.gap) verdict.violations.push_back({"[5]", *f.gap});
    if (f.descent) verdict.violations.push_back({"[6]", *f.descent});
    if (verdict.accepted()) verdict.value = Range(f.min, f.max);
    return verdict;
}

/// Equal-width Rows covering a Range, addressed by index without materializing.
class RowPartition {
public:
    RowPartition(const Range& range, std::uint64_t width) : range_(range), width_(width) {
        if (width == 0) throw Error(Errc::InvalidArgument, "row width must be >= 1");
        if (width > range.cardinality()) {
            throw Error(Errc::WidthExceedsRange, "width " + std::to_string(width) + " > range cardinality " +
                                                     std::to_string(range.cardinality()));
        }
        if (range.cardinality() % width != 0) {
            throw Error(Errc::NonDivisibleWidth, "width " + std::to_string(width) +
                                                     " does not divide range cardinality " +
                                                     std::to_string(range.cardinality()));
        }
    }

    const Range& range() const noexcept { return range_; }
    std::uint64_t width() const noexcept { return width_; }
    std::uint64_t size() const noexcept { return range_.cardinality() / width_; }

    Row operator[](std::uint64_t index) const {
        const std::uint64_t first = range_.smallest() + index * width_;
        return Row(first, first + (width_ - 1));
    }

    std::vector<Row> rows() const {
        std::vector<Row> out;
        out.reserve(size());
        for (std::uint64_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
        return out;
    }

private:
    Range range_;
    std::uint64_t width_;
};

inline std::vector<Row> partition_rows(const Range& range, std::uint64_t width) {
    return RowPartition(range, width).rows();
}

/// Signed offset p with a.greatest + p = b.smallest. b is the Successive Row of a iff p == 1.
inline std::int64_t successor_offset(const Row& a, const Row& b) {
    if (a.intersects(b)) {
        throw Error(Errc::OverlappingRows, "Row(" + std::to_string(a.smallest()) + ", " +
                                               std::to_string(a.greatest()) + ") and Row(" +
                                               std::to_string(b.smallest()) + ", " +
                                               std::to_string(b.greatest()) + ") intersect");
    }
    if (b.smallest() > a.greatest()) return static_cast<std::int64_t>(b.smallest() - a.greatest());
    return -static_cast<std::int64_t>(a.greatest() - b.smallest());
}

inline bool are_successive(const Row& a, const Row& b) {
    return !a.intersects(b) && successor_offset(a, b) == 1;
}

}  // namespace goldbach_lab
