#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "goldbach_lab/parallel.hpp"
#include "goldbach_lab/primes.hpp"
#include "goldbach_lab/rowrange.hpp"

namespace goldbach_lab {

/// Even, odd and prime counts of one Row, plus its cardinality m.
/// 1 counts as odd and not prime.
struct RowCensus {
    std::uint64_t gamma_even = 0;
    std::uint64_t gamma_odd = 0;
    std::uint64_t gamma_prime = 0;
    std::uint64_t m = 0;

    friend bool operator==(const RowCensus&, const RowCensus&) = default;
};

/// Evens in [a, b], by endpoint arithmetic.
inline std::uint64_t count_evens(std::uint64_t a, std::uint64_t b) noexcept { return b / 2 - (a - 1) / 2; }

inline RowCensus parity_census(const Row& row) noexcept {
    RowCensus c;
    c.m = row.cardinality();
    c.gamma_even = count_evens(row.smallest(), row.greatest());
    c.gamma_odd = c.m - c.gamma_even;
    return c;
}

inline RowCensus census_row(const Row& row) {
    RowCensus c = parity_census(row);
    c.gamma_prime = prime_count(row.smallest(), row.greatest());
    return c;
}

struct CensusOptions {
    unsigned workers = 1;
    std::size_t segment_cap = kDefaultSegmentCap;
};

/// One census per partition row in ascending order. Adjacent rows share a
/// single sieved segment of at most segment_cap entries.
inline std::vector<std::pair<Row, RowCensus>> census_range(const Range& range, std::uint64_t width,
                                                           const CensusOptions& options = {}) {
    const RowPartition partition(range, width);
    const std::uint64_t n = partition.size();
    std::vector<std::pair<Row, RowCensus>> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.emplace_back(partition[i], RowCensus{});

    const std::uint64_t rows_per_chunk = std::max<std::uint64_t>(1, options.segment_cap / width);
    const std::uint64_t chunks = (n + rows_per_chunk - 1) / rows_per_chunk;

    parallel_for_blocks(options.workers, chunks, [&](std::uint64_t chunk) {
        const std::uint64_t first = chunk * rows_per_chunk;
        const std::uint64_t last = std::min(n, first + rows_per_chunk) - 1;
        if (width > options.segment_cap) {
            auto& [row, census] = out[first];
            census = parity_census(row);
            census.gamma_prime = prime_count(row.smallest(), row.greatest(), options.segment_cap);
            return;
        }
        const auto seg = sieve_segment(out[first].first.smallest(), out[last].first.greatest(), options.segment_cap);
        for (std::uint64_t i = first; i <= last; ++i) {
            auto& [row, census] = out[i];
            census = parity_census(row);
            census.gamma_prime = seg.count(row.smallest(), row.greatest());
        }
    });
    return out;
}

}  // namespace goldbach_lab
