#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace goldbach_lab {

enum class Errc {
    InvalidArgument,
    InvalidInterval,
    SegmentTooLarge,
    OutOfBounds,
    EmptyCandidate,
    NonDivisibleWidth,
    WidthExceedsRange,
    OverlappingRows,
    TargetTooSmall,
    GoldbachCounterexample,
    AboveOracleCap,
    AboveEnumerationCap,
    NotEven,
    CheckpointMismatch,
    CheckpointCorrupt,
    Io,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InvalidInterval: return "InvalidInterval";
        case Errc::SegmentTooLarge: return "SegmentTooLarge";
        case Errc::OutOfBounds: return "OutOfBounds";
        case Errc::EmptyCandidate: return "EmptyCandidate";
        case Errc::NonDivisibleWidth: return "NonDivisibleWidth";
        case Errc::WidthExceedsRange: return "WidthExceedsRange";
        case Errc::OverlappingRows: return "OverlappingRows";
        case Errc::TargetTooSmall: return "TargetTooSmall";
        case Errc::GoldbachCounterexample: return "GoldbachCounterexample";
        case Errc::AboveOracleCap: return "AboveOracleCap";
        case Errc::AboveEnumerationCap: return "AboveEnumerationCap";
        case Errc::NotEven: return "NotEven";
        case Errc::CheckpointMismatch: return "CheckpointMismatch";
        case Errc::CheckpointCorrupt: return "CheckpointCorrupt";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

// Errors a caller can fix by changing its input. The CLI maps these to exit code 2.
constexpr bool is_usage_error(Errc code) noexcept {
    switch (code) {
        case Errc::GoldbachCounterexample:
        case Errc::CheckpointCorrupt:
        case Errc::Io:
            return false;
        default:
            return true;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised when an exhaustive pair search finds no two primes summing to an even target.
class GoldbachCounterexample : public Error {
public:
    explicit GoldbachCounterexample(std::uint64_t even_target, const std::string& context = {})
        : Error(Errc::GoldbachCounterexample,
                "no prime pair sums to " + std::to_string(even_target) + context),
          target_(even_target) {}

    std::uint64_t target() const noexcept { return target_; }

private:
    std::uint64_t target_;
};

}  // namespace goldbach_lab
