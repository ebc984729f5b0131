#pragma once

// Sweep checkpoint file: one JSON object with exactly the fields below,
// replaced atomically (write temp, fsync, rename) so a reader never sees a
// partial document.

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "goldbach_lab/error.hpp"
#include "json.hpp"

namespace goldbach_lab {

struct SweepCheckpoint {
    static constexpr std::uint64_t kVersion = 1;

    std::uint64_t version = kVersion;
    std::uint64_t from = 4;
    std::uint64_t to = 4;
    std::uint64_t last_verified = 4;
    std::vector<std::uint64_t> failures;
    std::string started_at;
    std::string updated_at;

    friend bool operator==(const SweepCheckpoint&, const SweepCheckpoint&) = default;
};

inline std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline void validate(const SweepCheckpoint& cp) {
    auto bad = [](const std::string& why) { throw Error(Errc::CheckpointCorrupt, why); };
    if (cp.version != SweepCheckpoint::kVersion) bad("unsupported version " + std::to_string(cp.version));
    if (cp.from % 2 || cp.to % 2 || cp.last_verified % 2) bad("bounds must be even");
    if (!(cp.from <= cp.last_verified && cp.last_verified <= cp.to)) bad("last_verified outside [from, to]");
    for (auto f : cp.failures) {
        if (f % 2 || f < cp.from || f > cp.to) bad("failure " + std::to_string(f) + " is not an even value in range");
    }
}

inline nlohmann::json to_json(const SweepCheckpoint& cp) {
    return {
        {"version", cp.version},       {"from", cp.from},           {"to", cp.to},
        {"last_verified", cp.last_verified}, {"failures", cp.failures}, {"started_at", cp.started_at},
        {"updated_at", cp.updated_at},
    };
}

inline SweepCheckpoint checkpoint_from_json(const nlohmann::json& j) {
    static const std::set<std::string> fields{"version",  "from",       "to",        "last_verified",
                                              "failures", "started_at", "updated_at"};
    if (!j.is_object()) throw Error(Errc::CheckpointCorrupt, "checkpoint is not a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (!fields.count(key)) throw Error(Errc::CheckpointCorrupt, "unknown field '" + key + "'");
    }
    for (const auto& key : fields) {
        if (!j.contains(key)) throw Error(Errc::CheckpointCorrupt, "missing field '" + key + "'");
    }
    SweepCheckpoint cp;
    try {
        if (!j.at("version").is_number_unsigned()) throw Error(Errc::CheckpointCorrupt, "version must be a natural");
        cp.version = j.at("version").get<std::uint64_t>();
        if (cp.version != SweepCheckpoint::kVersion) {
            throw Error(Errc::CheckpointCorrupt, "unsupported version " + std::to_string(cp.version));
        }
        for (const char* key : {"from", "to", "last_verified"}) {
            if (!j.at(key).is_number_unsigned()) {
                throw Error(Errc::CheckpointCorrupt, std::string(key) + " must be a natural");
            }
        }
        cp.from = j.at("from").get<std::uint64_t>();
        cp.to = j.at("to").get<std::uint64_t>();
        cp.last_verified = j.at("last_verified").get<std::uint64_t>();
        cp.failures = j.at("failures").get<std::vector<std::uint64_t>>();
        cp.started_at = j.at("started_at").get<std::string>();
        cp.updated_at = j.at("updated_at").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::CheckpointCorrupt, e.what());
    }
    validate(cp);
    return cp;
}

/// nullopt when the file does not exist; CheckpointCorrupt when it cannot be read as a checkpoint.
inline std::optional<SweepCheckpoint> load_checkpoint(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Io, "cannot open checkpoint " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const auto parsed = nlohmann::json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) throw Error(Errc::CheckpointCorrupt, "checkpoint " + path.string() + " is not JSON");
    return checkpoint_from_json(parsed);
}

inline void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
    if (fd < 0) throw Error(Errc::Io, "open " + tmp.string() + ": " + std::strerror(errno));
    std::size_t written = 0;
    while (written < contents.size()) {
        const ssize_t n = ::write(fd, contents.data() + written, contents.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            const std::string why = std::strerror(errno);
            ::close(fd);
            throw Error(Errc::Io, "write " + tmp.string() + ": " + why);
        }
        written += static_cast<std::size_t>(n);
    }
    if (::fsync(fd) != 0 || ::close(fd) != 0) throw Error(Errc::Io, "flush " + tmp.string());
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw Error(Errc::Io, "rename to " + path.string() + ": " + std::strerror(errno));
    }
}

inline void save_checkpoint(const std::filesystem::path& path, const SweepCheckpoint& cp) {
    validate(cp);
    write_file_atomically(path, to_json(cp).dump(2) + "\n");
}

}  // namespace goldbach_lab
