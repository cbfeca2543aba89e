#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trasdim/solver.hpp"

namespace trasdim {

// Append-only JSON-lines store of solver verdicts keyed by instance hash.
// A record is reused only when its stored canonical instance matches the
// request exactly, so hash collisions cannot leak wrong verdicts. Corrupt
// trailing lines (torn writes) are truncated with a warning on load.
class ResultCache {
public:
    struct Record {
        std::string hash;
        std::string instance; // canonical instance JSON
        Verdict verdict = Verdict::unknown;
        std::uint64_t nodes = 0;
        std::uint64_t prunes = 0;
        std::string config;
        std::vector<std::int8_t> coloring; // sat witnesses, one color per point
    };

    explicit ResultCache(const std::filesystem::path& file);

    std::optional<Record> lookup(const std::string& hash, const std::string& canonical_instance);
    void store(const Record& rec);

    std::size_t size() const { return records_.size(); }

private:
    void load();

    std::filesystem::path file_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, Record> records_;
};

} // namespace trasdim
