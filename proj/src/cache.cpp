#include "trasdim/cache.hpp"

#include <fstream>
#include <iostream>

#include "trasdim/json_io.hpp"

namespace trasdim {

namespace {

std::optional<Verdict> verdict_from_name(const std::string& s) {
    if (s == "sat") return Verdict::sat;
    if (s == "unsat") return Verdict::unsat;
    if (s == "unknown") return Verdict::unknown;
    return std::nullopt;
}

} // namespace

ResultCache::ResultCache(const std::filesystem::path& file) : file_(file) {
    if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
    load();
}

void ResultCache::load() {
    std::ifstream in(file_, std::ios::binary);
    if (!in) return;
    std::string line;
    std::uintmax_t good_bytes = 0;
    bool corrupt = false;
    while (std::getline(in, line)) {
        bool ended_with_newline = !in.eof();
        Record rec;
        try {
            Json j = Json::parse(line);
            rec.hash = j.at("hash").get<std::string>();
            rec.instance = j.at("instance").dump();
            auto v = verdict_from_name(j.at("verdict").get<std::string>());
            if (!v) throw std::invalid_argument("bad verdict");
            rec.verdict = *v;
            rec.nodes = j.at("nodes").get<std::uint64_t>();
            rec.prunes = j.at("prunes").get<std::uint64_t>();
            rec.config = j.at("config").get<std::string>();
            if (j.contains("coloring")) rec.coloring = j["coloring"].get<std::vector<std::int8_t>>();
        } catch (const std::exception&) {
            corrupt = true;
            break;
        }
        if (!ended_with_newline) {
            // no trailing newline: possibly a torn write, drop the line
            corrupt = true;
            break;
        }
        good_bytes += line.size() + 1;
        records_[rec.hash] = std::move(rec);
    }
    in.close();
    if (corrupt) {
        std::cerr << "warning: truncating corrupt tail of result cache " << file_ << "\n";
        std::filesystem::resize_file(file_, good_bytes);
    }
}

std::optional<ResultCache::Record> ResultCache::lookup(const std::string& hash,
                                                       const std::string& canonical_instance) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = records_.find(hash);
    if (it == records_.end()) return std::nullopt;
    if (it->second.instance != canonical_instance) return std::nullopt;
    return it->second;
}

void ResultCache::store(const Record& rec) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = records_.emplace(rec.hash, rec);
    if (!inserted) return; // append-only: first verdict wins
    Json j;
    j["hash"] = rec.hash;
    j["instance"] = Json::parse(rec.instance);
    j["verdict"] = verdict_name(rec.verdict);
    j["nodes"] = rec.nodes;
    j["prunes"] = rec.prunes;
    j["config"] = rec.config;
    if (!rec.coloring.empty()) j["coloring"] = rec.coloring;
    std::ofstream out(file_, std::ios::binary | std::ios::app);
    out << j.dump() << "\n";
    out.flush();
}

} // namespace trasdim
