#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidgrow/braid_template.hpp"
#include "braidgrow/word.hpp"

namespace braidgrow {

// One stored representative-set record: packed word bytes plus its
// geodesic-representative count.
struct StoredEntry {
    std::vector<std::uint8_t> packed;
    std::uint64_t omega;
};

std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t size);

// Disk layout: root/L<level>/<shard>/<hex>.rset where <hex> is the hex
// digest of the template's canonical encoding and <shard> its first two
// characters.  Files are written sorted and atomically renamed, so two
// runs producing the same set produce byte-identical files.
class Store {
public:
    Store(std::filesystem::path root, Alphabet alpha);

    const std::filesystem::path& root() const { return root_; }

    std::filesystem::path path_for(int level, const Template& t) const;

    // Entries must arrive sorted by coordinate tuple. Returns the FNV-1a
    // checksum of the file content.
    std::uint64_t save(int level, const Template& t,
                       const std::vector<StoredEntry>& entries) const;

    // Missing file is the documented empty-set signal; any malformed file
    // is fatal with the path named.
    std::vector<StoredEntry> load(int level, const Template& t) const;

    std::uint64_t file_checksum(const std::filesystem::path& p) const;

private:
    std::filesystem::path root_;
    Alphabet alpha_;
};

// Per-template result line of a completed level.
struct TemplateRecord {
    std::vector<std::uint8_t> key; // template encoding
    std::uint64_t count = 0;
    std::uint64_t omega_sum = 0;
    std::uint64_t checksum = 0;
};

// Plain-text run manifest plus a per-level journal enabling mid-level
// resume.  The journal records every dispatched template (including
// empty ones); the manifest keeps only templates that carry braids.
class Manifest {
public:
    Manifest(std::filesystem::path root, Alphabet alpha, bool reduced);

    bool load(); // false if no manifest on disk
    void save() const;

    int completed_levels() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<TemplateRecord>& level(int l) const { return levels_.at(l); }
    const std::vector<std::uint64_t>& s() const { return s_; }
    const std::vector<std::uint64_t>& g() const { return g_; }

    void begin_level(int level);
    void record_task(int level, const TemplateRecord& rec); // appends journal line
    std::map<std::vector<std::uint8_t>, TemplateRecord> journal_records(int level) const;
    void complete_level(int level, std::vector<TemplateRecord> records,
                        std::uint64_t s, std::uint64_t g);

private:
    std::filesystem::path manifest_path() const;
    std::filesystem::path journal_path(int level) const;

    std::filesystem::path root_;
    Alphabet alpha_;
    bool reduced_;
    std::vector<std::vector<TemplateRecord>> levels_;
    std::vector<std::uint64_t> s_, g_;
};

std::string hex_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> hex_decode(const std::string& s);

} // namespace braidgrow
