#include "braidgrow/store.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "braidgrow/errors.hpp"

namespace braidgrow {

namespace {

constexpr char kMagic[4] = {'B', 'G', 'R', 'S'};
constexpr std::uint8_t kVersion = 1;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

void atomic_write(const std::filesystem::path& path, const std::vector<std::uint8_t>& data) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw StoreError("cannot open for write: " + tmp.string());
        out.write(reinterpret_cast<const char*>(data.data()),
                  static_cast<std::streamsize>(data.size()));
        if (!out) throw StoreError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t size) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex_encode(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::vector<std::uint8_t> hex_decode(const std::string& s) {
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw StoreError("bad hex digit");
    };
    std::vector<std::uint8_t> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
    return out;
}

Store::Store(std::filesystem::path root, Alphabet alpha)
    : root_(std::move(root)), alpha_(alpha) {}

std::filesystem::path Store::path_for(int level, const Template& t) const {
    std::string hex = hex_encode(t.encode());
    return root_ / ("L" + std::to_string(level)) / hex.substr(0, 2) / (hex + ".rset");
}

std::uint64_t Store::save(int level, const Template& t,
                          const std::vector<StoredEntry>& entries) const {
    std::vector<std::uint8_t> buf;
    std::size_t word_bytes = packed_size(alpha_, static_cast<std::size_t>(level));
    buf.reserve(4 + 1 + 1 + 1 + 2 + Template::encoded_size(alpha_.n) + 8 +
                entries.size() * (word_bytes + 8));
    buf.insert(buf.end(), kMagic, kMagic + 4);
    buf.push_back(kVersion);
    buf.push_back(static_cast<std::uint8_t>(alpha_.n));
    buf.push_back(static_cast<std::uint8_t>(alpha_.kind));
    put_u16(buf, static_cast<std::uint16_t>(level));
    auto key = t.encode();
    buf.insert(buf.end(), key.begin(), key.end());
    put_u64(buf, entries.size());
    for (const auto& e : entries) {
        if (e.packed.size() != word_bytes)
            throw StoreError("save: record width mismatch");
        buf.insert(buf.end(), e.packed.begin(), e.packed.end());
        put_u64(buf, e.omega);
    }
    atomic_write(path_for(level, t), buf);
    return fnv1a64(buf.data(), buf.size());
}

std::vector<StoredEntry> Store::load(int level, const Template& t) const {
    std::filesystem::path path = path_for(level, t);
    std::ifstream in(path, std::ios::binary);
    if (!in) return {}; // template outside T_n(S, level)
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    const std::size_t key_size = Template::encoded_size(alpha_.n);
    const std::size_t header = 4 + 1 + 1 + 1 + 2 + key_size + 8;
    if (buf.size() < header || !std::equal(kMagic, kMagic + 4, buf.begin()))
        throw StoreError("corrupt repset header: " + path.string());
    if (buf[4] != kVersion) throw StoreError("unsupported version: " + path.string());
    if (buf[5] != alpha_.n || buf[6] != static_cast<std::uint8_t>(alpha_.kind))
        throw StoreError("alphabet mismatch: " + path.string());
    int file_level = buf[7] | (buf[8] << 8);
    if (file_level != level) throw StoreError("level mismatch: " + path.string());
    std::vector<std::uint8_t> key(buf.begin() + 9, buf.begin() + 9 + key_size);
    if (key != t.encode()) throw StoreError("template key mismatch: " + path.string());
    std::uint64_t count = get_u64(buf.data() + 9 + key_size);
    std::size_t word_bytes = packed_size(alpha_, static_cast<std::size_t>(level));
    std::size_t record = word_bytes + 8;
    if (buf.size() != header + count * record)
        throw StoreError("truncated repset file: " + path.string());
    std::vector<StoredEntry> out;
    out.reserve(count);
    const std::uint8_t* p = buf.data() + header;
    for (std::uint64_t i = 0; i < count; ++i, p += record) {
        StoredEntry e;
        e.packed.assign(p, p + word_bytes);
        e.omega = get_u64(p + word_bytes);
        out.push_back(std::move(e));
    }
    return out;
}

std::uint64_t Store::file_checksum(const std::filesystem::path& p) const {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw StoreError("missing file: " + p.string());
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    return fnv1a64(buf.data(), buf.size());
}

Manifest::Manifest(std::filesystem::path root, Alphabet alpha, bool reduced)
    : root_(std::move(root)), alpha_(alpha), reduced_(reduced) {}

std::filesystem::path Manifest::manifest_path() const { return root_ / "manifest.txt"; }

std::filesystem::path Manifest::journal_path(int level) const {
    return root_ / ("journal_L" + std::to_string(level) + ".txt");
}

bool Manifest::load() {
    std::ifstream in(manifest_path());
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != "braidgrow-manifest v1")
        throw StoreError("bad manifest header: " + manifest_path().string());
    levels_.clear();
    s_.clear();
    g_.clear();
    int cur_level = -1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag.empty()) continue;
        if (tag == "n") {
            int n;
            ls >> n;
            if (n != alpha_.n) throw StoreError("manifest strand count mismatch");
        } else if (tag == "kind") {
            std::string k;
            ls >> k;
            if (k != gens_name(alpha_.kind)) throw StoreError("manifest kind mismatch");
        } else if (tag == "reduced") {
            int r;
            ls >> r;
            if (static_cast<bool>(r) != reduced_) throw StoreError("manifest mode mismatch");
        } else if (tag == "s") {
            std::uint64_t v;
            while (ls >> v) s_.push_back(v);
        } else if (tag == "g") {
            std::uint64_t v;
            while (ls >> v) g_.push_back(v);
        } else if (tag == "level") {
            ls >> cur_level;
            if (cur_level != static_cast<int>(levels_.size()))
                throw StoreError("manifest level out of order");
            levels_.emplace_back();
        } else if (tag == "tpl") {
            if (cur_level < 0) throw StoreError("manifest tpl before level");
            TemplateRecord rec;
            std::string hex, cs;
            ls >> hex >> rec.count >> rec.omega_sum >> cs;
            if (!ls) throw StoreError("bad manifest tpl line");
            rec.key = hex_decode(hex);
            rec.checksum = std::stoull(cs, nullptr, 16);
            levels_.back().push_back(std::move(rec));
        } else {
            throw StoreError("unknown manifest tag: " + tag);
        }
    }
    if (s_.size() != levels_.size() || g_.size() != levels_.size())
        throw StoreError("manifest count arrays inconsistent with levels");
    return true;
}

void Manifest::save() const {
    std::ostringstream out;
    out << "braidgrow-manifest v1\n";
    out << "n " << alpha_.n << "\n";
    out << "kind " << gens_name(alpha_.kind) << "\n";
    out << "reduced " << (reduced_ ? 1 : 0) << "\n";
    out << "s";
    for (auto v : s_) out << " " << v;
    out << "\n";
    out << "g";
    for (auto v : g_) out << " " << v;
    out << "\n";
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        out << "level " << l << "\n";
        for (const auto& rec : levels_[l]) {
            out << "tpl " << hex_encode(rec.key) << " " << rec.count << " "
                << rec.omega_sum << " " << std::hex << rec.checksum << std::dec << "\n";
        }
    }
    std::string text = out.str();
    std::vector<std::uint8_t> bytes(text.begin(), text.end());
    atomic_write(manifest_path(), bytes);
}

void Manifest::begin_level(int level) {
    std::filesystem::create_directories(root_);
    // leave any existing journal in place: resume consumes it
    (void)level;
}

void Manifest::record_task(int level, const TemplateRecord& rec) {
    std::ofstream out(journal_path(level), std::ios::app);
    if (!out) throw StoreError("cannot append journal: " + journal_path(level).string());
    out << "tpl " << hex_encode(rec.key) << " " << rec.count << " " << rec.omega_sum
        << " " << std::hex << rec.checksum << std::dec << "\n";
    out.flush();
}

std::map<std::vector<std::uint8_t>, TemplateRecord>
Manifest::journal_records(int level) const {
    std::map<std::vector<std::uint8_t>, TemplateRecord> out;
    std::ifstream in(journal_path(level));
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag, hex, cs;
        TemplateRecord rec;
        ls >> tag >> hex >> rec.count >> rec.omega_sum >> cs;
        if (tag != "tpl" || !ls) continue; // torn tail line after a crash
        rec.key = hex_decode(hex);
        rec.checksum = std::stoull(cs, nullptr, 16);
        out[rec.key] = std::move(rec);
    }
    return out;
}

void Manifest::complete_level(int level, std::vector<TemplateRecord> records,
                              std::uint64_t s, std::uint64_t g) {
    if (level != static_cast<int>(levels_.size()))
        throw StoreError("complete_level out of order");
    levels_.push_back(std::move(records));
    s_.push_back(s);
    g_.push_back(g);
    save();
    std::error_code ec;
    std::filesystem::remove(journal_path(level), ec);
}

} // namespace braidgrow
