#include "braidgrow/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "braidgrow/dynnikov.hpp"
#include "braidgrow/errors.hpp"
#include "braidgrow/symmetry.hpp"

namespace braidgrow {

namespace {

struct WorkEntry {
    std::vector<std::uint8_t> letters;
    std::uint64_t omega;
    DynnikovCoords coords;
};

DynnikovCoords coords_of_letters(const Alphabet& alpha,
                                 const std::vector<std::uint8_t>& letters) {
    Word w(alpha, letters);
    return dynnikov(w);
}

// coords(u.x) from cached coords(u): the action is a right fold.
void apply_letter(DynnikovCoords& coords, const Alphabet& alpha, int letter) {
    if (alpha.kind == Gens::Artin) {
        apply_artin_letter(coords, alpha.artin_id(letter), alpha.sign(letter));
    } else {
        Alphabet artin(alpha.n, Gens::Artin);
        for (std::uint8_t a : dual_letter_to_artin(alpha, letter))
            apply_artin_letter(coords, artin.artin_id(a), artin.sign(a));
    }
}

} // namespace

std::vector<RepEntry> load_rep(const Store& store, const Alphabet& alpha, int level,
                               const Template& t, bool reduced) {
    if (level < 0) return {};
    Template source = t;
    SymmetryElement witness;
    if (reduced) {
        auto [tr, g] = reduce(t, alpha);
        source = tr;
        witness = g;
    }
    std::vector<StoredEntry> raw = store.load(level, source);
    std::vector<RepEntry> out;
    out.reserve(raw.size());
    const bool mapped = reduced && !witness.is_identity();
    const SymmetryElement ginv = symmetry_inverse(witness, alpha.n);
    for (const auto& e : raw) {
        Word w = unpack_word(e.packed, static_cast<std::size_t>(level), alpha);
        if (mapped) w = map_word(ginv, w);
        out.push_back({std::move(w.letters), e.omega});
    }
    return out;
}

TaskResult temp_rep_set(const Store& store, const Alphabet& alpha, int level,
                        const Template& t, bool reduced, std::uint64_t mem_cap) {
    assert(level >= 1);
    const std::size_t coord_words = 2 * static_cast<std::size_t>(alpha.n);

    // W_{level-2, t}: the geodesy filter (Lemma on non-geodesic extensions)
    std::vector<DynnikovCoords> filter;
    {
        auto prev2 = load_rep(store, alpha, level - 2, t, reduced);
        filter.reserve(prev2.size());
        for (const auto& e : prev2)
            filter.push_back(coords_of_letters(alpha, e.letters));
    }
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> filter_idx;
    for (std::uint32_t i = 0; i < filter.size(); ++i)
        filter_idx[hash64(filter[i])].push_back(i);

    std::vector<WorkEntry> entries;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
    std::uint64_t ng = 0;
    std::uint64_t mem_used = 0;
    const std::uint64_t per_entry =
        static_cast<std::uint64_t>(level) + 8 + coord_words * 8 + 64;

    for (int x = 0; x < alpha.size(); ++x) {
        Template t_prev = template_extend(t, alpha, alpha.inverse(x));
        auto prev = load_rep(store, alpha, level - 1, t_prev, reduced);
        for (auto& u : prev) {
            DynnikovCoords coords = coords_of_letters(alpha, u.letters);
            apply_letter(coords, alpha, x);
            std::uint64_t h = hash64(coords);
            // geodesic iff not equivalent to anything two levels down
            if (auto it = filter_idx.find(h); it != filter_idx.end()) {
                bool hit = false;
                for (std::uint32_t i : it->second)
                    if (filter[i] == coords) {
                        hit = true;
                        break;
                    }
                if (hit) continue;
            }
            bool found = false;
            for (std::uint32_t i : index[h]) {
                if (entries[i].coords == coords) {
                    entries[i].omega = checked_add_u64(entries[i].omega, u.omega);
                    found = true;
                    break;
                }
            }
            if (!found) {
                WorkEntry e;
                e.letters = u.letters;
                e.letters.push_back(static_cast<std::uint8_t>(x));
                e.omega = u.omega;
                e.coords = std::move(coords);
                index[h].push_back(static_cast<std::uint32_t>(entries.size()));
                entries.push_back(std::move(e));
                mem_used += per_entry;
                if (mem_used > mem_cap)
                    throw MemCapError("memory cap exceeded for template " +
                                      hex_encode(t.encode()) + " at level " +
                                      std::to_string(level));
            }
            ng = checked_add_u64(ng, u.omega);
        }
    }

    TaskResult res;
    res.count = entries.size();
    res.omega_sum = ng;
    if (!entries.empty()) {
        std::sort(entries.begin(), entries.end(),
                  [](const WorkEntry& a, const WorkEntry& b) { return a.coords.c < b.coords.c; });
        std::vector<StoredEntry> stored;
        stored.reserve(entries.size());
        for (const auto& e : entries) {
            Word w(alpha, e.letters, e.omega);
            stored.push_back({pack_word(w), e.omega});
        }
        res.checksum = store.save(level, t, stored);
    }
    return res;
}

namespace {

struct Candidate {
    Template tpl;
    std::vector<std::uint8_t> key;
    std::uint64_t orbit = 1;
};

std::vector<Candidate> level_candidates(const std::vector<Template>& frontier,
                                        const Alphabet& alpha, bool reduced) {
    std::map<std::vector<std::uint8_t>, Candidate> out; // deterministic order
    for (const Template& tr : frontier) {
        std::vector<Template> sources =
            reduced ? orbit(tr, alpha) : std::vector<Template>{tr};
        for (const Template& t : sources) {
            for (int x = 0; x < alpha.size(); ++x) {
                Template next = template_extend(t, alpha, x);
                if (reduced && !is_reduced(next, alpha)) continue;
                auto key = next.encode();
                if (out.count(key)) continue;
                Candidate c;
                c.tpl = next;
                c.orbit = reduced ? orbit_size(next, alpha) : 1;
                c.key = key;
                out.emplace(std::move(key), std::move(c));
            }
        }
    }
    std::vector<Candidate> v;
    v.reserve(out.size());
    for (auto& [k, c] : out) v.push_back(std::move(c));
    return v;
}

} // namespace

EngineResult run_enumeration(const EngineConfig& cfg, const LevelCallback& on_level) {
    const Alphabet alpha = cfg.alpha;
    Store store(cfg.store_root / "data", alpha);
    Manifest manifest(cfg.store_root, alpha, cfg.reduced);

    EngineResult result;
    std::vector<Template> frontier;
    int start;

    bool resumed = cfg.resume && manifest.load();
    if (resumed) {
        result.s = manifest.s();
        result.g = manifest.g();
        start = manifest.completed_levels() + 1;
        // checksum pass over the two input levels of the next task wave
        for (int l = start - 1; l >= 0 && l >= start - 2; --l) {
            for (const auto& rec : manifest.level(l)) {
                Template t = Template::decode(rec.key, alpha.n);
                std::uint64_t cs = store.file_checksum(store.path_for(l, t));
                if (cs != rec.checksum)
                    throw StoreError("checksum mismatch on resume: " +
                                     store.path_for(l, t).string());
            }
        }
        if (start > 0)
            for (const auto& rec : manifest.level(start - 1))
                frontier.push_back(Template::decode(rec.key, alpha.n));
    } else {
        // cold start owns the store root: drop any stale state first
        std::error_code ec;
        std::filesystem::remove(cfg.store_root / "manifest.txt", ec);
        std::filesystem::remove_all(cfg.store_root / "data", ec);
        if (std::filesystem::exists(cfg.store_root))
            for (auto& entry : std::filesystem::directory_iterator(cfg.store_root))
                if (entry.path().filename().string().starts_with("journal_L"))
                    std::filesystem::remove(entry.path(), ec);
        // level 0 is the identity template holding epsilon
        Template id = Template::identity(alpha.n);
        std::uint64_t cs = store.save(0, id, {{std::vector<std::uint8_t>{}, 1}});
        TemplateRecord rec{id.encode(), 1, 1, cs};
        manifest.complete_level(0, {rec}, 1, 1);
        result.s = {1};
        result.g = {1};
        frontier = {id};
        start = 1;
    }

    // counts are constant on orbits, so reduced records expand to every member
    auto expand_counts = [&](const std::vector<TemplateRecord>& recs) {
        std::map<std::vector<std::uint8_t>, std::uint64_t> counts;
        for (const auto& rec : recs) {
            if (!cfg.reduced) {
                counts[rec.key] = rec.count;
                continue;
            }
            Template t = Template::decode(rec.key, alpha.n);
            for (const Template& member : orbit(t, alpha))
                counts[member.encode()] = rec.count;
        }
        return counts;
    };

    if (cfg.collect_template_counts) {
        result.template_counts.resize(result.s.size());
        for (int l = 0; l < static_cast<int>(result.s.size()); ++l)
            result.template_counts[l] = expand_counts(manifest.level(l));
    }
    if (on_level && start == 1 && !resumed) on_level(0, 1, 1);

    std::atomic<long> fresh_tasks{0};

    for (int level = start; level <= cfg.max_len; ++level) {
        manifest.begin_level(level);
        auto done = manifest.journal_records(level);
        // resumed mid-level work must still reference intact files
        for (const auto& [key, rec] : done) {
            if (rec.count == 0) continue;
            Template t = Template::decode(key, alpha.n);
            if (store.file_checksum(store.path_for(level, t)) != rec.checksum)
                throw StoreError("journal checksum mismatch: " +
                                 store.path_for(level, t).string());
        }

        std::vector<Candidate> cands = level_candidates(frontier, alpha, cfg.reduced);
        std::vector<TaskResult> results(cands.size());
        std::vector<std::exception_ptr> errors;
        std::mutex mtx;
        std::atomic<std::size_t> next{0};
        std::atomic<bool> interrupted{false};

        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= cands.size() || interrupted.load()) return;
                const Candidate& c = cands[i];
                try {
                    if (auto it = done.find(c.key); it != done.end()) {
                        results[i] = {it->second.count, it->second.omega_sum,
                                      it->second.checksum};
                        continue;
                    }
                    if (cfg.task_limit >= 0 &&
                        fresh_tasks.fetch_add(1) >= cfg.task_limit) {
                        interrupted.store(true);
                        return;
                    }
                    results[i] =
                        temp_rep_set(store, alpha, level, c.tpl, cfg.reduced, cfg.mem_cap);
                    TemplateRecord rec{c.key, results[i].count, results[i].omega_sum,
                                       results[i].checksum};
                    std::lock_guard<std::mutex> lock(mtx);
                    manifest.record_task(level, rec);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mtx);
                    errors.push_back(std::current_exception());
                    interrupted.store(true);
                    return;
                }
            }
        };

        int nthreads = std::max(1, cfg.workers);
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (!errors.empty()) std::rethrow_exception(errors.front());
        if (interrupted.load())
            throw InterruptedError("enumeration interrupted at level " +
                                   std::to_string(level));

        std::uint64_t ns = 0, ngv = 0;
        std::vector<TemplateRecord> records;
        std::vector<Template> next_frontier;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (results[i].count == 0) continue;
            ns = checked_add_u64(ns, checked_mul_u64(results[i].count, cands[i].orbit));
            ngv = checked_add_u64(ngv, checked_mul_u64(results[i].omega_sum, cands[i].orbit));
            records.push_back({cands[i].key, results[i].count, results[i].omega_sum,
                               results[i].checksum});
            next_frontier.push_back(cands[i].tpl);
        }
        if (cfg.collect_template_counts)
            result.template_counts.push_back(expand_counts(records));
        manifest.complete_level(level, std::move(records), ns, ngv);
        result.s.push_back(ns);
        result.g.push_back(ngv);
        frontier = std::move(next_frontier);
        if (on_level) on_level(level, ns, ngv);
    }

    // a fully completed manifest can run past a shorter request
    if (static_cast<int>(result.s.size()) > cfg.max_len + 1) {
        result.s.resize(cfg.max_len + 1);
        result.g.resize(cfg.max_len + 1);
        if (cfg.collect_template_counts)
            result.template_counts.resize(cfg.max_len + 1);
    }
    return result;
}

} // namespace braidgrow
