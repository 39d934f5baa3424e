#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "braidgrow/dynnikov.hpp"
#include "braidgrow/engine.hpp"
#include "braidgrow/errors.hpp"
#include "braidgrow/symmetry.hpp"

using namespace braidgrow;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("bgengine." + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

EngineResult run(const Alphabet& alpha, int max_len, const fs::path& store,
                 bool reduced, int workers = 2, bool counts = false) {
    EngineConfig cfg{alpha};
    cfg.max_len = max_len;
    cfg.store_root = store;
    cfg.workers = workers;
    cfg.reduced = reduced;
    cfg.collect_template_counts = counts;
    return run_enumeration(cfg);
}

} // namespace

TEST_CASE("B2 collapses to the integers") {
    TempDir dir;
    for (Gens kind : {Gens::Artin, Gens::Dual}) {
        auto res = run(Alphabet(2, kind), 6, dir.path / gens_name(kind), true);
        CHECK(res.s == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2, 2});
        CHECK(res.g == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2, 2});
    }
}

TEST_CASE("B3 dual matches the published prefix") {
    TempDir dir;
    auto res = run(Alphabet(3, Gens::Dual), 6, dir.path, true);
    CHECK(res.s == std::vector<std::uint64_t>{1, 6, 20, 54, 134, 318, 734});
    CHECK(res.g == std::vector<std::uint64_t>{1, 6, 30, 126, 498, 1926, 7410});
}

TEST_CASE("reduced and plain enumeration agree") {
    TempDir dir;
    for (Gens kind : {Gens::Artin, Gens::Dual})
        for (int n : {3, 4}) {
            int max_len = (n == 4 && kind == Gens::Dual) ? 4 : 5;
            Alphabet alpha(n, kind);
            auto plain = run(alpha, max_len, dir.path / "p", false, 1, true);
            auto red = run(alpha, max_len, dir.path / "r", true, 3, true);
            CHECK(plain.s == red.s);
            CHECK(plain.g == red.g);
            CHECK(plain.template_counts == red.template_counts);
            // partition: per-level template counts add up to s
            for (int l = 0; l <= max_len; ++l) {
                std::uint64_t sum = 0;
                for (const auto& [key, c] : plain.template_counts[l]) sum += c;
                CHECK(sum == plain.s[l]);
            }
            fs::remove_all(dir.path / "p");
            fs::remove_all(dir.path / "r");
        }
}

TEST_CASE("worker count does not change the outcome") {
    TempDir dir;
    Alphabet alpha(4, Gens::Artin);
    auto one = run(alpha, 5, dir.path / "w1", true, 1);
    auto many = run(alpha, 5, dir.path / "w4", true, 4);
    CHECK(one.s == many.s);
    CHECK(one.g == many.g);
    // byte determinism of the stored files
    Store s1(dir.path / "w1" / "data", alpha), s4(dir.path / "w4" / "data", alpha);
    Manifest m(dir.path / "w1", alpha, true);
    REQUIRE(m.load());
    for (int l = 0; l <= 5; ++l)
        for (const auto& rec : m.level(l)) {
            Template t = Template::decode(rec.key, 4);
            CHECK(s1.file_checksum(s1.path_for(l, t)) ==
                  s4.file_checksum(s4.path_for(l, t)));
            CHECK(s1.file_checksum(s1.path_for(l, t)) == rec.checksum);
        }
}

TEST_CASE("resume after a mid-level kill") {
    TempDir dir;
    Alphabet alpha(3, Gens::Dual);
    auto straight = run(alpha, 5, dir.path / "full", true);

    EngineConfig cfg{alpha};
    cfg.max_len = 5;
    cfg.store_root = dir.path / "killed";
    cfg.workers = 2;
    cfg.task_limit = 3;
    bool interrupted = false;
    for (int attempt = 0; attempt < 200; ++attempt) {
        try {
            cfg.resume = attempt > 0;
            EngineResult res = run_enumeration(cfg);
            CHECK(res.s == straight.s);
            CHECK(res.g == straight.g);
            interrupted = attempt > 0;
            break;
        } catch (const InterruptedError&) {
            interrupted = true;
        }
    }
    CHECK(interrupted); // the kill did fire at least once

    // resume of a finished run is a no-op
    cfg.resume = true;
    cfg.task_limit = 0;
    EngineResult again = run_enumeration(cfg);
    CHECK(again.s == straight.s);
    CHECK(again.g == straight.g);
}

TEST_CASE("memory cap is enforced per task") {
    TempDir dir;
    EngineConfig cfg{Alphabet(3, Gens::Artin)};
    cfg.max_len = 4;
    cfg.store_root = dir.path;
    cfg.mem_cap = 16; // bytes: nothing fits
    CHECK_THROWS_AS(run_enumeration(cfg), MemCapError);
}

TEST_CASE("omega overflow surfaces instead of wrapping") {
    // s1 s2 s1 = s2 s1 s2: two parents merge, each carrying omega = 2^63
    TempDir dir;
    Alphabet alpha(3, Gens::Artin);
    Store store(dir.path, alpha);
    int s1 = alpha.artin_letter(1, +1), s2 = alpha.artin_letter(2, +1);
    Word u12(alpha, {(std::uint8_t)s1, (std::uint8_t)s2});
    Word u21(alpha, {(std::uint8_t)s2, (std::uint8_t)s1});
    std::uint64_t half = 1ull << 63;
    store.save(2, template_of_word(u12), {{pack_word(u12), half}});
    store.save(2, template_of_word(u21), {{pack_word(u21), half}});
    Word w(alpha, {(std::uint8_t)s1, (std::uint8_t)s2, (std::uint8_t)s1});
    CHECK_THROWS_AS(
        temp_rep_set(store, alpha, 3, template_of_word(w), false, 1ull << 30),
        OverflowError);
}

TEST_CASE("load_rep maps reduced files back through the witness") {
    TempDir dir;
    Alphabet alpha(3, Gens::Dual);
    EngineConfig cfg{alpha};
    cfg.max_len = 4;
    cfg.store_root = dir.path;
    cfg.reduced = true;
    run_enumeration(cfg);
    Store store(dir.path / "data", alpha);
    // every loaded word must genuinely carry the requested template
    Manifest m(dir.path, alpha, true);
    REQUIRE(m.load());
    for (const auto& rec : m.level(3)) {
        Template red = Template::decode(rec.key, 3);
        for (const Template& t : orbit(red, alpha)) {
            auto reps = load_rep(store, alpha, 3, t, true);
            CHECK(reps.size() == rec.count);
            for (const auto& e : reps) {
                Word w(alpha, e.letters);
                CHECK(template_of_word(w) == t);
            }
        }
    }
}
