#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "braidgrow/braid_template.hpp"
#include "braidgrow/store.hpp"
#include "braidgrow/word.hpp"

namespace braidgrow {

struct InterruptedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineConfig {
    Alphabet alpha;
    int max_len = 0;
    std::filesystem::path store_root;
    int workers = 1;
    std::uint64_t mem_cap = 4ull << 30; // per task
    bool reduced = true;                // RedCombi vs Combi
    bool resume = false;
    // Test hook: abort (InterruptedError) after this many freshly computed
    // tasks; < 0 disables. Simulates a mid-level kill.
    long task_limit = -1;
    bool collect_template_counts = false;
};

struct EngineResult {
    std::vector<std::uint64_t> s, g;
    // per level: template encoding -> braid count (filled on request)
    std::vector<std::map<std::vector<std::uint8_t>, std::uint64_t>> template_counts;
};

// In-memory representative-set entry as the engine works with it.
struct RepEntry {
    std::vector<std::uint8_t> letters;
    std::uint64_t omega;
};

// LoadFromRed: representative set of B_n(S, level, t) recovered from the
// stored reduced-template file, words mapped back through the witness
// inverse, omega carried unchanged.  Plain mode loads directly.
std::vector<RepEntry> load_rep(const Store& store, const Alphabet& alpha, int level,
                               const Template& t, bool reduced);

struct TaskResult {
    std::uint64_t count = 0;
    std::uint64_t omega_sum = 0;
    std::uint64_t checksum = 0;
};

// TempRepSet: builds, saves and summarizes W_{level,t} from the stored
// sets of the two previous levels.
TaskResult temp_rep_set(const Store& store, const Alphabet& alpha, int level,
                        const Template& t, bool reduced, std::uint64_t mem_cap);

using LevelCallback =
    std::function<void(int level, std::uint64_t s, std::uint64_t g)>;

// Combi / RedCombi driver: level-by-level enumeration over (reduced)
// templates with a per-template worker pool.  Counts are identical across
// runs regardless of scheduling.
EngineResult run_enumeration(const EngineConfig& cfg, const LevelCallback& on_level = {});

} // namespace braidgrow
