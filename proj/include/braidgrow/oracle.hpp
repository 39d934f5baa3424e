#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "braidgrow/word.hpp"

namespace braidgrow {

struct OracleResult {
    std::vector<std::uint64_t> s, g;
    // per level: template key (same byte encoding the engine uses) -> braid count
    std::vector<std::map<std::vector<std::uint8_t>, std::uint64_t>> template_counts;
};

// Brute-force breadth-first enumeration over the Cayley graph, using only
// Dynnikov equality.  Counting logic is deliberately written from scratch
// here, and template labels come from a direct strand-crossing simulation
// rather than the templates module.  Intended for small depths only.
OracleResult bfs_enumerate(const Alphabet& alpha, int max_len,
                           std::uint64_t node_cap = 100'000'000);

} // namespace braidgrow
