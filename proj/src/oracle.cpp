#include "braidgrow/oracle.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "braidgrow/dynnikov.hpp"
#include "braidgrow/errors.hpp"

namespace braidgrow {

namespace {

// Direct strand simulation: pos[j] is the start position of the strand
// currently at position j; every crossing adds its sign to the linking
// count of the two strand ids involved.
struct StrandState {
    std::vector<std::uint8_t> pos;       // 1-based values
    std::vector<std::int32_t> link;      // co-lex pairs of strand ids

    static StrandState initial(int n) {
        StrandState st;
        st.pos.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) st.pos[i] = static_cast<std::uint8_t>(i + 1);
        st.link.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
        return st;
    }

    static std::size_t pair_index(int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(b - 1) * (b - 2) / 2 + (a - 1);
    }

    void cross(int position, int sign) { // sigma_position^sign
        int a = pos[position - 1], b = pos[position];
        link[pair_index(a, b)] += sign;
        std::swap(pos[position - 1], pos[position]);
    }

    std::vector<std::uint8_t> key(int n) const {
        std::vector<std::uint8_t> out(pos.begin(), pos.end());
        for (std::int32_t v : link) {
            std::uint32_t u = static_cast<std::uint32_t>(v);
            out.push_back(static_cast<std::uint8_t>(u & 0xff));
            out.push_back(static_cast<std::uint8_t>((u >> 8) & 0xff));
            out.push_back(static_cast<std::uint8_t>((u >> 16) & 0xff));
            out.push_back(static_cast<std::uint8_t>((u >> 24) & 0xff));
        }
        (void)n;
        return out;
    }
};

struct Node {
    DynnikovCoords coords;
    std::uint64_t omega;
    StrandState strands;
};

struct CoordsHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::uint64_t h = 14695981039346656037ull;
        for (std::int64_t x : v) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

OracleResult bfs_enumerate(const Alphabet& alpha, int max_len, std::uint64_t node_cap) {
    const int n = alpha.n;
    Alphabet artin(n, Gens::Artin);

    // precompute the Artin crossing sequence of every letter
    std::vector<std::vector<std::pair<int, int>>> crossings(alpha.size());
    for (int x = 0; x < alpha.size(); ++x) {
        if (alpha.kind == Gens::Artin) {
            crossings[x] = {{alpha.artin_id(x), alpha.sign(x)}};
        } else {
            for (std::uint8_t a : dual_letter_to_artin(alpha, x))
                crossings[x].push_back({artin.artin_id(a), artin.sign(a)});
        }
    }

    OracleResult res;
    res.s = {1};
    res.g = {1};
    res.template_counts.resize(static_cast<std::size_t>(max_len) + 1);
    StrandState init = StrandState::initial(n);
    res.template_counts[0][init.key(n)] = 1;

    std::unordered_set<std::vector<std::int64_t>, CoordsHash> seen;
    std::uint64_t total_nodes = 1;
    std::vector<Node> frontier;
    frontier.push_back({base_coords(n), 1, init});
    seen.insert(frontier[0].coords.c);

    for (int level = 1; level <= max_len; ++level) {
        std::vector<Node> next;
        std::unordered_map<std::vector<std::int64_t>, std::size_t, CoordsHash> where;
        std::uint64_t glevel = 0;
        for (const Node& node : frontier) {
            for (int x = 0; x < alpha.size(); ++x) {
                DynnikovCoords c = node.coords;
                for (auto [id, sign] : crossings[x]) apply_artin_letter(c, id, sign);
                if (auto it = where.find(c.c); it != where.end()) {
                    next[it->second].omega =
                        checked_add_u64(next[it->second].omega, node.omega);
                    glevel = checked_add_u64(glevel, node.omega);
                    continue;
                }
                if (seen.count(c.c)) continue; // shorter word exists
                StrandState st = node.strands;
                for (auto [id, sign] : crossings[x]) st.cross(id, sign);
                where.emplace(c.c, next.size());
                next.push_back({std::move(c), node.omega, std::move(st)});
                glevel = checked_add_u64(glevel, node.omega);
                if (++total_nodes > node_cap)
                    throw std::runtime_error("oracle node cap exceeded");
            }
        }
        for (const Node& node : next) seen.insert(node.coords.c);
        res.s.push_back(next.size());
        res.g.push_back(glevel);
        for (const Node& node : next)
            res.template_counts[level][node.strands.key(n)] += 1;
        frontier = std::move(next);
    }
    return res;
}

} // namespace braidgrow
