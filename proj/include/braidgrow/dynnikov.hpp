#pragma once

#include <cstdint>
#include <vector>

#include "braidgrow/word.hpp"

namespace braidgrow {

// Coordinate vector (a_1,b_1,...,a_n,b_n) of the B_n action on Z^{2n}.
// Equal vectors characterize equal braids, which makes this the exact
// equality oracle of the whole project.
struct DynnikovCoords {
    int n = 0;
    std::vector<std::int64_t> c; // size 2n

    bool operator==(const DynnikovCoords&) const = default;
};

DynnikovCoords base_coords(int n);

struct Quad {
    std::int64_t x1, y1, x2, y2;
    bool operator==(const Quad&) const = default;
};

// One crossing on a coordinate block.  All arithmetic is overflow checked.
Quad apply_sigma(const Quad& q, int sign);

// Applies Artin letter sigma_{id}^sign in place on the (id, id+1) block.
void apply_artin_letter(DynnikovCoords& coords, int id, int sign);

// Left-to-right action starting from the base point; dual words are
// expanded to Artin letters first.
DynnikovCoords dynnikov(const Word& w);

bool braids_equal(const Word& u, const Word& v);

// Paper hash for n = 4: low byte of every coordinate packed positionally.
// Other n use an FNV-style fold over the same positive remainders; either
// way full coordinate equality stays the final arbiter.
std::uint64_t hash64(const DynnikovCoords& coords);

} // namespace braidgrow
