#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "braidgrow/word.hpp"

namespace braidgrow {

// img[i-1] = pi(i): the strand ending at position i starts at position pi(i).
struct Permutation {
    std::vector<std::uint8_t> img;

    static Permutation identity(int n);
    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<std::size_t>(i) - 1]; }
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
};

// (a o b)(k) = a(b(k))
Permutation compose(const Permutation& a, const Permutation& b);

// Permutation plus the n(n-1)/2 linking numbers in co-lex pair order:
// l_{1,2}, l_{1,3}, l_{2,3}, l_{1,4}, ...  The work-partition key of the
// whole enumeration.
struct Template {
    Permutation perm;
    std::vector<std::int32_t> links;

    static Template identity(int n);
    int n() const { return perm.n(); }

    // index of pair (i,j), 1 <= i < j <= n, in co-lex order
    static std::size_t pair_index(int i, int j);
    std::int32_t link(int i, int j) const; // symmetric in (i,j)

    // n bytes of permutation images then links as little-endian int32
    std::vector<std::uint8_t> encode() const;
    static Template decode(const std::vector<std::uint8_t>& bytes, int n);
    static std::size_t encoded_size(int n);

    bool operator==(const Template&) const = default;
};

// Total order: permutations by co-lex on image tuples, then links
// lexicographically.
std::strong_ordering template_compare(const Template& a, const Template& b);

Permutation perm_of_letter(const Alphabet& alpha, int letter);
int linking_of_letter(const Alphabet& alpha, int letter, int i, int j);

Template template_extend(const Template& t, const Alphabet& alpha, int letter);
Template template_of_word(const Word& w);

} // namespace braidgrow
