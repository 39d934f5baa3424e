#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace braidgrow {

enum class Gens : std::uint8_t { Artin = 0, Dual = 1 };

std::string gens_name(Gens kind);

// Generator alphabet of B_n: either the Artin letters sigma_1..sigma_{n-1}
// or the band letters a_{p,q} (1 <= p < q <= n), each set closed under
// inversion.  Positive letters occupy indices 0..|S|/2-1, their inverses
// follow in the same order, so inverting a letter never branches.
struct Alphabet {
    int n;
    Gens kind;

    Alphabet(int strands, Gens k);

    int size() const { return kind == Gens::Artin ? 2 * (n - 1) : n * (n - 1); }
    int half() const { return size() / 2; }

    bool is_positive(int letter) const { return letter < half(); }
    int sign(int letter) const { return is_positive(letter) ? +1 : -1; }
    int inverse(int letter) const {
        return is_positive(letter) ? letter + half() : letter - half();
    }

    // Artin letters: generator id in [1, n-1].
    int artin_id(int letter) const;
    int artin_letter(int id, int sign) const;

    // Dual letters: pair (p, q) with p < q, enumerated in co-lex order.
    std::pair<int, int> dual_pair(int letter) const;
    int dual_letter(int p, int q, int sign) const;

    // Maximal k with |S|^k <= 256: letters packed per byte.
    int letters_per_byte() const;

    bool operator==(const Alphabet&) const = default;
};

struct Word {
    Alphabet alpha;
    std::vector<std::uint8_t> letters;
    std::uint64_t omega = 1;

    explicit Word(Alphabet a) : alpha(a) {}
    Word(Alphabet a, std::vector<std::uint8_t> ls, std::uint64_t om = 1)
        : alpha(a), letters(std::move(ls)), omega(om) {}

    std::size_t length() const { return letters.size(); }
};

// Expands each a_{p,q}^e into its defining Artin word; Artin input passes
// through unchanged.
Word dual_to_artin(const Word& w);

// Expansion of a single dual letter, 2(q-p)-1 Artin letters.
std::vector<std::uint8_t> dual_letter_to_artin(const Alphabet& dual, int letter);

std::vector<std::uint8_t> pack_word(const Word& w);
Word unpack_word(const std::vector<std::uint8_t>& bytes, std::size_t len,
                 const Alphabet& alpha);
std::size_t packed_size(const Alphabet& alpha, std::size_t len);

} // namespace braidgrow
