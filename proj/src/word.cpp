#include "braidgrow/word.hpp"

#include <cassert>
#include <stdexcept>

namespace braidgrow {

std::string gens_name(Gens kind) {
    return kind == Gens::Artin ? "artin" : "dual";
}

Alphabet::Alphabet(int strands, Gens k) : n(strands), kind(k) {
    if (strands < 2) throw std::invalid_argument("alphabet needs n >= 2");
}

int Alphabet::artin_id(int letter) const {
    assert(kind == Gens::Artin);
    return (is_positive(letter) ? letter : letter - half()) + 1;
}

int Alphabet::artin_letter(int id, int sign) const {
    assert(kind == Gens::Artin && id >= 1 && id <= n - 1);
    return (id - 1) + (sign > 0 ? 0 : half());
}

std::pair<int, int> Alphabet::dual_pair(int letter) const {
    assert(kind == Gens::Dual);
    int idx = is_positive(letter) ? letter : letter - half();
    // co-lex on (p,q): (1,2),(1,3),(2,3),(1,4),...
    int q = 2;
    while (idx >= q - 1) {
        idx -= q - 1;
        ++q;
    }
    return {idx + 1, q};
}

int Alphabet::dual_letter(int p, int q, int sign) const {
    assert(kind == Gens::Dual && 1 <= p && p < q && q <= n);
    int idx = (q - 1) * (q - 2) / 2 + (p - 1);
    return idx + (sign > 0 ? 0 : half());
}

int Alphabet::letters_per_byte() const {
    int s = size();
    int k = 0;
    long cap = 1;
    while (cap * s <= 256) {
        cap *= s;
        ++k;
    }
    return k;
}

std::vector<std::uint8_t> dual_letter_to_artin(const Alphabet& dual, int letter) {
    Alphabet artin(dual.n, Gens::Artin);
    auto [p, q] = dual.dual_pair(letter);
    int sign = dual.sign(letter);
    // a_pq = s_p ... s_{q-2} s_{q-1} s_{q-2}^-1 ... s_p^-1
    std::vector<std::uint8_t> out;
    out.reserve(2 * (q - p) - 1);
    for (int i = p; i <= q - 2; ++i)
        out.push_back(static_cast<std::uint8_t>(artin.artin_letter(i, +1)));
    out.push_back(static_cast<std::uint8_t>(artin.artin_letter(q - 1, +1)));
    for (int i = q - 2; i >= p; --i)
        out.push_back(static_cast<std::uint8_t>(artin.artin_letter(i, -1)));
    if (sign < 0) {
        // invert: reverse order, flip every sign
        std::vector<std::uint8_t> inv;
        inv.reserve(out.size());
        for (auto it = out.rbegin(); it != out.rend(); ++it)
            inv.push_back(static_cast<std::uint8_t>(artin.inverse(*it)));
        out = std::move(inv);
    }
    return out;
}

Word dual_to_artin(const Word& w) {
    if (w.alpha.kind == Gens::Artin) return w;
    Word out(Alphabet(w.alpha.n, Gens::Artin));
    out.omega = w.omega;
    for (std::uint8_t x : w.letters) {
        auto part = dual_letter_to_artin(w.alpha, x);
        out.letters.insert(out.letters.end(), part.begin(), part.end());
    }
    return out;
}

std::size_t packed_size(const Alphabet& alpha, std::size_t len) {
    std::size_t k = static_cast<std::size_t>(alpha.letters_per_byte());
    return (len + k - 1) / k;
}

std::vector<std::uint8_t> pack_word(const Word& w) {
    const int s = w.alpha.size();
    const int k = w.alpha.letters_per_byte();
    std::vector<std::uint8_t> bytes(packed_size(w.alpha, w.length()), 0);
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        std::size_t byte = i / k;
        int slot = static_cast<int>(i % k);
        unsigned weight = 1;
        for (int j = 0; j < slot; ++j) weight *= s;
        bytes[byte] = static_cast<std::uint8_t>(bytes[byte] + w.letters[i] * weight);
    }
    return bytes;
}

Word unpack_word(const std::vector<std::uint8_t>& bytes, std::size_t len,
                 const Alphabet& alpha) {
    const int s = alpha.size();
    const int k = alpha.letters_per_byte();
    if (bytes.size() != packed_size(alpha, len))
        throw std::invalid_argument("unpack_word: byte count does not match length");
    Word w(alpha);
    w.letters.reserve(len);
    for (std::size_t b = 0; b < bytes.size(); ++b) {
        std::size_t slots = std::min<std::size_t>(k, len - b * k);
        unsigned cap = 1;
        for (std::size_t j = 0; j < slots; ++j) cap *= s;
        if (bytes[b] >= cap)
            throw std::invalid_argument("unpack_word: byte value out of range");
        unsigned v = bytes[b];
        for (std::size_t j = 0; j < slots; ++j) {
            w.letters.push_back(static_cast<std::uint8_t>(v % s));
            v /= s;
        }
    }
    return w;
}

} // namespace braidgrow
