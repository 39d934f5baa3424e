#include "braidgrow/braid_template.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace braidgrow {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) p.img[i - 1] = static_cast<std::uint8_t>(i);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (int i = 1; i <= n(); ++i) r.img[(*this)(i) - 1] = static_cast<std::uint8_t>(i);
    return r;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    assert(a.n() == b.n());
    Permutation r;
    r.img.resize(a.img.size());
    for (int k = 1; k <= a.n(); ++k) r.img[k - 1] = static_cast<std::uint8_t>(a(b(k)));
    return r;
}

Template Template::identity(int n) {
    Template t;
    t.perm = Permutation::identity(n);
    t.links.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
    return t;
}

std::size_t Template::pair_index(int i, int j) {
    assert(i < j);
    return static_cast<std::size_t>(j - 1) * (j - 2) / 2 + (i - 1);
}

std::int32_t Template::link(int i, int j) const {
    if (i > j) std::swap(i, j);
    return links[pair_index(i, j)];
}

std::size_t Template::encoded_size(int n) {
    return static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * (n - 1) / 2 * 4;
}

std::vector<std::uint8_t> Template::encode() const {
    std::vector<std::uint8_t> out;
    out.reserve(encoded_size(n()));
    out.insert(out.end(), perm.img.begin(), perm.img.end());
    for (std::int32_t v : links) {
        std::uint32_t u = static_cast<std::uint32_t>(v);
        out.push_back(static_cast<std::uint8_t>(u & 0xff));
        out.push_back(static_cast<std::uint8_t>((u >> 8) & 0xff));
        out.push_back(static_cast<std::uint8_t>((u >> 16) & 0xff));
        out.push_back(static_cast<std::uint8_t>((u >> 24) & 0xff));
    }
    return out;
}

Template Template::decode(const std::vector<std::uint8_t>& bytes, int n) {
    if (bytes.size() != encoded_size(n))
        throw std::invalid_argument("Template::decode: size mismatch");
    Template t;
    t.perm.img.assign(bytes.begin(), bytes.begin() + n);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::uint8_t v : t.perm.img) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Template::decode: invalid permutation");
        seen[v] = true;
    }
    std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
    t.links.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t off = static_cast<std::size_t>(n) + 4 * k;
        std::uint32_t u = bytes[off] | (static_cast<std::uint32_t>(bytes[off + 1]) << 8) |
                          (static_cast<std::uint32_t>(bytes[off + 2]) << 16) |
                          (static_cast<std::uint32_t>(bytes[off + 3]) << 24);
        t.links[k] = static_cast<std::int32_t>(u);
    }
    return t;
}

std::strong_ordering template_compare(const Template& a, const Template& b) {
    assert(a.n() == b.n());
    // co-lex on image tuples: compare from the last position down
    for (int k = a.n(); k >= 1; --k) {
        if (a.perm(k) != b.perm(k))
            return a.perm(k) <=> b.perm(k);
    }
    for (std::size_t k = 0; k < a.links.size(); ++k) {
        if (a.links[k] != b.links[k]) return a.links[k] <=> b.links[k];
    }
    return std::strong_ordering::equal;
}

Permutation perm_of_letter(const Alphabet& alpha, int letter) {
    Permutation p = Permutation::identity(alpha.n);
    if (alpha.kind == Gens::Artin) {
        int k = alpha.artin_id(letter);
        std::swap(p.img[k - 1], p.img[k]);
    } else {
        auto [a, b] = alpha.dual_pair(letter);
        std::swap(p.img[a - 1], p.img[b - 1]);
    }
    return p;
}

int linking_of_letter(const Alphabet& alpha, int letter, int i, int j) {
    assert(1 <= i && i < j && j <= alpha.n);
    int e = alpha.sign(letter);
    if (alpha.kind == Gens::Artin) {
        int k = alpha.artin_id(letter);
        return (i == k && j == k + 1) ? e : 0;
    }
    auto [p, q] = alpha.dual_pair(letter);
    if (i == p && j == q) return e;
    if (i == p && j < q) return 1;
    if (p < i && j == q) return -1;
    return 0;
}

Template template_extend(const Template& t, const Alphabet& alpha, int letter) {
    Template r;
    r.perm = compose(t.perm, perm_of_letter(alpha, letter));
    r.links = t.links;
    Permutation pinv = t.perm.inverse();
    for (int j = 2; j <= alpha.n; ++j) {
        for (int i = 1; i < j; ++i) {
            int a = pinv(i), b = pinv(j);
            if (a > b) std::swap(a, b);
            r.links[Template::pair_index(i, j)] += linking_of_letter(alpha, letter, a, b);
        }
    }
    return r;
}

Template template_of_word(const Word& w) {
    Template t = Template::identity(w.alpha.n);
    for (std::uint8_t x : w.letters) t = template_extend(t, w.alpha, x);
    return t;
}

} // namespace braidgrow
