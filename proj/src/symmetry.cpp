#include "braidgrow/symmetry.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace braidgrow {

namespace {

// wrap-around bracket [k]_n with 0 -> n and n+1 -> 1
inline int wrap(int k, int n) { return (k - 1 + n) % n + 1; }

Word map_phi(const Word& w, int rot) {
    Word r(w.alpha);
    r.omega = w.omega;
    r.letters.reserve(w.letters.size());
    for (std::uint8_t x : w.letters) {
        auto [p, q] = w.alpha.dual_pair(x);
        int a = wrap(p + rot, w.alpha.n);
        int b = wrap(q + rot, w.alpha.n);
        if (a > b) std::swap(a, b);
        r.letters.push_back(
            static_cast<std::uint8_t>(w.alpha.dual_letter(a, b, w.alpha.sign(x))));
    }
    return r;
}

Template map_inv_t(const Template& t) {
    Template r;
    r.perm = t.perm.inverse();
    r.links.resize(t.links.size());
    for (int j = 2; j <= t.n(); ++j)
        for (int i = 1; i < j; ++i)
            r.links[Template::pair_index(i, j)] = -t.link(t.perm(i), t.perm(j));
    return r;
}

Template map_theta_t(const Template& t) {
    Template r = t;
    for (auto& v : r.links) v = -v;
    return r;
}

Template map_flip_t(const Template& t) {
    const int n = t.n();
    Template r;
    r.perm.img.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        r.perm.img[k - 1] = static_cast<std::uint8_t>(n + 1 - t.perm(n + 1 - k));
    r.links.resize(t.links.size());
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            r.links[Template::pair_index(i, j)] = t.link(n + 1 - j, n + 1 - i);
    return r;
}

Template map_phi_t(const Template& t) {
    const int n = t.n();
    Template r;
    r.perm.img.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        r.perm.img[k - 1] = static_cast<std::uint8_t>(wrap(1 + t.perm(wrap(k - 1, n)), n));
    r.links.resize(t.links.size());
    const int special = wrap(1 + t.perm(n), n);
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            std::int32_t v = t.link(wrap(i - 1, n), wrap(j - 1, n));
            if (i == 1) v += 1; // strand n sweeps past everything
            if (special == i || special == j) v -= 1;
            r.links[Template::pair_index(i, j)] = v;
        }
    return r;
}

} // namespace

std::vector<SymmetryElement> symmetry_group(const Alphabet& alpha) {
    std::vector<SymmetryElement> g;
    if (alpha.n == 2) {
        // Phi and phi are trivial and theta equals inv: group of order 2
        SymmetryElement id, in;
        id.kind = in.kind = alpha.kind;
        in.inv = true;
        return {id, in};
    }
    if (alpha.kind == Gens::Artin) {
        for (int m = 0; m < 8; ++m) {
            SymmetryElement e;
            e.kind = Gens::Artin;
            e.inv = m & 1;
            e.theta = (m >> 1) & 1;
            e.flip = (m >> 2) & 1;
            g.push_back(e);
        }
    } else {
        for (int m = 0; m < 2 * alpha.n; ++m) {
            SymmetryElement e;
            e.kind = Gens::Dual;
            e.inv = m & 1;
            e.rot = m >> 1;
            g.push_back(e);
        }
    }
    return g;
}

SymmetryElement symmetry_inverse(const SymmetryElement& g, int n) {
    SymmetryElement r = g;
    if (g.kind == Gens::Dual && g.rot != 0) r.rot = n - g.rot;
    return r;
}

Word map_word(const SymmetryElement& g, const Word& w) {
    if (g.kind != w.alpha.kind)
        throw std::invalid_argument("map_word: symmetry kind does not match alphabet");
    if (w.alpha.kind == Gens::Dual && (g.theta || g.flip))
        throw std::invalid_argument("map_word: theta/Phi are Artin-only maps");
    if (w.alpha.kind == Gens::Artin && g.rot != 0)
        throw std::invalid_argument("map_word: phi is a dual-only map");

    Word r = w;
    if (g.rot != 0) r = map_phi(r, g.rot);
    if (g.theta)
        for (auto& x : r.letters) x = static_cast<std::uint8_t>(r.alpha.inverse(x));
    if (g.flip) {
        const int n = r.alpha.n;
        for (auto& x : r.letters)
            x = static_cast<std::uint8_t>(
                r.alpha.artin_letter(n - r.alpha.artin_id(x), r.alpha.sign(x)));
    }
    if (g.inv) {
        std::reverse(r.letters.begin(), r.letters.end());
        for (auto& x : r.letters) x = static_cast<std::uint8_t>(r.alpha.inverse(x));
    }
    return r;
}

Template map_template(const SymmetryElement& g, const Template& t) {
    Template r = t;
    for (int k = 0; k < g.rot; ++k) r = map_phi_t(r);
    if (g.theta) r = map_theta_t(r);
    if (g.flip) r = map_flip_t(r);
    if (g.inv) r = map_inv_t(r);
    return r;
}

std::vector<Template> orbit(const Template& t, const Alphabet& alpha) {
    std::vector<Template> out;
    for (const auto& g : symmetry_group(alpha)) {
        Template im = map_template(g, t);
        bool dup = false;
        for (const auto& o : out)
            if (o == im) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(im));
    }
    std::sort(out.begin(), out.end(), [](const Template& a, const Template& b) {
        return template_compare(a, b) == std::strong_ordering::less;
    });
    return out;
}

std::size_t orbit_size(const Template& t, const Alphabet& alpha) {
    return orbit(t, alpha).size();
}

std::pair<Template, SymmetryElement> reduce(const Template& t, const Alphabet& alpha) {
    auto group = symmetry_group(alpha);
    Template best = t;
    SymmetryElement witness = group.front(); // identity
    bool first = true;
    for (const auto& g : group) {
        Template im = map_template(g, t);
        if (first || template_compare(im, best) == std::strong_ordering::less) {
            best = std::move(im);
            witness = g;
            first = false;
        }
    }
    return {best, witness};
}

bool is_reduced(const Template& t, const Alphabet& alpha) {
    for (const auto& g : symmetry_group(alpha)) {
        if (template_compare(map_template(g, t), t) == std::strong_ordering::less)
            return false;
    }
    return true;
}

} // namespace braidgrow
