#include "braidgrow/dynnikov.hpp"

#include <stdexcept>

#include "braidgrow/errors.hpp"

namespace braidgrow {

namespace {

inline std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }
inline std::int64_t neg(std::int64_t x) { return x < 0 ? x : 0; }

} // namespace

DynnikovCoords base_coords(int n) {
    DynnikovCoords d;
    d.n = n;
    d.c.resize(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        d.c[2 * i] = 0;
        d.c[2 * i + 1] = 1;
    }
    return d;
}

Quad apply_sigma(const Quad& q, int sign) {
    const std::int64_t x1 = q.x1, y1 = q.y1, x2 = q.x2, y2 = q.y2;
    Quad r;
    if (sign > 0) {
        // t1 = x1 - y1^- - x2 + y2^+
        std::int64_t t1 = checked_add(checked_sub(checked_sub(x1, neg(y1)), x2), pos(y2));
        r.x1 = checked_add(checked_add(x1, pos(y1)), pos(checked_sub(pos(y2), t1)));
        r.y1 = checked_sub(y2, pos(t1));
        r.x2 = checked_add(checked_add(x2, neg(y2)), neg(checked_add(neg(y1), t1)));
        r.y2 = checked_add(y1, pos(t1));
    } else {
        // t2 = x1 + y1^- - x2 - y2^+
        std::int64_t t2 = checked_sub(checked_sub(checked_add(x1, neg(y1)), x2), pos(y2));
        r.x1 = checked_sub(checked_sub(x1, pos(y1)), pos(checked_add(pos(y2), t2)));
        r.y1 = checked_add(y2, neg(t2));
        r.x2 = checked_sub(checked_sub(x2, neg(y2)), neg(checked_sub(neg(y1), t2)));
        r.y2 = checked_sub(y1, neg(t2));
    }
    return r;
}

void apply_artin_letter(DynnikovCoords& coords, int id, int sign) {
    std::size_t off = 2 * static_cast<std::size_t>(id - 1);
    Quad q{coords.c[off], coords.c[off + 1], coords.c[off + 2], coords.c[off + 3]};
    Quad r = apply_sigma(q, sign);
    coords.c[off] = r.x1;
    coords.c[off + 1] = r.y1;
    coords.c[off + 2] = r.x2;
    coords.c[off + 3] = r.y2;
}

DynnikovCoords dynnikov(const Word& w) {
    const Word* aw = &w;
    Word translated(w.alpha);
    if (w.alpha.kind == Gens::Dual) {
        translated = dual_to_artin(w);
        aw = &translated;
    }
    DynnikovCoords coords = base_coords(aw->alpha.n);
    for (std::size_t i = 0; i < aw->letters.size(); ++i) {
        int x = aw->letters[i];
        try {
            apply_artin_letter(coords, aw->alpha.artin_id(x), aw->alpha.sign(x));
        } catch (const OverflowError&) {
            throw OverflowError("coordinate overflow at word position " +
                                std::to_string(i));
        }
    }
    return coords;
}

bool braids_equal(const Word& u, const Word& v) {
    if (u.alpha.n != v.alpha.n)
        throw std::invalid_argument("braids_equal: strand counts differ");
    return dynnikov(u) == dynnikov(v);
}

std::uint64_t hash64(const DynnikovCoords& coords) {
    if (coords.n == 4) {
        // hash = sum rem(c_j, 256) * 256^j : one byte per coordinate.
        std::uint64_t h = 0;
        for (int j = 0; j < 8; ++j) {
            std::uint64_t rem = static_cast<std::uint64_t>(coords.c[j]) & 0xff;
            h |= rem << (8 * j);
        }
        return h;
    }
    // FNV-1a fold over the positive remainders for every other n.
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : coords.c) {
        h ^= static_cast<std::uint64_t>(v) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace braidgrow
