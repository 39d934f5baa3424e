#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidgrow/word.hpp"

using namespace braidgrow;

TEST_CASE("alphabet layout") {
    Alphabet a(4, Gens::Artin);
    CHECK(a.size() == 6);
    CHECK(a.half() == 3);
    Alphabet d(4, Gens::Dual);
    CHECK(d.size() == 12);
    for (int x = 0; x < d.size(); ++x) {
        CHECK(d.inverse(d.inverse(x)) == x);
        CHECK(d.sign(d.inverse(x)) == -d.sign(x));
    }
    // co-lex order of dual pairs
    CHECK(d.dual_pair(0) == std::pair<int, int>{1, 2});
    CHECK(d.dual_pair(1) == std::pair<int, int>{1, 3});
    CHECK(d.dual_pair(2) == std::pair<int, int>{2, 3});
    CHECK(d.dual_pair(3) == std::pair<int, int>{1, 4});
    for (int x = 0; x < d.half(); ++x) {
        auto [p, q] = d.dual_pair(x);
        CHECK(d.dual_letter(p, q, +1) == x);
        CHECK(d.dual_letter(p, q, -1) == d.inverse(x));
    }
    Alphabet a3(3, Gens::Artin);
    for (int id = 1; id <= 2; ++id)
        for (int s : {+1, -1}) {
            int x = a3.artin_letter(id, s);
            CHECK(a3.artin_id(x) == id);
            CHECK(a3.sign(x) == s);
        }
}

TEST_CASE("dual letter expansion") {
    Alphabet d(3, Gens::Dual);
    Alphabet a(3, Gens::Artin);
    // a_{1,3} = s1 s2 s1^-1; its inverse reverses and inverts
    auto pos = dual_letter_to_artin(d, d.dual_letter(1, 3, +1));
    std::vector<std::uint8_t> want_pos = {
        (std::uint8_t)a.artin_letter(1, +1), (std::uint8_t)a.artin_letter(2, +1),
        (std::uint8_t)a.artin_letter(1, -1)};
    CHECK(pos == want_pos);
    auto neg = dual_letter_to_artin(d, d.dual_letter(1, 3, -1));
    std::vector<std::uint8_t> want_neg = {
        (std::uint8_t)a.artin_letter(1, +1), (std::uint8_t)a.artin_letter(2, -1),
        (std::uint8_t)a.artin_letter(1, -1)};
    CHECK(neg == want_neg);

    for (int n : {3, 4, 5}) {
        Alphabet dn(n, Gens::Dual);
        for (int x = 0; x < dn.size(); ++x) {
            auto [p, q] = dn.dual_pair(x % dn.half());
            auto e = dual_letter_to_artin(dn, x);
            CHECK((int)e.size() == 2 * (q - p) - 1);
        }
        // inversion respected: expansion of x^-1 = reverse letterwise inverse
        Alphabet an(n, Gens::Artin);
        for (int x = 0; x < dn.half(); ++x) {
            auto e = dual_letter_to_artin(dn, x);
            auto ei = dual_letter_to_artin(dn, dn.inverse(x));
            REQUIRE(e.size() == ei.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                CHECK((int)ei[i] == an.inverse(e[e.size() - 1 - i]));
        }
    }
}

TEST_CASE("packing density") {
    CHECK(Alphabet(3, Gens::Artin).letters_per_byte() == 4); // 4^4 = 256
    CHECK(Alphabet(4, Gens::Artin).letters_per_byte() == 3); // 6^3 = 216
    CHECK(Alphabet(4, Gens::Dual).letters_per_byte() == 2);  // 12^2 = 144
    CHECK(packed_size(Alphabet(4, Gens::Artin), 21) == 7);
    CHECK(packed_size(Alphabet(4, Gens::Dual), 7) == 4);
    // Artin n=4 packs (i0,i1,i2) as i0 + 6 i1 + 36 i2
    Word w(Alphabet(4, Gens::Artin), {1, 2, 3});
    auto b = pack_word(w);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == 1 + 6 * 2 + 36 * 3);
}

TEST_CASE("pack/unpack round trip") {
    std::mt19937_64 rng(7);
    for (Gens kind : {Gens::Artin, Gens::Dual})
        for (int n : {2, 3, 4}) {
            Alphabet alpha(n, kind);
            for (int it = 0; it < 100000 / 6; ++it) {
                std::size_t len = rng() % 33;
                Word w(alpha);
                for (std::size_t i = 0; i < len; ++i)
                    w.letters.push_back(static_cast<std::uint8_t>(rng() % alpha.size()));
                w.omega = rng();
                Word back = unpack_word(pack_word(w), len, alpha);
                CHECK(back.letters == w.letters);
            }
        }
}

TEST_CASE("unpack rejects out-of-range letters") {
    Alphabet alpha(3, Gens::Artin); // 4 letters, 4 per byte
    CHECK_THROWS(unpack_word({0xff}, 1, alpha));
}
