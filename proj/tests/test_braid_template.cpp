#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "braidgrow/braid_template.hpp"
#include "braidgrow/dynnikov.hpp"
#include "braidgrow/word.hpp"

using namespace braidgrow;

namespace {

Word rand_word(const Alphabet& alpha, std::size_t len, std::mt19937_64& rng) {
    Word w(alpha);
    for (std::size_t i = 0; i < len; ++i)
        w.letters.push_back(static_cast<std::uint8_t>(rng() % alpha.size()));
    return w;
}

} // namespace

TEST_CASE("permutation basics") {
    Permutation id = Permutation::identity(4);
    for (int i = 1; i <= 4; ++i) CHECK(id(i) == i);
    Permutation p{{2, 3, 1, 4}};
    Permutation q = p.inverse();
    CHECK(compose(p, q) == id);
    CHECK(compose(q, p) == id);
    // (a o b)(k) = a(b(k))
    Permutation r{{2, 1, 3, 4}};
    CHECK(compose(p, r)(1) == p(r(1)));
}

TEST_CASE("pair index is co-lex") {
    CHECK(Template::pair_index(1, 2) == 0);
    CHECK(Template::pair_index(1, 3) == 1);
    CHECK(Template::pair_index(2, 3) == 2);
    CHECK(Template::pair_index(1, 4) == 3);
    CHECK(Template::pair_index(3, 4) == 5);
}

TEST_CASE("worked examples pin the composition convention") {
    // tau(s1 s2^-1) in B4 = ((1 2 3), 1, -1, 0, 0, 0, 0)
    Alphabet a4(4, Gens::Artin);
    Word w(a4, {(std::uint8_t)a4.artin_letter(1, +1),
                (std::uint8_t)a4.artin_letter(2, -1)});
    Template t = template_of_word(w);
    CHECK(t.perm.img == std::vector<std::uint8_t>{2, 3, 1, 4});
    CHECK(t.links == std::vector<std::int32_t>{1, -1, 0, 0, 0, 0});

    // ((1 3 2)-cycle, l12, l13, l23) * a13^-1
    //   = ((1 2), l12 - 1, l13 + 1, l23 - 1)
    Alphabet d3(3, Gens::Dual);
    Template base{Permutation{{3, 1, 2}}, {5, -2, 7}};
    Template ext = template_extend(base, d3, d3.dual_letter(1, 3, -1));
    CHECK(ext.perm.img == std::vector<std::uint8_t>{2, 1, 3});
    CHECK(ext.links == std::vector<std::int32_t>{4, -1, 6});
}

TEST_CASE("letter templates") {
    for (int n : {3, 4, 5}) {
        for (Gens kind : {Gens::Artin, Gens::Dual}) {
            Alphabet alpha(n, kind);
            for (int x = 0; x < alpha.size(); ++x) {
                Word w(alpha, {(std::uint8_t)x});
                Template t = template_of_word(w);
                CHECK(t.perm == perm_of_letter(alpha, x));
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        CHECK(t.link(i, j) == linking_of_letter(alpha, x, i, j));
            }
        }
    }
}

TEST_CASE("extension is a fold") {
    std::mt19937_64 rng(17);
    for (Gens kind : {Gens::Artin, Gens::Dual})
        for (int n : {3, 4}) {
            Alphabet alpha(n, kind);
            for (int it = 0; it < 2500; ++it) {
                Word w = rand_word(alpha, 2 + rng() % 8, rng);
                std::size_t cut = rng() % (w.length() + 1);
                Word u(alpha, {w.letters.begin(), w.letters.begin() + cut});
                Template t = template_of_word(u);
                for (std::size_t i = cut; i < w.length(); ++i)
                    t = template_extend(t, alpha, w.letters[i]);
                CHECK(t == template_of_word(w));
            }
        }
}

TEST_CASE("equal braids share a template") {
    // exhaustive over all short words on both B3 alphabets
    for (Gens kind : {Gens::Artin, Gens::Dual}) {
        Alphabet alpha(3, kind);
        std::map<std::vector<std::int64_t>, Template> by_coords;
        std::vector<Word> frontier{Word(alpha)};
        for (int len = 1; len <= 5; ++len) {
            std::vector<Word> next;
            for (const Word& u : frontier)
                for (int x = 0; x < alpha.size(); ++x) {
                    Word w = u;
                    w.letters.push_back(static_cast<std::uint8_t>(x));
                    Template t = template_of_word(w);
                    auto [it, fresh] = by_coords.emplace(dynnikov(w).c, t);
                    if (!fresh) CHECK(it->second == t);
                    next.push_back(std::move(w));
                }
            frontier = std::move(next);
            if (len == 3 && kind == Gens::Dual) break; // 6^4 words is plenty
        }
    }
}

TEST_CASE("encode/decode round trip and order") {
    std::mt19937_64 rng(19);
    Alphabet a4(4, Gens::Artin);
    for (int it = 0; it < 1000; ++it) {
        Word w = rand_word(a4, rng() % 10, rng);
        Template t = template_of_word(w);
        CHECK(Template::decode(t.encode(), 4) == t);
        CHECK(t.encode().size() == Template::encoded_size(4));
    }
    // permutations compared co-lex on image tuples, from the last entry down
    Template t1{Permutation{{1, 3, 4, 2}}, {0, 0, 0, 0, 0, 0}}; // cycle (2 3 4)
    Template t2{Permutation{{1, 4, 2, 3}}, {0, 0, 0, 0, 0, 0}}; // cycle (2 4 3)
    Template t3{Permutation{{2, 3, 1, 4}}, {0, 0, 0, 0, 0, 0}}; // cycle (1 2 3)
    Template t4{Permutation{{3, 1, 2, 4}}, {0, 0, 0, 0, 0, 0}}; // cycle (1 3 2)
    CHECK(template_compare(t1, t2) == std::strong_ordering::less);
    CHECK(template_compare(t2, t3) == std::strong_ordering::less);
    CHECK(template_compare(t3, t4) == std::strong_ordering::less);
    Template t5 = t1, t6 = t1;
    t5.links = {0, 1, 0, 0, 0, 0};
    t6.links = {1, 0, 0, 0, 0, 0};
    CHECK(template_compare(t5, t6) == std::strong_ordering::less);
    CHECK(template_compare(t1, t1) == std::strong_ordering::equal);
}
