#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "braidgrow/series.hpp"

using namespace braidgrow;

namespace {

Poly P(std::vector<long> v) { return Poly(v.begin(), v.end()); }

Series S(std::vector<long> v) {
    Series s;
    s.coeffs.assign(v.begin(), v.end());
    return s;
}

} // namespace

TEST_CASE("expand geometric series") {
    RationalFn r{P({1}), P({1, -1})}; // 1/(1-t)
    Series s = expand(r, 6);
    for (const auto& c : s.coeffs) CHECK(c == 1);
    RationalFn r2{P({1}), P({1, -2})}; // 1/(1-2t)
    CHECK(expand(r2, 5).coeffs.back() == 32);
}

TEST_CASE("canonicalize strips common factors and fixes the sign") {
    // (t^2-1)/(t-1) -> (t+1)/1
    RationalFn r = canonicalize({P({-1, 0, 1}), P({-1, 1})});
    CHECK(r == RationalFn{P({1, 1}), P({1})});
    // content and denominator sign
    RationalFn r2 = canonicalize({P({2, 4}), P({-2, 2})});
    CHECK(r2 == RationalFn{P({-1, -2}), P({1, -1})});
}

TEST_CASE("constant series fits 1/(1-t)") {
    auto fit = pade_search(S({1, 1, 1, 1, 1, 1, 1, 1}), 6);
    REQUIRE(fit.has_value());
    CHECK(*fit == RationalFn{P({1}), P({1, -1})});
}

TEST_CASE("fit recovers random rational functions") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 100) {
        int dn = rng() % 4, dd = rng() % 4;
        Poly num, den;
        for (int i = 0; i <= dn; ++i) num.push_back(mpz_class((long)(rng() % 11) - 5));
        den.push_back(mpz_class(rng() % 2 ? 1 : -1)); // integer Taylor series
        for (int i = 1; i <= dd; ++i) den.push_back(mpz_class((long)(rng() % 11) - 5));
        if (poly_trim(num).empty()) continue;
        RationalFn r = canonicalize({num, den});
        int N = poly_degree(r.num) + poly_degree(r.den) + 6;
        Series s = expand(r, N);
        auto fit = pade_fit(s, std::max(poly_degree(r.num), 0),
                            std::max(poly_degree(r.den), 0));
        REQUIRE(fit.has_value());
        CHECK(*fit == r);
        // the sweep finds a function matching the same window
        auto swept = pade_search(s, 8);
        REQUIRE(swept.has_value());
        CHECK(verify(s, *swept).full_match);
        ++done;
    }
}

TEST_CASE("fit window scaling does not change the answer") {
    RationalFn r{P({1, 2}), P({1, -3, 1})};
    Series s16 = expand(r, 16);
    Series s24 = expand(r, 24);
    auto f16 = pade_search(s16, 8);
    auto f24 = pade_search(s24, 8);
    REQUIRE(f16.has_value());
    REQUIRE(f24.has_value());
    CHECK(*f16 == *f24);
    CHECK(*f16 == r);
}

TEST_CASE("no fit within budget is reported") {
    // partial sums of exp(t)-like factorials are not rational of low degree
    Series s;
    mpz_class f = 1;
    for (int k = 0; k <= 14; ++k) {
        f *= (k == 0 ? 1 : k);
        s.coeffs.push_back(f * f);
    }
    CHECK_FALSE(pade_search(s, 4).has_value());
}

TEST_CASE("verify reports the first mismatch") {
    RationalFn r{P({1}), P({1, -1})};
    Series s = S({1, 1, 2, 1});
    VerifyReport rep = verify(s, r);
    CHECK_FALSE(rep.full_match);
    CHECK(rep.first_mismatch == 2);
    CHECK(verify(S({1, 1, 1}), r).full_match);
}

TEST_CASE("series file round trip") {
    std::string path =
        (std::filesystem::temp_directory_path() / "bg_series_test.txt").string();
    Series s;
    s.coeffs = {mpz_class(1), mpz_class(-7), mpz_class("123456789012345678901234567890")};
    write_series(s, path);
    Series back = read_series(path);
    CHECK(back.coeffs == s.coeffs);
    std::remove(path.c_str());
}
