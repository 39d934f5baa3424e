#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace braidgrow {

// Integer polynomial, ascending coefficients, no trailing zeros.
using Poly = std::vector<mpz_class>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
int poly_degree(const Poly& p); // -1 for zero

struct Series {
    std::vector<mpz_class> coeffs;
    std::string label;
};

// num/den with den(0) != 0; canonical form has coprime parts and a
// positive denominator constant term.
struct RationalFn {
    Poly num, den;

    bool operator==(const RationalFn&) const = default;
};

RationalFn canonicalize(RationalFn r);

// First N+1 Taylor coefficients at 0, exact integer arithmetic.
Series expand(const RationalFn& r, int N);

// Exact Pade fit at the given degrees: a candidate must reproduce every
// supplied coefficient, not just the fit window.
std::optional<RationalFn> pade_fit(const Series& s, int d_num, int d_den);

// Degree sweep, minimal d_num + d_den first (ties to smaller d_den);
// accepts a candidate only when at least `surplus` coefficients beyond
// the minimal fit window also match.
std::optional<RationalFn> pade_search(const Series& s, int max_total_degree,
                                      int surplus = 3);

struct VerifyReport {
    bool full_match = false;
    long first_mismatch = -1; // valid when !full_match
    std::size_t compared = 0;
};

VerifyReport verify(const Series& s, const RationalFn& r);

std::string poly_to_string(const Poly& p);
std::string rational_to_string(const RationalFn& r);

// Plain-text series I/O: one integer per line.
Series read_series(const std::string& path);
void write_series(const Series& s, const std::string& path);

} // namespace braidgrow
