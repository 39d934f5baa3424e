#include "braidgrow/series.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace braidgrow {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}

namespace {

using QPoly = std::vector<mpq_class>;

QPoly q_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Euclidean remainder over Q
QPoly q_rem(QPoly a, const QPoly& b) {
    a = q_trim(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a = q_trim(std::move(a));
    }
    return a;
}

Poly q_to_primitive(const QPoly& q) {
    // clear denominators, divide by content
    mpz_class lcm = 1;
    for (const auto& c : q) {
        mpz_class d = c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    Poly p;
    p.reserve(q.size());
    mpz_class content = 0;
    for (const auto& c : q) {
        mpz_class v = c.get_num() * (lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        p.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : p) v /= content;
    return p;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    QPoly qa(a.begin(), a.end()), qb(b.begin(), b.end());
    qa = q_trim(std::move(qa));
    qb = q_trim(std::move(qb));
    while (!qb.empty()) {
        QPoly r = q_rem(qa, qb);
        qa = std::move(qb);
        qb = std::move(r);
    }
    if (qa.empty()) return {};
    return q_to_primitive(qa);
}

// exact division, throws if not divisible
Poly poly_div_exact(const Poly& a, const Poly& b) {
    QPoly qa(a.begin(), a.end());
    qa = q_trim(std::move(qa));
    QPoly qb(b.begin(), b.end());
    qb = q_trim(std::move(qb));
    if (qb.empty()) throw std::invalid_argument("division by zero polynomial");
    QPoly quot(qa.size() >= qb.size() ? qa.size() - qb.size() + 1 : 0, mpq_class(0));
    while (qa.size() >= qb.size() && !qa.empty()) {
        mpq_class f = qa.back() / qb.back();
        std::size_t shift = qa.size() - qb.size();
        quot[shift] = f;
        for (std::size_t i = 0; i < qb.size(); ++i) qa[shift + i] -= f * qb[i];
        qa = q_trim(std::move(qa));
    }
    if (!qa.empty()) throw std::invalid_argument("inexact polynomial division");
    Poly out;
    out.reserve(quot.size());
    for (const auto& c : quot) {
        if (c.get_den() != 1) throw std::invalid_argument("non-integer quotient");
        out.push_back(c.get_num());
    }
    return poly_trim(std::move(out));
}

} // namespace

RationalFn canonicalize(RationalFn r) {
    r.num = poly_trim(std::move(r.num));
    r.den = poly_trim(std::move(r.den));
    if (r.den.empty() || r.den[0] == 0)
        throw std::invalid_argument("denominator constant term must be nonzero");
    if (!r.num.empty()) {
        Poly g = poly_gcd(r.num, r.den);
        if (poly_degree(g) > 0) {
            r.num = poly_div_exact(r.num, g);
            r.den = poly_div_exact(r.den, g);
        }
    }
    // integer content
    mpz_class content = 0;
    for (const auto& v : r.num) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (const auto& v : r.den) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1) {
        for (auto& v : r.num) v /= content;
        for (auto& v : r.den) v /= content;
    }
    if (r.den[0] < 0) {
        for (auto& v : r.num) v = -v;
        for (auto& v : r.den) v = -v;
    }
    return r;
}

Series expand(const RationalFn& r, int N) {
    if (r.den.empty() || r.den[0] == 0)
        throw std::invalid_argument("expand: denominator constant term is zero");
    Series s;
    s.coeffs.resize(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        mpz_class acc = k < static_cast<int>(r.num.size()) ? r.num[k] : mpz_class(0);
        for (int j = 1; j <= k && j < static_cast<int>(r.den.size()); ++j)
            acc -= r.den[j] * s.coeffs[k - j];
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), r.den[0].get_mpz_t());
        if (rem != 0)
            throw std::invalid_argument("expand: non-integer Taylor coefficient");
        s.coeffs[k] = std::move(q);
    }
    return s;
}

std::optional<RationalFn> pade_fit(const Series& s, int d_num, int d_den) {
    const int window = d_num + d_den + 2;
    if (static_cast<int>(s.coeffs.size()) < window)
        throw std::invalid_argument("pade_fit: insufficient coefficients");

    auto coef = [&](int k) -> mpz_class {
        return k >= 0 && k < static_cast<int>(s.coeffs.size()) ? s.coeffs[k]
                                                               : mpz_class(0);
    };

    // homogeneous Toeplitz system: sum_j q_j s_{k-j} = 0 for
    // k = d_num+1 .. d_num+d_den; unknowns q_0..q_{d_den}
    const int rows = d_den;
    const int cols = d_den + 1;
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m[r][c] = coef(d_num + 1 + r - c);

    // reduced row echelon over Q
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        mpq_class inv = m[rank][c];
        for (int cc = 0; cc < cols; ++cc) m[rank][cc] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (int cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        pivot_col[rank] = c;
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;

    // kernel basis: one vector per free column
    std::vector<std::vector<mpq_class>> kernel;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<mpq_class> v(cols, mpq_class(0));
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][c];
        kernel.push_back(std::move(v));
    }
    if (kernel.empty()) return std::nullopt;

    // need q(0) != 0; combine basis vectors when necessary
    std::vector<mpq_class> q;
    for (const auto& v : kernel)
        if (v[0] != 0) {
            q = v;
            break;
        }
    if (q.empty()) return std::nullopt;

    Poly den = q_to_primitive(q);
    // numerator = truncation of den * S to degree d_num
    Poly num(static_cast<std::size_t>(d_num) + 1, mpz_class(0));
    for (int k = 0; k <= d_num; ++k)
        for (int j = 0; j <= k && j < static_cast<int>(den.size()); ++j)
            num[k] += den[j] * coef(k - j);
    RationalFn cand = canonicalize({poly_trim(std::move(num)), std::move(den)});

    // must reproduce every supplied coefficient; a candidate whose Taylor
    // coefficients leave the integers is just as wrong as a mismatch
    try {
        Series check = expand(cand, static_cast<int>(s.coeffs.size()) - 1);
        if (check.coeffs != s.coeffs) return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return cand;
}

std::optional<RationalFn> pade_search(const Series& s, int max_total_degree,
                                      int surplus) {
    for (int total = 0; total <= max_total_degree; ++total) {
        for (int d_den = 0; d_den <= total; ++d_den) {
            int d_num = total - d_den;
            if (static_cast<int>(s.coeffs.size()) < d_num + d_den + 2 + surplus)
                continue;
            auto fit = pade_fit(s, d_num, d_den);
            if (fit) return fit;
        }
    }
    return std::nullopt;
}

VerifyReport verify(const Series& s, const RationalFn& r) {
    VerifyReport rep;
    rep.compared = s.coeffs.size();
    if (s.coeffs.empty()) {
        rep.full_match = true;
        return rep;
    }
    Series e;
    try {
        e = expand(r, static_cast<int>(s.coeffs.size()) - 1);
    } catch (const std::invalid_argument&) {
        rep.first_mismatch = 0;
        return rep;
    }
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        if (e.coeffs[k] != s.coeffs[k]) {
            rep.first_mismatch = static_cast<long>(k);
            return rep;
        }
    }
    rep.full_match = true;
    return rep;
}

std::string poly_to_string(const Poly& p) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ", ";
        out << p[i].get_str();
    }
    out << "]";
    return out.str();
}

std::string rational_to_string(const RationalFn& r) {
    return poly_to_string(r.num) + " / " + poly_to_string(r.den);
}

Series read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open series file: " + path);
    Series s;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        s.coeffs.emplace_back(line.substr(a, b - a + 1));
    }
    return s;
}

void write_series(const Series& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open series file: " + path);
    for (const auto& c : s.coeffs) out << c.get_str() << "\n";
}

} // namespace braidgrow
