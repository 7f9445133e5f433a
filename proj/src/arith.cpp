#include "quatorder/arith.hpp"
#include "quatorder/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace quatorder {

const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotAnOrder: return "NotAnOrder";
    case ErrorCode::MissingOne: return "MissingOne";
    case ErrorCode::NonSquareDiscriminant: return "NonSquareDiscriminant";
    case ErrorCode::UnexpectedSemisimpleQuotient: return "UnexpectedSemisimpleQuotient";
    case ErrorCode::DifferentAlgebras: return "DifferentAlgebras";
    case ErrorCode::IncompatibleProduct: return "IncompatibleProduct";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::PrimeDividesDiscriminant: return "PrimeDividesDiscriminant";
    case ErrorCode::MassOvershoot: return "MassOvershoot";
    case ErrorCode::NotASuperorder: return "NotASuperorder";
    case ErrorCode::NormNotCoprime: return "NormNotCoprime";
    case ErrorCode::OrdersDifferElsewhere: return "OrdersDifferElsewhere";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

Rational make_rational(Integer const& num, Integer const& den)
{
    if (den == 0)
        throw QuatError(ErrorCode::ParseError, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string const& text)
{
    auto bad = [&] { return QuatError(ErrorCode::ParseError, "malformed rational '" + text + "'"); };
    auto parse_int = [&](std::string const& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            throw bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw bad();
        return Integer(s[0] == '+' ? s.substr(1) : s, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    std::string dtext = text.substr(slash + 1);
    if (!dtext.empty() && dtext[0] == '-')
        throw bad();
    Integer den = parse_int(dtext);
    if (den == 0)
        throw bad();
    return make_rational(num, den);
}

std::string to_string(Integer const& n) { return n.get_str(); }

std::string to_string(Rational const& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_div(Integer const& a, Integer const& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_of(Rational const& q) { return floor_div(q.get_num(), q.get_den()); }

Integer ceil_of(Rational const& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer isqrt_floor(Integer const& n)
{
    if (n < 0)
        return -1;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(Integer const& n, Integer* root)
{
    if (n < 0)
        return false;
    Integer r = isqrt_floor(n);
    if (r * r != n)
        return false;
    if (root)
        *root = r;
    return true;
}

Rational rational_gcd(std::vector<Rational> const& values)
{
    Integer den = 1;
    for (auto const& v : values)
        if (v != 0)
            den = lcm(den, Integer(v.get_den()));
    Integer g = 0;
    for (auto const& v : values)
        if (v != 0)
            g = gcd(g, Integer(v.get_num() * (den / v.get_den())));
    if (g == 0)
        return 0;
    return make_rational(g, den);
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t next_prime(std::int64_t n)
{
    std::int64_t p = n + 1;
    while (!is_prime(p))
        ++p;
    return p;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> out;
    n = std::llabs(n);
    for (std::int64_t d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> prime_divisors(Integer const& n)
{
    Integer m = abs(n);
    std::vector<std::int64_t> out;
    if (m == 0)
        return out;
    for (std::int64_t d = 2; Integer(d) * d <= m; ++d) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) {
            out.push_back(d);
            while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d)))
                m /= d;
        }
    }
    if (m > 1)
        out.push_back(to_i64(m));
    return out;
}

int valuation(Integer n, std::int64_t p)
{
    if (n == 0)
        return 1 << 30;
    int v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t to_i64(Integer const& n)
{
    if (!n.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
    return n.get_si();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    Integer inv;
    Integer aa = a, mm = m;
    if (!mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()))
        throw QuatError(ErrorCode::NormNotCoprime, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return inv.get_si();
}

std::int64_t mod_residue(Rational const& q, std::int64_t m)
{
    Integer mm = m;
    Integer num = q.get_num() % mm;
    Integer den = q.get_den() % mm;
    std::int64_t n = num.get_si(), d = den.get_si();
    n = ((n % m) + m) % m;
    d = ((d % m) + m) % m;
    return static_cast<std::int64_t>((static_cast<__int128>(n) * mod_inverse(d, m)) % m);
}

RatMat to_rational(IntMat const& m)
{
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

Rational determinant(RatMat m)
{
    std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0)
                continue;
            Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

RatMat inverse(RatMat const& m)
{
    std::size_t n = m.rows();
    RatMat a = m, inv = RatMat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0)
            ++piv;
        if (piv == n)
            throw QuatError(ErrorCode::RankDeficient, "singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        Rational f = 1 / a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= f;
            inv(c, j) *= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            Rational g = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= g * a(c, j);
                inv(r, j) -= g * inv(c, j);
            }
        }
    }
    return inv;
}

RatMat kernel(RatMat const& m)
{
    RatMat a = m;
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(a(piv, j), a(r, j));
        Rational f = 1 / a(r, c);
        for (std::size_t j = 0; j < cols; ++j)
            a(r, j) *= f;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || a(k, c) == 0)
                continue;
            Rational g = a(k, c);
            for (std::size_t j = 0; j < cols; ++j)
                a(k, j) -= g * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0, k = 0; c < cols; ++c) {
        if (k < pivot_cols.size() && pivot_cols[k] == c)
            ++k;
        else
            free_cols.push_back(c);
    }
    RatMat out(cols, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        out(free_cols[f], f) = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            out(pivot_cols[k], f) = -a(k, free_cols[f]);
    }
    return out;
}

IntMat hermite_normal_form(IntMat const& m)
{
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j);
    std::size_t n = m.cols();
    std::size_t prow = 0;
    auto sub = [&](std::size_t dst, std::size_t src, Integer const& q) {
        if (q == 0)
            return;
        for (std::size_t j = 0; j < n; ++j)
            rows[dst][j] -= q * rows[src][j];
    };
    for (std::size_t c = 0; c < n && prow < rows.size(); ++c) {
        for (;;) {
            std::size_t best = rows.size();
            std::size_t nonzero = 0;
            for (std::size_t r = prow; r < rows.size(); ++r) {
                if (rows[r][c] == 0)
                    continue;
                ++nonzero;
                if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))
                    best = r;
            }
            if (nonzero == 0)
                break;
            std::swap(rows[prow], rows[best]);
            if (nonzero == 1)
                break;
            for (std::size_t r = prow + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[prow][c].get_mpz_t());
                sub(r, prow, q);
            }
        }
        if (rows[prow][c] == 0)
            continue;
        if (rows[prow][c] < 0)
            for (auto& x : rows[prow])
                x = -x;
        for (std::size_t r = 0; r < prow; ++r)
            sub(r, prow, floor_div(rows[r][c], rows[prow][c]));
        ++prow;
    }
    IntMat out(prow, n);
    for (std::size_t i = 0; i < prow; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = rows[i][j];
    return out;
}

}  // namespace quatorder
