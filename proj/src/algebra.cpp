#include "quatorder/algebra.hpp"
#include "quatorder/error.hpp"

#include <algorithm>
#include <set>

namespace quatorder {

QuatElement operator+(QuatElement const& u, QuatElement const& v)
{
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]};
}

QuatElement operator-(QuatElement const& u, QuatElement const& v)
{
    return {u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]};
}

QuatElement operator-(QuatElement const& u) { return {-u[0], -u[1], -u[2], -u[3]}; }

QuatElement operator*(Rational const& s, QuatElement const& u)
{
    return {s * u[0], s * u[1], s * u[2], s * u[3]};
}

std::string to_string(QuatElement const& u)
{
    static const char* names[4] = {"", "i", "j", "k"};
    std::string out;
    for (int r = 0; r < 4; ++r) {
        if (u[r] == 0)
            continue;
        std::string coef = to_string(u[r]);
        if (!out.empty())
            out += coef[0] == '-' ? " - " : " + ";
        else if (coef[0] == '-')
            out += "-";
        if (coef[0] == '-')
            coef = coef.substr(1);
        if (r == 0)
            out += coef;
        else
            out += (coef == "1" ? std::string() : coef + "*") + names[r];
    }
    return out.empty() ? "0" : out;
}

namespace {

/* Square-class representative: a * den(a)^2 is an integer in the same class. */
Integer integral_square_class(Rational const& a)
{
    return a.get_num() * a.get_den();
}

int legendre(Integer const& u, std::int64_t p)
{
    Integer pp = p;
    return mpz_legendre(u.get_mpz_t(), pp.get_mpz_t());
}

}  // namespace

int hilbert_symbol(Rational const& a, Rational const& b, Place p)
{
    if (a == 0 || b == 0)
        throw QuatError(ErrorCode::InvalidAlgebra, "Hilbert symbol of zero");
    if (p == infinite_place)
        return (a < 0 && b < 0) ? -1 : 1;
    Integer A = integral_square_class(a), B = integral_square_class(b);
    int alpha = valuation(A, p), beta = valuation(B, p);
    Integer u = A, v = B;
    for (int k = 0; k < alpha; ++k)
        u /= p;
    for (int k = 0; k < beta; ++k)
        v /= p;
    if (p != 2) {
        int s = 1;
        if ((alpha * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1)
            s = -s;
        if (beta % 2 == 1)
            s *= legendre(u, p);
        if (alpha % 2 == 1)
            s *= legendre(v, p);
        return s;
    }
    auto mod8 = [](Integer const& x) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), 8);
        return static_cast<int>(r.get_si());
    };
    int u8 = mod8(u), v8 = mod8(v);
    auto eps = [](int x) { return ((x - 1) / 2) % 2; };
    auto omega = [](int x) { return ((x * x - 1) / 8) % 2; };
    int e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
    return (e % 2 == 0) ? 1 : -1;
}

std::vector<std::int64_t> ramified_primes(Rational const& a, Rational const& b)
{
    std::set<std::int64_t> candidates{2};
    for (Integer const& n : {Integer(a.get_num()), Integer(a.get_den()), Integer(b.get_num()), Integer(b.get_den())})
        for (auto p : prime_divisors(n))
            candidates.insert(p);
    std::vector<std::int64_t> out;
    for (auto p : candidates)
        if (hilbert_symbol(a, b, p) == -1)
            out.push_back(p);
    return out;
}

QuatAlgebra::QuatAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_ == 0 || b_ == 0)
        throw QuatError(ErrorCode::InvalidAlgebra, "a and b must be nonzero");
    ramified_ = quatorder::ramified_primes(a_, b_);
    disc_ = 1;
    for (auto p : ramified_)
        disc_ *= p;
}

QuatAlgebra QuatAlgebra::definite(Rational a, Rational b)
{
    QuatAlgebra A(std::move(a), std::move(b));
    if (!A.is_definite())
        throw QuatError(ErrorCode::InvalidAlgebra, "algebra (" + to_string(A.a()) + ", " + to_string(A.b()) + ") is not definite");
    return A;
}

QuatElement QuatAlgebra::mul(QuatElement const& u, QuatElement const& v) const
{
    Rational const& a = a_;
    Rational const& b = b_;
    QuatElement w;
    w[0] = u[0] * v[0] + a * u[1] * v[1] + b * u[2] * v[2] - a * b * u[3] * v[3];
    w[1] = u[0] * v[1] + u[1] * v[0] - b * u[2] * v[3] + b * u[3] * v[2];
    w[2] = u[0] * v[2] + u[2] * v[0] + a * u[1] * v[3] - a * u[3] * v[1];
    w[3] = u[0] * v[3] + u[3] * v[0] + u[1] * v[2] - u[2] * v[1];
    return w;
}

QuatElement QuatAlgebra::conj(QuatElement const& u) const { return {u[0], -u[1], -u[2], -u[3]}; }

Rational QuatAlgebra::trd(QuatElement const& u) const { return 2 * u[0]; }

Rational QuatAlgebra::nrd(QuatElement const& u) const
{
    return u[0] * u[0] - a_ * u[1] * u[1] - b_ * u[2] * u[2] + a_ * b_ * u[3] * u[3];
}

Rational QuatAlgebra::trace_pairing(QuatElement const& u, QuatElement const& v) const
{
    return 2 * (u[0] * v[0] - a_ * u[1] * v[1] - b_ * u[2] * v[2] + a_ * b_ * u[3] * v[3]);
}

QuatElement QuatAlgebra::inverse(QuatElement const& u) const
{
    Rational n = nrd(u);
    if (n == 0)
        throw QuatError(ErrorCode::NotInvertible, "element " + to_string(u) + " has zero norm");
    return (1 / n) * conj(u);
}

QuatAlgebra algebra_with_discriminant(std::int64_t D)
{
    auto fac = factor(D);
    bool squarefree = std::all_of(fac.begin(), fac.end(), [](auto const& pe) { return pe.second == 1; });
    if (D < 2 || !squarefree || fac.size() % 2 == 0)
        throw QuatError(ErrorCode::InvalidAlgebra, "no definite algebra of discriminant " + std::to_string(D));
    for (std::int64_t m = 1; m <= 4 * D * D + 16; ++m)
        for (std::int64_t k = 1; k <= m; ++k) {
            QuatAlgebra A(Rational(-k), Rational(-m));
            if (A.discriminant() == D)
                return A;
        }
    throw QuatError(ErrorCode::NoConvergence, "algebra search failed for D = " + std::to_string(D));
}

}  // namespace quatorder
