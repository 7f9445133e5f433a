#include "doctest.h"
#include "quatorder/algebra.hpp"
#include "quatorder/error.hpp"

#include <random>
#include <set>

using namespace quatorder;

namespace {

QuatElement q(Rational t, Rational x, Rational y, Rational z) { return QuatElement(t, x, y, z); }

/* Independent local solvability oracle: (a,b)_p = 1 iff z^2 = a x^2 + b y^2 has
 * a primitive solution modulo p^3 (p odd) or 2^6, for squarefree integers a, b. */
int hilbert_oracle(std::int64_t a, std::int64_t b, std::int64_t p)
{
    std::int64_t m = p == 2 ? 64 : p * p * p;
    std::set<std::int64_t> squares, unit_squares;
    for (std::int64_t z = 0; z < m; ++z) {
        squares.insert(z * z % m);
        if (z % p != 0)
            unit_squares.insert(z * z % m);
    }
    auto md = [m](std::int64_t v) { return ((v % m) + m) % m; };
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y) {
            if (x == 0 && y == 0)
                continue;
            std::int64_t v = md(md(a) * (x * x % m) + md(b) * (y * y % m));
            bool xy_unit = x % p != 0 || y % p != 0;
            if (xy_unit ? squares.count(v) : unit_squares.count(v))
                return 1;
        }
    return -1;
}

std::int64_t squarefree_part(std::int64_t n)
{
    std::int64_t s = n < 0 ? -1 : 1;
    n = n < 0 ? -n : n;
    for (std::int64_t d = 2; d * d <= n; ++d)
        while (n % (d * d) == 0)
            n /= d * d;
    return s * n;
}

}  // namespace

TEST_CASE("product relations")
{
    QuatAlgebra A(-1, -1);
    CHECK(A.mul(q(0, 1, 0, 0), q(0, 0, 1, 0)) == q(0, 0, 0, 1));
    CHECK(A.mul(q(1, 1, 0, 0), q(1, -1, 0, 0)) == q(2, 0, 0, 0));
    QuatAlgebra B(-3, -1);
    CHECK(B.mul(q(0, 0, 1, 0), q(0, 1, 0, 0)) == q(0, 0, 0, -1));
    CHECK(B.mul(q(0, 1, 0, 0), q(0, 1, 0, 0)) == q(-3, 0, 0, 0));
    CHECK(B.mul(q(0, 0, 0, 1), q(0, 0, 0, 1)) == q(-3, 0, 0, 0));
}

TEST_CASE("norms and traces")
{
    QuatAlgebra A(-1, -1);
    CHECK(A.nrd(q(1, 1, 1, 1)) == 4);
    CHECK(A.trd(q(0, 1, 0, 0)) == 0);
    QuatAlgebra B(-3, -1);
    CHECK(B.nrd(q(Rational(1, 2), Rational(3, 2), 0, 0)) == 7);
    CHECK(A.conj(q(1, 2, 3, 4)) == q(1, -2, -3, -4));
}

TEST_CASE("random algebraic identities")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9), pos(1, 5);
    auto rnd = [&] { return make_rational(d(rng), pos(rng)); };
    for (int trial = 0; trial < 1000; ++trial) {
        QuatAlgebra A(-pos(rng), make_rational(-pos(rng), pos(rng)));
        QuatElement u(rnd(), rnd(), rnd(), rnd()), v(rnd(), rnd(), rnd(), rnd());
        QuatElement uv = A.mul(u, v);
        REQUIRE(A.nrd(uv) == A.nrd(u) * A.nrd(v));
        REQUIRE(A.conj(uv) == A.mul(A.conj(v), A.conj(u)));
        REQUIRE(A.conj(A.conj(u)) == u);
        REQUIRE(A.nrd(u + v) - A.nrd(u) - A.nrd(v) == A.trd(A.mul(u, A.conj(v))));
        REQUIRE(A.trace_pairing(u, v) == A.trd(A.mul(u, A.conj(v))));
        REQUIRE(A.nrd(u) >= 0);
        REQUIRE(A.mul(A.mul(u, v), u) == A.mul(u, A.mul(v, u)));
        if (!u.is_zero())
            REQUIRE(A.mul(u, A.inverse(u)) == QuatElement::scalar(1));
    }
}

TEST_CASE("hilbert symbol examples")
{
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(-1, -1, 3) == 1);
    CHECK(hilbert_symbol(-3, -1, 3) == -1);
    CHECK(hilbert_symbol(-1, -1, infinite_place) == -1);
}

TEST_CASE("hilbert symbol agrees with the solvability oracle")
{
    for (std::int64_t a = -30; a <= 30; ++a)
        for (std::int64_t b = -30; b <= 30; b += 7) {
            if (a == 0 || b == 0 || squarefree_part(a) != a || squarefree_part(b) != b)
                continue;
            for (std::int64_t p : {2, 3, 5}) {
                INFO("a=" << a << " b=" << b << " p=" << p);
                CHECK(hilbert_symbol(a, b, p) == hilbert_oracle(a, b, p));
            }
        }
    // non-squarefree and fractional inputs reduce to square classes
    CHECK(hilbert_symbol(Rational(-4, 9), -1, 2) == hilbert_symbol(-1, -1, 2));
    CHECK(hilbert_symbol(Rational(-3, 4), Rational(-25, 1), 3) == hilbert_symbol(-3, -1, 3));
    CHECK(hilbert_symbol(7, -7, 7) == hilbert_oracle(7, -7, 7));
    CHECK(hilbert_symbol(-7, 3, 7) == hilbert_oracle(-7, 3, 7));
}

TEST_CASE("hilbert reciprocity")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(1, 400);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = make_rational(-d(rng), d(rng)), b = make_rational(-d(rng), d(rng));
        std::set<std::int64_t> places{2};
        for (Integer n : {Integer(a.get_num()), Integer(a.get_den()), Integer(b.get_num()), Integer(b.get_den())})
            for (auto p : prime_divisors(abs(n)))
                places.insert(p);
        int prod = hilbert_symbol(a, b, infinite_place);
        for (auto p : places)
            prod *= hilbert_symbol(a, b, p);
        REQUIRE(prod == 1);
        QuatAlgebra A(a, b);
        REQUIRE(A.ramified_primes().size() % 2 == 1);
    }
}

TEST_CASE("ramified primes")
{
    CHECK(QuatAlgebra(-1, -1).ramified_primes() == std::vector<std::int64_t>{2});
    CHECK(QuatAlgebra(-3, -1).ramified_primes() == std::vector<std::int64_t>{3});
    CHECK(QuatAlgebra(-1, -11).ramified_primes() == std::vector<std::int64_t>{11});
    CHECK(QuatAlgebra(-1, -11).discriminant() == 11);
    CHECK_THROWS_AS(QuatAlgebra::definite(1, -1), QuatError);
    CHECK_THROWS_AS(QuatAlgebra(0, -1), QuatError);
}

TEST_CASE("algebra with given discriminant")
{
    for (std::int64_t D : {2, 3, 5, 7, 11, 13, 17, 19, 30, 42}) {
        QuatAlgebra A = algebra_with_discriminant(D);
        CHECK(A.discriminant() == D);
        CHECK(A.is_definite());
    }
    CHECK_THROWS_AS(algebra_with_discriminant(6), QuatError);
}
