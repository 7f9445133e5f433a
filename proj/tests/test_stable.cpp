#include "doctest.h"
#include "orders_fixture.hpp"
#include "quatorder/stable.hpp"

#include <algorithm>
#include <set>

using namespace quatorder;
using namespace fixture;

namespace {

Order parks_mate()
{
    auto t = type_number(parks());
    REQUIRE(t.count == 2);
    return t.representatives[1];
}

/* Oracle: nrd values of O/p^l O computed from explicit elements, closed under
 * multiplication together with unit squares. */
std::set<std::int64_t> norm_group_oracle(Order const& O, std::int64_t p, std::int64_t m)
{
    QuatAlgebra const& A = O.algebra();
    std::set<std::int64_t> g{1};
    std::vector<std::int64_t> gens;
    for (std::int64_t u = 1; u < m; ++u)
        if (u % p != 0)
            gens.push_back(u * u % m);
    for (std::int64_t n = 0; n < m * m * m * m; ++n) {
        QuatElement x;
        std::int64_t t = n;
        for (int k = 0; k < 4; ++k) {
            x = x + Rational(t % m) * O.basis()[k];
            t /= m;
        }
        std::int64_t v = mod_residue(A.nrd(x), m);
        if (v % p != 0)
            gens.push_back(v);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto a : std::vector<std::int64_t>(g.begin(), g.end()))
            for (auto b : gens)
                if (g.insert(a * b % m).second)
                    grew = true;
    }
    return g;
}

}  // namespace

TEST_CASE("local norm groups")
{
    CHECK(local_norm_group(hurwitz(), 2).index == 1);
    auto ng = local_norm_group(non_gorenstein(), 2);
    CHECK(ng.modulus == 8);
    CHECK(ng.index == 2);
    auto pk = local_norm_group(parks(), 3);
    CHECK(pk.modulus == 3);
    CHECK(pk.index == 2);
    CHECK(pk.contains(1));
    CHECK(!pk.contains(2));
    for (auto const& [O, p] : std::vector<std::pair<Order, std::int64_t>>{
             {hurwitz(), 2}, {non_gorenstein(), 2}, {parks(), 3}, {lipschitz(), 2}, {eichler6(), 3}}) {
        auto G = local_norm_group(O, p);
        auto oracle = norm_group_oracle(O, p, G.modulus);
        for (std::int64_t u = 0; u < G.modulus; ++u)
            CHECK(G.contains(u) == (oracle.count(u) > 0));
        for (std::int64_t u = 1; u < G.modulus; ++u)
            if (u % p != 0)
                CHECK(G.contains(u * u));
    }
}

TEST_CASE("stable class groups")
{
    CHECK(stable_class_group(hurwitz()).order() == 1);
    CHECK(stable_class_group(parks()).order() == 2);
    CHECK(stable_class_group(non_gorenstein()).order() == 2);
    CHECK(stable_class_group(maximal3()).order() == 1);

    auto G = stable_class_group(parks());
    CHECK(G.eval(7) == G.identity());
    CHECK(G.eval(5) != G.identity());
    CHECK(G.eval(Rational(5, 7)) == G.eval(5));
    CHECK(G.eval(10) == G.identity());
    CHECK_THROWS_AS(G.eval(6), QuatError);
    CHECK_THROWS_AS(G.eval(Rational(1, 3)), QuatError);

    Order P = parks();
    CHECK(nrd_class(RightIdeal(P, P.lattice()), G) == G.identity());
    for (auto const& I : prime_neighbors(P, 5))
        CHECK(nrd_class(I, G) != G.identity());
    for (auto const& I : prime_neighbors(P, 7))
        CHECK(nrd_class(I, G) == G.identity());
}

TEST_CASE("eichler mass")
{
    CHECK(eichler_mass(hurwitz()) == Rational(1, 12));
    CHECK(eichler_mass(maximal3()) == Rational(1, 6));
    CHECK(eichler_mass(parks()) == 2);
}

TEST_CASE("fibers, hermite and cancellation")
{
    auto h = fiber_decomposition(hurwitz());
    CHECK(h.sizes() == std::vector<std::size_t>{1});

    Order P = parks();
    auto fp = fiber_decomposition(P);
    auto G = stable_class_group(P);
    REQUIRE(fp.fibers.size() == 2);
    CHECK(fp.fibers[G.identity()].size() == 1);
    CHECK(fp.fibers[G.eval(2)].size() == 3);

    Order M = parks_mate();
    CHECK(!order_isomorphic(M, P));
    CHECK(M.reduced_discriminant() == 27);
    auto fm = fiber_decomposition(M);
    auto GM = stable_class_group(M);
    REQUIRE(fm.fibers.size() == 2);
    CHECK(fm.fibers[GM.identity()].size() == 3);
    CHECK(fm.fibers[GM.eval(2)].size() == 1);

    CHECK(is_hermite(hurwitz()));
    CHECK(is_hermite(P));
    CHECK(!is_hermite(M));
    CHECK(has_cancellation(hurwitz()));
    CHECK(!has_cancellation(P));
    CHECK(has_cancellation(non_gorenstein()));

    CHECK(stably_free_mass(hurwitz()) == Rational(1, 12));
    CHECK(stably_free_mass(P) == 1);
    CHECK(stably_free_mass(M) == 1);
    CHECK(trivial_fiber_mass(M) == 1);
    CHECK(trivial_fiber_mass(P) == trivial_fiber_mass(M));

    for (auto const& O : {hurwitz(), lipschitz(), non_gorenstein(), P, M, maximal3(), eichler6()}) {
        auto fd = fiber_decomposition(O);
        auto S = stable_class_group(O);
        CHECK(static_cast<std::int64_t>(fd.fibers.size()) == S.order());
        std::size_t total = 0;
        for (auto const& [e, v] : fd.fibers) {
            total += v.size();
            CHECK(fd.masses[e] == stably_free_mass(O));
        }
        CHECK(total == class_set(O)->representatives.size());
        CHECK(is_hermite(O) == (fd.fibers[S.identity()].size() == 1));
        CHECK(vigneras_check(O) == is_hermite(O));
    }
}

TEST_CASE("local unit index")
{
    Order L = lipschitz(), H = hurwitz();
    CHECK(local_unit_index(L, H, 2) == 3);
    CHECK(local_unit_index_closed(L, H, 2) == 3);
    CHECK(local_unit_index(H, H, 2) == 1);
    CHECK(local_unit_index(non_gorenstein(), H, 2) == 24);
    CHECK(local_unit_index_closed(non_gorenstein(), H, 2) == 24);
    CHECK(local_unit_index(parks(), maximal3(), 3) == 12);
    CHECK(local_unit_index(eichler6(), H, 3) == 4);
    CHECK_THROWS_AS(local_unit_index(L, H, 3), QuatError);
    CHECK_THROWS_AS(local_unit_index(H, L, 2), QuatError);
}

TEST_CASE("vigneras criterion")
{
    CHECK(inverse_tamagawa(hurwitz()) == Rational(1, 24));
    CHECK(vigneras_check(hurwitz()));
    Order E = eichler6();
    CHECK(E.unit_index() == 3);
    CHECK(inverse_tamagawa(E) == Rational(1, 6));
    CHECK(vigneras_check(E));
    CHECK(inverse_tamagawa(parks()) == Rational(1, 2));
    CHECK(vigneras_check(parks()));
    CHECK(!vigneras_check(parks_mate()));
}
