#include "doctest.h"
#include "orders_fixture.hpp"
#include "quatorder/ideals.hpp"

#include <random>
#include <set>

using namespace quatorder;
using namespace fixture;

namespace {

QuatElement random_element(std::mt19937& rng, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    for (;;) {
        QuatElement x = q(d(rng), d(rng), d(rng), d(rng));
        if (x != QuatElement())
            return x;
    }
}

QuatElement lift(Order const& O, modp::Vec const& v)
{
    QuatElement y;
    for (int t = 0; t < 4; ++t)
        y = y + Rational(v[t]) * O.basis()[t];
    return y;
}

/* Oracle: every 2-dimensional subspace W of O/pO, lifted to pO + W, kept if it
 * is a right O-module whose product with its conjugate is a scaled order. */
std::set<Lattice4> neighbor_oracle(Order const& O, std::int64_t p)
{
    QuatAlgebra const& A = O.algebra();
    std::set<Lattice4> out;
    for (auto const& W : modp::all_subspaces(4, p)) {
        if (W.size() != 2)
            continue;
        std::vector<QuatElement> rows;
        for (auto const& b : O.basis())
            rows.push_back(Rational(p) * b);
        for (auto const& v : W)
            rows.push_back(lift(O, v));
        Lattice4 J = Lattice4::from_rows(rows);
        bool module = true;
        for (auto const& e : J.basis())
            for (auto const& b : O.basis())
                module = module && J.contains(A.mul(e, b));
        if (!module)
            continue;
        Lattice4 JJ = lattice_mul(conj_lattice(J, A), J, A);
        if (JJ == O.lattice().scaled(p))
            out.insert(J);
    }
    return out;
}

std::set<Lattice4> lattices(std::vector<RightIdeal> const& v)
{
    std::set<Lattice4> s;
    for (auto const& I : v)
        s.insert(I.lattice());
    return s;
}

}  // namespace

TEST_CASE("left orders of principal ideals and neighbors")
{
    std::mt19937 rng(11);
    Order H = hurwitz();
    QuatAlgebra A = H.algebra();
    CHECK(left_order(RightIdeal(H, H.lattice())) == H);
    for (int n = 0; n < 10; ++n) {
        QuatElement a = random_element(rng, 4);
        RightIdeal I = principal_ideal(H, a);
        CHECK(left_order(I) == conjugate_order(H, a));
        CHECK(right_order_check(I) == H);
        CHECK(nrd_ideal(I) == A.nrd(a));
        CHECK(is_locally_principal(I));
    }
    for (auto const& I : prime_neighbors(H, 3)) {
        CHECK(left_order(I).reduced_discriminant() == 2);
        CHECK(is_maximal(left_order(I)));
        CHECK(nrd_ideal(I) == 3);
    }
}

TEST_CASE("reduced norms")
{
    Order H = hurwitz();
    CHECK(nrd_ideal(RightIdeal(H, H.lattice())) == 1);
    CHECK(nrd_ideal(RightIdeal(H, H.lattice().scaled(2))) == 4);
    CHECK(nrd_ideal(RightIdeal(H, H.lattice().scaled(Rational(1, 3)))) == Rational(1, 9));
}

TEST_CASE("local principality")
{
    Order L = lipschitz();
    QuatAlgebra A = L.algebra();
    Lattice4 bad = Lattice4::from_rows({q(2, 0, 0, 0), q(0, 2, 0, 0), q(0, 0, 2, 0), q(1, 1, 1, 1)});
    RightIdeal I(L, bad);
    CHECK(!is_locally_principal(I));
    CHECK_THROWS_AS(ideal_inverse(I), QuatError);
    CHECK(is_locally_principal(principal_ideal(L, q(1, 1, 0, 0))));
    CHECK_THROWS_AS(RightIdeal(L, Lattice4::from_rows({q(1, 0, 0, 0), q(0, 2, 0, 0), q(0, 0, 2, 0), q(0, 0, 0, 2)})), QuatError);
    for (auto const& O : {hurwitz(), maximal3(), parks()})
        for (std::int64_t p : {2, 5, 7})
            if (O.level() % p != 0)
                for (auto const& J : prime_neighbors(O, p))
                    CHECK(is_locally_principal(J));
}

TEST_CASE("neighbor counts against subspace oracle")
{
    struct Case {
        Order O;
        std::int64_t p;
        std::size_t count;
    };
    for (auto const& c : {Case{hurwitz(), 3, 4}, Case{hurwitz(), 5, 6}, Case{maximal3(), 2, 3}, Case{eichler6(), 5, 6},
                          Case{parks(), 2, 3}}) {
        auto nb = prime_neighbors(c.O, c.p);
        CHECK(nb.size() == c.count);
        CHECK(lattices(nb) == neighbor_oracle(c.O, c.p));
        CHECK(eichler_symbol(c.O, c.p) == EichlerSymbol::Star);
    }
    CHECK_THROWS_AS(prime_neighbors(hurwitz(), 2), QuatError);
    CHECK_THROWS_AS(prime_neighbors(parks(), 3), QuatError);
}

TEST_CASE("products and inverses")
{
    std::mt19937 rng(5);
    int pairs = 0;
    for (auto const& O : {hurwitz(), maximal3(), parks(), eichler6()}) {
        std::vector<RightIdeal> nb;
        for (std::int64_t p : {5, 7, 11})
            for (auto const& J : prime_neighbors(O, p))
                nb.push_back(J);
        RightIdeal unit(O, O.lattice());
        for (auto const& I : nb) {
            CHECK(ideal_mul(I, unit) == I);
            RightIdeal inv = ideal_inverse(I);
            CHECK(nrd_ideal(inv) == 1 / nrd_ideal(I));
            CHECK(inv.left_order() == O);
            CHECK(ideal_mul(I, inv).lattice() == I.left_order().lattice());
            CHECK(ideal_mul(inv, I).lattice() == O.lattice());
            CHECK(ideal_inverse(inv) == I);
        }
        std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
        for (int n = 0; n < 25; ++n) {
            RightIdeal I = nb[pick(rng)];
            RightIdeal J = ideal_inverse(nb[pick(rng)]);
            RightIdeal K = ideal_mul(I, J);
            CHECK(nrd_ideal(K) == nrd_ideal(I) * nrd_ideal(J));
            CHECK(is_locally_principal(K));
            ++pairs;
        }
        if (!nb.empty() && !(nb[0].left_order() == O))
            CHECK_THROWS_AS(ideal_mul(nb[0], nb[0]), QuatError);
    }
    CHECK(pairs == 100);

    Order H = hurwitz();
    QuatElement a = q(1, 2, 0, 1);
    RightIdeal P = principal_ideal(H, a);
    RightIdeal Pi = ideal_inverse(P);
    CHECK(Pi.lattice() == right_multiply(H.lattice(), H.algebra().inverse(a), H.algebra()));
    auto n3 = prime_neighbors(H, 3);
    CHECK(nrd_ideal(ideal_inverse(n3[0])) == Rational(1, 3));
}

TEST_CASE("ideal isomorphism")
{
    Order H = hurwitz();
    auto n3 = prime_neighbors(H, 3);
    RightIdeal I = n3[0];
    auto self = ideal_isomorphism(I, I);
    CHECK(self.isomorphic);
    for (std::size_t k = 1; k < n3.size(); ++k) {
        auto r = ideal_isomorphism(n3[0], n3[k]);
        REQUIRE(r.isomorphic);
        CHECK(left_multiply(*r.alpha, n3[k].lattice(), H.algebra()) == n3[0].lattice());
    }
    auto cs = class_set(parks());
    for (std::size_t a = 0; a < cs->representatives.size(); ++a)
        for (std::size_t b = a + 1; b < cs->representatives.size(); ++b)
            CHECK(!ideal_isomorphic(cs->representatives[a], cs->representatives[b]));
}

TEST_CASE("class sets")
{
    auto h = class_set(hurwitz());
    CHECK(h->representatives.size() == 1);
    CHECK(h->mass == Rational(1, 12));
    CHECK(h->representatives[0].lattice() == hurwitz().lattice());

    auto p = class_set(parks());
    CHECK(p->representatives.size() == 4);
    CHECK(p->mass == 2);
    CHECK(p->representatives[0].lattice() == parks().lattice());

    CHECK(class_set(maximal3())->representatives.size() == 1);
    CHECK(class_set(lipschitz())->representatives.size() == 1);
    CHECK(class_set(non_gorenstein())->representatives.size() == 2);

    for (auto const& O : {hurwitz(), lipschitz(), non_gorenstein(), parks(), maximal3(), eichler6()}) {
        auto cs = class_set(O);
        CHECK(cs->mass == mass_formula(O));
        Rational sum = 0;
        for (std::size_t k = 0; k < cs->representatives.size(); ++k) {
            CHECK(cs->unit_indices[k] == cs->representatives[k].left_order().unit_index());
            sum += Rational(1, cs->unit_indices[k]);
        }
        CHECK(sum == cs->mass);
        CHECK(class_set(O).get() == cs.get());
    }
}

TEST_CASE("extension of ideals")
{
    Order L = lipschitz(), H = hurwitz();
    CHECK(extend_ideal(RightIdeal(L, L.lattice()), H).lattice() == H.lattice());
    CHECK_THROWS_AS(extend_ideal(RightIdeal(H, H.lattice()), L), QuatError);

    auto cl = class_set(L);
    auto ch = class_set(H);
    std::vector<Rational> fiber_mass(ch->representatives.size(), 0);
    std::vector<bool> hit(ch->representatives.size(), false);
    for (std::size_t k = 0; k < cl->representatives.size(); ++k) {
        RightIdeal E = extend_ideal(cl->representatives[k], H);
        CHECK(is_locally_principal(E));
        for (std::size_t c = 0; c < ch->representatives.size(); ++c)
            if (ideal_isomorphic(E, ch->representatives[c])) {
                hit[c] = true;
                fiber_mass[c] += Rational(1, cl->unit_indices[k]);
            }
    }
    for (std::size_t c = 0; c < ch->representatives.size(); ++c) {
        CHECK(hit[c]);
        // [H_2^x : L_2^x] = 3
        CHECK(fiber_mass[c] == 3 * Rational(1, ch->unit_indices[c]));
    }

    // Parks inside the maximal order of discriminant 3
    Order P = parks(), M = maximal3();
    REQUIRE(M.lattice().contains(P.lattice()));
    auto cp = class_set(P);
    for (auto const& I : cp->representatives)
        CHECK(ideal_isomorphic(extend_ideal(I, M), RightIdeal(M, M.lattice())));
}

TEST_CASE("coprime normalization")
{
    Order P = parks();
    RightIdeal I(P, P.lattice().scaled(3));
    RightIdeal J = normalize_coprime(I);
    CHECK(J.norm().get_den() == 1);
    CHECK(J.norm().get_num() % 3 != 0);
    CHECK(ideal_isomorphic(I, J));
    for (auto const& R : class_set(P)->representatives) {
        RightIdeal K = normalize_coprime(R);
        CHECK(ideal_isomorphic(R, K));
        CHECK(K.norm().get_num() % 3 != 0);
        CHECK(K.norm().get_den() % 3 != 0);
    }
}

TEST_CASE("type numbers")
{
    CHECK(type_number(hurwitz()).count == 1);
    CHECK(type_number(non_gorenstein()).count == 1);
    auto t = type_number(parks());
    CHECK(t.count == 2);
    CHECK(t.type_of_class.size() == 4);
    CHECK(order_isomorphic(t.representatives[0], parks()));
    CHECK(!order_isomorphic(t.representatives[1], parks()));
}
