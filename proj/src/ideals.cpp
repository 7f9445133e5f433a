#include "quatorder/ideals.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace quatorder {

struct RightIdeal::State {
    State(Order o, Lattice4 l, Rational n) : O(std::move(o)), L(std::move(l)), norm(std::move(n)) {}
    Order O;
    Lattice4 L;
    Rational norm;
    std::mutex mu;
    std::optional<Order> left;
};

RightIdeal::RightIdeal(Order const& O, Lattice4 const& L)
{
    QuatAlgebra const& A = O.algebra();
    for (auto const& e : L.basis())
        for (auto const& b : O.basis())
            if (!L.contains(A.mul(e, b)))
                throw QuatError(ErrorCode::IncompatibleProduct, "lattice is not a right module over the order");
    s_ = std::make_shared<State>(O, L, norm_generator(L, A));
}

Lattice4 const& RightIdeal::lattice() const { return s_->L; }
Order const& RightIdeal::right_order() const { return s_->O; }
Rational const& RightIdeal::norm() const { return s_->norm; }

Order const& RightIdeal::left_order() const
{
    std::lock_guard lock(s_->mu);
    if (!s_->left) {
        Lattice4 st = left_stabilizer(s_->L, s_->O.algebra());
        s_->left = st == s_->O.lattice() ? s_->O : Order::from_lattice(s_->O.algebra(), st);
    }
    return *s_->left;
}

Order left_order(RightIdeal const& I) { return I.left_order(); }

Order right_order_check(RightIdeal const& I)
{
    Lattice4 st = right_stabilizer(I.lattice(), I.right_order().algebra());
    if (st == I.right_order().lattice())
        return I.right_order();
    return Order::from_lattice(I.right_order().algebra(), st);
}

Rational nrd_ideal(RightIdeal const& I) { return I.norm(); }

bool is_locally_principal(RightIdeal const& I)
{
    QuatAlgebra const& A = I.right_order().algebra();
    if (right_stabilizer(I.lattice(), A) != I.right_order().lattice())
        return false;
    Lattice4 c = conj_lattice(I.lattice(), A);
    Rational const& q = I.norm();
    return lattice_mul(I.lattice(), c, A) == I.left_order().lattice().scaled(q) &&
           lattice_mul(c, I.lattice(), A) == I.right_order().lattice().scaled(q);
}

RightIdeal principal_ideal(Order const& O, QuatElement const& alpha)
{
    return RightIdeal(O, left_multiply(alpha, O.lattice(), O.algebra()));
}

RightIdeal ideal_mul(RightIdeal const& I, RightIdeal const& J)
{
    if (I.right_order().lattice() != J.left_order().lattice())
        throw QuatError(ErrorCode::IncompatibleProduct, "right order of the first factor differs from the left order of the second");
    return RightIdeal(J.right_order(), lattice_mul(I.lattice(), J.lattice(), J.right_order().algebra()));
}

RightIdeal ideal_inverse(RightIdeal const& I)
{
    if (!is_locally_principal(I))
        throw QuatError(ErrorCode::NotInvertible, "ideal is not locally principal");
    QuatAlgebra const& A = I.right_order().algebra();
    return RightIdeal(I.left_order(), conj_lattice(I.lattice(), A).scaled(1 / I.norm()));
}

IdealIsomorphism ideal_isomorphism(RightIdeal const& I, RightIdeal const& J)
{
    QuatAlgebra const& A = I.right_order().algebra();
    if (I.lattice() == J.lattice())
        return {true, QuatElement::scalar(1)};
    Lattice4 P = lattice_mul(I.lattice(), conj_lattice(J.lattice(), A), A);
    Rational target = I.norm() * J.norm();
    Rational inv_qj = 1 / J.norm();
    for (auto const& alpha : short_vectors(P, A, target)) {
        QuatElement beta = inv_qj * alpha;
        if (left_multiply(beta, J.lattice(), A) == I.lattice())
            return {true, beta};
    }
    return {};
}

bool ideal_isomorphic(RightIdeal const& I, RightIdeal const& J) { return ideal_isomorphism(I, J).isomorphic; }

std::vector<RightIdeal> ideal_neighbors(RightIdeal const& I, std::int64_t p)
{
    Order const& O = I.right_order();
    QuatAlgebra const& A = O.algebra();
    auto const& e = I.lattice().basis();
    // m[r][s] = coordinates of e_r * b_s over e, reduced mod p
    std::int64_t m[4][4][4];
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            auto c = I.lattice().coords(A.mul(e[r], O.basis()[s]));
            for (int t = 0; t < 4; ++t)
                m[r][s][t] = mod_residue(c[t], p);
        }
    std::set<std::vector<modp::Vec>> seen;
    std::vector<RightIdeal> out;
    Rational target = I.norm() * p;
    for (auto const& x : modp::projective_points(4, p)) {
        std::vector<modp::Vec> span;
        for (int s = 0; s < 4; ++s) {
            modp::Vec v(4, 0);
            for (int r = 0; r < 4; ++r)
                for (int t = 0; t < 4; ++t)
                    v[t] = (v[t] + x[r] * m[r][s][t]) % p;
            span.push_back(v);
        }
        span = modp::rref(span, p);
        if (span.size() != 2 || !seen.insert(span).second)
            continue;
        std::vector<QuatElement> rows;
        for (auto const& b : e)
            rows.push_back(Rational(p) * b);
        for (auto const& v : span) {
            QuatElement y;
            for (int t = 0; t < 4; ++t)
                y = y + Rational(v[t]) * e[t];
            rows.push_back(y);
        }
        RightIdeal J(O, Lattice4::from_rows(rows));
        if (J.norm() != target)
            continue;
        out.push_back(J);
    }
    return out;
}

std::vector<RightIdeal> prime_neighbors(Order const& O, std::int64_t p)
{
    if (O.level() % p == 0)
        throw QuatError(ErrorCode::PrimeDividesDiscriminant, std::to_string(p) + " divides the level " + std::to_string(O.level()));
    return ideal_neighbors(RightIdeal(O, O.lattice()), p);
}

namespace {

struct Fingerprint {
    std::int64_t units;
    std::vector<std::size_t> theta;
    auto operator<=>(Fingerprint const&) const = default;
};

Fingerprint fingerprint(RightIdeal const& I)
{
    GramMatrix g = gram_matrix(I.lattice(), I.right_order().algebra());
    Rational inv = 1 / I.norm();
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            g(r, c) *= inv;
    return {I.left_order().unit_index(), theta_counts(g, 1, 4)};
}

}  // namespace

ClassSet compute_class_set(Order const& O)
{
    Rational target = mass_formula(O);
    ClassSet cs{O, {}, {}, 0, {}};
    std::vector<Fingerprint> prints;
    std::vector<std::size_t> done;  // primes already used on each representative

    auto add = [&](RightIdeal const& I) {
        Fingerprint f = fingerprint(I);
        for (std::size_t k = 0; k < cs.representatives.size(); ++k)
            if (prints[k] == f && ideal_isomorphic(I, cs.representatives[k]))
                return;
        cs.representatives.push_back(I);
        cs.unit_indices.push_back(f.units);
        prints.push_back(f);
        done.push_back(0);
        cs.mass += Rational(1, f.units);
        if (cs.mass > target)
            throw QuatError(ErrorCode::MassOvershoot, "class set mass " + to_string(cs.mass) + " exceeds " + to_string(target));
    };

    add(RightIdeal(O, O.lattice()));
    std::int64_t p = 1;
    while (cs.mass < target) {
        bool progressed = false;
        for (std::size_t k = 0; k < cs.representatives.size() && cs.mass < target; ++k) {
            while (done[k] < cs.primes.size() && cs.mass < target) {
                RightIdeal I = cs.representatives[k];
                auto nbrs = ideal_neighbors(I, cs.primes[done[k]]);
                ++done[k];
                progressed = true;
                for (auto const& J : nbrs) {
                    add(J);
                    if (cs.mass == target)
                        break;
                }
            }
        }
        if (!progressed && cs.mass < target) {
            do
                p = next_prime(p);
            while (O.level() % p == 0);
            if (cs.primes.size() > 12)
                throw QuatError(ErrorCode::NoConvergence, "class set search did not reach the mass");
            cs.primes.push_back(p);
        }
    }

    // canonical order: the unit class first, then by norm and lattice
    std::vector<std::size_t> idx(cs.representatives.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin() + 1, idx.end(), [&](std::size_t a, std::size_t b) {
        auto const& A = cs.representatives[a];
        auto const& B = cs.representatives[b];
        if (A.norm() != B.norm())
            return A.norm() < B.norm();
        return A.lattice() < B.lattice();
    });
    ClassSet sorted{O, {}, {}, cs.mass, cs.primes};
    for (auto k : idx) {
        sorted.representatives.push_back(cs.representatives[k]);
        sorted.unit_indices.push_back(cs.unit_indices[k]);
    }
    return sorted;
}

namespace {

using CacheKey = std::pair<std::pair<std::string, std::string>, Lattice4>;

std::mutex cache_mu;
std::map<CacheKey, std::shared_ptr<const ClassSet>>& cache()
{
    static std::map<CacheKey, std::shared_ptr<const ClassSet>> m;
    return m;
}

}  // namespace

std::shared_ptr<const ClassSet> class_set(Order const& O)
{
    CacheKey key{{to_string(O.algebra().a()), to_string(O.algebra().b())}, O.lattice()};
    {
        std::lock_guard lock(cache_mu);
        auto it = cache().find(key);
        if (it != cache().end())
            return it->second;
    }
    auto cs = std::make_shared<const ClassSet>(compute_class_set(O));
    std::lock_guard lock(cache_mu);
    return cache().emplace(key, cs).first->second;
}

RightIdeal normalize_coprime(RightIdeal const& I)
{
    Order const& O = I.right_order();
    QuatAlgebra const& A = O.algebra();
    Rational const& q = I.norm();
    if (q.get_den() == 1) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), O.reduced_discriminant().get_mpz_t());
        if (g == 1)
            return I;
    }
    Lattice4 c = conj_lattice(I.lattice(), A);
    for (std::int64_t k = 1; k < 100000; ++k) {
        if (std::gcd(k, O.level()) != 1)
            continue;
        auto vs = short_vectors(c, A, q * k);
        if (vs.empty())
            continue;
        QuatElement beta = (1 / q) * vs.front();
        return RightIdeal(O, left_multiply(beta, I.lattice(), A));
    }
    throw QuatError(ErrorCode::NoConvergence, "no coprime representative found");
}

RightIdeal extend_ideal(RightIdeal const& I, Order const& Op)
{
    if (!Op.lattice().contains(I.right_order().lattice()) || Op.algebra() != I.right_order().algebra())
        throw QuatError(ErrorCode::NotASuperorder, "target order does not contain the right order");
    return RightIdeal(Op, lattice_mul(I.lattice(), Op.lattice(), Op.algebra()));
}

TypeNumber type_number(Order const& O)
{
    auto cs = class_set(O);
    TypeNumber t;
    for (auto const& I : cs->representatives) {
        Order const& L = I.left_order();
        std::size_t found = t.representatives.size();
        for (std::size_t k = 0; k < t.representatives.size(); ++k)
            if (order_isomorphic(L, t.representatives[k])) {
                found = k;
                break;
            }
        if (found == t.representatives.size())
            t.representatives.push_back(L);
        t.type_of_class.push_back(found);
    }
    t.count = t.representatives.size();
    return t;
}

}  // namespace quatorder
