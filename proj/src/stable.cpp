#include "quatorder/stable.hpp"

#include <numeric>

namespace quatorder {

namespace {

std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

/* Residue mod m of a rational with denominator prime to m. */
std::int64_t residue(Rational const& q, std::int64_t m) { return mod_residue(q, m); }

}  // namespace

std::uint32_t LocalNormGroup::eval(std::int64_t u) const
{
    u = modp::reduce(u, modulus);
    std::size_t r = coset_generators.size();
    for (std::uint32_t bits = 0; bits < (1u << r); ++bits) {
        std::int64_t rep = 1;
        for (std::size_t k = 0; k < r; ++k)
            if (bits & (1u << k))
                rep = rep * coset_generators[k] % modulus;
        if (contains(u * mod_inverse(rep, modulus) % modulus))
            return bits;
    }
    throw QuatError(ErrorCode::NotInvertible, "residue is not a unit");
}

LocalNormGroup local_norm_group(Order const& O, std::int64_t p)
{
    LocalNormGroup G;
    G.p = p;
    G.level = p == 2 ? 3 : 1;
    G.modulus = ipow(p, G.level);
    std::int64_t m = G.modulus;
    G.member.assign(static_cast<std::size_t>(m), false);
    std::vector<bool> values(static_cast<std::size_t>(m), false);
    for (std::int64_t u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1)
            values[static_cast<std::size_t>(u * u % m)] = true;
    ResidueRing R(O, m);
    modp::Vec x(4, 0);
    for (std::int64_t n = 0; n < m * m * m * m; ++n) {
        std::int64_t t = n;
        for (int k = 0; k < 4; ++k) {
            x[k] = t % m;
            t /= m;
        }
        std::int64_t v = R.nrd(x);
        if (v % p != 0)
            values[static_cast<std::size_t>(v)] = true;
    }
    // subgroup generated by the values
    G.member[1] = true;
    std::vector<std::int64_t> elems{1};
    for (std::int64_t v = 1; v < m; ++v) {
        if (!values[static_cast<std::size_t>(v)] || G.member[static_cast<std::size_t>(v)])
            continue;
        G.generators.push_back(v);
        for (std::size_t k = 0; k < elems.size(); ++k) {
            std::int64_t w = elems[k] * v % m;
            if (!G.member[static_cast<std::size_t>(w)]) {
                G.member[static_cast<std::size_t>(w)] = true;
                elems.push_back(w);
            }
        }
    }
    std::int64_t units = 0;
    for (std::int64_t u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1)
            ++units;
    G.index = units / static_cast<std::int64_t>(elems.size());
    // greedy coset generators
    std::vector<bool> covered = G.member;
    std::vector<std::int64_t> cov_elems = elems;
    for (std::int64_t u = 1; u < m; ++u) {
        if (std::gcd(u, m) != 1 || covered[static_cast<std::size_t>(u)])
            continue;
        G.coset_generators.push_back(u);
        std::size_t n = cov_elems.size();
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t w = cov_elems[k] * u % m;
            if (!covered[static_cast<std::size_t>(w)]) {
                covered[static_cast<std::size_t>(w)] = true;
                cov_elems.push_back(w);
            }
        }
    }
    return G;
}

StableClassGroup::StableClassGroup(Order const& O)
{
    for (auto p : O.level_primes()) {
        primes_.push_back(p);
        locals_.push_back(local_norm_group(O, p));
        order_ *= locals_.back().index;
    }
}

int StableClassGroup::rank() const
{
    int r = 0;
    for (auto const& G : locals_)
        r += static_cast<int>(G.coset_generators.size());
    return r;
}

StableElement StableClassGroup::eval(Rational const& q) const
{
    if (q <= 0)
        throw QuatError(ErrorCode::NormNotCoprime, "stable class of a non-positive rational");
    StableElement e;
    for (auto const& G : locals_) {
        if (q.get_num() % G.p == 0 || q.get_den() % G.p == 0)
            throw QuatError(ErrorCode::NormNotCoprime, to_string(q) + " is not prime to " + std::to_string(G.p));
        e.push_back(G.eval(residue(q, G.modulus)));
    }
    return e;
}

StableClassGroup stable_class_group(Order const& O) { return StableClassGroup(O); }

Rational eichler_mass(Order const& O) { return mass_formula(O); }

StableElement nrd_class(RightIdeal const& I, StableClassGroup const& G) { return G.eval(I.norm()); }

std::vector<std::size_t> FiberDecomposition::sizes() const
{
    std::vector<std::size_t> out;
    for (auto const& [k, v] : fibers)
        out.push_back(v.size());
    return out;
}

FiberDecomposition fiber_decomposition(Order const& O)
{
    auto cs = class_set(O);
    StableClassGroup G(O);
    FiberDecomposition fd;
    for (std::size_t k = 0; k < cs->representatives.size(); ++k) {
        StableElement e = nrd_class(normalize_coprime(cs->representatives[k]), G);
        fd.fibers[e].push_back(k);
        fd.masses[e] += Rational(1, cs->unit_indices[k]);
    }
    return fd;
}

bool is_hermite(Order const& O) { return eichler_mass(O) * O.unit_index() == StableClassGroup(O).order(); }

bool has_cancellation(Order const& O)
{
    return static_cast<std::int64_t>(class_set(O)->representatives.size()) == StableClassGroup(O).order();
}

Rational stably_free_mass(Order const& O) { return eichler_mass(O) / StableClassGroup(O).order(); }

Rational trivial_fiber_mass(Order const& O)
{
    auto fd = fiber_decomposition(O);
    StableElement id = StableClassGroup(O).identity();
    auto it = fd.masses.find(id);
    return it == fd.masses.end() ? Rational(0) : it->second;
}

namespace {

std::int64_t count_units_mod_p(Order const& O, std::int64_t p)
{
    ResidueRing R(O, p);
    std::int64_t count = 0;
    modp::Vec x(4, 0);
    for (std::int64_t n = 0; n < p * p * p * p; ++n) {
        std::int64_t t = n;
        for (int k = 0; k < 4; ++k) {
            x[k] = t % p;
            t /= p;
        }
        if (R.nrd(x) != 0)
            ++count;
    }
    return count;
}

/* m with [O' : O] = p^m; throws unless O lies in O' with p-power index. */
int p_index_exponent(Order const& O, Order const& Op, std::int64_t p)
{
    if (!Op.lattice().contains(O.lattice()))
        throw QuatError(ErrorCode::NotASuperorder, "second order does not contain the first");
    Rational idx = index(O.lattice(), Op.lattice());
    Integer n = idx.get_num();
    int m = 0;
    while (n % p == 0) {
        n /= p;
        ++m;
    }
    if (n != 1 || idx.get_den() != 1)
        throw QuatError(ErrorCode::OrdersDifferElsewhere, "index " + to_string(idx) + " is not a power of " + std::to_string(p));
    return m;
}

}  // namespace

Integer local_unit_index_units(Order const& O, Order const& Op, std::int64_t p)
{
    int m = p_index_exponent(O, Op, p);
    Integer num = Integer(count_units_mod_p(Op, p));
    for (int k = 0; k < m; ++k)
        num *= p;
    Integer den = count_units_mod_p(O, p);
    if (num % den != 0)
        throw QuatError(ErrorCode::NoConvergence, "unit count ratio is not integral");
    return num / den;
}

Rational local_unit_index_closed(Order const& O, Order const& Op, std::int64_t p)
{
    int m = p_index_exponent(O, Op, p);
    if (!is_p_maximal(Op, p))
        throw QuatError(ErrorCode::NotASuperorder, "closed form needs an overorder maximal at p");
    Rational v = lambda(O, p);
    for (int k = 0; k < m; ++k)
        v *= p;
    if (O.algebra().discriminant() % p == 0)
        v /= 1 - Rational(1, p);
    return v;
}

Integer local_unit_index(Order const& O, Order const& Op, std::int64_t p)
{
    Integer a = local_unit_index_units(O, Op, p);
    if (is_p_maximal(Op, p) && Rational(a) != local_unit_index_closed(O, Op, p))
        throw QuatError(ErrorCode::NoConvergence, "local unit index paths disagree");
    return a;
}

namespace {

Order closure_at(Order X, std::int64_t p)
{
    for (;;) {
        Order Y = radical_idealizer(X, p);
        if (Y == X)
            return X;
        X = Y;
    }
}

}  // namespace

Order hereditary_closure(Order const& O)
{
    Order X = O;
    for (auto p : O.level_primes())
        X = closure_at(X, p);
    return X;
}

Rational inverse_tamagawa(Order const& O)
{
    Order H = hereditary_closure(O);
    std::int64_t D = O.algebra().discriminant();
    Rational tau = Rational(1, 24);
    for (auto p : H.level_primes())
        tau *= D % p == 0 ? p - 1 : p + 1;
    for (auto p : O.level_primes()) {
        Order Hp = closure_at(O, p);
        if (Hp == O)
            continue;
        Integer units = local_unit_index_units(O, Hp, p);
        tau *= Rational(units) / local_norm_group(O, p).index;
    }
    return tau;
}

bool vigneras_check(Order const& O) { return 2 * O.unit_index() * inverse_tamagawa(O) == 1; }

}  // namespace quatorder
