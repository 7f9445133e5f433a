#include "quatorder/order.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace quatorder {

std::string symbol_string(EichlerSymbol s)
{
    switch (s) {
    case EichlerSymbol::Star:
        return "*";
    case EichlerSymbol::One:
        return "1";
    case EichlerSymbol::Zero:
        return "0";
    case EichlerSymbol::MinusOne:
        return "-1";
    }
    return "?";
}

namespace {
const char* const label_names[] = {"maximal", "hereditary", "Eichler", "residually inert", "residually quadratic", "Bass", "Gorenstein", "non-Gorenstein"};
}

std::string label_string(OrderLabel l) { return label_names[static_cast<int>(l)]; }

std::optional<OrderLabel> parse_label(std::string const& s)
{
    for (int i = 0; i < 8; ++i)
        if (s == label_names[i])
            return static_cast<OrderLabel>(i);
    return std::nullopt;
}

struct Order::State {
    State(QuatAlgebra a, Lattice4 l) : A(std::move(a)), L(std::move(l)) {}

    QuatAlgebra A;
    Lattice4 L;
    Structure c;
    std::array<std::array<Integer, 4>, 4> q;
    std::array<Integer, 4> t;
    Integer N;
    std::int64_t level = 0;
    std::vector<std::int64_t> level_primes;

    std::mutex mu;
    std::optional<std::int64_t> units;
    std::map<std::int64_t, EichlerSymbol> symbols;
    std::optional<bool> gorenstein, bass, eichler;
};

namespace {

std::array<Integer, 4> integral_coords(Lattice4 const& L, QuatElement const& x)
{
    auto r = L.coords(x);
    std::array<Integer, 4> out;
    for (int i = 0; i < 4; ++i) {
        if (r[i].get_den() != 1)
            throw QuatError(ErrorCode::NotAnOrder, "element " + to_string(x) + " outside the order");
        out[i] = r[i].get_num();
    }
    return out;
}

std::shared_ptr<Order::State> build_state(QuatAlgebra const& A, Lattice4 const& L)
{
    auto s = std::make_shared<Order::State>(A, L);
    auto const& b = L.basis();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s->c[i][j] = integral_coords(L, A.mul(b[i], b[j]));
    for (int i = 0; i < 4; ++i) {
        s->t[i] = A.trd(b[i]).get_num();
        for (int j = 0; j < 4; ++j) {
            Rational v = i == j ? A.nrd(b[i]) : (i < j ? A.trace_pairing(b[i], b[j]) : Rational(0));
            if (v.get_den() != 1)
                throw QuatError(ErrorCode::NotAnOrder, "non-integral norm form");
            s->q[i][j] = v.get_num();
        }
    }
    Rational det = abs(determinant(gram_matrix(L, A)));
    Integer root;
    if (det.get_den() != 1 || !is_square(det.get_num(), &root))
        throw QuatError(ErrorCode::NonSquareDiscriminant, "Gram determinant " + to_string(det) + " is not a square");
    s->N = root;
    s->level = to_i64(root);
    for (auto const& [p, e] : factor(s->level))
        s->level_primes.push_back(p);
    return s;
}

void check_closed(QuatAlgebra const& A, Lattice4 const& L, std::vector<QuatElement> const& gens)
{
    if (!L.contains(QuatElement::scalar(1)))
        throw QuatError(ErrorCode::MissingOne, "1 is not in the lattice");
    for (auto const& x : gens)
        for (auto const& y : gens) {
            QuatElement xy = A.mul(x, y);
            if (!L.contains(xy))
                throw NotAnOrderError(x, y, "(" + to_string(x) + ") * (" + to_string(y) + ") = " + to_string(xy) + " is not in the lattice");
        }
}

}  // namespace

Order Order::from_basis(QuatAlgebra const& A, std::vector<QuatElement> const& rows)
{
    Lattice4 L = Lattice4::from_rows(rows);
    check_closed(A, L, rows);
    return Order(build_state(A, L));
}

Order Order::from_lattice(QuatAlgebra const& A, Lattice4 const& L)
{
    check_closed(A, L, std::vector<QuatElement>(L.basis().begin(), L.basis().end()));
    return Order(build_state(A, L));
}

QuatAlgebra const& Order::algebra() const { return s_->A; }
Lattice4 const& Order::lattice() const { return s_->L; }
Structure const& Order::structure() const { return s_->c; }
std::array<std::array<Integer, 4>, 4> const& Order::norm_form() const { return s_->q; }
std::array<Integer, 4> const& Order::traces() const { return s_->t; }
Integer const& Order::reduced_discriminant() const { return s_->N; }
std::int64_t Order::level() const { return s_->level; }
std::vector<std::int64_t> const& Order::level_primes() const { return s_->level_primes; }

std::array<Integer, 4> Order::coords(QuatElement const& x) const { return integral_coords(s_->L, x); }

bool Order::operator==(Order const& o) const { return s_ == o.s_ || (s_->L == o.s_->L && s_->A == o.s_->A); }

std::int64_t Order::unit_index() const
{
    {
        std::lock_guard lock(s_->mu);
        if (s_->units)
            return *s_->units;
    }
    std::int64_t u = static_cast<std::int64_t>(short_vectors(s_->L, s_->A, 1).size() / 2);
    std::lock_guard lock(s_->mu);
    s_->units = u;
    return u;
}

EichlerSymbol Order::symbol(std::int64_t p) const
{
    {
        std::lock_guard lock(s_->mu);
        auto it = s_->symbols.find(p);
        if (it != s_->symbols.end())
            return it->second;
    }
    EichlerSymbol e = eichler_symbol(*this, p);
    std::lock_guard lock(s_->mu);
    s_->symbols[p] = e;
    return e;
}

namespace {

template <typename F>
bool cached_flag(std::mutex& mu, std::optional<bool>& slot, F&& compute)
{
    {
        std::lock_guard lock(mu);
        if (slot)
            return *slot;
    }
    bool v = compute();
    std::lock_guard lock(mu);
    slot = v;
    return v;
}

}  // namespace

bool Order::gorenstein() const { return cached_flag(s_->mu, s_->gorenstein, [&] { return is_gorenstein(*this); }); }
bool Order::bass() const { return cached_flag(s_->mu, s_->bass, [&] { return is_bass(*this); }); }
bool Order::eichler() const { return cached_flag(s_->mu, s_->eichler, [&] { return is_eichler(*this); }); }

Order order_from_basis(QuatAlgebra const& A, std::vector<QuatElement> const& rows) { return Order::from_basis(A, rows); }
Integer reduced_discriminant(Order const& O) { return O.reduced_discriminant(); }
std::int64_t unit_index(Order const& O) { return O.unit_index(); }

/* ---- residue rings ---- */

ResidueRing::ResidueRing(Order const& O, std::int64_t m) : m_(m), one_(4, 0)
{
    Integer mm = m;
    auto red = [&](Integer const& x) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
        return r.get_si();
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                c_[i][j][k] = red(O.structure()[i][j][k]);
    for (int i = 0; i < 4; ++i) {
        t_[i] = red(O.traces()[i]);
        for (int j = 0; j < 4; ++j)
            q_[i][j] = red(O.norm_form()[i][j]);
    }
    auto one = O.coords(QuatElement::scalar(1));
    for (int i = 0; i < 4; ++i)
        one_[i] = red(one[i]);
}

modp::Vec ResidueRing::mul(modp::Vec const& x, modp::Vec const& y) const
{
    modp::Vec out(4, 0);
    for (int i = 0; i < 4; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < 4; ++j) {
            if (y[j] == 0)
                continue;
            std::int64_t s = x[i] * y[j] % m_;
            for (int k = 0; k < 4; ++k)
                out[k] = (out[k] + s * c_[i][j][k]) % m_;
        }
    }
    for (auto& v : out)
        v = modp::reduce(v, m_);
    return out;
}

std::int64_t ResidueRing::nrd(modp::Vec const& x) const
{
    std::int64_t s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            s = (s + q_[i][j] * (x[i] * x[j] % m_)) % m_;
    return modp::reduce(s, m_);
}

std::int64_t ResidueRing::trd(modp::Vec const& x) const
{
    std::int64_t s = 0;
    for (int i = 0; i < 4; ++i)
        s = (s + t_[i] * x[i]) % m_;
    return modp::reduce(s, m_);
}

/* ---- radical ---- */

namespace {

const modp::Vec unit_vec[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};

/* Is the right ideal xA nilpotent?  Checked through powers of the subspace. */
bool right_ideal_nilpotent(ResidueRing const& R, modp::Vec const& x, std::int64_t p)
{
    std::vector<modp::Vec> s;
    for (auto const& e : unit_vec)
        s.push_back(R.mul(x, e));
    s = modp::rref(s, p);
    std::vector<modp::Vec> power = s;
    for (int k = 1; k < 4 && !power.empty(); ++k) {
        std::vector<modp::Vec> next;
        for (auto const& u : power)
            for (auto const& v : s)
                next.push_back(R.mul(u, v));
        power = modp::rref(next, p);
    }
    return power.empty();
}

}  // namespace

std::vector<modp::Vec> radical_mod_p_bruteforce(Order const& O, std::int64_t p)
{
    ResidueRing R(O, p);
    std::vector<modp::Vec> found;
    for (auto const& x : modp::projective_points(4, p)) {
        if (R.trd(x) != 0 || R.nrd(x) != 0)
            continue;
        if (right_ideal_nilpotent(R, x, p))
            found.push_back(x);
    }
    return modp::rref(found, p);
}

namespace {

using IMat = std::array<std::array<std::int64_t, 4>, 4>;

IMat mat_mul(IMat const& a, IMat const& b, std::int64_t m)
{
    IMat c{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j)
                c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % m;
    return c;
}

}  // namespace

std::vector<modp::Vec> radical_mod_p_trace(Order const& O, std::int64_t p)
{
    /* Lifting trace method: I_0 = A, I_i = {x in I_{i-1} : g_i(x y) = 0 for all y}
     * where g_i(a) = Tr(L_a^{p^i}) / p^i mod p, i = 0 .. floor(log_p 4). */
    int l = 0;
    for (std::int64_t pw = p; pw <= 4; pw *= p)
        ++l;
    std::int64_t mod = 1;
    for (int i = 0; i <= l; ++i)
        mod *= p;
    ResidueRing R(O, mod);
    auto left_matrix = [&](modp::Vec const& x) {
        IMat m{};
        for (int k = 0; k < 4; ++k) {
            auto col = R.mul(x, unit_vec[k]);
            for (int r = 0; r < 4; ++r)
                m[r][k] = col[r];
        }
        return m;
    };
    auto g = [&](modp::Vec const& a, int i) {
        std::int64_t pi = 1;
        for (int k = 0; k < i; ++k)
            pi *= p;
        IMat base = left_matrix(a), pw = base;
        for (std::int64_t e = 1; e < pi; ++e)
            pw = mat_mul(pw, base, mod);
        std::int64_t tr = 0;
        for (int r = 0; r < 4; ++r)
            tr = (tr + pw[r][r]) % mod;
        tr = modp::reduce(tr, mod);
        if (tr % pi != 0)
            throw QuatError(ErrorCode::NoConvergence, "trace not divisible in radical computation");
        return modp::reduce(tr / pi, p);
    };
    std::vector<modp::Vec> basis(unit_vec, unit_vec + 4);
    for (int i = 0; i <= l; ++i) {
        std::vector<modp::Vec> m;
        for (auto const& e : basis) {
            modp::Vec row;
            for (auto const& y : unit_vec)
                row.push_back(g(R.mul(e, y), i));
            m.push_back(row);
        }
        auto ker = modp::left_kernel(m, basis.size(), p);
        std::vector<modp::Vec> next;
        for (auto const& cvec : ker) {
            modp::Vec v(4, 0);
            for (std::size_t r = 0; r < basis.size(); ++r)
                for (int k = 0; k < 4; ++k)
                    v[k] = (v[k] + cvec[r] * basis[r][k]) % p;
            next.push_back(v);
        }
        basis = modp::rref(next, p);
    }
    return basis;
}

std::vector<modp::Vec> radical_mod_p(Order const& O, std::int64_t p)
{
    std::int64_t size = p * p * p * p;
    if (p < 2000 && size <= 2000000)
        return radical_mod_p_bruteforce(O, p);
    return radical_mod_p_trace(O, p);
}

Lattice4 radical_lattice(Order const& O, std::int64_t p)
{
    std::vector<QuatElement> rows;
    auto const& b = O.basis();
    for (auto const& x : b)
        rows.push_back(Rational(p) * x);
    for (auto const& v : radical_mod_p(O, p)) {
        QuatElement x;
        for (int k = 0; k < 4; ++k)
            x = x + Rational(v[k]) * b[k];
        rows.push_back(x);
    }
    return Lattice4::from_rows(rows);
}

EichlerSymbol eichler_symbol(Order const& O, std::int64_t p)
{
    auto rad = radical_mod_p(O, p);
    std::size_t qd = 4 - rad.size();
    if (qd == 4)
        return EichlerSymbol::Star;
    if (qd == 1)
        return EichlerSymbol::Zero;
    if (qd != 2)
        throw QuatError(ErrorCode::UnexpectedSemisimpleQuotient, "semisimple quotient of dimension " + std::to_string(qd));
    std::vector<modp::Vec> full = rad, comp;
    for (auto const& e : unit_vec) {
        auto ech = modp::rref(full, p);
        if (!modp::in_span(ech, e, p)) {
            full.push_back(e);
            comp.push_back(e);
        }
    }
    ResidueRing R(O, p);
    auto quotient_coords = [&](modp::Vec const& x) {
        auto c = modp::solve_coords(full, x, p);
        return modp::Vec(c.begin() + static_cast<std::ptrdiff_t>(rad.size()), c.end());
    };
    int idempotents = 0;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b) {
            modp::Vec x(4, 0);
            for (int k = 0; k < 4; ++k)
                x[k] = (a * comp[0][k] + b * comp[1][k]) % p;
            if (quotient_coords(R.mul(x, x)) == modp::Vec{a, b})
                ++idempotents;
        }
    if (idempotents == 4)
        return EichlerSymbol::One;
    if (idempotents == 2)
        return EichlerSymbol::MinusOne;
    throw QuatError(ErrorCode::UnexpectedSemisimpleQuotient, "two-dimensional quotient with " + std::to_string(idempotents) + " idempotents");
}

Rational lambda(Order const& O, std::int64_t p)
{
    Rational q(p);
    switch (O.symbol(p)) {
    case EichlerSymbol::One:
        return 1 + 1 / q;
    case EichlerSymbol::MinusOne:
        return 1 - 1 / q;
    case EichlerSymbol::Zero:
        return 1 - 1 / (q * q);
    case EichlerSymbol::Star:
        break;
    }
    return 1;
}

Rational mass_formula(Order const& O)
{
    Rational m = Rational(O.reduced_discriminant()) / 12;
    for (auto p : O.level_primes())
        m *= lambda(O, p);
    return m;
}

Order radical_idealizer(Order const& O, std::int64_t p)
{
    Lattice4 stab = two_sided_stabilizer(radical_lattice(O, p), O.algebra());
    if (stab == O.lattice())
        return O;
    return Order::from_lattice(O.algebra(), stab);
}

/* ---- labels ---- */

bool is_gorenstein(Order const& O)
{
    QuatAlgebra const& A = O.algebra();
    Lattice4 dual = dual_lattice(O.lattice(), A);
    Lattice4 ol = left_stabilizer(dual, A), orr = right_stabilizer(dual, A);
    if (ol != O.lattice() || orr != O.lattice())
        return false;
    Rational q = norm_generator(dual, A);
    Lattice4 c = conj_lattice(dual, A);
    return lattice_mul(dual, c, A) == ol.scaled(q) && lattice_mul(c, dual, A) == orr.scaled(q);
}

bool is_bass(Order const& O)
{
    for (auto p : O.level_primes()) {
        Order X = O;
        for (;;) {
            if (!X.gorenstein())
                return false;
            Order Y = radical_idealizer(X, p);
            if (Y == X)
                break;
            X = Y;
        }
    }
    return true;
}

bool is_hereditary(Order const& O)
{
    for (auto const& [p, e] : factor(O.level()))
        if (e > 1)
            return false;
    return true;
}

bool is_maximal(Order const& O) { return O.level() == O.algebra().discriminant(); }

bool is_p_maximal(Order const& O, std::int64_t p)
{
    return valuation(O.reduced_discriminant(), p) == valuation(Integer(O.algebra().discriminant()), p);
}

std::vector<Order> index_p_superorders(Order const& O, std::int64_t p)
{
    ResidueRing R(O, p), R2(O, p * p);
    std::vector<Order> out;
    auto const& b = O.basis();
    for (auto const& v : modp::projective_points(4, p)) {
        if (R.trd(v) != 0 || R2.nrd(v) != 0)
            continue;
        std::size_t lead = 0;
        while (v[lead] == 0)
            ++lead;
        auto on_line = [&](modp::Vec const& w) {
            std::int64_t lam = w[lead];
            for (int k = 0; k < 4; ++k)
                if (modp::reduce(w[k] - lam * v[k], p) != 0)
                    return false;
            return true;
        };
        bool ok = true;
        for (auto const& e : unit_vec)
            if (!on_line(R.mul(v, e)) || !on_line(R.mul(e, v))) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        QuatElement x;
        for (int k = 0; k < 4; ++k)
            x = x + make_rational(v[k], p) * b[k];
        std::vector<QuatElement> rows(b.begin(), b.end());
        rows.push_back(x);
        out.push_back(Order::from_lattice(O.algebra(), Lattice4::from_rows(rows)));
    }
    return out;
}

std::vector<Order> p_maximal_overorders(Order const& O, std::int64_t p)
{
    std::set<Lattice4> seen{O.lattice()};
    std::vector<Order> frontier{O}, out;
    while (!frontier.empty()) {
        std::vector<Order> next;
        for (auto const& X : frontier) {
            if (is_p_maximal(X, p)) {
                out.push_back(X);
                continue;
            }
            for (auto& Y : index_p_superorders(X, p))
                if (seen.insert(Y.lattice()).second)
                    next.push_back(Y);
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](Order const& a, Order const& b) { return a.lattice() < b.lattice(); });
    return out;
}

bool is_eichler(Order const& O)
{
    std::int64_t D = O.algebra().discriminant();
    for (auto p : O.level_primes()) {
        int v = valuation(O.reduced_discriminant(), p);
        if (D % p == 0) {
            if (v != 1)
                return false;
            continue;
        }
        if (O.symbol(p) != EichlerSymbol::One)
            return false;
        if (v == 1)
            continue;
        auto maxes = p_maximal_overorders(O, p);
        bool found = false;
        for (std::size_t a = 0; a < maxes.size() && !found; ++a)
            for (std::size_t c = a + 1; c < maxes.size() && !found; ++c)
                found = lattice_intersect(maxes[a].lattice(), maxes[c].lattice()) == O.lattice();
        if (!found)
            return false;
    }
    return true;
}

std::vector<OrderLabel> order_labels(Order const& O)
{
    std::vector<OrderLabel> out;
    bool inert = true, quadratic = true;
    for (auto p : O.level_primes()) {
        EichlerSymbol s = O.symbol(p);
        inert = inert && (s == EichlerSymbol::Star || s == EichlerSymbol::MinusOne);
        quadratic = quadratic && s != EichlerSymbol::Zero;
    }
    if (is_maximal(O))
        out.push_back(OrderLabel::Maximal);
    if (is_hereditary(O))
        out.push_back(OrderLabel::Hereditary);
    if (O.eichler())
        out.push_back(OrderLabel::Eichler);
    if (inert)
        out.push_back(OrderLabel::ResiduallyInert);
    if (quadratic)
        out.push_back(OrderLabel::ResiduallyQuadratic);
    if (O.bass())
        out.push_back(OrderLabel::Bass);
    bool gor = O.gorenstein();
    out.push_back(gor ? OrderLabel::Gorenstein : OrderLabel::NonGorenstein);
    return out;
}

OrderLabel strongest_label(Order const& O) { return order_labels(O).front(); }

/* ---- isomorphism ---- */

std::vector<QuatElement> trace_zero_basis(Order const& O)
{
    std::vector<Integer> t(O.traces().begin(), O.traces().end());
    IntMat k = integer_kernel(t);
    std::vector<QuatElement> out;
    for (std::size_t r = 0; r < k.rows(); ++r) {
        QuatElement x;
        for (int c = 0; c < 4; ++c)
            if (k(r, c) != 0)
                x = x + Rational(k(r, c)) * O.basis()[c];
        out.push_back(x);
    }
    return out;
}

Order conjugate_order(Order const& O, QuatElement const& alpha)
{
    QuatAlgebra const& A = O.algebra();
    Lattice4 L = left_multiply(alpha, right_multiply(O.lattice(), A.inverse(alpha), A), A);
    return Order::from_lattice(A, L);
}

namespace {

Rational pure_det(std::array<QuatElement, 3> const& v)
{
    RatMat m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            m(r, c) = v[r][c + 1];
    return determinant(m);
}

}  // namespace

IsomorphismResult order_isomorphism_full(Order const& O, Order const& Op)
{
    QuatAlgebra const& A = O.algebra();
    if (A != Op.algebra())
        throw QuatError(ErrorCode::DifferentAlgebras, "orders live in different algebras");
    auto b0 = trace_zero_basis(O), b1 = trace_zero_basis(Op);
    GramMatrix g0 = gram_matrix(b0, A);
    if (determinant(g0) != determinant(gram_matrix(b1, A)))
        return {};
    LllResult red = lll_reduce(g0);
    std::array<QuatElement, 3> v;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (red.transform(r, c) != 0)
                v[r] = v[r] + Rational(red.transform(r, c)) * b0[c];
    std::array<std::vector<QuatElement>, 3> cands;
    for (std::size_t r = 0; r < 3; ++r) {
        cands[r] = short_vectors(b1, A, red.gram(r, r) / 2);
        if (cands[r].empty())
            return {};
    }
    Rational dv = pure_det(v);
    std::array<QuatElement, 3> w;
    IsomorphismResult result;

    auto try_isometry = [&]() -> bool {
        if (sgn(pure_det(w)) != sgn(dv))
            return false;
        RatMat m(12, 4);
        QuatElement unit[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t e = 0; e < 4; ++e) {
                QuatElement col = A.mul(unit[e], v[i]) - A.mul(w[i], unit[e]);
                for (std::size_t r = 0; r < 4; ++r)
                    m(4 * i + r, e) = col[r];
            }
        RatMat ker = kernel(m);
        if (ker.cols() == 0)
            return false;
        QuatElement alpha(ker(0, 0), ker(1, 0), ker(2, 0), ker(3, 0));
        Order C = conjugate_order(O, alpha);
        if (C.lattice() != Op.lattice())
            return false;
        result.isomorphic = true;
        result.conjugator = alpha;
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == 3)
            return try_isometry();
        for (auto const& cand : cands[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = A.trace_pairing(cand, w[j]) == red.gram(i, j);
            if (!ok)
                continue;
            w[i] = cand;
            if (search(i + 1))
                return true;
        }
        return false;
    };
    search(0);
    return result;
}

IsomorphismResult order_isomorphism(Order const& O, Order const& Op)
{
    if (O.algebra() != Op.algebra())
        throw QuatError(ErrorCode::DifferentAlgebras, "orders live in different algebras");
    if (O.lattice() == Op.lattice())
        return {true, QuatElement::scalar(1)};
    if (O.reduced_discriminant() != Op.reduced_discriminant())
        return {};
    for (auto p : O.level_primes())
        if (O.symbol(p) != Op.symbol(p))
            return {};
    if (O.unit_index() != Op.unit_index())
        return {};
    return order_isomorphism_full(O, Op);
}

bool order_isomorphic(Order const& O, Order const& Op) { return order_isomorphism(O, Op).isomorphic; }

}  // namespace quatorder
