#include "quatorder/lattice.hpp"
#include "quatorder/error.hpp"

#include <algorithm>

namespace quatorder {

namespace {

QuatElement row_element(IntMat const& h, std::size_t r, Integer const& d)
{
    QuatElement e;
    for (std::size_t c = 0; c < 4; ++c)
        e[c] = make_rational(h(r, c), d);
    return e;
}

Lattice4 from_rat_rows(RatMat const& rows)
{
    std::vector<QuatElement> v(rows.rows());
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (std::size_t c = 0; c < 4; ++c)
            v[r][c] = rows(r, c);
    return Lattice4::from_rows(v);
}

/* Dual with respect to the coordinate dot product. */
Lattice4 standard_dual(Lattice4 const& L)
{
    return from_rat_rows(inverse(L.basis_matrix()).transpose());
}

Lattice4 stabilizer_impl(Lattice4 const& L, QuatAlgebra const& A, bool left, bool right)
{
    std::vector<QuatElement> cols;
    cols.reserve(32);
    QuatElement unit[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    auto add = [&](bool on_left) {
        for (auto const& l : L.basis()) {
            std::array<std::array<Rational, 4>, 4> v;
            for (int e = 0; e < 4; ++e)
                v[e] = L.coords(on_left ? A.mul(unit[e], l) : A.mul(l, unit[e]));
            for (int n = 0; n < 4; ++n)
                cols.push_back({v[0][n], v[1][n], v[2][n], v[3][n]});
        }
    };
    if (left)
        add(true);
    if (right)
        add(false);
    return standard_dual(Lattice4::from_rows(cols));
}

}  // namespace

Lattice4 Lattice4::from_rows(std::vector<QuatElement> const& rows)
{
    Integer d0 = 1;
    for (auto const& r : rows)
        for (auto const& x : r.c)
            d0 = lcm(d0, Integer(x.get_den()));
    IntMat m(rows.size(), 4);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < 4; ++c)
            m(r, c) = rows[r][c].get_num() * (d0 / rows[r][c].get_den());
    IntMat h = hermite_normal_form(m);
    if (h.rows() != 4)
        throw QuatError(ErrorCode::RankDeficient, "generators span rank " + std::to_string(h.rows()));
    Integer g = d0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            g = gcd(g, h(r, c));
    Lattice4 L;
    L.denom_ = d0 / g;
    L.hnf_ = IntMat(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            L.hnf_(r, c) = h(r, c) / g;
    for (std::size_t r = 0; r < 4; ++r)
        L.basis_[r] = row_element(L.hnf_, r, L.denom_);
    return L;
}

Lattice4 Lattice4::standard()
{
    return from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

RatMat Lattice4::basis_matrix() const
{
    RatMat m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            m(r, c) = basis_[r][c];
    return m;
}

Rational Lattice4::det() const
{
    Integer p = 1;
    for (std::size_t r = 0; r < 4; ++r)
        p *= hnf_(r, r);
    Integer d4 = denom_ * denom_ * denom_ * denom_;
    return make_rational(p, d4);
}

std::array<Rational, 4> Lattice4::coords(QuatElement const& x) const
{
    /* c * H = d * x with H upper triangular. */
    std::array<Rational, 4> c;
    for (std::size_t j = 0; j < 4; ++j) {
        Rational acc = x[j] * denom_;
        for (std::size_t r = 0; r < j; ++r)
            if (hnf_(r, j) != 0)
                acc -= c[r] * hnf_(r, j);
        c[j] = acc / hnf_(j, j);
    }
    return c;
}

bool Lattice4::contains(QuatElement const& x) const
{
    for (auto const& c : coords(x))
        if (c.get_den() != 1)
            return false;
    return true;
}

bool Lattice4::contains(Lattice4 const& other) const
{
    for (auto const& b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

Lattice4 Lattice4::scaled(Rational const& s) const
{
    std::vector<QuatElement> rows;
    for (auto const& b : basis_)
        rows.push_back(s * b);
    return from_rows(rows);
}

std::strong_ordering Lattice4::operator<=>(Lattice4 const& o) const
{
    if (auto c = cmp(denom_, o.denom_); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (auto k = cmp(hnf_(r, c), o.hnf_(r, c)); k != 0)
                return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Lattice4 canonicalize(std::vector<QuatElement> const& rows) { return Lattice4::from_rows(rows); }

Lattice4 lattice_sum(Lattice4 const& L, Lattice4 const& M)
{
    std::vector<QuatElement> rows(L.basis().begin(), L.basis().end());
    rows.insert(rows.end(), M.basis().begin(), M.basis().end());
    return Lattice4::from_rows(rows);
}

Lattice4 lattice_intersect(Lattice4 const& L, Lattice4 const& M)
{
    return standard_dual(lattice_sum(standard_dual(L), standard_dual(M)));
}

Lattice4 lattice_mul(Lattice4 const& L, Lattice4 const& M, QuatAlgebra const& A)
{
    std::vector<QuatElement> rows;
    rows.reserve(16);
    for (auto const& x : L.basis())
        for (auto const& y : M.basis())
            rows.push_back(A.mul(x, y));
    return Lattice4::from_rows(rows);
}

Lattice4 conj_lattice(Lattice4 const& L, QuatAlgebra const& A)
{
    std::vector<QuatElement> rows;
    for (auto const& x : L.basis())
        rows.push_back(A.conj(x));
    return Lattice4::from_rows(rows);
}

Lattice4 left_multiply(QuatElement const& alpha, Lattice4 const& L, QuatAlgebra const& A)
{
    std::vector<QuatElement> rows;
    for (auto const& x : L.basis())
        rows.push_back(A.mul(alpha, x));
    return Lattice4::from_rows(rows);
}

Lattice4 right_multiply(Lattice4 const& L, QuatElement const& alpha, QuatAlgebra const& A)
{
    std::vector<QuatElement> rows;
    for (auto const& x : L.basis())
        rows.push_back(A.mul(x, alpha));
    return Lattice4::from_rows(rows);
}

Lattice4 dual_lattice(Lattice4 const& L, QuatAlgebra const& A)
{
    /* x W B^T integral, W the diagonal matrix of the trace pairing. */
    RatMat binv_t = inverse(L.basis_matrix()).transpose();
    Rational w[4] = {2, -2 * A.a(), -2 * A.b(), 2 * A.a() * A.b()};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            binv_t(r, c) /= w[c];
    return from_rat_rows(binv_t);
}

Rational index(Lattice4 const& L, Lattice4 const& M) { return L.det() / M.det(); }

Rational norm_generator(Lattice4 const& L, QuatAlgebra const& A)
{
    std::vector<Rational> vals;
    auto const& b = L.basis();
    for (std::size_t i = 0; i < 4; ++i) {
        vals.push_back(A.nrd(b[i]));
        for (std::size_t j = i + 1; j < 4; ++j)
            vals.push_back(A.trace_pairing(b[i], b[j]));
    }
    return rational_gcd(vals);
}

Lattice4 left_stabilizer(Lattice4 const& L, QuatAlgebra const& A) { return stabilizer_impl(L, A, true, false); }
Lattice4 right_stabilizer(Lattice4 const& L, QuatAlgebra const& A) { return stabilizer_impl(L, A, false, true); }
Lattice4 two_sided_stabilizer(Lattice4 const& L, QuatAlgebra const& A) { return stabilizer_impl(L, A, true, true); }

GramMatrix gram_matrix(std::vector<QuatElement> const& basis, QuatAlgebra const& A)
{
    std::size_t n = basis.size();
    GramMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g(i, j) = A.trace_pairing(basis[i], basis[j]);
            g(j, i) = g(i, j);
        }
    return g;
}

GramMatrix gram_matrix(Lattice4 const& L, QuatAlgebra const& A)
{
    return gram_matrix(std::vector<QuatElement>(L.basis().begin(), L.basis().end()), A);
}

namespace {

struct Gso {
    RatMat mu;
    std::vector<Rational> b;
};

Gso gram_schmidt(GramMatrix const& g)
{
    std::size_t n = g.rows();
    Gso s{RatMat(n, n), std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rational acc = g(i, j);
            for (std::size_t k = 0; k < j; ++k)
                acc -= s.mu(j, k) * s.mu(i, k) * s.b[k];
            s.mu(i, j) = acc / s.b[j];
        }
        Rational acc = g(i, i);
        for (std::size_t k = 0; k < i; ++k)
            acc -= s.mu(i, k) * s.mu(i, k) * s.b[k];
        s.b[i] = acc;
    }
    return s;
}

Integer round_nearest(Rational const& q) { return floor_of(q + Rational(1, 2)); }

}  // namespace

LllResult lll_reduce(GramMatrix const& gram)
{
    std::size_t n = gram.rows();
    IntMat u = IntMat::identity(n);
    GramMatrix g = gram;
    RatMat g0 = gram;
    const Rational delta(99, 100);
    auto recompute = [&] {
        RatMat ur = to_rational(u);
        g = ur * g0 * ur.transpose();
    };
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            Gso s = gram_schmidt(g);
            Integer q = round_nearest(s.mu(k, jj));
            if (q != 0) {
                for (std::size_t c = 0; c < n; ++c)
                    u(k, c) -= q * u(jj, c);
                recompute();
            }
        }
        Gso s = gram_schmidt(g);
        if (s.b[k] >= (delta - s.mu(k, k - 1) * s.mu(k, k - 1)) * s.b[k - 1]) {
            ++k;
        } else {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(u(k, c), u(k - 1, c));
            recompute();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return {g, u};
}

Rational form_value(GramMatrix const& gram, std::vector<Integer> const& x)
{
    Rational acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        acc += gram(i, i) * x[i] * x[i];
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[j] != 0)
                acc += 2 * gram(i, j) * x[i] * x[j];
    }
    return acc / 2;
}

namespace {

/* Calls visit(y, value) for every y with y A y^T <= bound, where A = G/2. */
template <typename Visit>
void fincke_pohst(GramMatrix const& gram, Rational const& bound, Visit&& visit)
{
    std::size_t n = gram.rows();
    if (bound < 0)
        return;
    /* LDL^T of the quadratic form matrix. */
    RatMat l(n, n);
    std::vector<Rational> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = gram(i, i) / 2;
        for (std::size_t k = 0; k < i; ++k)
            acc -= l(i, k) * l(i, k) * d[k];
        d[i] = acc;
        if (d[i] <= 0)
            throw QuatError(ErrorCode::InvalidAlgebra, "form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational a = gram(j, i) / 2;
            for (std::size_t k = 0; k < i; ++k)
                a -= l(j, k) * l(i, k) * d[k];
            l(j, i) = a / d[i];
        }
    }
    std::vector<Integer> y(n);
    std::vector<Rational> remaining(n + 1);
    remaining[n] = bound;
    auto rec = [&](auto&& self, std::size_t level) -> void {
        std::size_t i = level - 1;
        Rational center = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (y[j] != 0)
                center -= l(j, i) * y[j];
        Rational r = remaining[level];
        Integer s = isqrt_floor(floor_of(r / d[i]));
        Integer lo = floor_of(center) - s - 1, hi = ceil_of(center) + s + 1;
        for (Integer x = lo; x <= hi; ++x) {
            Rational t = Rational(x) - center;
            Rational used = d[i] * t * t;
            if (used > r)
                continue;
            y[i] = x;
            remaining[i] = r - used;
            if (i == 0)
                visit(y, bound - remaining[0]);
            else
                self(self, i);
        }
        y[i] = 0;
    };
    if (n > 0)
        rec(rec, n);
}

std::vector<Integer> apply_transform(std::vector<Integer> const& y, IntMat const& u)
{
    std::vector<Integer> x(u.cols());
    for (std::size_t r = 0; r < y.size(); ++r)
        if (y[r] != 0)
            for (std::size_t c = 0; c < u.cols(); ++c)
                x[c] += y[r] * u(r, c);
    return x;
}

bool reverse_lex_less(std::vector<Integer> const& a, std::vector<Integer> const& b)
{
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

}  // namespace

std::vector<std::vector<Integer>> form_vectors(GramMatrix const& gram, Rational const& bound, bool exact)
{
    LllResult red = lll_reduce(gram);
    std::vector<std::vector<Integer>> out;
    fincke_pohst(red.gram, bound, [&](std::vector<Integer> const& y, Rational const& value) {
        if (!exact || value == bound)
            out.push_back(apply_transform(y, red.transform));
    });
    std::sort(out.begin(), out.end(), reverse_lex_less);
    return out;
}

std::optional<IntMat> form_isometry(GramMatrix const& G, GramMatrix const& H)
{
    std::size_t n = G.rows();
    if (H.rows() != n || determinant(G) != determinant(H))
        return std::nullopt;
    std::vector<std::vector<std::vector<Integer>>> cands(n);
    for (std::size_t i = 0; i < n; ++i) {
        cands[i] = form_vectors(G, H(i, i) / 2, true);
        if (cands[i].empty())
            return std::nullopt;
    }
    auto pair = [&](std::vector<Integer> const& x, std::vector<Integer> const& y) {
        Rational s = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                s += G(a, b) * x[a] * y[b];
        return s;
    };
    std::vector<std::vector<Integer>> rows(n);
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == n)
            return true;
        for (auto const& x : cands[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = pair(x, rows[j]) == H(i, j);
            if (!ok)
                continue;
            rows[i] = x;
            if (search(i + 1))
                return true;
        }
        return false;
    };
    if (!search(0))
        return std::nullopt;
    IntMat U(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            U(i, j) = rows[i][j];
    return U;
}

std::vector<std::size_t> theta_counts(GramMatrix const& gram, Rational const& step, int terms)
{
    LllResult red = lll_reduce(gram);
    std::vector<std::size_t> counts(terms + 1, 0);
    fincke_pohst(red.gram, step * terms, [&](std::vector<Integer> const&, Rational const& value) {
        Rational k = value / step;
        if (k.get_den() == 1)
            ++counts[k.get_num().get_ui()];
    });
    return counts;
}

std::vector<QuatElement> short_vectors(std::vector<QuatElement> const& basis, QuatAlgebra const& A, Rational const& t)
{
    std::vector<QuatElement> out;
    for (auto const& x : form_vectors(gram_matrix(basis, A), t, true)) {
        QuatElement v;
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (x[r] != 0)
                v = v + Rational(x[r]) * basis[r];
        out.push_back(v);
    }
    return out;
}

std::vector<QuatElement> short_vectors(Lattice4 const& L, QuatAlgebra const& A, Rational const& t)
{
    return short_vectors(std::vector<QuatElement>(L.basis().begin(), L.basis().end()), A, t);
}

IntMat integer_kernel(std::vector<Integer> const& v)
{
    std::size_t n = v.size();
    IntMat m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, 0) = v[i];
        m(i, i + 1) = 1;
    }
    IntMat h = hermite_normal_form(m);
    std::size_t first = (h.rows() > 0 && h(0, 0) != 0) ? 1 : 0;
    IntMat k(h.rows() - first, n);
    for (std::size_t r = first; r < h.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            k(r - first, c) = h(r, c + 1);
    return k;
}

}  // namespace quatorder
