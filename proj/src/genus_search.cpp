#include "quatorder/genus_search.hpp"

#include <algorithm>
#include <atomic>
#include <tuple>
#include <thread>

namespace quatorder {

std::vector<std::int64_t> discriminant_candidates()
{
    std::int64_t limit = discriminant_threshold();
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p - 1 <= limit; p = next_prime(p))
        primes.push_back(p);
    std::vector<std::int64_t> out;
    std::size_t n = primes.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::int64_t D = 1, phi = 1;
        int count = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1u << k)) {
                D *= primes[k];
                phi *= primes[k] - 1;
                ++count;
            }
        if (count % 2 == 1 && phi <= limit)
            out.push_back(D);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PiBracket pi_bracket() { return {Rational(314159, 100000), Rational(314160, 100000)}; }

std::int64_t discriminant_threshold()
{
    PiBracket pi = pi_bracket();
    if (!(2 * pi.lo * pi.lo > 19 && 2 * pi.hi * pi.hi < 20))
        throw QuatError(ErrorCode::NoConvergence, "pi bracket does not isolate 2 pi^2");
    return 19;
}

FieldGate field_gate()
{
    PiBracket pi = pi_bracket();
    // (2^(2/3) pi^(4/3))^3 = 4 pi^4
    Rational lo4 = pi.lo * pi.lo * pi.lo * pi.lo;
    FieldGate g;
    g.passes = 4 * lo4 >= 1;
    g.bound_exceeds_seven = 4 * lo4 > 343;
    g.fields = {"Q"};
    return g;
}

Order maximal_order(QuatAlgebra const& A)
{
    Integer da = A.a().get_den(), db = A.b().get_den();
    Order X = Order::from_basis(A, {QuatElement(1, 0, 0, 0), QuatElement(0, Rational(da), 0, 0), QuatElement(0, 0, Rational(db), 0),
                                    QuatElement(0, 0, 0, Rational(da * db))});
    std::int64_t D = A.discriminant();
    for (int step = 0; step < 256; ++step) {
        if (X.reduced_discriminant() == D)
            return X;
        for (auto p : X.level_primes()) {
            if (is_p_maximal(X, p))
                continue;
            Order Y = radical_idealizer(X, p);
            if (Y == X) {
                auto sup = index_p_superorders(X, p);
                if (sup.empty())
                    throw QuatError(ErrorCode::NoConvergence, "no superorder at " + std::to_string(p));
                Y = sup.front();
            }
            X = Y;
            break;
        }
    }
    throw QuatError(ErrorCode::NoConvergence, "maximal order chain did not terminate");
}

std::vector<Order> maximal_order_types(QuatAlgebra const& A) { return type_number(maximal_order(A)).representatives; }

int hermite_index_bound(Order const& Op, std::int64_t p)
{
    Integer U = Integer(p == 2 ? 4 : 2) * Op.unit_index();
    bool ramified = Op.algebra().discriminant() % p == 0;
    std::vector<Rational> lambdas{1 + Rational(1, p), 1 - Rational(1, p), 1 - Rational(1, p * p)};
    int best = 0;
    Integer pm = 1;
    for (int m = 1;; ++m) {
        pm *= p;
        if (pm / p > U)
            break;
        for (auto const& l : lambdas) {
            Rational v = Rational(pm) * l;
            if (ramified)
                v /= 1 - Rational(1, p);
            if (v.get_den() == 1 && U % v.get_num() == 0)
                best = m;
        }
    }
    return best;
}

std::vector<Order> p_subrings(Order const& Op, std::int64_t p)
{
    ResidueRing R(Op, p);
    modp::Vec one = R.one();
    std::size_t pivot = 0;
    while (one[pivot] == 0)
        ++pivot;
    std::vector<Order> out;
    for (auto const& W : modp::all_subspaces(3, p)) {
        if (W.size() == 3)
            continue;
        std::vector<modp::Vec> rows{one};
        for (auto const& w : W) {
            modp::Vec v(4, 0);
            for (std::size_t k = 0, c = 0; k < 4; ++k)
                if (k != pivot)
                    v[k] = w[c++];
            rows.push_back(v);
        }
        auto basis = modp::rref(rows, p);
        bool closed = true;
        for (std::size_t a = 0; a < basis.size() && closed; ++a)
            for (std::size_t b = 0; b < basis.size() && closed; ++b)
                closed = modp::in_span(basis, R.mul(basis[a], basis[b]), p);
        if (!closed)
            continue;
        std::vector<QuatElement> lifts;
        for (auto const& b : Op.basis())
            lifts.push_back(Rational(p) * b);
        for (auto const& v : basis) {
            QuatElement y;
            for (int t = 0; t < 4; ++t)
                y = y + Rational(v[t]) * Op.basis()[t];
            lifts.push_back(y);
        }
        out.push_back(Order::from_lattice(Op.algebra(), Lattice4::from_rows(lifts)));
    }
    std::sort(out.begin(), out.end(), [](Order const& x, Order const& y) { return x.lattice() < y.lattice(); });
    return out;
}

bool is_child(Order const& O, Order const& Op, std::int64_t p)
{
    if (radical_idealizer(O, p) == Op)
        return true;
    std::int64_t D = Op.algebra().discriminant();
    return D % p != 0 && is_p_maximal(Op, p) && valuation(O.reduced_discriminant(), p) == 1 &&
           index(O.lattice(), Op.lattice()) == p;
}

std::vector<Order> p_suborders(Order const& Op, std::int64_t p)
{
    std::vector<Order> out;
    for (auto const& O : p_subrings(Op, p)) {
        if (!is_child(O, Op, p))
            continue;
        bool dup = false;
        for (auto const& X : out)
            if (order_isomorphic(X, O)) {
                dup = true;
                break;
            }
        if (!dup)
            out.push_back(O);
    }
    return out;
}

bool record_less(ClassificationRecord const& x, ClassificationRecord const& y)
{
    auto key = [](ClassificationRecord const& r) {
        return std::make_tuple(r.D, r.N, static_cast<int>(r.label), r.symbols, r.cls, r.stcl, r.t, r.unit_index);
    };
    auto kx = key(x), ky = key(y);
    if (kx != ky)
        return kx < ky;
    return x.order.lattice() < y.order.lattice();
}

ClassificationRecord make_record(Order const& O)
{
    ClassificationRecord r(O);
    r.D = O.algebra().discriminant();
    r.N = O.level();
    r.label = strongest_label(O);
    for (auto p : O.level_primes())
        r.symbols[p] = O.symbol(p);
    r.cls = static_cast<std::int64_t>(class_set(O)->representatives.size());
    r.stcl = stable_class_group(O).order();
    r.cancellation = r.cls == r.stcl;
    r.t = static_cast<std::int64_t>(type_number(O).count);
    r.unit_index = O.unit_index();
    r.mass = eichler_mass(O);
    return r;
}

void SearchAudit::merge(SearchAudit const& o)
{
    encountered += o.encountered;
    edges += o.edges;
    mass_checks += o.mass_checks;
    fiber_checks += o.fiber_checks;
    vigneras_checks += o.vigneras_checks;
    genus_checks += o.genus_checks;
    unit_index_checks += o.unit_index_checks;
    stcl_checks += o.stcl_checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

namespace {

std::string describe(Order const& O)
{
    std::string s = "D=" + std::to_string(O.algebra().discriminant()) + " N=" + std::to_string(O.level()) + " basis";
    for (auto const& b : O.basis())
        s += " " + to_string(b);
    return s;
}

void audit_order(Order const& O, bool hermite, SearchAudit& a)
{
    ++a.encountered;
    auto fail = [&](std::string const& check, std::string const& why) { a.failures.push_back({check, why + " for " + describe(O)}); };

    auto cs = class_set(O);
    Rational sum = 0;
    for (auto const& I : cs->representatives)
        sum += Rational(1, I.left_order().unit_index());
    if (sum != mass_formula(O))
        fail("mass", "class set mass " + to_string(sum) + " != " + to_string(mass_formula(O)));
    ++a.mass_checks;

    auto fd = fiber_decomposition(O);
    StableClassGroup G(O);
    Rational expect = eichler_mass(O) / G.order();
    if (static_cast<std::int64_t>(fd.fibers.size()) != G.order())
        fail("fibers", "stable class map is not surjective");
    for (auto const& [e, m] : fd.masses)
        if (m != expect)
            fail("fibers", "fiber mass " + to_string(m) + " != " + to_string(expect));
    auto triv = fd.fibers.find(G.identity());
    bool single = triv != fd.fibers.end() && triv->second.size() == 1;
    if (single != hermite)
        fail("fibers", "Hermite test disagrees with the trivial fiber");
    ++a.fiber_checks;

    if (vigneras_check(O) != hermite)
        fail("vigneras", "criterion disagrees with the Hermite test");
    ++a.vigneras_checks;

    auto t = type_number(O);
    if (t.count >= 2) {
        Rational m0 = trivial_fiber_mass(t.representatives[0]);
        for (std::size_t k = 1; k < t.count; ++k)
            if (trivial_fiber_mass(t.representatives[k]) != m0)
                fail("genus", "trivial fiber masses differ across types");
        ++a.genus_checks;
    }
}

void audit_edge(Order const& C, Order const& X, Order const& R, std::int64_t p, bool hermite_child, bool hermite_parent, SearchAudit& a)
{
    ++a.edges;
    auto fail = [&](std::string const& check, std::string const& why) { a.failures.push_back({check, why + " for " + describe(C)}); };
    if (hermite_child && !hermite_parent)
        fail("edge", "Hermite child of a non-Hermite parent");
    if (valuation(C.reduced_discriminant(), p) <= valuation(X.reduced_discriminant(), p) ||
        C.reduced_discriminant() / X.reduced_discriminant() != index(C.lattice(), X.lattice()))
        fail("edge", "discriminant ratio differs from the index");

    Integer cx = local_unit_index_units(C, X, p);
    Integer xr = local_unit_index_units(X, R, p);
    Integer cr = local_unit_index_units(C, R, p);
    if (cr != cx * xr)
        fail("unit-index", "local indices are not multiplicative");
    if (Rational(cr) != local_unit_index_closed(C, R, p))
        fail("unit-index", "unit count " + to_string(cr) + " != closed form " + to_string(local_unit_index_closed(C, R, p)));
    if (is_p_maximal(X, p) && Rational(cx) != local_unit_index_closed(C, X, p))
        fail("unit-index", "unit count differs from closed form on the edge");
    ++a.unit_index_checks;

    std::int64_t sc = StableClassGroup(C).order(), sx = StableClassGroup(X).order();
    if (sc % sx != 0 || local_norm_group(C, p).index % (sc / sx) != 0)
        fail("stcl", "|StCl| ratio " + std::to_string(sc) + "/" + std::to_string(sx) + " does not divide the local index");
    ++a.stcl_checks;
}

}  // namespace

DiscriminantResult search_discriminant(std::int64_t D, SearchOptions const& opts)
{
    DiscriminantResult res;
    res.D = D;
    QuatAlgebra A = algebra_with_discriminant(D);
    std::int64_t max_u = 1;

    auto seen = [&](Order const& O) {
        for (auto const& n : res.nodes)
            if (n.order.level() == O.level() && order_isomorphic(n.order, O))
                return true;
        return false;
    };

    for (auto const& T : maximal_order_types(A)) {
        SearchNode n{T, std::nullopt, std::nullopt, {}, is_hermite(T), std::nullopt};
        if (!n.hermite)
            n.pruned = PruneReason::NotHermite;
        if (opts.audit)
            audit_order(T, n.hermite, res.audit);
        else
            ++res.audit.encountered;
        if (n.hermite) {
            res.hermite_nodes.push_back(res.nodes.size());
            max_u = std::max(max_u, T.unit_index());
        }
        res.nodes.push_back(std::move(n));
    }

    for (std::int64_t p = 2; p <= 4 * max_u + 1; p = next_prime(p)) {
        std::vector<std::size_t> roots = res.hermite_nodes;
        for (auto r : roots) {
            Order R = res.nodes[r].order;
            if (!is_p_maximal(R, p))
                continue;
            int bound = hermite_index_bound(R, p);
            if (bound == 0)
                continue;
            Integer U = Integer(p == 2 ? 4 : 2) * R.unit_index();
            int vr = valuation(R.reduced_discriminant(), p);
            std::vector<std::size_t> frontier{r};
            while (!frontier.empty()) {
                std::size_t x = frontier.front();
                frontier.erase(frontier.begin());
                Order X = res.nodes[x].order;
                for (auto const& C : p_subrings(X, p)) {
                    if (valuation(C.reduced_discriminant(), p) - vr > bound)
                        continue;
                    if (!is_child(C, X, p))
                        continue;
                    if (U % local_unit_index_units(C, R, p) != 0)
                        continue;
                    if (seen(C))
                        continue;
                    SearchNode n{C, x, r, res.nodes[x].prime_trail, is_hermite(C), std::nullopt};
                    n.prime_trail.push_back(p);
                    if (!n.hermite)
                        n.pruned = PruneReason::NotHermite;
                    if (opts.audit) {
                        audit_order(C, n.hermite, res.audit);
                        audit_edge(C, X, R, p, n.hermite, res.nodes[x].hermite, res.audit);
                    } else {
                        ++res.audit.encountered;
                    }
                    std::size_t id = res.nodes.size();
                    bool expand = n.hermite || !opts.hermite_prune;
                    if (n.hermite)
                        res.hermite_nodes.push_back(id);
                    res.nodes.push_back(std::move(n));
                    if (expand)
                        frontier.push_back(id);
                }
            }
        }
    }
    return res;
}

Classification classify(std::vector<std::int64_t> const& discriminants, SearchOptions const& opts)
{
    std::vector<DiscriminantResult> results(discriminants.size());
    std::vector<std::vector<ClassificationRecord>> recs(discriminants.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < discriminants.size();) {
            results[k] = search_discriminant(discriminants[k], opts);
            for (auto id : results[k].hermite_nodes)
                recs[k].push_back(make_record(results[k].nodes[id].order));
        }
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(discriminants.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < jobs; ++k)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    Classification c;
    for (std::size_t k = 0; k < discriminants.size(); ++k) {
        c.audit.merge(results[k].audit);
        c.records.insert(c.records.end(), recs[k].begin(), recs[k].end());
    }
    c.encountered = c.audit.encountered;
    std::sort(c.records.begin(), c.records.end(), record_less);
    return c;
}

Classification classify_all_z(SearchOptions const& opts) { return classify(discriminant_candidates(), opts); }

}  // namespace quatorder
