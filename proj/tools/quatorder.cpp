#include "golden_table.hpp"
#include "quatorder/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

using namespace quatorder;

namespace {

enum Exit { Ok = 0, Failed = 1, Parse = 2, Semantic = 3, Precondition = 4 };

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_info(Order const& O, std::ostream& out)
{
    auto cs = class_set(O);
    auto t = type_number(O);
    StableClassGroup G(O);
    out << "D: " << O.algebra().discriminant() << "\n";
    out << "N: " << O.level() << "\n";
    out << "symbols:";
    for (auto p : O.level_primes())
        out << " " << p << ":" << symbol_string(O.symbol(p));
    out << "\n";
    out << "unit_index: " << O.unit_index() << "\n";
    out << "labels:";
    auto labels = order_labels(O);
    for (std::size_t k = 0; k < labels.size(); ++k)
        out << (k ? ", " : " ") << label_string(labels[k]);
    out << "\n";
    out << "mass: " << to_string(eichler_mass(O)) << "\n";
    out << "cls: " << cs->representatives.size() << "\n";
    out << "stcl: " << G.order() << "\n";
    out << "t: " << t.count << "\n";
    out << "hermite: " << yes_no(is_hermite(O)) << "\n";
    out << "cancellation: " << yes_no(has_cancellation(O)) << "\n";
}

Json ideal_json(RightIdeal const& I)
{
    Json basis = Json::array();
    for (auto const& b : I.lattice().basis()) {
        Json row = Json::array();
        for (int k = 0; k < 4; ++k)
            row.push_back(to_string(b[k]));
        basis.push_back(row);
    }
    return Json{{"nrd", to_string(I.norm())}, {"left_unit_index", I.left_order().unit_index()}, {"basis", basis}};
}

Json class_set_json(Order const& O, std::optional<std::int64_t> prime)
{
    auto cs = class_set(O);
    Json reps = Json::array();
    for (auto const& I : cs->representatives)
        reps.push_back(ideal_json(normalize_coprime(I)));
    Json out{{"order", order_to_json(O)}, {"mass", to_string(cs->mass)}, {"size", cs->representatives.size()}, {"representatives", reps}};
    if (prime) {
        Json nb = Json::array();
        for (auto const& I : prime_neighbors(O, *prime))
            nb.push_back(ideal_json(I));
        out["neighbors"] = {{"p", *prime}, {"ideals", nb}};
    }
    return out;
}

Json stclgrp_json(Order const& O)
{
    StableClassGroup G(O);
    Json locals = Json::array();
    for (auto const& L : G.locals()) {
        Json members = Json::array();
        for (std::int64_t u = 1; u < L.modulus; ++u)
            if (L.contains(u) && u % L.p != 0)
                members.push_back(u);
        locals.push_back({{"p", L.p},
                          {"modulus", L.modulus},
                          {"index", L.index},
                          {"norm_group", members},
                          {"coset_generators", L.coset_generators}});
    }
    return Json{{"order", G.order()}, {"structure", "elementary abelian 2-group"}, {"rank", G.rank()}, {"locals", locals}};
}

Json suborders_json(Order const& Op, std::int64_t p, std::int64_t max_index)
{
    std::set<Lattice4> seen{Op.lattice()};
    std::vector<Order> frontier{Op}, found;
    while (!frontier.empty()) {
        Order X = frontier.back();
        frontier.pop_back();
        for (auto const& C : p_subrings(X, p)) {
            Rational idx = index(C.lattice(), Op.lattice());
            if (idx > max_index || !seen.insert(C.lattice()).second)
                continue;
            found.push_back(C);
            frontier.push_back(C);
        }
    }
    std::sort(found.begin(), found.end(), [&](Order const& a, Order const& b) {
        Rational ia = index(a.lattice(), Op.lattice()), ib = index(b.lattice(), Op.lattice());
        return ia != ib ? ia < ib : a.lattice() < b.lattice();
    });
    Json list = Json::array();
    for (auto const& C : found)
        list.push_back({{"index", to_string(index(C.lattice(), Op.lattice()))},
                        {"N", C.level()},
                        {"label", label_string(strongest_label(C))},
                        {"order", order_to_json(C)}});
    return Json{{"p", p}, {"max_index", max_index}, {"suborders", list}};
}

Order parks_order()
{
    Json doc = {{"algebra", {{"a", "-3"}, {"b", "-1"}}},
                {"basis", {{"1", "0", "0", "0"}, {"1/2", "3/2", "0", "0"}, {"0", "0", "3", "0"}, {"0", "0", "3/2", "1/2"}}}};
    return order_from_json(doc);
}

int report_suite(std::string const& suite, Classification const& c, std::vector<std::string> const& checks, std::size_t count)
{
    for (auto const& f : c.audit.failures)
        if (std::find(checks.begin(), checks.end(), f.check) != checks.end()) {
            std::cout << "FAIL " << suite << ": " << f.check << ": " << f.detail << "\n";
            return Failed;
        }
    std::cout << "PASS " << suite << ": " << count << " checks over " << c.encountered << " encountered orders\n";
    return Ok;
}

int run_verify(std::string const& suite, unsigned jobs)
{
    SearchOptions opts;
    opts.jobs = jobs;
    if (suite == "table") {
        opts.audit = false;
        auto c = classify_all_z(opts);
        std::multiset<TableRow> got, want;
        for (auto const& r : c.records)
            got.insert(table_row(r));
        for (auto const& r : table_rows_from_json(Json::parse(golden_table_json)))
            want.insert(r);
        for (auto const& r : want)
            if (got.count(r) < want.count(r)) {
                std::cout << "FAIL table: missing " << describe_row(r) << "\n";
                return Failed;
            }
        for (auto const& r : got)
            if (want.count(r) < got.count(r)) {
                std::cout << "FAIL table: unexpected " << describe_row(r) << "\n";
                return Failed;
            }
        std::cout << "PASS table: " << got.size() << " rows match\n";
        return Ok;
    }
    if (suite == "fibers") {
        auto fd = fiber_decomposition(parks_order());
        auto sizes = fd.sizes();
        std::sort(sizes.begin(), sizes.end());
        if (sizes != std::vector<std::size_t>{1, 3}) {
            std::cout << "FAIL fibers: Parks order fiber sizes differ from {1,3}\n";
            return Failed;
        }
    }
    auto c = classify_all_z(opts);
    if (suite == "masses")
        return report_suite(suite, c, {"mass"}, c.audit.mass_checks);
    if (suite == "vigneras")
        return report_suite(suite, c, {"vigneras"}, c.audit.vigneras_checks);
    return report_suite(suite, c, {"fibers", "genus"}, c.audit.fiber_checks + c.audit.genus_checks);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants and classification of definite quaternion orders over Z"};
    app.require_subcommand(1);
    unsigned jobs = 1;
    std::string order_file, out_file, format = "text", suite;
    std::int64_t prime = 0, max_index = 0;

    auto* info = app.add_subcommand("info", "Print invariants of an order");
    info->add_option("--order", order_file, "Order JSON file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Run the Hermite classification over Z");
    classify_cmd->add_option("--out", out_file, "Output file (default stdout)");
    classify_cmd->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
    classify_cmd->add_option("--jobs", jobs, "Worker threads")->envname("QUATORDER_JOBS")->check(CLI::PositiveNumber);

    auto* classset = app.add_subcommand("classset", "Dump the right class set");
    classset->add_option("--order", order_file, "Order JSON file")->required();
    auto* classset_prime = classset->add_option("--prime", prime, "Also list the prime neighbors at this prime");

    auto* stclgrp = app.add_subcommand("stclgrp", "Dump the stable class group");
    stclgrp->add_option("--order", order_file, "Order JSON file")->required();

    auto* suborders = app.add_subcommand("suborders", "List suborders at a prime up to an index");
    suborders->add_option("--order", order_file, "Order JSON file")->required();
    suborders->add_option("--prime", prime, "Prime")->required()->check(CLI::PositiveNumber);
    suborders->add_option("--max-index", max_index, "Largest index")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("--suite", suite, "masses, vigneras, fibers or table")
        ->required()
        ->check(CLI::IsMember({"masses", "vigneras", "fibers", "table"}));
    verify->add_option("--jobs", jobs, "Worker threads")->envname("QUATORDER_JOBS")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Parse;
    }

    try {
        if (info->parsed()) {
            print_info(read_order_file(order_file), std::cout);
        } else if (classify_cmd->parsed()) {
            SearchOptions opts;
            opts.jobs = jobs;
            opts.audit = false;
            auto c = classify_all_z(opts);
            std::string text = render_records(c.records, parse_table_format(format));
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_file, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write " << out_file << "\n";
                    return Parse;
                }
                out << text;
            }
        } else if (classset->parsed()) {
            Order O = read_order_file(order_file);
            std::optional<std::int64_t> p;
            if (classset_prime->count() > 0)
                p = prime;
            std::cout << class_set_json(O, p).dump(1) << "\n";
        } else if (stclgrp->parsed()) {
            std::cout << stclgrp_json(read_order_file(order_file)).dump(1) << "\n";
        } else if (suborders->parsed()) {
            if (!is_prime(prime)) {
                std::cerr << "error: " << prime << " is not prime\n";
                return Precondition;
            }
            std::cout << suborders_json(read_order_file(order_file), prime, max_index).dump(1) << "\n";
        } else if (verify->parsed()) {
            return run_verify(suite, jobs);
        }
    } catch (NotAnOrderError const& e) {
        std::cerr << "error: " << e.what() << "\nwitness: (" << to_string(e.x()) << ") * (" << to_string(e.y()) << ")\n";
        return Semantic;
    } catch (QuatError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::ParseError:
            return Parse;
        case ErrorCode::PrimeDividesDiscriminant:
            return Precondition;
        default:
            return Semantic;
        }
    }
    return Ok;
}
