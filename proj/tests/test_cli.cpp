#include "doctest.h"
#include "orders_fixture.hpp"
#include "quatorder/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace quatorder;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run_cli(std::string const& args)
{
    std::string cmd = std::string(QUAT_CLI) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0)
        out.append(buf, n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string fixture_path(char const* name) { return std::string(QUAT_FIXTURES) + "/" + name; }

std::size_t count_lines(std::string const& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("order json round trip")
{
    for (auto name : {"hurwitz.json", "lipschitz.json", "parks.json", "non_gorenstein.json", "gorenstein64.json"}) {
        Order O = read_order_file(fixture_path(name));
        CHECK(order_from_json(order_to_json(O)) == O);
        CHECK(order_from_json(Json::parse(order_to_json(O).dump())) == O);
    }
    CHECK(read_order_file(fixture_path("parks.json")) == fixture::parks());
    CHECK(read_order_file(fixture_path("hurwitz.json")) == fixture::hurwitz());

    auto code = [](auto f) {
        try {
            f();
        } catch (QuatError const& e) {
            return e.code();
        }
        return ErrorCode::NoConvergence;
    };
    CHECK(code([] { read_order_file(fixture_path("malformed.json")); }) == ErrorCode::ParseError);
    CHECK(code([] { read_order_file(fixture_path("nonexistent.json")); }) == ErrorCode::ParseError);
    CHECK(code([] { order_from_json(Json{{"algebra", {{"a", -1}, {"b", "-1"}}}, {"basis", Json::array()}}); }) ==
          ErrorCode::ParseError);
    CHECK(code([] { read_order_file(fixture_path("missing_one.json")); }) == ErrorCode::MissingOne);
    CHECK_THROWS_AS(read_order_file(fixture_path("not_closed.json")), NotAnOrderError);
}

TEST_CASE("record round trip and rendering")
{
    SearchOptions opts;
    opts.audit = false;
    auto c = classify({5, 7}, opts);
    REQUIRE(c.records.size() == 6);
    for (auto const& r : c.records) {
        auto back = record_from_json(Json::parse(record_to_json(r).dump()));
        CHECK(same_record(back, r));
    }
    std::string json = render_records(c.records, TableFormat::Json);
    std::istringstream lines(json);
    std::string line;
    std::size_t k = 0;
    while (std::getline(lines, line))
        CHECK(same_record(record_from_json(Json::parse(line)), c.records[k++]));
    CHECK(k == 6);

    std::string csv = render_records(c.records, TableFormat::Csv);
    CHECK(csv.rfind("D,N,label,c,s2,s3,s5,s11,cls,stcl,t,unit_index,mass\n", 0) == 0);
    CHECK(count_lines(csv) == 7);
    std::string text = render_records(c.records, TableFormat::Text);
    CHECK(text.substr(0, text.find('\n')).find("#Cls") != std::string::npos);
    CHECK(count_lines(text) == 7);
    CHECK(parse_table_format("csv") == TableFormat::Csv);
    CHECK_THROWS_AS(parse_table_format("xml"), QuatError);
}

TEST_CASE("golden table fixture")
{
    auto rows = table_rows_from_json(parse_json_file(fixture_path("golden_z_table.json")));
    CHECK(rows.size() == 40);
    std::map<std::int64_t, int> per_d;
    int no_canc = 0;
    for (auto const& r : rows) {
        ++per_d[r.D];
        no_canc += !r.c;
        for (auto const& [p, s] : r.symbols)
            CHECK(r.N % p == 0);
    }
    CHECK(no_canc == 1);
    CHECK(per_d == std::map<std::int64_t, int>{{2, 21}, {3, 12}, {5, 4}, {7, 2}, {13, 1}});
}

TEST_CASE("cli info")
{
    auto r = run_cli("info --order " + fixture_path("parks.json"));
    CHECK(r.status == 0);
    for (auto s : {"N: 27\n", "cls: 4\n", "stcl: 2\n", "t: 2\n", "hermite: yes\n", "cancellation: no\n", "3:0"})
        CHECK(r.out.find(s) != std::string::npos);
    r = run_cli("info --order " + fixture_path("hurwitz.json"));
    CHECK(r.status == 0);
    CHECK(r.out.find("maximal") != std::string::npos);
    CHECK(r.out.find("cls: 1\n") != std::string::npos);
}

TEST_CASE("cli exit codes")
{
    CHECK(run_cli("info --order " + fixture_path("missing_one.json")).status == 3);
    CHECK(run_cli("info --order " + fixture_path("not_closed.json")).status == 3);
    CHECK(run_cli("info --order " + fixture_path("malformed.json")).status == 2);
    CHECK(run_cli("info --order " + fixture_path("nonexistent.json")).status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("classify --format xml").status == 2);
    CHECK(run_cli("classset --order " + fixture_path("parks.json") + " --prime 3").status == 4);
    CHECK(run_cli("suborders --order " + fixture_path("hurwitz.json") + " --prime 4 --max-index 4").status == 4);
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("cli dumps")
{
    auto r = run_cli("classset --order " + fixture_path("parks.json") + " --prime 2");
    REQUIRE(r.status == 0);
    Json cs = Json::parse(r.out);
    CHECK(cs["size"] == 4);
    CHECK(cs["representatives"].size() == 4);
    for (auto const& I : cs["representatives"]) {
        Rational n = parse_rational(I["nrd"].get<std::string>());
        CHECK(n.get_den() == 1);
        CHECK(n.get_num() % 3 != 0);
    }
    CHECK(cs["neighbors"]["ideals"].size() == 3);

    r = run_cli("stclgrp --order " + fixture_path("gorenstein64.json"));
    REQUIRE(r.status == 0);
    Json g = Json::parse(r.out);
    CHECK(g["order"] == 4);
    CHECK(g["rank"] == 2);

    r = run_cli("suborders --order " + fixture_path("hurwitz.json") + " --prime 2 --max-index 2");
    REQUIRE(r.status == 0);
    bool lip = false;
    Json subs = Json::parse(r.out);
    for (auto const& s : subs["suborders"])
        lip = lip || order_isomorphic(order_from_json(s["order"]), fixture::lipschitz());
    CHECK(lip);
}

TEST_CASE("cli classify")
{
    auto text = run_cli("classify --format text");
    REQUIRE(text.status == 0);
    CHECK(count_lines(text.out) == 41);
    std::string header = text.out.substr(0, text.out.find('\n'));
    std::istringstream hs(header);
    std::vector<std::string> cols{std::istream_iterator<std::string>(hs), std::istream_iterator<std::string>()};
    CHECK(cols == std::vector<std::string>{"D", "N", "label", "c", "2", "3", "5", "11", "#Cls", "#StCl", "t"});

    auto one = run_cli("classify --format json --jobs 1");
    auto two = run_cli("classify --format json --jobs 2");
    CHECK(one.status == 0);
    CHECK(one.out == two.out);
    std::istringstream lines(one.out);
    std::string line;
    int rows = 0, no_canc = 0;
    while (std::getline(lines, line)) {
        auto rec = record_from_json(Json::parse(line));
        ++rows;
        if (!rec.cancellation) {
            ++no_canc;
            CHECK(rec.N == 27);
        }
    }
    CHECK(rows == 40);
    CHECK(no_canc == 1);

    std::string out = std::string(QUAT_BINARY_DIR) + "/classify_test.csv";
    CHECK(run_cli("classify --format csv --out " + out).status == 0);
    std::ifstream in(out);
    std::string csv((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(count_lines(csv) == 41);
    CHECK(csv.find('\r') == std::string::npos);
}
