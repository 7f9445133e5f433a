#include "quatorder/serialize.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace quatorder {

namespace {

[[noreturn]] void parse_fail(std::string const& what) { throw QuatError(ErrorCode::ParseError, what); }

Rational rational_field(Json const& v, std::string const& where)
{
    if (!v.is_string())
        parse_fail(where + " must be a string rational");
    try {
        return parse_rational(v.get<std::string>());
    } catch (QuatError const&) {
        throw;
    } catch (std::exception const& e) {
        parse_fail(where + ": " + e.what());
    }
}

std::int64_t int_field(Json const& doc, char const* key)
{
    if (!doc.contains(key) || !doc[key].is_number_integer())
        parse_fail(std::string("missing integer field ") + key);
    return doc[key].get<std::int64_t>();
}

std::optional<EichlerSymbol> parse_symbol(std::string const& s)
{
    for (auto e : {EichlerSymbol::Star, EichlerSymbol::One, EichlerSymbol::Zero, EichlerSymbol::MinusOne})
        if (symbol_string(e) == s)
            return e;
    return std::nullopt;
}

}  // namespace

Json order_to_json(Order const& O)
{
    Json basis = Json::array();
    for (auto const& b : O.basis()) {
        Json row = Json::array();
        for (int k = 0; k < 4; ++k)
            row.push_back(to_string(b[k]));
        basis.push_back(row);
    }
    return Json{{"algebra", {{"a", to_string(O.algebra().a())}, {"b", to_string(O.algebra().b())}}}, {"basis", basis}};
}

Order order_from_json(Json const& doc)
{
    if (!doc.is_object() || !doc.contains("algebra") || !doc.contains("basis"))
        parse_fail("order document needs \"algebra\" and \"basis\"");
    Json const& alg = doc["algebra"];
    if (!alg.is_object() || !alg.contains("a") || !alg.contains("b"))
        parse_fail("algebra needs \"a\" and \"b\"");
    Rational a = rational_field(alg["a"], "algebra.a");
    Rational b = rational_field(alg["b"], "algebra.b");
    Json const& basis = doc["basis"];
    if (!basis.is_array() || basis.size() != 4)
        parse_fail("basis must be a list of 4 elements");
    std::vector<QuatElement> rows;
    for (std::size_t r = 0; r < 4; ++r) {
        if (!basis[r].is_array() || basis[r].size() != 4)
            parse_fail("basis element " + std::to_string(r) + " must have 4 coordinates");
        std::array<Rational, 4> c;
        for (std::size_t k = 0; k < 4; ++k)
            c[k] = rational_field(basis[r][k], "basis[" + std::to_string(r) + "][" + std::to_string(k) + "]");
        rows.emplace_back(c[0], c[1], c[2], c[3]);
    }
    QuatAlgebra A(a, b);
    return Order::from_basis(A, rows);
}

Json parse_json_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        parse_fail("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (Json::parse_error const& e) {
        parse_fail(path + ": " + e.what());
    }
}

Order read_order_file(std::string const& path) { return order_from_json(parse_json_file(path)); }

Json record_to_json(ClassificationRecord const& r)
{
    Json syms = Json::object();
    for (auto const& [p, s] : r.symbols)
        syms[std::to_string(p)] = symbol_string(s);
    return Json{{"D", r.D},
                {"N", r.N},
                {"label", label_string(r.label)},
                {"c", r.cancellation},
                {"symbols", syms},
                {"cls", r.cls},
                {"stcl", r.stcl},
                {"t", r.t},
                {"unit_index", r.unit_index},
                {"mass", to_string(r.mass)},
                {"order", order_to_json(r.order)}};
}

ClassificationRecord record_from_json(Json const& doc)
{
    if (!doc.is_object() || !doc.contains("order"))
        parse_fail("record needs an \"order\"");
    ClassificationRecord r(order_from_json(doc["order"]));
    r.D = int_field(doc, "D");
    r.N = int_field(doc, "N");
    if (!doc.contains("label") || !doc["label"].is_string())
        parse_fail("record needs a label");
    auto label = parse_label(doc["label"].get<std::string>());
    if (!label)
        parse_fail("unknown label " + doc["label"].get<std::string>());
    r.label = *label;
    if (!doc.contains("c") || !doc["c"].is_boolean())
        parse_fail("record needs a boolean \"c\"");
    r.cancellation = doc["c"].get<bool>();
    if (!doc.contains("symbols") || !doc["symbols"].is_object())
        parse_fail("record needs a symbol map");
    for (auto const& [k, v] : doc["symbols"].items()) {
        auto s = v.is_string() ? parse_symbol(v.get<std::string>()) : std::nullopt;
        if (!s)
            parse_fail("bad symbol at " + k);
        try {
            r.symbols[std::stoll(k)] = *s;
        } catch (std::exception const&) {
            parse_fail("bad prime key " + k);
        }
    }
    r.cls = int_field(doc, "cls");
    r.stcl = int_field(doc, "stcl");
    r.t = int_field(doc, "t");
    r.unit_index = int_field(doc, "unit_index");
    if (!doc.contains("mass"))
        parse_fail("record needs a mass");
    r.mass = rational_field(doc["mass"], "mass");
    return r;
}

bool same_record(ClassificationRecord const& x, ClassificationRecord const& y)
{
    return x.D == y.D && x.N == y.N && x.label == y.label && x.cancellation == y.cancellation && x.symbols == y.symbols &&
           x.cls == y.cls && x.stcl == y.stcl && x.t == y.t && x.unit_index == y.unit_index && x.mass == y.mass &&
           x.order == y.order;
}

std::vector<std::int64_t> const& table_columns()
{
    static const std::vector<std::int64_t> cols{2, 3, 5, 11};
    return cols;
}

TableRow table_row(ClassificationRecord const& r)
{
    TableRow t;
    t.D = r.D;
    t.N = r.N;
    t.label = label_string(r.label);
    t.c = r.cancellation;
    for (auto p : table_columns()) {
        auto it = r.symbols.find(p);
        if (it != r.symbols.end())
            t.symbols[p] = symbol_string(it->second);
    }
    t.cls = r.cls;
    t.stcl = r.stcl;
    t.t = r.t;
    return t;
}

std::vector<TableRow> table_rows_from_json(Json const& doc)
{
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        parse_fail("table document needs \"rows\"");
    std::vector<TableRow> out;
    for (auto const& row : doc["rows"]) {
        TableRow t;
        t.D = int_field(row, "D");
        t.N = int_field(row, "N");
        if (!row.contains("label") || !row["label"].is_string() || !row.contains("c") || !row["c"].is_boolean())
            parse_fail("table row needs label and c");
        t.label = row["label"].get<std::string>();
        t.c = row["c"].get<bool>();
        if (row.contains("symbols"))
            for (auto const& [k, v] : row["symbols"].items())
                t.symbols[std::stoll(k)] = v.get<std::string>();
        t.cls = int_field(row, "cls");
        t.stcl = int_field(row, "stcl");
        t.t = int_field(row, "t");
        out.push_back(t);
    }
    return out;
}

std::string describe_row(TableRow const& r)
{
    std::ostringstream s;
    s << "D=" << r.D << " N=" << r.N << " " << r.label << (r.c ? " c" : " -");
    for (auto p : table_columns()) {
        auto it = r.symbols.find(p);
        s << " " << p << ":" << (it == r.symbols.end() ? "." : it->second);
    }
    s << " cls=" << r.cls << " stcl=" << r.stcl << " t=" << r.t;
    return s.str();
}

TableFormat parse_table_format(std::string const& s)
{
    if (s == "csv")
        return TableFormat::Csv;
    if (s == "json")
        return TableFormat::Json;
    if (s == "text")
        return TableFormat::Text;
    parse_fail("unknown format " + s);
}

std::string render_records(std::vector<ClassificationRecord> const& records, TableFormat f)
{
    std::ostringstream out;
    auto sym = [](ClassificationRecord const& r, std::int64_t p) {
        auto it = r.symbols.find(p);
        return it == r.symbols.end() ? std::string() : symbol_string(it->second);
    };
    switch (f) {
    case TableFormat::Json:
        for (auto const& r : records)
            out << record_to_json(r).dump() << "\n";
        break;
    case TableFormat::Csv:
        out << "D,N,label,c,s2,s3,s5,s11,cls,stcl,t,unit_index,mass\n";
        for (auto const& r : records) {
            out << r.D << "," << r.N << "," << label_string(r.label) << "," << (r.cancellation ? "c" : "");
            for (auto p : table_columns())
                out << "," << sym(r, p);
            out << "," << r.cls << "," << r.stcl << "," << r.t << "," << r.unit_index << "," << to_string(r.mass) << "\n";
        }
        break;
    case TableFormat::Text:
        out << std::left << std::setw(4) << "D" << std::setw(5) << "N" << std::setw(18) << "label" << std::setw(3) << "c";
        for (auto p : table_columns())
            out << std::setw(4) << p;
        out << std::setw(7) << "#Cls" << std::setw(8) << "#StCl" << "t\n";
        for (auto const& r : records) {
            out << std::setw(4) << r.D << std::setw(5) << r.N << std::setw(18) << label_string(r.label) << std::setw(3)
                << (r.cancellation ? "c" : "");
            for (auto p : table_columns())
                out << std::setw(4) << sym(r, p);
            out << std::setw(7) << r.cls << std::setw(8) << r.stcl << r.t << "\n";
        }
        break;
    }
    return out.str();
}

}  // namespace quatorder
