#ifndef QUATORDER_SERIALIZE_HPP
#define QUATORDER_SERIALIZE_HPP

#include "quatorder/genus_search.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace quatorder {

using Json = nlohmann::json;

/* {"algebra": {"a": "n/d", "b": "n/d"}, "basis": [[4 strings] x 4]} */
Json order_to_json(Order const& O);
/* ParseError on malformed documents; order construction errors propagate. */
Order order_from_json(Json const& doc);
Order read_order_file(std::string const& path);
Json parse_json_file(std::string const& path);

Json record_to_json(ClassificationRecord const& r);
ClassificationRecord record_from_json(Json const& doc);
bool same_record(ClassificationRecord const& x, ClassificationRecord const& y);

/* Symbol columns of the published table. */
std::vector<std::int64_t> const& table_columns();

/* One table row: symbols only at listed columns dividing N. */
struct TableRow {
    std::int64_t D = 0;
    std::int64_t N = 0;
    std::string label;
    bool c = false;
    std::map<std::int64_t, std::string> symbols;
    std::int64_t cls = 1;
    std::int64_t stcl = 1;
    std::int64_t t = 1;
    auto operator<=>(TableRow const&) const = default;
};
TableRow table_row(ClassificationRecord const& r);
std::vector<TableRow> table_rows_from_json(Json const& doc);
std::string describe_row(TableRow const& r);

enum class TableFormat { Csv, Json, Text };
TableFormat parse_table_format(std::string const& s);
std::string render_records(std::vector<ClassificationRecord> const& records, TableFormat f);

}  // namespace quatorder

#endif
