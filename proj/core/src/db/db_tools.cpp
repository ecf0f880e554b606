// SPDX-License-Identifier: Apache-2.0
#include "middleware/db/db_tools.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "middleware/text.hpp"

namespace mw::db {

namespace {

constexpr std::array<std::string_view, kClauseKinds> kClauseTools{"from", "where", "select",
                                                                  "group_by", "having", "order_by"};
constexpr std::array<std::string_view, kClauseKinds> kClauseKeywords{"FROM", "WHERE", "SELECT",
                                                                     "GROUP BY", "HAVING", "ORDER BY"};

// Shorter cells would match almost any query that contains them.
constexpr std::size_t kMinContainedCell = 3;

std::size_t index(ClauseKind kind) { return static_cast<std::size_t>(kind); }

// Slots dropped when `kind` is (re)written, because their probes did not
// include the new clause.
std::vector<ClauseKind> invalidated_by(ClauseKind kind) {
    switch (kind) {
        case ClauseKind::kFrom:
            return {ClauseKind::kWhere, ClauseKind::kSelect, ClauseKind::kGroupBy, ClauseKind::kHaving,
                    ClauseKind::kOrderBy};
        case ClauseKind::kWhere:
            return {ClauseKind::kSelect, ClauseKind::kGroupBy, ClauseKind::kHaving, ClauseKind::kOrderBy};
        case ClauseKind::kSelect:
            return {ClauseKind::kGroupBy, ClauseKind::kHaving, ClauseKind::kOrderBy};
        default:
            return {};
    }
}

const std::regex& keyword_pattern(ClauseKind kind) {
    static const std::array<std::regex, kClauseKinds> patterns{
        std::regex(R"(^FROM\s)", std::regex::icase),
        std::regex(R"(^WHERE\s)", std::regex::icase),
        std::regex(R"(^SELECT\s)", std::regex::icase),
        std::regex(R"(^GROUP\s+BY\s)", std::regex::icase),
        std::regex(R"(^HAVING\s)", std::regex::icase),
        std::regex(R"(^(ORDER\s+BY|LIMIT)\s)", std::regex::icase),
    };
    return patterns[index(kind)];
}

using Slots = std::array<std::optional<std::string>, kClauseKinds>;

std::optional<std::string> assemble(const Slots& slots, std::vector<std::string>* missing) {
    for (ClauseKind k : {ClauseKind::kFrom, ClauseKind::kWhere, ClauseKind::kSelect}) {
        if (!slots[index(k)] && missing) missing->emplace_back(clause_tool_name(k));
    }
    if (!slots[index(ClauseKind::kFrom)] || !slots[index(ClauseKind::kWhere)] ||
        !slots[index(ClauseKind::kSelect)]) {
        return std::nullopt;
    }
    std::string sql = *slots[index(ClauseKind::kSelect)] + " " + *slots[index(ClauseKind::kFrom)];
    for (ClauseKind k : {ClauseKind::kWhere, ClauseKind::kGroupBy, ClauseKind::kHaving, ClauseKind::kOrderBy}) {
        const auto& clause = slots[index(k)];
        if (clause && !clause->empty()) sql += " " + *clause;
    }
    return sql;
}

std::string render_row(const std::vector<Value>& row) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& v : row) cells.push_back(v.to_literal());
    return "(" + join(cells, ", ") + ")";
}

std::string render_query_result(const QueryResult& result) {
    std::vector<std::string> rows;
    rows.reserve(result.rows.size());
    for (const auto& row : result.rows) rows.push_back(render_row(row));
    std::string out = "columns: (" + join(result.columns, ", ") + "); rows: [" + join(rows, ", ") + "]";
    if (result.total_rows > result.rows.size()) {
        out += " (+" + std::to_string(result.total_rows - result.rows.size()) + " more rows)";
    }
    return out;
}

std::vector<std::string> nearest(const std::vector<std::string>& names, std::string_view target, std::size_t k) {
    std::vector<std::pair<double, std::string>> scored;
    const std::string lowered = to_lower(target);
    for (const auto& n : names) scored.emplace_back(normalized_edit_distance(to_lower(n), lowered), n);
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scored.size() && i < k; ++i) out.push_back(scored[i].second);
    return out;
}

bool equals_icase(std::string_view a, std::string_view b) {
    return a.size() == b.size() && starts_with_icase(a, b);
}

template <class T>
ToolResult to_tool_result(const Checked<T>& checked, std::string observation) {
    if (!checked) return ToolResult::failure(checked.error->code, checked.error->message);
    return ToolResult::success(std::move(observation));
}

}  // namespace

std::string_view clause_tool_name(ClauseKind kind) { return kClauseTools[index(kind)]; }

std::optional<ClauseKind> clause_from_tool_name(std::string_view name) {
    for (std::size_t i = 0; i < kClauseKinds; ++i) {
        if (kClauseTools[i] == name) return static_cast<ClauseKind>(i);
    }
    return std::nullopt;
}

std::vector<ClauseKind> clause_prerequisites(ClauseKind kind) {
    switch (kind) {
        case ClauseKind::kFrom: return {};
        case ClauseKind::kWhere: return {ClauseKind::kFrom};
        case ClauseKind::kSelect: return {ClauseKind::kFrom, ClauseKind::kWhere};
        case ClauseKind::kGroupBy: return {ClauseKind::kFrom, ClauseKind::kWhere, ClauseKind::kSelect};
        case ClauseKind::kHaving:
            return {ClauseKind::kFrom, ClauseKind::kWhere, ClauseKind::kSelect, ClauseKind::kGroupBy};
        case ClauseKind::kOrderBy: return {ClauseKind::kFrom, ClauseKind::kWhere, ClauseKind::kSelect};
    }
    return {};
}

const Table* DbSchema::find_table(std::string_view table) const {
    for (const auto& t : tables) {
        if (equals_icase(t.name, table)) return &t;
    }
    return nullptr;
}

const Column* Table::find_column(std::string_view column) const {
    for (const auto& c : columns) {
        if (equals_icase(c.name, column)) return &c;
    }
    return nullptr;
}

DbSchema read_schema(const Connection& conn) {
    DbSchema schema;
    Statement tables = conn.prepare(
        "SELECT name, COALESCE(sql, '') FROM sqlite_master WHERE type = 'table' AND name NOT LIKE 'sqlite_%' "
        "ORDER BY rowid");
    while (tables.step()) {
        Table t;
        t.name = tables.column(0).text;
        t.create_sql = tables.column(1).text;
        Statement info = conn.prepare("PRAGMA table_info(" + quote_identifier(t.name) + ")");
        while (info.step()) {
            Column c;
            c.name = info.column(1).text;
            c.declared_type = info.column(2).text;
            c.primary_key = static_cast<int>(info.column(5).integer);
            t.columns.push_back(std::move(c));
        }
        Statement fks = conn.prepare("PRAGMA foreign_key_list(" + quote_identifier(t.name) + ")");
        while (fks.step()) {
            const std::string target_table = fks.column(2).text;
            const std::string from = fks.column(3).text;
            const Value to = fks.column(4);
            for (auto& c : t.columns) {
                if (c.name == from) c.references = target_table + "." + (to.is_null() ? std::string("rowid") : to.text);
            }
        }
        schema.tables.push_back(std::move(t));
    }
    return schema;
}

bool cell_matches_exact(const Value& cell, std::string_view value) {
    const std::string_view wanted = trim(value);
    switch (cell.type) {
        case Value::Type::kText:
            return trim(cell.text) == wanted;
        case Value::Type::kInteger:
        case Value::Type::kReal: {
            const auto number = parse_number(wanted);
            return number && cell.as_double() == *number;
        }
        default:
            return false;
    }
}

bool cell_matches_fuzzy(const Value& cell, std::string_view value, double max_distance) {
    if (cell_matches_exact(cell, value)) return true;
    if (cell.type != Value::Type::kText) return false;
    const std::string c = to_lower(trim(cell.text));
    const std::string q = to_lower(trim(value));
    if (c.empty() || q.empty()) return false;
    if (c.find(q) != std::string::npos) return true;
    if (c.size() >= kMinContainedCell && q.find(c) != std::string::npos) return true;
    // The length gap alone bounds the normalized distance from below.
    const double longest = static_cast<double>(std::max(c.size(), q.size()));
    const double gap = static_cast<double>(c.size() > q.size() ? c.size() - q.size() : q.size() - c.size());
    if (gap / longest > max_distance) return false;
    return normalized_edit_distance(c, q) <= max_distance;
}

DbSession DbSession::open(const std::filesystem::path& path, DbToolsConfig config) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) throw OpenError("unable to open database file: " + path.string());
    try {
        Connection conn(path, Connection::Mode::kReadOnly);
        DbSchema schema = read_schema(conn);
        return DbSession(std::move(conn), std::move(schema), config);
    } catch (const SqliteError& e) {
        throw OpenError(e.what());
    }
}

FinderResult DbSession::scan(std::string_view value, bool fuzzy) const {
    FinderResult result;
    for (const auto& table : schema_.tables) {
        for (const auto& column : table.columns) {
            Statement stmt =
                conn_.prepare("SELECT " + quote_identifier(column.name) + " FROM " + quote_identifier(table.name));
            std::optional<CellHit> hit;
            while (stmt.step()) {
                if (result.scanned_cells >= config_.scan_budget) {
                    result.truncated = true;
                    break;
                }
                ++result.scanned_cells;
                const Value cell = stmt.column(0);
                const bool match = fuzzy ? cell_matches_fuzzy(cell, value, config_.fuzzy_max_distance)
                                         : cell_matches_exact(cell, value);
                if (!match) continue;
                if (!hit) hit = CellHit{table.name, column.name, fuzzy ? MatchKind::kFuzzy : MatchKind::kExact, {}, {}};
                std::string text = cell.to_text();
                if (std::find(hit->samples.begin(), hit->samples.end(), text) != hit->samples.end()) continue;
                hit->samples.push_back(std::move(text));
                if (!fuzzy || hit->samples.size() >= config_.fuzzy_hits_per_column) break;
            }
            if (hit) {
                hit->sample = hit->samples.front();
                result.hits.push_back(std::move(*hit));
            }
            if (result.truncated) return result;
        }
    }
    return result;
}

Checked<FinderResult> DbSession::find_columns_containing_value(std::string_view value) const {
    if (trim(value).empty()) {
        return Checked<FinderResult>::fail(ToolErrorCode::kPrecondition,
                                           "the value must not be empty. Pass the cell value to look for");
    }
    return Checked<FinderResult>::ok(scan(value, false));
}

Checked<FinderResult> DbSession::find_columns_containing_value_fuzzy(std::string_view value) const {
    if (trim(value).empty()) {
        return Checked<FinderResult>::fail(ToolErrorCode::kPrecondition,
                                           "the value must not be empty. Pass the cell value to look for");
    }
    return Checked<FinderResult>::ok(scan(value, true));
}

std::optional<ToolError> DbSession::locate(std::string_view table, std::string_view column, const Table*& t,
                                           const Column*& c) const {
    t = schema_.find_table(table);
    if (!t) {
        std::vector<std::string> names;
        for (const auto& tb : schema_.tables) names.push_back(tb.name);
        return ToolError{ToolErrorCode::kUnknownArgument,
                         "there is no table named '" + std::string(table) + "'. Did you mean one of: " +
                             join(nearest(names, table, 3), ", ") + "?"};
    }
    c = t->find_column(column);
    if (!c) {
        std::vector<std::string> names;
        for (const auto& col : t->columns) names.push_back(col.name);
        return ToolError{ToolErrorCode::kUnknownArgument,
                         "table '" + t->name + "' has no column named '" + std::string(column) +
                             "'. Did you mean one of: " + join(nearest(names, column, 3), ", ") + "?"};
    }
    return std::nullopt;
}

Checked<std::vector<std::string>> DbSession::get_distinct_values(std::string_view table,
                                                                 std::string_view column) const {
    const Table* t = nullptr;
    const Column* c = nullptr;
    if (auto error = locate(table, column, t, c)) {
        return Checked<std::vector<std::string>>{std::nullopt, std::move(error)};
    }
    const std::string col = quote_identifier(c->name);
    Statement stmt = conn_.prepare("SELECT DISTINCT " + col + " FROM " + quote_identifier(t->name) + " WHERE " +
                                   col + " IS NOT NULL ORDER BY " + col);
    std::vector<std::string> values;
    while (stmt.step()) values.push_back(stmt.column(0).to_text());
    return Checked<std::vector<std::string>>::ok(std::move(values));
}

Checked<bool> DbSession::is_value_in_column(std::string_view table, std::string_view column,
                                            std::string_view value) const {
    const Table* t = nullptr;
    const Column* c = nullptr;
    if (auto error = locate(table, column, t, c)) return Checked<bool>{std::nullopt, std::move(error)};
    Statement stmt = conn_.prepare("SELECT " + quote_identifier(c->name) + " FROM " + quote_identifier(t->name));
    while (stmt.step()) {
        if (cell_matches_exact(stmt.column(0), value)) return Checked<bool>::ok(true);
    }
    return Checked<bool>::ok(false);
}

Checked<std::string> DbSession::get_date_format(std::string_view table, std::string_view column) const {
    const Table* t = nullptr;
    const Column* c = nullptr;
    if (auto error = locate(table, column, t, c)) return Checked<std::string>{std::nullopt, std::move(error)};
    std::vector<const Column*> key;
    for (const auto& col : t->columns) {
        if (col.primary_key > 0) key.push_back(&col);
    }
    std::sort(key.begin(), key.end(), [](const Column* a, const Column* b) { return a->primary_key < b->primary_key; });
    std::string order = "rowid";
    if (!key.empty()) {
        std::vector<std::string> parts;
        for (const Column* k : key) parts.push_back(quote_identifier(k->name));
        order = join(parts, ", ");
    }
    const std::string col = quote_identifier(c->name);
    Statement stmt = conn_.prepare("SELECT " + col + " FROM " + quote_identifier(t->name) + " WHERE " + col +
                                   " IS NOT NULL ORDER BY " + order + " LIMIT 1");
    if (!stmt.step()) {
        return Checked<std::string>::fail(ToolErrorCode::kNoExample,
                                          "column " + t->name + "." + c->name +
                                              " has no non-NULL value to show. Inspect another column");
    }
    return Checked<std::string>::ok(stmt.column(0).to_text());
}

Checked<QueryResult> DbSession::search_by_sql(std::string_view query) const {
    if (trim(query).empty()) {
        return Checked<QueryResult>::fail(ToolErrorCode::kPrecondition, "the query is empty. Pass a SELECT query");
    }
    std::string tail;
    Statement stmt;
    try {
        stmt = conn_.prepare(query, &tail);
    } catch (const SqliteError& e) {
        return Checked<QueryResult>::fail(ToolErrorCode::kEngine, e.what());
    }
    if (!trim(tail).empty() && tail.find_first_not_of("; \t\r\n") != std::string::npos) {
        return Checked<QueryResult>::fail(ToolErrorCode::kRejected,
                                          "only a single statement is allowed. Send one SELECT query per call");
    }
    if (!stmt.readonly()) {
        return Checked<QueryResult>::fail(ToolErrorCode::kRejected,
                                          "the database is read-only and only SELECT queries are allowed. "
                                          "Rewrite the statement as a query");
    }
    QueryResult result;
    for (int i = 0; i < stmt.column_count(); ++i) result.columns.push_back(stmt.column_name(i));
    try {
        while (stmt.step()) {
            ++result.total_rows;
            if (result.rows.size() < config_.row_limit) result.rows.push_back(stmt.row());
        }
    } catch (const SqliteError& e) {
        return Checked<QueryResult>::fail(ToolErrorCode::kEngine, e.what());
    }
    return Checked<QueryResult>::ok(std::move(result));
}

std::string DbSession::assemble_with(ClauseKind kind, const std::string& clause) const {
    Slots staged = slots_;
    for (ClauseKind k : invalidated_by(kind)) staged[index(k)].reset();
    staged[index(kind)] = clause;
    return assemble(staged, nullptr).value_or(std::string());
}

Checked<std::string> DbSession::set_clause(ClauseKind kind, std::string_view statement) {
    const std::string clause(trim(statement));
    const std::string_view tool = clause_tool_name(kind);
    const bool empty_where = kind == ClauseKind::kWhere && clause.empty();
    if (!empty_where && !std::regex_search(clause + " ", keyword_pattern(kind))) {
        std::string expected = std::string(kClauseKeywords[index(kind)]);
        if (kind == ClauseKind::kWhere) expected += " (or be empty to skip filtering)";
        if (kind == ClauseKind::kOrderBy) expected += " or LIMIT";
        return Checked<std::string>::fail(ToolErrorCode::kSyntax,
                                          std::string(tool) + " expects a clause starting with " + expected +
                                              ", but got '" + clause + "'. Pass the full clause including its keyword");
    }

    std::vector<std::string> missing;
    for (ClauseKind pre : clause_prerequisites(kind)) {
        if (!slots_[index(pre)]) missing.emplace_back(clause_tool_name(pre));
    }
    if (!missing.empty()) {
        return Checked<std::string>::fail(ToolErrorCode::kPrerequisiteViolation,
                                          std::string(tool) + " requires " + join(missing, ", ") +
                                              " to be set first. Call " + join(missing, "(...), ") + "(...) before " +
                                              std::string(tool) + "(...)");
    }

    const auto& from = slots_[index(ClauseKind::kFrom)];
    const auto& where = slots_[index(ClauseKind::kWhere)];
    std::string probe;
    switch (kind) {
        case ClauseKind::kFrom:
            probe = "SELECT * " + clause + " LIMIT 1";
            break;
        case ClauseKind::kWhere:
            probe = "SELECT * " + *from + (clause.empty() ? "" : " " + clause) + " LIMIT 1";
            break;
        case ClauseKind::kSelect:
            probe = clause + " " + *from + (where->empty() ? "" : " " + *where) + " LIMIT 1";
            break;
        default:
            probe = "SELECT * FROM (" + assemble_with(kind, clause) + ") LIMIT 1";
            break;
    }

    QueryResult result;
    try {
        Statement stmt = conn_.prepare_single(probe);
        if (!stmt.readonly()) {
            return Checked<std::string>::fail(ToolErrorCode::kRejected,
                                              "the clause would modify the database. Write a read-only clause");
        }
        for (int i = 0; i < stmt.column_count(); ++i) result.columns.push_back(stmt.column_name(i));
        if (stmt.step()) {
            result.rows.push_back(stmt.row());
            result.total_rows = 1;
        }
    } catch (const SqliteError& e) {
        return Checked<std::string>::fail(ToolErrorCode::kEngine, e.what());
    }

    const bool replaced = slots_[index(kind)].has_value();
    std::vector<std::string> cleared;
    for (ClauseKind k : invalidated_by(kind)) {
        if (slots_[index(k)]) {
            cleared.emplace_back(clause_tool_name(k));
            slots_[index(k)].reset();
        }
    }
    slots_[index(kind)] = clause;

    std::string keyword = std::string(kClauseKeywords[index(kind)]);
    std::string observation;
    switch (kind) {
        case ClauseKind::kFrom:
            observation = "valid FROM clause; available columns: " + render_list(result.columns, 60);
            break;
        case ClauseKind::kWhere:
            if (empty_where) {
                observation = "no WHERE clause recorded; the query will not filter rows";
            } else {
                observation = result.rows.empty() ? "valid WHERE clause, but the conditions match no rows"
                                                  : "valid WHERE clause; the conditions match at least one row";
            }
            break;
        default: {
            observation = "valid " + keyword + " clause; current query: " + assemble(slots_, nullptr).value_or("");
            observation += result.rows.empty() ? "; the query returns no rows"
                                               : "; first row: " + render_row(result.rows.front());
            break;
        }
    }
    if (replaced) observation += "; replaced the previous " + keyword + " clause";
    if (!cleared.empty()) observation += "; cleared " + join(cleared, ", ") + " (set them again)";
    return Checked<std::string>::ok(std::move(observation));
}

Checked<std::string> DbSession::assemble_sql() const {
    std::vector<std::string> missing;
    auto sql = assemble(slots_, &missing);
    if (!sql) {
        return Checked<std::string>::fail(ToolErrorCode::kPrerequisiteViolation,
                                          "the query is incomplete: missing " + join(missing, ", ") +
                                              ". Set the missing clauses first");
    }
    return Checked<std::string>::ok(std::move(*sql));
}

const std::vector<std::string>& db_tool_names() {
    static const std::vector<std::string> names{
        "find_columns_containing_value", "find_columns_containing_value_fuzzy", "get_distinct_values",
        "is_value_in_column",            "get_date_format",                     "search_by_SQL",
        "from",                          "where",                               "select",
        "group_by",                      "having",                              "order_by"};
    return names;
}

ToolResult DbSession::execute(const ToolCall& call) {
    static const std::map<std::string, std::size_t, std::less<>> arity{
        {"find_columns_containing_value", 1}, {"find_columns_containing_value_fuzzy", 1},
        {"get_distinct_values", 2},           {"is_value_in_column", 3},
        {"get_date_format", 2},               {"search_by_SQL", 1},
        {"from", 1}, {"where", 1}, {"select", 1}, {"group_by", 1}, {"having", 1}, {"order_by", 1}};

    std::string name = call.name;
    if (name == "search_by_sql") name = "search_by_SQL";
    const auto it = arity.find(name);
    if (it == arity.end()) {
        return ToolResult::failure(ToolErrorCode::kUnknownTool, "'" + call.name + "' is not a tool. Choose one of: " +
                                                                    join(db_tool_names(), ", "));
    }
    if (call.args.size() != it->second) {
        return ToolResult::failure(ToolErrorCode::kBadArity,
                                   name + " takes " + std::to_string(it->second) + " argument" +
                                       (it->second == 1 ? "" : "s") + " but " + std::to_string(call.args.size()) +
                                       " were given. Check the tool description for its arguments");
    }
    const auto& a = call.args;
    ToolResult result;
    if (name == "find_columns_containing_value" || name == "find_columns_containing_value_fuzzy") {
        const bool fuzzy = name.back() == 'y';
        const auto found = fuzzy ? find_columns_containing_value_fuzzy(a[0]) : find_columns_containing_value(a[0]);
        std::string observation;
        if (found) {
            std::vector<std::string> items;
            for (const auto& hit : found.value->hits) {
                std::string item = hit.table + "." + hit.column;
                if (fuzzy) {
                    std::vector<std::string> quoted;
                    for (const auto& s : hit.samples) quoted.push_back(Value::of(s).to_literal());
                    item += " (" + join(quoted, ", ") + ")";
                }
                items.push_back(std::move(item));
            }
            if (items.empty()) {
                observation = fuzzy ? "no column contains a value similar to " + Value::of(a[0]).to_literal()
                                    : "no column contains the exact value " + Value::of(a[0]).to_literal() +
                                          "; try find_columns_containing_value_fuzzy";
            } else {
                observation = render_list(items, items.size());
            }
            if (found.value->truncated) {
                observation += " (scan stopped after " + std::to_string(found.value->scanned_cells) +
                               " cells; results may be incomplete)";
            }
        }
        result = to_tool_result(found, observation);
    } else if (name == "get_distinct_values") {
        const auto values = get_distinct_values(a[0], a[1]);
        result = to_tool_result(values, values ? render_list(*values.value, config_.distinct_limit) : "");
    } else if (name == "is_value_in_column") {
        const auto present = is_value_in_column(a[0], a[1], a[2]);
        result = to_tool_result(present, present ? (*present.value ? "True" : "False") : "");
    } else if (name == "get_date_format") {
        const auto example = get_date_format(a[0], a[1]);
        std::string observation;
        if (example) {
            const Column* c = schema_.find_table(a[0])->find_column(a[1]);
            observation = *example.value + " (declared type: " +
                          (c->declared_type.empty() ? std::string("none") : c->declared_type) + ")";
        }
        result = to_tool_result(example, observation);
    } else if (name == "search_by_SQL") {
        const auto rows = search_by_sql(a[0]);
        result = to_tool_result(rows, rows ? render_query_result(*rows.value) : "");
    } else {
        const auto observation = set_clause(*clause_from_tool_name(name), a[0]);
        result = to_tool_result(observation, observation ? *observation.value : "");
    }
    if (result.ok()) log_.push_back(render_tool_call(call));
    return result;
}

std::string DbSession::describe_schema() const {
    std::string out;
    for (const auto& table : schema_.tables) {
        if (!out.empty()) out += "\n\n";
        out += table.create_sql + ";";
        QueryResult sample = run_query(conn_, "SELECT * FROM " + quote_identifier(table.name) + " LIMIT " +
                                                  std::to_string(config_.example_rows));
        out += "\n/*\n" + std::to_string(sample.rows.size()) + " example rows:\nSELECT * FROM " +
               quote_identifier(table.name) + " LIMIT " + std::to_string(config_.example_rows) + ";\n" +
               join(sample.columns, "\t");
        for (const auto& row : sample.rows) {
            std::vector<std::string> cells;
            for (const auto& v : row) cells.push_back(v.to_text());
            out += "\n" + join(cells, "\t");
        }
        out += "\n*/";
    }
    return out;
}

}  // namespace mw::db
