// SPDX-License-Identifier: Apache-2.0
//
// The twelve database tools: six navigational tools over cell content and six
// clause tools that validate a query slot by slot.
#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "middleware/action.hpp"
#include "middleware/db/sqlite.hpp"
#include "middleware/tool_result.hpp"

namespace mw::db {

struct Column {
    std::string name;
    std::string declared_type;
    int primary_key = 0;  // 1-based position in the primary key, 0 if not part of it
    std::optional<std::string> references;  // "table.column"
};

struct Table {
    std::string name;
    std::vector<Column> columns;
    std::string create_sql;

    const Column* find_column(std::string_view column) const;  // case-insensitive
};

struct DbSchema {
    std::vector<Table> tables;

    const Table* find_table(std::string_view table) const;  // case-insensitive
};

/// Reads user tables in creation order.
DbSchema read_schema(const Connection& conn);

enum class MatchKind { kExact, kFuzzy };

struct CellHit {
    std::string table;
    std::string column;
    MatchKind kind = MatchKind::kExact;
    std::string sample;                // first matching cell
    std::vector<std::string> samples;  // distinct, up to the per-column cap

    bool same_location(const CellHit& other) const { return table == other.table && column == other.column; }
};

struct FinderResult {
    std::vector<CellHit> hits;
    std::size_t scanned_cells = 0;
    bool truncated = false;  // the scan budget ran out
};

enum class ClauseKind { kFrom, kWhere, kSelect, kGroupBy, kHaving, kOrderBy };
inline constexpr std::size_t kClauseKinds = 6;

std::string_view clause_tool_name(ClauseKind kind);
std::optional<ClauseKind> clause_from_tool_name(std::string_view name);
/// Slots that must be filled before `kind` may be set.
std::vector<ClauseKind> clause_prerequisites(ClauseKind kind);

struct DbToolsConfig {
    std::size_t distinct_limit = 30;
    std::size_t row_limit = 20;
    std::size_t scan_budget = 5'000'000;
    std::size_t fuzzy_hits_per_column = 5;
    double fuzzy_max_distance = 0.2;
    std::size_t example_rows = 3;
};

/// Typed result of a tool operation: a value or the error that the agent
/// would see.
template <class T>
struct Checked {
    std::optional<T> value;
    std::optional<ToolError> error;

    explicit operator bool() const { return value.has_value(); }
    static Checked ok(T v) { return Checked{std::move(v), std::nullopt}; }
    static Checked fail(ToolErrorCode code, std::string message) {
        return Checked{std::nullopt, ToolError{code, std::move(message)}};
    }
};

class OpenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DbSession {
public:
    static DbSession open(const std::filesystem::path& path, DbToolsConfig config = {});

    const DbSchema& schema() const { return schema_; }
    const Connection& connection() const { return conn_; }
    const DbToolsConfig& config() const { return config_; }

    // Navigational tools.
    Checked<FinderResult> find_columns_containing_value(std::string_view value) const;
    Checked<FinderResult> find_columns_containing_value_fuzzy(std::string_view value) const;
    /// All distinct non-NULL values in engine order; observations truncate.
    Checked<std::vector<std::string>> get_distinct_values(std::string_view table, std::string_view column) const;
    Checked<bool> is_value_in_column(std::string_view table, std::string_view column, std::string_view value) const;
    Checked<std::string> get_date_format(std::string_view table, std::string_view column) const;
    Checked<QueryResult> search_by_sql(std::string_view query) const;

    // Clause tools. The observation text is the value.
    Checked<std::string> set_clause(ClauseKind kind, std::string_view statement);
    const std::optional<std::string>& clause(ClauseKind kind) const { return slots_[static_cast<std::size_t>(kind)]; }
    Checked<std::string> assemble_sql() const;

    /// Surface dispatch used by the agent: parses tool name and arity and
    /// renders the observation.
    ToolResult execute(const ToolCall& call);

    /// Schema as CREATE statements with example rows, for prompts.
    std::string describe_schema() const;

    const std::vector<std::string>& log() const { return log_; }

private:
    DbSession(Connection conn, DbSchema schema, DbToolsConfig config)
        : conn_(std::move(conn)), schema_(std::move(schema)), config_(config) {}

    FinderResult scan(std::string_view value, bool fuzzy) const;
    std::optional<ToolError> locate(std::string_view table, std::string_view column, const Table*& t,
                                    const Column*& c) const;
    std::string assemble_with(ClauseKind kind, const std::string& clause) const;

    Connection conn_;
    DbSchema schema_;
    DbToolsConfig config_;
    std::array<std::optional<std::string>, kClauseKinds> slots_;
    std::vector<std::string> log_;
};

/// Exact-match rule shared by the finder and the membership check.
bool cell_matches_exact(const Value& cell, std::string_view value);
/// Fuzzy rule: exact, or on text cells a case-insensitive substring (the value
/// inside the cell, or a cell of three or more characters inside the value),
/// or normalized edit distance within `max_distance`.
bool cell_matches_fuzzy(const Value& cell, std::string_view value, double max_distance);

/// Names of the twelve tools in documentation order.
const std::vector<std::string>& db_tool_names();

/// Tool cards embedded in prompts and printed by `mwagent tools db`.
const std::string& db_tool_docs();

}  // namespace mw::db
