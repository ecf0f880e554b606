// SPDX-License-Identifier: Apache-2.0
//
// Thin RAII layer over the sqlite3 C API.
#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

struct sqlite3;
struct sqlite3_stmt;

namespace mw::db {

/// Carries the engine's message verbatim.
class SqliteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Value {
    enum class Type { kNull, kInteger, kReal, kText, kBlob };

    Type type = Type::kNull;
    std::int64_t integer = 0;
    double real = 0.0;
    std::string text;  // text payload or raw blob bytes

    static Value null() { return {}; }
    static Value of(std::int64_t v) { return {Type::kInteger, v, 0.0, {}}; }
    static Value of(double v) { return {Type::kReal, 0, v, {}}; }
    static Value of(std::string v) { return {Type::kText, 0, 0.0, std::move(v)}; }

    bool is_null() const { return type == Type::kNull; }
    bool is_numeric() const { return type == Type::kInteger || type == Type::kReal; }
    double as_double() const { return type == Type::kInteger ? static_cast<double>(integer) : real; }

    /// Plain rendering: NULL as "None", reals keep a decimal point ("210.0").
    std::string to_text() const;
    /// Python-style literal: text in single quotes.
    std::string to_literal() const;
};

class Statement {
public:
    Statement() = default;
    Statement(sqlite3* db, sqlite3_stmt* stmt) : db_(db), stmt_(stmt) {}
    Statement(const Statement&) = delete;
    Statement& operator=(const Statement&) = delete;
    Statement(Statement&& other) noexcept;
    Statement& operator=(Statement&& other) noexcept;
    ~Statement();

    /// Advances to the next row; false when done. Throws SqliteError.
    bool step();
    void reset();

    int column_count() const;
    std::string column_name(int index) const;
    Value column(int index) const;
    std::vector<Value> row() const;
    bool readonly() const;

    void bind(int index, std::string_view text);
    void bind(int index, std::int64_t value);
    void bind(int index, double value);
    void bind_null(int index);

private:
    sqlite3* db_ = nullptr;
    sqlite3_stmt* stmt_ = nullptr;
};

class Connection {
public:
    enum class Mode { kReadOnly, kReadWriteCreate };

    Connection() = default;
    explicit Connection(const std::filesystem::path& path, Mode mode = Mode::kReadOnly);
    Connection(const Connection&) = delete;
    Connection& operator=(const Connection&) = delete;
    Connection(Connection&& other) noexcept;
    Connection& operator=(Connection&& other) noexcept;
    ~Connection();

    /// Compiles the first statement; `tail` receives the unparsed remainder.
    Statement prepare(std::string_view sql, std::string* tail = nullptr) const;
    /// Compiles exactly one statement; trailing text other than `;` and
    /// whitespace is rejected.
    Statement prepare_single(std::string_view sql) const;
    void exec(std::string_view sql);

    sqlite3* handle() const { return db_; }

private:
    sqlite3* db_ = nullptr;
};

struct QueryResult {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
    std::size_t total_rows = 0;  // rows produced, including those past the limit
};

/// Runs one statement to completion, keeping at most `row_limit` rows.
QueryResult run_query(const Connection& conn, std::string_view sql,
                      std::size_t row_limit = std::numeric_limits<std::size_t>::max());

std::string quote_identifier(std::string_view name);

}  // namespace mw::db
