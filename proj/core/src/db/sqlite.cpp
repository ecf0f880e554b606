// SPDX-License-Identifier: Apache-2.0
#include "middleware/db/sqlite.hpp"

#include <sqlite3.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include "middleware/text.hpp"

namespace mw::db {

namespace {

std::string format_real(double v) {
    if (std::isfinite(v) && std::nearbyint(v) == v && std::fabs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v)) + ".0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string Value::to_text() const {
    switch (type) {
        case Type::kNull: return "None";
        case Type::kInteger: return std::to_string(integer);
        case Type::kReal: return format_real(real);
        case Type::kText: return text;
        case Type::kBlob: return "<blob " + std::to_string(text.size()) + " bytes>";
    }
    return {};
}

std::string Value::to_literal() const {
    if (type != Type::kText) return to_text();
    std::string out = "'";
    for (char c : text) {
        if (c == '\'' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    out += '\'';
    return out;
}

Statement::Statement(Statement&& other) noexcept
    : db_(std::exchange(other.db_, nullptr)), stmt_(std::exchange(other.stmt_, nullptr)) {}

Statement& Statement::operator=(Statement&& other) noexcept {
    if (this != &other) {
        sqlite3_finalize(stmt_);
        db_ = std::exchange(other.db_, nullptr);
        stmt_ = std::exchange(other.stmt_, nullptr);
    }
    return *this;
}

Statement::~Statement() { sqlite3_finalize(stmt_); }

bool Statement::step() {
    const int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    throw SqliteError(sqlite3_errmsg(db_));
}

void Statement::reset() {
    sqlite3_reset(stmt_);
    sqlite3_clear_bindings(stmt_);
}

int Statement::column_count() const { return sqlite3_column_count(stmt_); }

std::string Statement::column_name(int index) const {
    const char* name = sqlite3_column_name(stmt_, index);
    return name ? name : "";
}

Value Statement::column(int index) const {
    switch (sqlite3_column_type(stmt_, index)) {
        case SQLITE_INTEGER: return Value::of(static_cast<std::int64_t>(sqlite3_column_int64(stmt_, index)));
        case SQLITE_FLOAT: return Value::of(sqlite3_column_double(stmt_, index));
        case SQLITE_TEXT: {
            const auto* p = reinterpret_cast<const char*>(sqlite3_column_text(stmt_, index));
            return Value::of(std::string(p, static_cast<std::size_t>(sqlite3_column_bytes(stmt_, index))));
        }
        case SQLITE_BLOB: {
            Value v;
            v.type = Value::Type::kBlob;
            const auto* p = static_cast<const char*>(sqlite3_column_blob(stmt_, index));
            v.text.assign(p ? p : "", static_cast<std::size_t>(sqlite3_column_bytes(stmt_, index)));
            return v;
        }
        default: return Value::null();
    }
}

std::vector<Value> Statement::row() const {
    std::vector<Value> out;
    const int n = column_count();
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(column(i));
    return out;
}

bool Statement::readonly() const { return sqlite3_stmt_readonly(stmt_) != 0; }

void Statement::bind(int index, std::string_view text) {
    sqlite3_bind_text(stmt_, index, text.data(), static_cast<int>(text.size()), SQLITE_TRANSIENT);
}

void Statement::bind(int index, std::int64_t value) { sqlite3_bind_int64(stmt_, index, value); }

void Statement::bind(int index, double value) { sqlite3_bind_double(stmt_, index, value); }

void Statement::bind_null(int index) { sqlite3_bind_null(stmt_, index); }

Connection::Connection(const std::filesystem::path& path, Mode mode) {
    const int flags = mode == Mode::kReadOnly ? SQLITE_OPEN_READONLY
                                              : (SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE);
    const int rc = sqlite3_open_v2(path.string().c_str(), &db_, flags | SQLITE_OPEN_NOMUTEX, nullptr);
    if (rc != SQLITE_OK) {
        std::string message = db_ ? sqlite3_errmsg(db_) : sqlite3_errstr(rc);
        sqlite3_close(db_);
        db_ = nullptr;
        throw SqliteError(message);
    }
    if (mode == Mode::kReadOnly) exec("PRAGMA query_only = ON");
}

Connection::Connection(Connection&& other) noexcept : db_(std::exchange(other.db_, nullptr)) {}

Connection& Connection::operator=(Connection&& other) noexcept {
    if (this != &other) {
        sqlite3_close(db_);
        db_ = std::exchange(other.db_, nullptr);
    }
    return *this;
}

Connection::~Connection() { sqlite3_close(db_); }

Statement Connection::prepare(std::string_view sql, std::string* tail) const {
    sqlite3_stmt* stmt = nullptr;
    const char* rest = nullptr;
    const int rc = sqlite3_prepare_v2(db_, sql.data(), static_cast<int>(sql.size()), &stmt, &rest);
    if (rc != SQLITE_OK) {
        sqlite3_finalize(stmt);
        throw SqliteError(sqlite3_errmsg(db_));
    }
    if (tail) *tail = rest ? std::string(rest, sql.data() + sql.size()) : std::string();
    if (!stmt) throw SqliteError("empty statement");
    return Statement(db_, stmt);
}

Statement Connection::prepare_single(std::string_view sql) const {
    std::string tail;
    Statement stmt = prepare(sql, &tail);
    for (char c : tail) {
        if (c != ';' && !std::isspace(static_cast<unsigned char>(c))) {
            throw SqliteError("only a single statement is allowed");
        }
    }
    return stmt;
}

void Connection::exec(std::string_view sql) {
    char* err = nullptr;
    const std::string owned(sql);
    if (sqlite3_exec(db_, owned.c_str(), nullptr, nullptr, &err) != SQLITE_OK) {
        std::string message = err ? err : sqlite3_errmsg(db_);
        sqlite3_free(err);
        throw SqliteError(message);
    }
}

QueryResult run_query(const Connection& conn, std::string_view sql, std::size_t row_limit) {
    Statement stmt = conn.prepare_single(sql);
    QueryResult result;
    for (int i = 0; i < stmt.column_count(); ++i) result.columns.push_back(stmt.column_name(i));
    while (stmt.step()) {
        ++result.total_rows;
        if (result.rows.size() < row_limit) result.rows.push_back(stmt.row());
    }
    return result;
}

std::string quote_identifier(std::string_view name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace mw::db
