// SPDX-License-Identifier: Apache-2.0
//
// Reference answers computed by the SQL engine itself, independent of the
// finder implementation.
#pragma once

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "middleware/db/db_tools.hpp"

namespace mw::testing {

inline std::optional<double> strict_number(const std::string& s) {
    if (s.empty() || std::isspace(static_cast<unsigned char>(s.front())) ||
        std::isspace(static_cast<unsigned char>(s.back()))) {
        return std::nullopt;
    }
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E')) {
            return std::nullopt;
        }
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (errno != 0 || end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

using Location = std::pair<std::string, std::string>;

/// Columns holding a cell equal to `value`: trimmed text equality, or numeric
/// equality when the value reads as a number.
inline bool engine_column_contains(const db::Connection& conn, const std::string& table, const std::string& column,
                                   const std::string& value) {
    const auto t = db::quote_identifier(table);
    const auto c = db::quote_identifier(column);
    std::string sql = "SELECT EXISTS (SELECT 1 FROM " + t + " WHERE (typeof(" + c + ") = 'text' AND trim(" + c +
                      ", ' ') = ?1)";
    const auto number = strict_number(value);
    if (number) sql += " OR (typeof(" + c + ") IN ('integer', 'real') AND " + c + " = ?2)";
    sql += ")";
    auto stmt = conn.prepare(sql);
    stmt.bind(1, std::string_view(value));
    if (number) stmt.bind(2, *number);
    stmt.step();
    return stmt.column(0).integer != 0;
}

inline std::set<Location> engine_exact_locations(const db::Connection& conn, const db::DbSchema& schema,
                                                 const std::string& value) {
    std::set<Location> out;
    for (const auto& t : schema.tables) {
        for (const auto& c : t.columns) {
            if (engine_column_contains(conn, t.name, c.name, value)) out.emplace(t.name, c.name);
        }
    }
    return out;
}

inline std::set<Location> locations(const db::FinderResult& result) {
    std::set<Location> out;
    for (const auto& h : result.hits) out.emplace(h.table, h.column);
    return out;
}

/// Probe values: real cells (possibly perturbed) and invented strings.
inline std::string random_probe(std::mt19937& rng, const db::Connection& conn, const db::DbSchema& schema) {
    const auto& t = schema.tables[rng() % schema.tables.size()];
    const auto& c = t.columns[rng() % t.columns.size()];
    const auto mode = rng() % 5;
    if (mode == 0) {
        static const char* invented[] = {"Nowhere", "zzz", "42", "1200000", "research", "on hold", "T", "2010-01-01",
                                         "Borealiss", "12.5"};
        return invented[rng() % 10];
    }
    const auto col = db::quote_identifier(c.name);
    const auto from = " FROM " + db::quote_identifier(t.name) + " WHERE " + col + " IS NOT NULL";
    auto count = conn.prepare("SELECT COUNT(*)" + from);
    count.step();
    const auto n = count.column(0).integer;
    if (n == 0) return "empty";
    auto stmt = conn.prepare("SELECT " + col + from + " LIMIT 1 OFFSET " + std::to_string(rng() % n));
    std::string cell = stmt.step() ? stmt.column(0).to_text() : "";
    if (cell.empty()) return "empty";
    if (mode == 1) cell[rng() % cell.size()] = 'x';
    if (mode == 2) cell = cell.substr(0, 1 + rng() % cell.size());
    return cell;
}

}  // namespace mw::testing
