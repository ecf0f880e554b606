// SPDX-License-Identifier: Apache-2.0
#include "middleware/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "middleware/text.hpp"

namespace mw::eval {

namespace {

// Cells compare by kind and value: integers and reals are one numeric kind,
// NULL only equals NULL.
std::string cell_key(const db::Value& v) {
    switch (v.type) {
        case db::Value::Type::kNull: return "N";
        case db::Value::Type::kInteger: return "#" + std::to_string(v.integer);
        case db::Value::Type::kReal: {
            const double r = v.real;
            if (std::isfinite(r) && std::floor(r) == r && std::fabs(r) < 9.0e18) {
                return "#" + std::to_string(static_cast<std::int64_t>(r));
            }
            return "#" + format_number(r);
        }
        case db::Value::Type::kText: return "T" + v.text;
        case db::Value::Type::kBlob: return "B" + v.text;
    }
    return "N";
}

std::vector<std::string> row_keys(const db::QueryResult& result) {
    std::vector<std::string> keys;
    keys.reserve(result.rows.size());
    for (const auto& row : result.rows) {
        std::string key;
        for (const auto& cell : row) {
            const auto k = cell_key(cell);
            key += std::to_string(k.size()) + ":" + k;
        }
        keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

db::QueryResult run_all(const db::Connection& conn, std::string_view sql) {
    return db::run_query(conn, sql, std::numeric_limits<std::size_t>::max());
}

}  // namespace

bool validity_sql(const db::Connection& conn, std::string_view sql) {
    try {
        auto stmt = conn.prepare_single(sql);
        if (!stmt.readonly()) return false;
        while (stmt.step()) {
        }
        return true;
    } catch (const db::SqliteError&) {
        return false;
    }
}

bool execution_accuracy(const db::Connection& conn, std::string_view predicted, std::string_view gold,
                        RowSemantics semantics) {
    const auto gold_result = run_all(conn, gold);
    if (!validity_sql(conn, predicted)) return false;
    const auto pred_result = run_all(conn, predicted);
    if (!gold_result.rows.empty() && !pred_result.rows.empty() &&
        gold_result.rows.front().size() != pred_result.rows.front().size()) {
        return false;
    }
    auto a = row_keys(pred_result);
    auto b = row_keys(gold_result);
    if (semantics == RowSemantics::kSet) {
        a.erase(std::unique(a.begin(), a.end()), a.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    return a == b;
}

double kb_f1(const agent::Answer& predicted, const agent::Answer& gold) {
    using Kind = agent::Answer::Kind;
    if (gold.kind == Kind::kCount || predicted.kind == Kind::kCount) {
        return predicted.kind == Kind::kCount && gold.kind == Kind::kCount && predicted.count == gold.count ? 1.0
                                                                                                            : 0.0;
    }
    const auto& p = predicted.entities;
    const auto& g = gold.entities;
    if (p.empty() || g.empty()) return p.empty() && g.empty() && predicted.kind == gold.kind ? 1.0 : 0.0;
    std::size_t hits = 0;
    for (const auto& e : p) hits += g.count(e);
    if (hits == 0) return 0.0;
    const double precision = static_cast<double>(hits) / static_cast<double>(p.size());
    const double recall = static_cast<double>(hits) / static_cast<double>(g.size());
    return 2.0 * precision * recall / (precision + recall);
}

bool kb_validity(const agent::Trace& trace) { return trace.answered(); }

}  // namespace mw::eval
