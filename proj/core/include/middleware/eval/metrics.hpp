// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "middleware/agent/answer.hpp"
#include "middleware/agent/trace.hpp"
#include "middleware/db/sqlite.hpp"

namespace mw::eval {

/// How duplicate rows count when comparing results. Row order never matters.
enum class RowSemantics { kMultiset, kSet };

/// True iff the engine runs `sql` as a single read-only query without error.
bool validity_sql(const db::Connection& conn, std::string_view sql);

/// True iff both queries run and return equal rows. Throws db::SqliteError
/// when the gold query itself fails.
bool execution_accuracy(const db::Connection& conn, std::string_view predicted, std::string_view gold,
                        RowSemantics semantics = RowSemantics::kMultiset);

/// Entity-set F1; counts score 1 on exact match and 0 otherwise.
double kb_f1(const agent::Answer& predicted, const agent::Answer& gold);

bool kb_validity(const agent::Trace& trace);

}  // namespace mw::eval
