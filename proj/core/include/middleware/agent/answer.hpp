// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <set>
#include <string>

namespace mw::agent {

/// Terminal answer payload of an episode: an entity set or a count (KB),
/// or SQL text (DB).
struct Answer {
    enum class Kind { kNone, kEntities, kCount, kSql };

    Kind kind = Kind::kNone;
    std::set<std::string> entities;
    std::int64_t count = 0;
    std::string sql;

    static Answer of_entities(std::set<std::string> e) { return {Kind::kEntities, std::move(e), 0, {}}; }
    static Answer of_count(std::int64_t n) { return {Kind::kCount, {}, n, {}}; }
    static Answer of_sql(std::string s) { return {Kind::kSql, {}, 0, std::move(s)}; }

    bool operator==(const Answer&) const = default;
};

}  // namespace mw::agent
