// SPDX-License-Identifier: Apache-2.0
#include "middleware/db/db_tools.hpp"

namespace mw::db {

const std::string& db_tool_docs() {
    static const std::string docs =
        R"(find_columns_containing_value(value)
Lists every table.column holding a cell equal to value. The value is a cell value from the rows, not a column name. Use it to discover which column a value mentioned in the question lives in.
Prerequisite: none

find_columns_containing_value_fuzzy(value)
Like find_columns_containing_value, but also reports columns whose cells are similar to value (different casing, a substring, or a few characters off), with sample cells. Use it when the exact search finds nothing.
Prerequisite: none

get_distinct_values(table, column)
Lists the distinct non-NULL values stored in table.column. Helpful for picking the exact spelling of a value.
Prerequisite: none

is_value_in_column(table, column, value)
Returns True if some cell of table.column equals value, otherwise False.
Prerequisite: none

get_date_format(table, column)
Shows one stored value of a date column so you can match its format.
Prerequisite: none

search_by_SQL(query)
Runs a read-only SQL query and shows its result rows. Quote the query, e.g. search_by_SQL("SELECT COUNT(*) FROM t").
Prerequisite: none

from(from_statement)
Sets the FROM clause of the answer query and checks it against the database, e.g. from("FROM t1 JOIN t2 ON t1.id = t2.t1_id").
Prerequisite: none

where(where_statement)
Sets the WHERE clause, checks it and reports whether any row satisfies it, e.g. where("WHERE t1.id = 1"). Use where("") when the query needs no filter.
Prerequisite: from

select(select_statement)
Sets the SELECT clause and checks it, e.g. select("SELECT t1.name").
Prerequisite: from, where

group_by(group_by_statement)
Sets the GROUP BY clause and checks it, e.g. group_by("GROUP BY t1.id").
Prerequisite: from, where, select

having(having_statement)
Sets the HAVING clause and checks it, e.g. having("HAVING COUNT(*) > 1").
Prerequisite: from, where, select, group_by

order_by(order_by_statement)
Sets ordering and limits and checks them, e.g. order_by("ORDER BY t1.id DESC LIMIT 3").
Prerequisite: from, where, select)";
    return docs;
}

}  // namespace mw::db
