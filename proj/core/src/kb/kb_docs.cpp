// SPDX-License-Identifier: Apache-2.0
#include "middleware/kb/kb_tools.hpp"

namespace mw::kb {

const std::string& kb_tool_docs() {
    static const std::string docs =
        R"(get_relations(x) -> list of relations
x is a topic entity of the question or a variable such as #0 (a set of entities produced by an earlier tool call). Lists every relation whose edges start at x, so you can pick the relation that leads towards the answer. Example: get_relations(Barack Obama) lists the outgoing relations of Barack Obama.
Prerequisite: none

get_neighbors(x, relation) -> variable
Follows the relation from x and returns the entities it reaches as a new variable. The relation must be one returned by an earlier get_relations(x). Example: get_neighbors(Barack Obama, people.person.profession) gives the professions of Barack Obama.
Prerequisite: get_relations

get_attributes(v) -> list of attributes
Lists the numerical attributes of the entities in variable v. Only useful when the question asks for a maximum or minimum (argmax or argmin).
Prerequisite: get_neighbors

argmax(v, attribute) -> variable
Keeps the entities of v with the largest value of the attribute. The attribute must be one returned by an earlier get_attributes(v). Example: argmax(#1, people.person.birth_year) keeps the youngest person in #1.
Prerequisite: get_attributes

argmin(v, attribute) -> variable
Keeps the entities of v with the smallest value of the attribute. The attribute must be one returned by an earlier get_attributes(v). Example: argmin(#1, film.film.release_year) keeps the earliest film in #1.
Prerequisite: get_attributes

intersection(v1, v2) -> variable
Returns the entities found in both variables. Both variables must hold entities of the same type.
Prerequisite: get_neighbors

count(v) -> int
Returns how many entities variable v holds. Answer with final_answer(v) right after count(v) to report the number.
Prerequisite: get_neighbors)";
    return docs;
}

}  // namespace mw::kb
