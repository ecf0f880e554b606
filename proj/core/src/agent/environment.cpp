// SPDX-License-Identifier: Apache-2.0
#include "middleware/agent/environment.hpp"

#include "middleware/text.hpp"

namespace mw::agent {

namespace {

StepOutcome from_result(const ToolResult& result) {
    StepOutcome out;
    out.observation = result.observation;
    out.ok = result.ok();
    return out;
}

}  // namespace

const std::string& KbEnvironment::instructions() const {
    static const std::string text =
        "You answer questions over a knowledge base by calling the tools listed below, one call per step.\n"
        "At every step write one line \"Thought t: <your reasoning>\" and then one line \"Act t: <tool call>\", "
        "where t is the step number. The tool result is returned to you as \"Observation t: ...\".\n"
        "Calls such as get_neighbors return a variable (#0, #1, ...) standing for a set of entities; pass "
        "variables to later calls to chain several hops.\n"
        "When a variable holds the answer, write \"Final Answer: #k\" instead of an Act line. For questions "
        "asking how many, call count(#k) first and then answer with that same variable.";
    return text;
}

const std::string& KbEnvironment::default_demonstration() const {
    static const std::string text =
        "Question: how many children does the spouse of Marie Curie have?\n"
        "Entities: [Marie Curie]\n"
        "Thought 1: I need the spouse of Marie Curie first, so I look at her relations.\n"
        "Act 1: get_relations(Marie Curie)\n"
        "Observation 1: [people.person.children, people.person.nationality, people.person.spouse_s]\n"
        "Thought 2: people.person.spouse_s leads to her spouse.\n"
        "Act 2: get_neighbors(Marie Curie, people.person.spouse_s)\n"
        "Observation 2: variable #0 (1 entity), which are instances of people.person\n"
        "Thought 3: Now I need the relations of the spouse.\n"
        "Act 3: get_relations(#0)\n"
        "Observation 3: [people.person.children, people.person.profession]\n"
        "Thought 4: people.person.children gives the children of the spouse.\n"
        "Act 4: get_neighbors(#0, people.person.children)\n"
        "Observation 4: variable #1 (2 entities), which are instances of people.person\n"
        "Thought 5: The question asks how many, so I count #1.\n"
        "Act 5: count(#1)\n"
        "Observation 5: 2\n"
        "Thought 6: #1 holds the children and has just been counted.\n"
        "Final Answer: #1";
    return text;
}

std::string KbEnvironment::briefing() const {
    return "Entities: " + render_list(session_.topic_entities(), session_.topic_entities().size());
}

StepOutcome KbEnvironment::act(const ToolCall& call) {
    StepOutcome out = from_result(session_.execute(call));
    if (out.ok && call.name == kb::tool_name(kb::KbTool::kFinalAnswer)) {
        const auto& answer = *session_.final_answer();
        out.terminal = true;
        out.answer = answer.count ? Answer::of_count(*answer.count) : Answer::of_entities(answer.entities);
    }
    return out;
}

StepOutcome KbEnvironment::final_answer(std::string_view payload) {
    return act(ToolCall{std::string(kb::tool_name(kb::KbTool::kFinalAnswer)), {std::string(trim(payload))}});
}

const std::string& DbEnvironment::instructions() const {
    static const std::string text =
        "You write one SQLite query that answers the question about the database described below.\n"
        "Use the navigational tools to look at the stored values, then build the query clause by clause with "
        "from, where, select and, when needed, group_by, having and order_by. Each clause tool checks the clause "
        "against the database. Pass SQL text as one double-quoted argument.\n"
        "At every step write one line \"Thought t: <your reasoning>\" and then one line \"Act t: <tool call>\", "
        "where t is the step number. The tool result is returned to you as \"Observation t: ...\".\n"
        "When the query is complete, write \"Final Answer: <the full SQL query>\" instead of an Act line.";
    return text;
}

const std::string& DbEnvironment::default_demonstration() const {
    static const std::string none;
    return none;
}

std::string DbEnvironment::briefing() const { return "Database schema:\n" + session_.describe_schema(); }

StepOutcome DbEnvironment::act(const ToolCall& call) { return from_result(session_.execute(call)); }

StepOutcome DbEnvironment::final_answer(std::string_view payload) {
    const std::string sql(trim(payload));
    if (sql.empty()) {
        return from_result(ToolResult::failure(ToolErrorCode::kPrecondition,
                                               "the final answer is empty. Write \"Final Answer: <full SQL query>\""));
    }
    StepOutcome out;
    out.ok = true;
    out.terminal = true;
    out.observation = "final answer recorded";
    out.answer = Answer::of_sql(sql);
    return out;
}

std::string DbEnvironment::render_action(const ToolCall& call) const {
    // Cell values, queries and clauses are always quoted; table and column names stay bare.
    std::vector<bool> quoted;
    if (call.name == "is_value_in_column") {
        quoted = {false, false, true};
    } else if (call.name != "get_distinct_values" && call.name != "get_date_format") {
        quoted.assign(call.args.size(), true);
    }
    return render_tool_call(call, quoted);
}

}  // namespace mw::agent
