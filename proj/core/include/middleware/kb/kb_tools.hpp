// SPDX-License-Identifier: Apache-2.0
//
// The seven knowledge-base tools, variables, prerequisite enforcement and
// legal-action enumeration.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "middleware/action.hpp"
#include "middleware/kb/triple_store.hpp"
#include "middleware/tool_result.hpp"

namespace mw::kb {

enum class KbTool {
    kGetRelations,
    kGetNeighbors,
    kIntersection,
    kGetAttributes,
    kArgmax,
    kArgmin,
    kCount,
    kFinalAnswer,
};

std::string_view tool_name(KbTool tool);
std::optional<KbTool> tool_from_name(std::string_view name);
std::size_t tool_arity(KbTool tool);

/// The seven callable tools, in documentation order (final_answer excluded).
const std::vector<KbTool>& documented_tools();

struct KbAction {
    KbTool tool;
    std::vector<std::string> args;

    ToolCall to_call() const;
    std::string render() const;

    bool operator==(const KbAction&) const = default;
};

/// Resolves tool name and arity. Returns the error on failure.
std::optional<KbAction> to_kb_action(const ToolCall& call, std::optional<ToolError>* error = nullptr);

struct Variable {
    std::size_t id = 0;
    EntitySet members;
    std::set<std::string> classes;  // empty = unknown
    KbAction producer;
    bool from_neighbors = false;  // producer chain contains get_neighbors

    std::string token() const { return "#" + std::to_string(id); }
};

/// Parses a canonical "#k" token.
std::optional<std::size_t> parse_variable_token(std::string_view token);

struct KbToolsConfig {
    std::size_t list_limit = 60;
};

struct KbFinalAnswer {
    std::size_t variable = 0;
    EntitySet entities;
    std::optional<std::int64_t> count;  // set when the answer is count(#k)
};

class KbSession {
public:
    KbSession(const TripleStore& store, std::vector<std::string> topic_entities, KbToolsConfig config = {});

    ToolResult execute(const ToolCall& call);
    ToolResult execute(const KbAction& action);

    /// Every action that would succeed if executed now, in tool order then
    /// argument order (topic entities, then variables by id; names sorted).
    std::vector<KbAction> enumerate_candidates() const;

    const TripleStore& store() const { return *store_; }
    const std::vector<std::string>& topic_entities() const { return topic_entities_; }
    const std::vector<Variable>& variables() const { return variables_; }
    const std::map<std::string, std::set<std::string>>& relation_knowledge() const { return relation_knowledge_; }
    const std::map<std::string, std::set<std::string>>& attribute_knowledge() const { return attribute_knowledge_; }
    const std::vector<KbAction>& log() const { return log_; }
    const std::optional<KbFinalAnswer>& final_answer() const { return final_answer_; }

private:
    struct Resolved {
        EntitySet members;
        const Variable* variable = nullptr;  // null for topic entities
    };

    std::optional<Resolved> resolve(const std::string& token, std::optional<ToolError>& error) const;
    const Variable* resolve_variable(const std::string& token, std::string_view tool,
                                     std::optional<ToolError>& error) const;
    std::string unknown_argument_message(const std::string& token) const;

    ToolResult get_relations(const KbAction& action);
    ToolResult get_neighbors(const KbAction& action);
    ToolResult intersection(const KbAction& action);
    ToolResult get_attributes(const KbAction& action);
    ToolResult superlative(const KbAction& action);
    ToolResult count(const KbAction& action);
    ToolResult finish(const KbAction& action);

    const Variable& add_variable(EntitySet members, std::set<std::string> classes, const KbAction& producer,
                                 bool from_neighbors);
    std::string describe_variable(const Variable& v) const;
    std::set<std::string> infer_classes(const EntitySet& members) const;

    const TripleStore* store_;
    std::vector<std::string> topic_entities_;
    KbToolsConfig config_;
    std::vector<Variable> variables_;
    std::map<std::string, std::set<std::string>> relation_knowledge_;
    std::map<std::string, std::set<std::string>> attribute_knowledge_;
    std::vector<KbAction> log_;
    std::optional<std::pair<std::size_t, std::int64_t>> last_count_;
    std::optional<KbFinalAnswer> final_answer_;
};

/// Tool cards embedded in prompts and printed by `mwagent tools kb`.
const std::string& kb_tool_docs();

}  // namespace mw::kb
