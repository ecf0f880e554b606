// SPDX-License-Identifier: Apache-2.0
#include "middleware/kb/kb_tools.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>

#include "middleware/text.hpp"

namespace mw::kb {

namespace {

struct ToolInfo {
    KbTool tool;
    std::string_view name;
    std::size_t arity;
    std::string_view usage;
};

constexpr std::array<ToolInfo, 8> kTools{{
    {KbTool::kGetRelations, "get_relations", 1, "get_relations(x)"},
    {KbTool::kGetNeighbors, "get_neighbors", 2, "get_neighbors(x, relation)"},
    {KbTool::kIntersection, "intersection", 2, "intersection(v1, v2)"},
    {KbTool::kGetAttributes, "get_attributes", 1, "get_attributes(v)"},
    {KbTool::kArgmax, "argmax", 2, "argmax(v, attribute)"},
    {KbTool::kArgmin, "argmin", 2, "argmin(v, attribute)"},
    {KbTool::kCount, "count", 1, "count(v)"},
    {KbTool::kFinalAnswer, "final_answer", 1, "final_answer(v)"},
}};

const ToolInfo& info(KbTool tool) { return kTools[static_cast<std::size_t>(tool)]; }

std::string legal_tool_list() {
    std::vector<std::string> names;
    for (KbTool t : documented_tools()) names.emplace_back(tool_name(t));
    return join(names, ", ");
}

std::string set_to_text(const std::set<std::string>& items) {
    return join(std::vector<std::string>(items.begin(), items.end()), ", ");
}

}  // namespace

std::string_view tool_name(KbTool tool) { return info(tool).name; }

std::size_t tool_arity(KbTool tool) { return info(tool).arity; }

std::optional<KbTool> tool_from_name(std::string_view name) {
    for (const ToolInfo& t : kTools) {
        if (t.name == name) return t.tool;
    }
    return std::nullopt;
}

const std::vector<KbTool>& documented_tools() {
    static const std::vector<KbTool> tools{KbTool::kGetRelations, KbTool::kGetNeighbors, KbTool::kGetAttributes,
                                           KbTool::kArgmax,       KbTool::kArgmin,       KbTool::kIntersection,
                                           KbTool::kCount};
    return tools;
}

ToolCall KbAction::to_call() const { return ToolCall{std::string(tool_name(tool)), args}; }

std::string KbAction::render() const { return render_tool_call(to_call()); }

std::optional<KbAction> to_kb_action(const ToolCall& call, std::optional<ToolError>* error) {
    const auto tool = tool_from_name(call.name);
    if (!tool) {
        if (error) {
            *error = ToolError{ToolErrorCode::kUnknownTool,
                               "'" + call.name + "' is not a tool. Choose one of: " + legal_tool_list() +
                                   ", or finish with final_answer(v)"};
        }
        return std::nullopt;
    }
    const std::size_t arity = tool_arity(*tool);
    if (call.args.size() != arity) {
        if (error) {
            *error = ToolError{ToolErrorCode::kBadArity,
                               std::string(tool_name(*tool)) + " takes " + std::to_string(arity) + " argument" +
                                   (arity == 1 ? "" : "s") + " but " + std::to_string(call.args.size()) +
                                   " were given. Call it as " + std::string(info(*tool).usage)};
        }
        return std::nullopt;
    }
    return KbAction{*tool, call.args};
}

std::optional<std::size_t> parse_variable_token(std::string_view token) {
    if (token.size() < 2 || token[0] != '#') return std::nullopt;
    const std::string_view digits = token.substr(1);
    if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
    std::size_t value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        if (value > (std::numeric_limits<std::size_t>::max() - 9) / 10) return std::nullopt;
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

KbSession::KbSession(const TripleStore& store, std::vector<std::string> topic_entities, KbToolsConfig config)
    : store_(&store), config_(config) {
    for (auto& e : topic_entities) {
        if (std::find(topic_entities_.begin(), topic_entities_.end(), e) == topic_entities_.end()) {
            topic_entities_.push_back(std::move(e));
        }
    }
}

ToolResult KbSession::execute(const ToolCall& call) {
    std::optional<ToolError> error;
    const auto action = to_kb_action(call, &error);
    if (!action) return ToolResult::failure(error->code, error->message);
    return execute(*action);
}

ToolResult KbSession::execute(const KbAction& action) {
    if (action.args.size() != tool_arity(action.tool)) {
        std::optional<ToolError> error;
        to_kb_action(action.to_call(), &error);
        return ToolResult::failure(error->code, error->message);
    }
    ToolResult result;
    switch (action.tool) {
        case KbTool::kGetRelations: result = get_relations(action); break;
        case KbTool::kGetNeighbors: result = get_neighbors(action); break;
        case KbTool::kIntersection: result = intersection(action); break;
        case KbTool::kGetAttributes: result = get_attributes(action); break;
        case KbTool::kArgmax:
        case KbTool::kArgmin: result = superlative(action); break;
        case KbTool::kCount: result = count(action); break;
        case KbTool::kFinalAnswer: result = finish(action); break;
    }
    if (result.ok()) {
        log_.push_back(action);
        if (action.tool != KbTool::kCount && action.tool != KbTool::kFinalAnswer) last_count_.reset();
    }
    return result;
}

std::string KbSession::unknown_argument_message(const std::string& token) const {
    if (!token.empty() && token[0] == '#') {
        if (variables_.empty()) {
            return token + " is not a defined variable and no variables exist yet. Start from a topic entity: " +
                   join(topic_entities_, ", ");
        }
        return token + " is not a defined variable. The defined variables are #0 to #" +
               std::to_string(variables_.size() - 1);
    }
    std::string msg = "'" + token + "' is neither a topic entity of the question nor a variable. Use a topic entity";
    if (!topic_entities_.empty()) msg += " (" + join(topic_entities_, ", ") + ")";
    msg += " or a variable such as #0";
    return msg;
}

std::optional<KbSession::Resolved> KbSession::resolve(const std::string& token,
                                                      std::optional<ToolError>& error) const {
    if (const auto id = parse_variable_token(token)) {
        if (*id < variables_.size()) return Resolved{variables_[*id].members, &variables_[*id]};
    } else if (std::find(topic_entities_.begin(), topic_entities_.end(), token) != topic_entities_.end()) {
        return Resolved{EntitySet{token}, nullptr};
    }
    error = ToolError{ToolErrorCode::kUnknownArgument, unknown_argument_message(token)};
    return std::nullopt;
}

const Variable* KbSession::resolve_variable(const std::string& token, std::string_view tool,
                                            std::optional<ToolError>& error) const {
    const auto resolved = resolve(token, error);
    if (!resolved) return nullptr;
    if (!resolved->variable || !resolved->variable->from_neighbors) {
        error = ToolError{ToolErrorCode::kPrerequisiteViolation,
                          std::string(tool) + " needs a variable produced by get_neighbors, but '" + token +
                              "' is not one. Use get_neighbors first to obtain a variable"};
        return nullptr;
    }
    return resolved->variable;
}

std::set<std::string> KbSession::infer_classes(const EntitySet& members) const {
    std::set<std::string> classes;
    for (const auto& m : members) {
        auto c = store_->classes_of(m);
        classes.insert(c.begin(), c.end());
    }
    return classes;
}

const Variable& KbSession::add_variable(EntitySet members, std::set<std::string> classes, const KbAction& producer,
                                        bool from_neighbors) {
    Variable v;
    v.id = variables_.size();
    v.members = std::move(members);
    v.classes = std::move(classes);
    v.producer = producer;
    v.from_neighbors = from_neighbors;
    variables_.push_back(std::move(v));
    return variables_.back();
}

std::string KbSession::describe_variable(const Variable& v) const {
    std::string out = "variable " + v.token() + " (" + std::to_string(v.members.size()) +
                      (v.members.size() == 1 ? " entity)" : " entities)");
    if (!v.classes.empty()) {
        std::vector<std::string> classes(v.classes.begin(), v.classes.end());
        const std::size_t hidden = classes.size() > config_.list_limit ? classes.size() - config_.list_limit : 0;
        classes.resize(classes.size() - hidden);
        out += ", which are instances of " + join(classes, ", ");
        if (hidden > 0) out += " (+" + std::to_string(hidden) + " more)";
    }
    return out;
}

ToolResult KbSession::get_relations(const KbAction& action) {
    std::optional<ToolError> error;
    const auto resolved = resolve(action.args[0], error);
    if (!resolved) return ToolResult::failure(error->code, error->message);
    auto relations = store_->relations_of(resolved->members);
    relation_knowledge_[action.args[0]].insert(relations.begin(), relations.end());
    return ToolResult::success(render_list(relations, config_.list_limit));
}

ToolResult KbSession::get_neighbors(const KbAction& action) {
    const std::string& arg = action.args[0];
    const std::string& relation = action.args[1];
    std::optional<ToolError> error;
    const auto resolved = resolve(arg, error);
    if (!resolved) return ToolResult::failure(error->code, error->message);
    const auto known = relation_knowledge_.find(arg);
    if (known == relation_knowledge_.end()) {
        return ToolResult::failure(ToolErrorCode::kPrerequisiteViolation,
                                   "get_relations(" + arg + ") has not been called, so relation '" + relation +
                                       "' cannot be used. Call get_relations(" + arg +
                                       ") first and choose a relation from its output");
    }
    if (!known->second.contains(relation)) {
        return ToolResult::failure(ToolErrorCode::kPrerequisiteViolation,
                                   "relation '" + relation + "' was not returned by get_relations(" + arg +
                                       "). Call get_relations(" + arg + ") first and choose a relation from its output");
    }
    EntitySet members = store_->neighbors_of(resolved->members, relation);
    auto classes = infer_classes(members);
    const Variable& v = add_variable(std::move(members), std::move(classes), action, true);
    return ToolResult::success(describe_variable(v));
}

ToolResult KbSession::intersection(const KbAction& action) {
    std::optional<ToolError> error;
    const auto first = resolve(action.args[0], error);
    if (!first) return ToolResult::failure(error->code, error->message);
    const auto second = resolve(action.args[1], error);
    if (!second) return ToolResult::failure(error->code, error->message);
    if (!first->variable || !second->variable) {
        const std::string& bad = !first->variable ? action.args[0] : action.args[1];
        return ToolResult::failure(ToolErrorCode::kPrerequisiteViolation,
                                   "intersection takes two variables, but '" + bad +
                                       "' is an entity. Use get_neighbors first to obtain a variable");
    }
    const Variable& a = *first->variable;
    const Variable& b = *second->variable;
    if (!a.from_neighbors && !b.from_neighbors) {
        return ToolResult::failure(ToolErrorCode::kPrerequisiteViolation,
                                   "intersection needs a variable produced by get_neighbors. Use get_neighbors first");
    }
    std::set<std::string> classes;
    if (a.classes.empty() || b.classes.empty()) {
        classes = a.classes.empty() ? b.classes : a.classes;
    } else {
        std::set_intersection(a.classes.begin(), a.classes.end(), b.classes.begin(), b.classes.end(),
                              std::inserter(classes, classes.end()));
        if (classes.empty()) {
            return ToolResult::failure(ToolErrorCode::kTypeMismatch,
                                       a.token() + " (" + set_to_text(a.classes) + ") and " + b.token() + " (" +
                                           set_to_text(b.classes) +
                                           ") are of different types. Intersect only variables of the same type");
        }
    }
    EntitySet members;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::inserter(members, members.end()));
    const Variable& v = add_variable(std::move(members), std::move(classes), action, true);
    return ToolResult::success(describe_variable(v));
}

ToolResult KbSession::get_attributes(const KbAction& action) {
    std::optional<ToolError> error;
    const Variable* v = resolve_variable(action.args[0], "get_attributes", error);
    if (!v) return ToolResult::failure(error->code, error->message);
    auto attributes = store_->numeric_attributes_of(v->members);
    attribute_knowledge_[v->token()].insert(attributes.begin(), attributes.end());
    return ToolResult::success(render_list(attributes, config_.list_limit));
}

ToolResult KbSession::superlative(const KbAction& action) {
    std::optional<ToolError> error;
    const auto resolved = resolve(action.args[0], error);
    if (!resolved) return ToolResult::failure(error->code, error->message);
    const std::string& attribute = action.args[1];
    const auto known = attribute_knowledge_.find(action.args[0]);
    if (!resolved->variable || known == attribute_knowledge_.end() || !known->second.contains(attribute)) {
        return ToolResult::failure(ToolErrorCode::kPrerequisiteViolation,
                                   "attribute '" + attribute + "' was not returned by get_attributes(" +
                                       action.args[0] + "). Call get_attributes(" + action.args[0] +
                                       ") first and choose an attribute from its output");
    }
    const Variable& source = *resolved->variable;
    const bool want_max = action.tool == KbTool::kArgmax;

    // Per-entity value: the entity's own max (argmax) or min (argmin).
    std::map<std::string, double> best;
    for (const auto& [entity, value] : store_->attribute_values(source.members, attribute)) {
        auto [it, inserted] = best.emplace(entity, value);
        if (!inserted) it->second = want_max ? std::max(it->second, value) : std::min(it->second, value);
    }
    if (best.empty()) {
        return ToolResult::failure(ToolErrorCode::kNonNumericAttribute,
                                   "no member of " + source.token() + " has a numeric value for '" + attribute +
                                       "'. Choose another attribute returned by get_attributes");
    }
    double extremum = best.begin()->second;
    for (const auto& [entity, value] : best) extremum = want_max ? std::max(extremum, value) : std::min(extremum, value);
    EntitySet members;
    for (const auto& [entity, value] : best) {
        if (value == extremum) members.insert(entity);
    }
    const Variable& v = add_variable(std::move(members), source.classes, action, source.from_neighbors);
    return ToolResult::success(describe_variable(v));
}

ToolResult KbSession::count(const KbAction& action) {
    std::optional<ToolError> error;
    const Variable* v = resolve_variable(action.args[0], "count", error);
    if (!v) return ToolResult::failure(error->code, error->message);
    const auto n = static_cast<std::int64_t>(v->members.size());
    last_count_ = std::make_pair(v->id, n);
    return ToolResult::success(std::to_string(n));
}

ToolResult KbSession::finish(const KbAction& action) {
    std::optional<ToolError> error;
    const auto resolved = resolve(action.args[0], error);
    if (!resolved) return ToolResult::failure(error->code, error->message);
    if (!resolved->variable) {
        return ToolResult::failure(ToolErrorCode::kUnknownArgument,
                                   "the final answer must be a variable, not the entity '" + action.args[0] +
                                       "'. Answer with a variable such as #0");
    }
    KbFinalAnswer answer;
    answer.variable = resolved->variable->id;
    answer.entities = resolved->variable->members;
    if (last_count_ && last_count_->first == answer.variable) answer.count = last_count_->second;
    std::string observation;
    if (answer.count) {
        observation = "final answer: " + std::to_string(*answer.count) + " (count of " + action.args[0] + ")";
    } else {
        observation = "final answer " + action.args[0] + ": " +
                      render_set(std::vector<std::string>(answer.entities.begin(), answer.entities.end()),
                                 config_.list_limit);
    }
    final_answer_ = std::move(answer);
    return ToolResult::success(observation);
}

std::vector<KbAction> KbSession::enumerate_candidates() const {
    std::vector<std::string> arguments = topic_entities_;
    for (const auto& v : variables_) arguments.push_back(v.token());

    std::vector<KbAction> out;
    for (const auto& x : arguments) out.push_back({KbTool::kGetRelations, {x}});
    for (const auto& x : arguments) {
        const auto it = relation_knowledge_.find(x);
        if (it == relation_knowledge_.end()) continue;
        for (const auto& r : it->second) out.push_back({KbTool::kGetNeighbors, {x, r}});
    }
    for (const auto& a : variables_) {
        for (const auto& b : variables_) {
            if (!a.from_neighbors && !b.from_neighbors) continue;
            if (!a.classes.empty() && !b.classes.empty()) {
                const bool overlap = std::any_of(a.classes.begin(), a.classes.end(),
                                                 [&](const std::string& c) { return b.classes.contains(c); });
                if (!overlap) continue;
            }
            out.push_back({KbTool::kIntersection, {a.token(), b.token()}});
        }
    }
    for (const auto& v : variables_) {
        if (v.from_neighbors) out.push_back({KbTool::kGetAttributes, {v.token()}});
    }
    for (KbTool tool : {KbTool::kArgmax, KbTool::kArgmin}) {
        for (const auto& v : variables_) {
            const auto it = attribute_knowledge_.find(v.token());
            if (it == attribute_knowledge_.end()) continue;
            for (const auto& attribute : it->second) {
                // Attributes are numeric for some member by construction, so the call succeeds.
                out.push_back({tool, {v.token(), attribute}});
            }
        }
    }
    for (const auto& v : variables_) {
        if (v.from_neighbors) out.push_back({KbTool::kCount, {v.token()}});
    }
    for (const auto& v : variables_) out.push_back({KbTool::kFinalAnswer, {v.token()}});
    return out;
}

}  // namespace mw::kb
