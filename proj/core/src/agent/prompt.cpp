// SPDX-License-Identifier: Apache-2.0
#include "middleware/agent/prompt.hpp"

#include <cctype>

#include "middleware/text.hpp"

namespace mw::agent {

namespace {

// Matches `<label>[ <digits>]:` at the start of a line, returning the rest.
std::optional<std::string_view> strip_label(std::string_view line, std::string_view label) {
    if (!starts_with_icase(line, label)) return std::nullopt;
    auto rest = line.substr(label.size());
    std::size_t i = 0;
    while (i < rest.size() && rest[i] == ' ') ++i;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
    if (i >= rest.size() || rest[i] != ':') return std::nullopt;
    if (i > 0 && rest[0] != ' ' && !std::isdigit(static_cast<unsigned char>(rest[0]))) return std::nullopt;
    return trim(rest.substr(i + 1));
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(trim(text.substr(start, end - start)));
        start = end + 1;
    }
    return lines;
}

ToolError syntax_error(std::string message) { return {ToolErrorCode::kSyntax, std::move(message)}; }

}  // namespace

std::string render_header(const Environment& env, std::string_view question, std::string_view demonstration) {
    std::string out = env.instructions();
    out += "\n\nTools:\n";
    out += env.tool_docs();
    if (!demonstration.empty()) {
        out += "\n\nExample:\n";
        out += demonstration;
    }
    out += "\n\n";
    out += env.briefing();
    out += "\nQuestion: ";
    out += question;
    return out;
}

std::string render_exchange(std::size_t t, std::string_view thought, std::string_view act, std::string_view obs) {
    const auto n = std::to_string(t);
    std::string out;
    if (!thought.empty()) out += "Thought " + n + ": " + std::string(thought) + "\n";
    if (act.starts_with(kFinalAnswerPrefix)) {
        out += act;
    } else {
        out += "Act " + n + ":";
        if (!act.empty()) out += " " + std::string(act);
    }
    out += "\nObservation " + n + ": " + std::string(obs);
    return out;
}

std::string render_step(const Step& step, bool inline_retries) {
    std::string out;
    if (inline_retries) {
        for (const auto& r : step.retries) {
            out += render_exchange(step.t, r.thought, r.act, r.obs);
            out += '\n';
        }
    }
    out += render_exchange(step.t, step.thought, step.act, step.obs);
    return out;
}

std::string serialize_context(const Environment& env, std::string_view question, std::string_view demonstration,
                              const std::vector<Step>& steps, Scheme scheme) {
    std::string out = render_header(env, question, demonstration);
    for (const auto& s : steps) {
        out += '\n';
        out += render_step(s, scheme == Scheme::kErrorFeedback);
    }
    return out;
}

ParsedStep parse_step(std::string_view output) {
    ParsedStep parsed;
    bool have_thought = false;
    bool have_act = false;
    for (auto line : split_lines(output)) {
        if (!have_thought && !have_act) {
            if (auto rest = strip_label(line, "Thought")) {
                parsed.thought = std::string(*rest);
                have_thought = true;
                continue;
            }
        }
        if (auto rest = strip_label(line, "Final Answer")) {
            parsed.final = true;
            parsed.final_payload = std::string(*rest);
            parsed.act_text = std::string(kFinalAnswerPrefix) + " " + parsed.final_payload;
            have_act = true;
            break;
        }
        auto rest = strip_label(line, "Action");
        if (!rest) rest = strip_label(line, "Act");
        if (rest) {
            parsed.act_text = std::string(*rest);
            have_act = true;
            break;
        }
    }
    if (!have_act) {
        parsed.error = syntax_error(
            "no action found. Write one line \"Act t: tool_name(arguments)\" or \"Final Answer: ...\"");
        return parsed;
    }
    if (parsed.final) return parsed;
    auto call = parse_tool_call(parsed.act_text);
    if (!call) {
        parsed.error = syntax_error("cannot parse the action \"" + parsed.act_text + "\": " + call.error);
        return parsed;
    }
    parsed.call = std::move(call.call);
    return parsed;
}

std::string parse_thought(std::string_view output) {
    for (auto line : split_lines(output)) {
        if (line.empty()) continue;
        if (auto rest = strip_label(line, "Thought")) return std::string(*rest);
        return std::string(line);
    }
    return {};
}

std::string selection_prompt(std::string_view thought, const std::vector<std::string>& candidates) {
    std::string out =
        "Pick the action that carries out the thought below. Only the listed actions are allowed.\n"
        "Thought: ";
    out += thought;
    out += "\nActions:\n";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        out += std::to_string(i) + ". " + candidates[i] + "\n";
    }
    out += "Reply with the number of one action.";
    return out;
}

Selection parse_selection(std::string_view reply, const std::vector<std::string>& candidates) {
    if (candidates.empty()) return {std::nullopt, "there are no actions to choose from"};
    std::string_view text;
    for (auto line : split_lines(reply)) {
        if (!line.empty()) {
            text = line;
            break;
        }
    }
    if (auto rest = strip_label(text, "Action")) text = *rest;
    else if (auto rest2 = strip_label(text, "Act")) text = *rest2;
    if (text.empty()) return {std::nullopt, "empty selection. Reply with the number of one listed action"};

    std::size_t digits = 0;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
    const auto tail = trim(text.substr(digits));
    if (digits > 0 && (tail.empty() || tail == "." || tail == ")" || tail == ":")) {
        auto index = parse_integer(text.substr(0, digits));
        if (index && static_cast<unsigned long long>(*index) < candidates.size()) {
            return {static_cast<std::size_t>(*index), {}};
        }
        return {std::nullopt, "selection " + std::string(text.substr(0, digits)) +
                                  " is not in the list. Choose a number from 0 to " +
                                  std::to_string(candidates.size() - 1)};
    }
    if (digits > 0) {
        // "3. get_relations(x)" echoes a list line; the text must agree with the number.
        auto index = parse_integer(text.substr(0, digits));
        auto rest = trim(tail.substr(tail.front() == '.' || tail.front() == ':' || tail.front() == ')' ? 1 : 0));
        if (index && static_cast<unsigned long long>(*index) < candidates.size() && candidates[*index] == rest) {
            return {static_cast<std::size_t>(*index), {}};
        }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i] == text) return {i, {}};
    }
    if (auto call = parse_tool_call(text)) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            auto candidate = parse_tool_call(candidates[i]);
            if (candidate && *candidate.call == *call.call) return {i, {}};
        }
    }
    return {std::nullopt, "\"" + std::string(text) + "\" is not one of the listed actions. Reply with its number"};
}

}  // namespace mw::agent
