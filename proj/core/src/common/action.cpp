// SPDX-License-Identifier: Apache-2.0
#include "middleware/action.hpp"

#include <cctype>

#include "middleware/text.hpp"

namespace mw {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

ToolCallParse fail(std::string message) { return ToolCallParse{std::nullopt, std::move(message)}; }

}  // namespace

ToolCallParse parse_tool_call(std::string_view text) {
    text = trim(text);
    std::size_t pos = 0;
    if (text.empty() || !is_name_start(text[0])) {
        return fail("an action must start with a tool name");
    }
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    ToolCall call;
    call.name = std::string(text.substr(0, pos));
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size() || text[pos] != '(') {
        return fail("expected '(' after the tool name '" + call.name + "'");
    }
    if (text.back() != ')') {
        return fail("the action must end with ')'");
    }
    const std::string_view body = text.substr(pos + 1, text.size() - pos - 2);
    if (trim(body).empty()) return ToolCallParse{std::move(call), {}};

    std::size_t i = 0;
    while (true) {
        while (i < body.size() && is_space(body[i])) ++i;
        std::string arg;
        if (i < body.size() && body[i] == '"') {
            ++i;
            bool closed = false;
            while (i < body.size()) {
                const char c = body[i];
                if (c == '\\' && i + 1 < body.size() && (body[i + 1] == '"' || body[i + 1] == '\\')) {
                    arg += body[i + 1];
                    i += 2;
                } else if (c == '"') {
                    closed = true;
                    ++i;
                    break;
                } else {
                    arg += c;
                    ++i;
                }
            }
            if (!closed) return fail("unterminated quoted argument");
            while (i < body.size() && is_space(body[i])) ++i;
            if (i < body.size() && body[i] != ',') {
                return fail("unexpected text after a quoted argument");
            }
        } else {
            const std::size_t start = i;
            while (i < body.size() && body[i] != ',') {
                const char c = body[i];
                if (c == '(' || c == ')') {
                    return fail("nested calls are not supported; quote arguments that contain parentheses");
                }
                if (c == '"') return fail("misplaced quote inside an argument");
                ++i;
            }
            const std::string_view raw = trim(body.substr(start, i - start));
            if (raw.empty()) return fail("empty argument");
            arg = std::string(raw);
        }
        call.args.push_back(std::move(arg));
        if (i >= body.size()) break;
        ++i;  // comma
        if (trim(body.substr(i)).empty()) return fail("empty argument");
    }
    return ToolCallParse{std::move(call), {}};
}

bool needs_quoting(std::string_view arg) {
    if (arg.empty()) return true;
    if (is_space(arg.front()) || is_space(arg.back())) return true;
    for (char c : arg) {
        if (c == ',' || c == '(' || c == ')' || c == '"' || c == '\\' || c == '\n' || c == '\r') {
            return true;
        }
    }
    return false;
}

std::string quote_argument(std::string_view arg) {
    std::string out = "\"";
    for (char c : arg) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_tool_call(const ToolCall& call) {
    return render_tool_call(call, {});
}

std::string render_tool_call(const ToolCall& call, const std::vector<bool>& always_quote) {
    std::string out = call.name + "(";
    for (std::size_t i = 0; i < call.args.size(); ++i) {
        if (i > 0) out += ", ";
        const bool forced = i < always_quote.size() && always_quote[i];
        out += (forced || needs_quoting(call.args[i])) ? quote_argument(call.args[i]) : call.args[i];
    }
    out += ")";
    return out;
}

}  // namespace mw
