// SPDX-License-Identifier: Apache-2.0
//
// Surface grammar shared by every tool: `tool_name(arg1, arg2)`.
// Arguments are bare tokens or double-quoted strings (`\"` and `\\` escapes).
// Bare tokens may not contain commas, quotes or parentheses; nested calls are
// rejected.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mw {

struct ToolCall {
    std::string name;
    std::vector<std::string> args;

    bool operator==(const ToolCall&) const = default;
};

struct ToolCallParse {
    std::optional<ToolCall> call;
    std::string error;  // set iff !call

    explicit operator bool() const { return call.has_value(); }
};

ToolCallParse parse_tool_call(std::string_view text);

/// Canonical rendering: `name(a, b)`, quoting only arguments that need it.
std::string render_tool_call(const ToolCall& call);

/// Same, but every argument whose index is set in `always_quote` is quoted.
std::string render_tool_call(const ToolCall& call, const std::vector<bool>& always_quote);

bool needs_quoting(std::string_view arg);
std::string quote_argument(std::string_view arg);

}  // namespace mw
