// SPDX-License-Identifier: Apache-2.0
//
// Prompt rendering and parsing of model output.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "middleware/action.hpp"
#include "middleware/agent/environment.hpp"
#include "middleware/agent/trace.hpp"
#include "middleware/tool_result.hpp"

namespace mw::agent {

/// Instructions, tool docs, optional demonstration, briefing and question.
std::string render_header(const Environment& env, std::string_view question, std::string_view demonstration);

/// `Thought t: ...\nAct t: ...\nObservation t: ...` (Thought omitted when empty).
std::string render_exchange(std::size_t t, std::string_view thought, std::string_view act, std::string_view obs);

/// Lines of one step. Retries are inlined before the accepted action when
/// `inline_retries` is set.
std::string render_step(const Step& step, bool inline_retries);

/// The whole context: header followed by every step, each on new lines.
/// Appending a step only appends text.
std::string serialize_context(const Environment& env, std::string_view question, std::string_view demonstration,
                              const std::vector<Step>& steps, Scheme scheme);

struct ParsedStep {
    std::string thought;
    std::string act_text;  // raw text after `Act t:`, or the full `Final Answer: ...` line
    bool final = false;
    std::string final_payload;
    std::optional<ToolCall> call;
    std::optional<ToolError> error;

    bool ok() const { return !error.has_value(); }
};

/// Extracts the first Thought line and the first Act / Final Answer line
/// after it. Later content is ignored.
ParsedStep parse_step(std::string_view output);

/// Extracts the text of a thought-only reply, dropping a `Thought t:` label.
std::string parse_thought(std::string_view output);

std::string selection_prompt(std::string_view thought, const std::vector<std::string>& candidates);

struct Selection {
    std::optional<std::size_t> index;
    std::string error;
};

/// Accepts a candidate number or the exact text of a candidate action.
Selection parse_selection(std::string_view reply, const std::vector<std::string>& candidates);

}  // namespace mw::agent
