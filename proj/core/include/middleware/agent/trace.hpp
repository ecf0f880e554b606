// SPDX-License-Identifier: Apache-2.0
//
// Episode traces and their JSON-lines form.
//
// One object per step:
//   {"t", "thought", "act", "obs", "ok", "retries": [{"thought", "act", "obs"}], "scheme"}
// followed by one final object:
//   {"terminal", "answered", "answer", "steps", "input_tokens", "wall_ms"}
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "middleware/agent/answer.hpp"

namespace mw::agent {

enum class Scheme { kErrorFeedback, kDecoupled };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> scheme_from_string(std::string_view text);

/// A rejected action: under error feedback a failed tool call or unparseable
/// output, under decoupled generation an invalid candidate selection.
struct Attempt {
    std::string thought;
    std::string act;
    std::string obs;

    bool operator==(const Attempt&) const = default;
};

struct Step {
    std::size_t t = 0;
    std::string thought;
    std::string act;  // action text, or "Final Answer: <payload>"
    std::string obs;
    bool ok = true;   // false only for a step abandoned after its retries ran out
    std::vector<Attempt> retries;

    bool is_final() const;
    bool operator==(const Step&) const = default;
};

inline constexpr std::string_view kFinalAnswerPrefix = "Final Answer:";

enum class Terminal { kRunning, kFinalAnswer, kBudgetExhausted, kRetriesExhausted, kTransportError };

std::string_view to_string(Terminal terminal);
std::optional<Terminal> terminal_from_string(std::string_view text);

struct Trace {
    Scheme scheme = Scheme::kErrorFeedback;
    std::vector<Step> steps;
    Terminal terminal = Terminal::kRunning;
    Answer answer;
    std::string detail;  // backend error text, if any
    std::size_t input_tokens = 0;
    std::size_t model_calls = 0;
    std::int64_t wall_ms = 0;

    bool answered() const { return terminal == Terminal::kFinalAnswer; }
    std::size_t retry_count() const;
};

class TraceFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_jsonl(const Trace& trace);
/// Reads what to_jsonl writes. An empty stream yields an empty running trace.
Trace parse_trace_jsonl(std::istream& in);

/// `{a, b}` for entity sets, the number for counts, the SQL text, or "none".
std::string answer_text(const Answer& answer);

}  // namespace mw::agent
