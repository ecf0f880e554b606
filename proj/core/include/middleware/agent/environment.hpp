// SPDX-License-Identifier: Apache-2.0
//
// Adapters that expose a tool session to the reasoning loop.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "middleware/action.hpp"
#include "middleware/agent/answer.hpp"
#include "middleware/db/db_tools.hpp"
#include "middleware/kb/kb_tools.hpp"

namespace mw::agent {

struct StepOutcome {
    std::string observation;
    bool ok = false;
    bool terminal = false;
    Answer answer;
};

class Environment {
public:
    virtual ~Environment() = default;

    virtual std::string_view kind() const = 0;  // "kb" or "db"
    virtual const std::string& instructions() const = 0;
    virtual const std::string& tool_docs() const = 0;
    virtual const std::string& default_demonstration() const = 0;
    /// Task-specific context placed before the question (entities, schema).
    virtual std::string briefing() const = 0;

    virtual StepOutcome act(const ToolCall& call) = 0;
    /// Handles a `Final Answer: <payload>` line.
    virtual StepOutcome final_answer(std::string_view payload) = 0;

    /// Canonical text of an action as it appears in contexts and traces.
    virtual std::string render_action(const ToolCall& call) const { return render_tool_call(call); }
};

class KbEnvironment : public Environment {
public:
    KbEnvironment(const kb::TripleStore& store, std::vector<std::string> topic_entities,
                  kb::KbToolsConfig config = {})
        : session_(store, std::move(topic_entities), config) {}

    std::string_view kind() const override { return "kb"; }
    const std::string& instructions() const override;
    const std::string& tool_docs() const override { return kb::kb_tool_docs(); }
    const std::string& default_demonstration() const override;
    std::string briefing() const override;

    StepOutcome act(const ToolCall& call) override;
    StepOutcome final_answer(std::string_view payload) override;

    std::vector<kb::KbAction> candidates() const { return session_.enumerate_candidates(); }
    kb::KbSession& session() { return session_; }
    const kb::KbSession& session() const { return session_; }

private:
    kb::KbSession session_;
};

class DbEnvironment : public Environment {
public:
    explicit DbEnvironment(db::DbSession session) : session_(std::move(session)) {}

    std::string_view kind() const override { return "db"; }
    const std::string& instructions() const override;
    const std::string& tool_docs() const override { return db::db_tool_docs(); }
    const std::string& default_demonstration() const override;
    std::string briefing() const override;

    StepOutcome act(const ToolCall& call) override;
    StepOutcome final_answer(std::string_view payload) override;
    std::string render_action(const ToolCall& call) const override;

    db::DbSession& session() { return session_; }

private:
    db::DbSession session_;
};

}  // namespace mw::agent
