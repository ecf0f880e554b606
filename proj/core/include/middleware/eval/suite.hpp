// SPDX-License-Identifier: Apache-2.0
//
// Runs a task suite: one episode per task, scored and aggregated.
#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "middleware/agent/agent.hpp"
#include "middleware/db/db_tools.hpp"
#include "middleware/eval/metrics.hpp"
#include "middleware/eval/report.hpp"
#include "middleware/eval/tasks.hpp"
#include "middleware/kb/kb_tools.hpp"
#include "middleware/kb/triple_store.hpp"
#include "middleware/llm/backend.hpp"

namespace mw::eval {

/// Called once per task; lets each episode own its backend.
using BackendFactory = std::function<std::shared_ptr<llm::ChatBackend>(const std::string& task_id)>;

struct SuiteConfig {
    agent::AgentConfig agent;
    std::size_t jobs = 1;
    RowSemantics semantics = RowSemantics::kMultiset;
    kb::KbToolsConfig kb;
    db::DbToolsConfig db;
    /// When set, each trace is written to `<dir>/<task id>.jsonl`.
    std::optional<std::filesystem::path> trace_dir;
};

struct SuiteResult {
    RunReport report;
    std::vector<agent::Trace> traces;  // task order
    std::size_t transport_failures = 0;
};

SuiteResult run_kb_suite(const std::vector<KbTask>& tasks, const kb::TripleStore& store, const BackendFactory& backends,
                         const SuiteConfig& config);
SuiteResult run_db_suite(const std::vector<DbTask>& tasks, const BackendFactory& backends, const SuiteConfig& config);

/// Model responses that replay a task's gold actions under a scheme. For
/// decoupled generation the selections are candidate indices, found by
/// replaying the actions on a fresh session; throws std::invalid_argument if a
/// gold action is not a legal candidate or fails.
std::vector<std::string> gold_script(const KbTask& task, const kb::TripleStore& store, agent::Scheme scheme,
                                     const kb::KbToolsConfig& config = {});
std::vector<std::string> gold_script(const DbTask& task);

}  // namespace mw::eval
