// SPDX-License-Identifier: Apache-2.0
#include "middleware/eval/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "middleware/action.hpp"
#include "middleware/agent/environment.hpp"

namespace mw::eval {

namespace {

// Runs fn(i) for every index on `jobs` threads; rethrows the first failure
// by task order.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

void write_trace(const SuiteConfig& config, const std::string& id, const agent::Trace& trace) {
    if (!config.trace_dir) return;
    std::filesystem::create_directories(*config.trace_dir);
    const auto path = *config.trace_dir / (id + ".jsonl");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << agent::to_jsonl(trace);
    if (!out) throw std::runtime_error("cannot write trace " + path.string());
}

TaskRecord base_record(const std::string& id, const agent::Trace& trace) {
    TaskRecord r;
    r.id = id;
    r.answered = trace.answered();
    r.terminal = std::string(agent::to_string(trace.terminal));
    r.prediction = trace.answered() ? agent::answer_text(trace.answer) : "";
    r.steps = trace.steps.size();
    r.retries = trace.retry_count();
    r.input_tokens = trace.input_tokens;
    r.wall_ms = trace.wall_ms;
    return r;
}

SuiteResult finish(const std::string& environment, const SuiteConfig& config,
                   const std::vector<std::pair<std::string, std::string>>& expected, std::vector<TaskRecord> records,
                   std::vector<agent::Trace> traces) {
    SuiteResult result;
    for (const auto& t : traces) {
        if (t.terminal == agent::Terminal::kTransportError) ++result.transport_failures;
    }
    result.report = aggregate(environment, std::string(agent::to_string(config.agent.scheme)), expected,
                              std::move(records));
    result.traces = std::move(traces);
    return result;
}

std::string thought_for(std::size_t n, const std::string& action) {
    auto paren = action.find('(');
    return "Thought " + std::to_string(n) + ": next I use " + action.substr(0, paren) + ".";
}

}  // namespace

SuiteResult run_kb_suite(const std::vector<KbTask>& tasks, const kb::TripleStore& store, const BackendFactory& backends,
                         const SuiteConfig& config) {
    std::vector<TaskRecord> records(tasks.size());
    std::vector<agent::Trace> traces(tasks.size());
    parallel_for(tasks.size(), config.jobs, [&](std::size_t i) {
        const auto& task = tasks[i];
        agent::KbEnvironment env(store, task.entities, config.kb);
        auto backend = backends(task.id);
        auto trace = agent::run_episode(task.question, env, *backend, config.agent);
        auto record = base_record(task.id, trace);
        record.valid = kb_validity(trace);
        record.score = trace.answered() ? kb_f1(trace.answer, task.gold) : 0.0;
        write_trace(config, task.id, trace);
        records[i] = std::move(record);
        traces[i] = std::move(trace);
    });
    std::vector<std::pair<std::string, std::string>> expected;
    for (const auto& t : tasks) expected.emplace_back(t.id, std::string(to_string(t.category)));
    return finish("kb", config, expected, std::move(records), std::move(traces));
}

SuiteResult run_db_suite(const std::vector<DbTask>& tasks, const BackendFactory& backends, const SuiteConfig& config) {
    if (config.agent.scheme == agent::Scheme::kDecoupled) {
        throw agent::ConfigError("decoupled generation is only available for the knowledge-base environment");
    }
    std::vector<TaskRecord> records(tasks.size());
    std::vector<agent::Trace> traces(tasks.size());
    parallel_for(tasks.size(), config.jobs, [&](std::size_t i) {
        const auto& task = tasks[i];
        agent::DbEnvironment env(db::DbSession::open(task.db_path, config.db));
        auto backend = backends(task.id);
        auto trace = agent::run_episode(task.question, env, *backend, config.agent);
        auto record = base_record(task.id, trace);
        const auto& conn = env.session().connection();
        if (trace.answered()) {
            const auto& sql = trace.answer.sql;
            record.valid = validity_sql(conn, sql);
            try {
                record.score = execution_accuracy(conn, sql, task.gold_sql, config.semantics) ? 1.0 : 0.0;
            } catch (const db::SqliteError& e) {
                throw std::runtime_error("gold SQL of task '" + task.id + "' fails: " + e.what());
            }
        }
        write_trace(config, task.id, trace);
        records[i] = std::move(record);
        traces[i] = std::move(trace);
    });
    std::vector<std::pair<std::string, std::string>> expected;
    for (const auto& t : tasks) expected.emplace_back(t.id, t.requires_content ? "Y" : "N");
    return finish("db", config, expected, std::move(records), std::move(traces));
}

std::vector<std::string> gold_script(const KbTask& task, const kb::TripleStore& store, agent::Scheme scheme,
                                     const kb::KbToolsConfig& config) {
    std::vector<std::string> script;
    if (scheme == agent::Scheme::kErrorFeedback) {
        for (std::size_t i = 0; i < task.gold_actions.size(); ++i) {
            const auto& action = task.gold_actions[i];
            const auto call = parse_tool_call(action);
            const auto thought = thought_for(i + 1, action);
            if (call && call.call->name == kb::tool_name(kb::KbTool::kFinalAnswer) && call.call->args.size() == 1) {
                script.push_back(thought + "\nFinal Answer: " + call.call->args[0]);
            } else {
                script.push_back(thought + "\nAct " + std::to_string(i + 1) + ": " + action);
            }
        }
        return script;
    }

    kb::KbSession session(store, task.entities, config);
    for (std::size_t i = 0; i < task.gold_actions.size(); ++i) {
        const auto& text = task.gold_actions[i];
        const auto parsed = parse_tool_call(text);
        std::optional<ToolError> error;
        const auto action = parsed ? kb::to_kb_action(*parsed.call, &error) : std::nullopt;
        if (!action) throw std::invalid_argument(task.id + ": gold action '" + text + "' does not parse");
        const auto candidates = session.enumerate_candidates();
        const auto it = std::find(candidates.begin(), candidates.end(), *action);
        if (it == candidates.end()) {
            throw std::invalid_argument(task.id + ": gold action '" + text + "' is not a legal candidate");
        }
        const auto thought = thought_for(i + 1, text);
        script.push_back(thought.substr(thought.find(':') + 2));
        script.push_back(std::to_string(it - candidates.begin()));
        if (!session.execute(*action).ok()) {
            throw std::invalid_argument(task.id + ": gold action '" + text + "' fails");
        }
    }
    return script;
}

std::vector<std::string> gold_script(const DbTask& task) {
    std::vector<std::string> script;
    for (std::size_t i = 0; i < task.gold_actions.size(); ++i) {
        script.push_back(thought_for(i + 1, task.gold_actions[i]) + "\nAct " + std::to_string(i + 1) + ": " +
                         task.gold_actions[i]);
    }
    script.push_back("Thought " + std::to_string(task.gold_actions.size() + 1) +
                     ": the query is complete.\nFinal Answer: " + task.gold_sql);
    return script;
}

}  // namespace mw::eval
