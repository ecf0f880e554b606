// SPDX-License-Identifier: Apache-2.0
#include "mwagent/commands.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "middleware/db/db_tools.hpp"
#include "middleware/fixtures/fixtures.hpp"
#include "middleware/kb/kb_tools.hpp"
#include "middleware/text.hpp"
#include "middleware/llm/cached_backend.hpp"
#include "middleware/llm/http_backend.hpp"
#include "mwagent/run_spec.hpp"

namespace mwagent {

namespace {

using mw::agent::ConfigError;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Answers every request with a transport error; stands in for the live
// backend when a cache is replayed without an endpoint.
class OfflineBackend : public mw::llm::ChatBackend {
public:
    std::string complete(const std::vector<mw::llm::ChatMessage>&, const mw::llm::CompletionParams&) override {
        throw mw::llm::TransportError(0, "cache miss and no endpoint configured");
    }
};

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw IoError("cannot write " + path.string());
}

std::map<std::string, std::vector<std::string>> read_script_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read script file " + path.string());
    try {
        return nlohmann::json::parse(in).get<std::map<std::string, std::vector<std::string>>>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError("script file " + path.string() + " must map task ids to lists of responses (" + e.what() + ")");
    }
}

mw::eval::BackendFactory scripted_factory(std::map<std::string, std::vector<std::string>> scripts) {
    auto shared = std::make_shared<const std::map<std::string, std::vector<std::string>>>(std::move(scripts));
    return [shared](const std::string& id) {
        auto it = shared->find(id);
        return std::make_shared<mw::llm::ScriptedBackend>(it == shared->end() ? std::vector<std::string>{}
                                                                               : it->second);
    };
}

mw::eval::BackendFactory live_factory(const RunSpec& spec) {
    std::shared_ptr<mw::llm::ChatBackend> inner;
    if (!spec.http.endpoint.empty()) {
        inner = std::make_shared<mw::llm::HttpBackend>(spec.http);
    } else {
        inner = std::make_shared<OfflineBackend>();
    }
    std::shared_ptr<mw::llm::ChatBackend> backend = inner;
    if (spec.backend == "cached") {
        auto path = spec.cache.empty() ? spec.out / "cache.jsonl" : spec.cache;
        backend = std::make_shared<mw::llm::CachedBackend>(inner, path, spec.http.model);
    }
    return [backend](const std::string&) { return backend; };
}

template <typename Task, typename GoldFn>
mw::eval::BackendFactory make_factory(const RunSpec& spec, const std::vector<Task>& tasks, GoldFn&& gold) {
    if (spec.backend != "scripted") return live_factory(spec);
    if (spec.script != "gold") return scripted_factory(read_script_file(spec.script));
    std::map<std::string, std::vector<std::string>> scripts;
    for (const auto& t : tasks) {
        try {
            scripts[t.id] = gold(t);
        } catch (const std::invalid_argument& e) {
            throw IoError(std::string("cannot build the gold script: ") + e.what());
        }
    }
    return scripted_factory(std::move(scripts));
}

mw::kb::TripleStore load_store(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open knowledge base " + path.string());
    try {
        return mw::kb::load_triples(in);
    } catch (const mw::kb::LoadError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

int cmd_run(RunSpec spec, std::ostream& out, std::ostream& err) {
    validate(spec);
    if (!std::filesystem::exists(spec.tasks)) throw IoError("task file " + spec.tasks.string() + " does not exist");
    spec.suite.trace_dir = spec.out / "traces";
    std::filesystem::create_directories(*spec.suite.trace_dir);

    mw::eval::SuiteResult result;
    try {
        if (spec.environment == "kb") {
            const auto tasks = mw::eval::load_kb_tasks(spec.tasks);
            const auto kb_path = spec.kb.empty() ? spec.tasks.parent_path() / mw::fixtures::kKbFile : spec.kb;
            const auto store = load_store(kb_path);
            const auto scheme = spec.suite.agent.scheme;
            auto factory = make_factory(spec, tasks, [&](const mw::eval::KbTask& t) {
                return mw::eval::gold_script(t, store, scheme, spec.suite.kb);
            });
            result = mw::eval::run_kb_suite(tasks, store, factory, spec.suite);
        } else {
            const auto tasks = mw::eval::load_db_tasks(spec.tasks);
            auto factory =
                make_factory(spec, tasks, [](const mw::eval::DbTask& t) { return mw::eval::gold_script(t); });
            result = mw::eval::run_db_suite(tasks, factory, spec.suite);
        }
    } catch (const mw::eval::TaskFormatError& e) {
        throw IoError(spec.tasks.string() + ": " + e.what());
    } catch (const mw::db::OpenError& e) {
        throw IoError(e.what());
    }

    const auto text = mw::eval::to_text(result.report);
    write_file(spec.out / "report.json", mw::eval::to_json(result.report));
    write_file(spec.out / "report.txt", text);
    out << text;
    if (result.transport_failures > 0) {
        err << "mwagent: " << result.transport_failures << " task(s) stopped on a backend failure\n";
        return kTransportError;
    }
    return kOk;
}

int cmd_inspect(const std::filesystem::path& path, std::optional<std::size_t> step, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trace " + path.string());
    mw::agent::Trace trace;
    try {
        trace = mw::agent::parse_trace_jsonl(in);
    } catch (const mw::agent::TraceFormatError& e) {
        throw IoError("malformed trace " + path.string() + ": " + e.what());
    }
    if (step) {
        bool found = false;
        for (const auto& s : trace.steps) found = found || s.t == *step;
        if (!found) throw ConfigError("trace has no step " + std::to_string(*step));
    }
    out << render_trace(trace, path.filename().string(), step);
    return kOk;
}

}  // namespace

std::string render_trace(const mw::agent::Trace& trace, const std::string& name, std::optional<std::size_t> step) {
    std::ostringstream out;
    const auto retries = trace.retry_count();
    out << "trace " << name << ": scheme " << mw::agent::to_string(trace.scheme) << ", " << trace.steps.size()
        << (trace.steps.size() == 1 ? " step, " : " steps, ") << retries << (retries == 1 ? " retry" : " retries")
        << ", terminal " << mw::agent::to_string(trace.terminal) << "\n";
    for (const auto& s : trace.steps) {
        if (step && s.t != *step) continue;
        const auto t = std::to_string(s.t);
        out << "== step " << t << (s.retries.empty() ? "" : " (" + std::to_string(s.retries.size()) + " retried)")
            << "\n";
        for (const auto& r : s.retries) {
            if (!r.thought.empty()) out << "RETRY Thought " << t << ": " << r.thought << "\n";
            out << "RETRY Act " << t << ": " << r.act << "\n";
            out << "RETRY Observation " << t << ": " << r.obs << "\n";
        }
        const std::string mark = s.ok ? "" : "FAILED ";
        if (!s.thought.empty()) out << mark << "Thought " << t << ": " << s.thought << "\n";
        if (s.is_final()) {
            out << mark << s.act << "\n";
        } else {
            out << mark << "Act " << t << ": " << s.act << "\n";
        }
        out << mark << "Observation " << t << ": " << s.obs << "\n";
    }
    if (!step && trace.terminal != mw::agent::Terminal::kRunning) {
        out << "== result\n";
        out << "answered: " << (trace.answered() ? "yes" : "no") << "\n";
        if (trace.answered()) out << "answer: " << mw::agent::answer_text(trace.answer) << "\n";
        if (!trace.detail.empty()) out << "detail: " << trace.detail << "\n";
        out << "input tokens: " << trace.input_tokens << ", wall time: " << trace.wall_ms << " ms\n";
    }
    return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tool-augmented agent runner for SQL databases and knowledge bases", "mwagent"};
    app.require_subcommand(1);

    RunSpec spec;
    auto* run = app.add_subcommand("run", "Run a task suite and write traces and a report");
    std::string config_file;
    std::vector<std::string> settings;
    run->add_option("--config", config_file, "key = value settings file");
    run->add_option("--set", settings, "Extra key=value setting, applied after the config file");
    std::map<std::string, std::string> flag_values;
    std::vector<std::pair<std::string, CLI::Option*>> flags;
    const auto flag = [&](const std::string& key, const std::string& name, const std::string& help) {
        flags.emplace_back(key, run->add_option(name, flag_values[key], help));
    };
    flag("env", "--env", "Environment: db or kb");
    flag("tasks", "--tasks", "Task file (JSON lines)");
    flag("kb", "--kb", "Triple file for kb tasks (default: kb.tsv next to the task file)");
    flag("backend", "--backend", "http, scripted or cached");
    flag("script", "--script", "For the scripted backend: gold, or a JSON file of responses per task");
    flag("scheme", "--scheme", "error-feedback or decoupled");
    flag("jobs", "--jobs", "Tasks run in parallel");
    flag("out", "--out", "Output directory");
    flag("max_steps", "--max-steps", "Step budget per episode");
    flag("max_retries", "--max-retries", "Retries per step");
    flag("endpoint", "--endpoint", "Chat-completion base URL");
    flag("model", "--model", "Model name");
    flag("cache", "--cache", "Cache file for the cached backend");

    auto* inspect = app.add_subcommand("inspect", "Render a trace file");
    std::string trace_path;
    std::size_t step = 0;
    inspect->add_option("trace", trace_path, "Trace file (JSON lines)")->required();
    auto* step_option = inspect->add_option("--step", step, "Show one step only");

    auto* tools = app.add_subcommand("tools", "Print the tool documentation used in prompts");
    std::string tools_env;
    tools->add_option("env", tools_env, "db or kb")->required()->check(CLI::IsMember({"db", "kb"}));

    auto* fixtures = app.add_subcommand("fixtures", "Write the bundled knowledge base, database and task files");
    std::string fixture_dir;
    fixtures->add_option("dir", fixture_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (run->parsed()) {
            if (!config_file.empty()) {
                for (const auto& [k, v] : read_config_file(config_file)) apply_setting(spec, k, v);
            }
            for (const auto& kv : settings) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
                apply_setting(spec, std::string(mw::trim(kv.substr(0, eq))), std::string(mw::trim(kv.substr(eq + 1))));
            }
            for (const auto& [key, option] : flags) {
                if (option->count() > 0) apply_setting(spec, key, flag_values[key]);
            }
            return cmd_run(std::move(spec), out, err);
        }
        if (inspect->parsed()) {
            return cmd_inspect(trace_path, step_option->count() > 0 ? std::optional<std::size_t>(step) : std::nullopt,
                               out);
        }
        if (tools->parsed()) {
            out << (tools_env == "kb" ? mw::kb::kb_tool_docs() : mw::db::db_tool_docs());
            return kOk;
        }
        if (fixtures->parsed()) {
            const auto paths = mw::fixtures::write_all(fixture_dir);
            for (const auto& p : {paths.kb, paths.kb_tasks, paths.db, paths.db_tasks}) out << p.string() << "\n";
            return kOk;
        }
    } catch (const ConfigError& e) {
        err << "mwagent: config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << "mwagent: " << e.what() << "\n";
        return kIoError;
    }
    return kUsage;
}

}  // namespace mwagent
