// SPDX-License-Identifier: Apache-2.0
#include "middleware/agent/agent.hpp"

#include <gtest/gtest.h>

#include "middleware/agent/prompt.hpp"
#include "middleware/eval/suite.hpp"
#include "middleware/fixtures/fixtures.hpp"
#include "test_support.hpp"

namespace mw::agent {
namespace {

using llm::ScriptedBackend;

class KbAgentTest : public ::testing::Test {
protected:
    static const kb::TripleStore& store() {
        static const kb::TripleStore s = fixtures::kb_store();
        return s;
    }
    static const eval::KbTask& task(const std::string& id) {
        static const auto tasks = fixtures::kb_tasks();
        for (const auto& t : tasks) {
            if (t.id == id) return t;
        }
        throw std::invalid_argument(id);
    }
    static KbEnvironment env_for(const eval::KbTask& t) { return KbEnvironment(store(), t.entities); }
};

TEST_F(KbAgentTest, GoldReplayErrorFeedback) {
    const auto& t = task("kb-none-01");
    auto env = env_for(t);
    ScriptedBackend backend(eval::gold_script(t, store(), Scheme::kErrorFeedback));
    const auto trace = run_episode(t.question, env, backend, {});
    EXPECT_EQ(trace.terminal, Terminal::kFinalAnswer);
    EXPECT_EQ(trace.answer, t.gold);
    EXPECT_EQ(trace.steps.size(), t.gold_actions.size());
    EXPECT_EQ(trace.retry_count(), 0u);
    EXPECT_EQ(trace.model_calls, t.gold_actions.size());
    EXPECT_EQ(backend.remaining(), 0u);
    EXPECT_TRUE(trace.steps.back().is_final());
    EXPECT_EQ(trace.steps.back().act, "Final Answer: #2");
    EXPECT_GT(trace.input_tokens, 0u);
    EXPECT_EQ(trace.wall_ms, 0);
}

TEST_F(KbAgentTest, GoldReplayDecoupled) {
    const auto& t = task("kb-none-01");
    auto env = env_for(t);
    ScriptedBackend backend(eval::gold_script(t, store(), Scheme::kDecoupled));
    AgentConfig cfg;
    cfg.scheme = Scheme::kDecoupled;
    const auto trace = run_episode(t.question, env, backend, cfg);
    EXPECT_EQ(trace.terminal, Terminal::kFinalAnswer);
    EXPECT_EQ(trace.answer, t.gold);
    ASSERT_EQ(trace.steps.size(), t.gold_actions.size());
    for (std::size_t i = 0; i < trace.steps.size(); ++i) EXPECT_EQ(trace.steps[i].act, t.gold_actions[i]);
    EXPECT_EQ(trace.model_calls, 2 * t.gold_actions.size());
}

TEST_F(KbAgentTest, CountAnswerReplays) {
    for (const auto& t : fixtures::kb_tasks()) {
        if (t.category != eval::KbCategory::kCounting) continue;
        auto env = env_for(t);
        ScriptedBackend backend(eval::gold_script(t, store(), Scheme::kErrorFeedback));
        const auto trace = run_episode(t.question, env, backend, {});
        EXPECT_EQ(trace.answer.kind, Answer::Kind::kCount) << t.id;
        EXPECT_EQ(trace.answer, t.gold) << t.id;
    }
}

// Invalid first outputs of each kind; every one must cost exactly one retry.
const std::vector<std::string> kInvalidFirstSteps = {
    "Thought 1: look around.\nAct 1: get_relation(Christopher Nolan)",
    "Thought 1: look around.\nAct 1: get_relations(Christopher Nolan, Tom Hardy)",
    "Thought 1: look around.\nAct 1: get_relations(Nobody Known)",
    "Thought 1: I am not sure what to do.",
    "Thought 1: done already.\nFinal Answer: #7",
    "Thought 1: films.\nAct 1: get_neighbors(Christopher Nolan, film.director.film",
    "Thought 1: intersect.\nAct 1: intersection(Christopher Nolan, Tom Hardy)",
};

TEST_F(KbAgentTest, ErrorFeedbackRecoversWithOneRetry) {
    const auto& t = task("kb-none-01");
    const auto gold = eval::gold_script(t, store(), Scheme::kErrorFeedback);
    for (const auto& bad : kInvalidFirstSteps) {
        auto script = gold;
        script.insert(script.begin(), bad);
        auto env = env_for(t);
        ScriptedBackend backend(script);
        const auto trace = run_episode(t.question, env, backend, {});
        EXPECT_EQ(trace.terminal, Terminal::kFinalAnswer) << bad;
        EXPECT_EQ(trace.answer, t.gold) << bad;
        ASSERT_EQ(trace.steps.size(), t.gold_actions.size()) << bad;
        EXPECT_EQ(trace.steps[0].retries.size(), 1u) << bad;
        EXPECT_EQ(trace.retry_count(), 1u) << bad;
        EXPECT_TRUE(trace.steps[0].retries[0].obs.starts_with("Error: ")) << bad;

        // The retry prompt shows the failed attempt and its error.
        const auto requests = backend.requests();
        ASSERT_GE(requests.size(), 3u);
        const auto& second = requests[1][0].content;
        EXPECT_NE(second.find(trace.steps[0].retries[0].obs), std::string::npos) << bad;
        const auto& full = requests[2][0].content;
        const auto third = full.substr(full.rfind("\nQuestion: "));
        std::size_t observations = 0;
        for (auto pos = third.find("\nObservation 1: "); pos != std::string::npos;
             pos = third.find("\nObservation 1: ", pos + 1)) {
            ++observations;
        }
        EXPECT_EQ(observations, 2u) << bad;
    }
}

TEST_F(KbAgentTest, NoRetriesMeansUnanswered) {
    const auto& t = task("kb-none-01");
    auto script = eval::gold_script(t, store(), Scheme::kErrorFeedback);
    script.insert(script.begin(), kInvalidFirstSteps[0]);
    auto env = env_for(t);
    ScriptedBackend backend(script);
    AgentConfig cfg;
    cfg.max_retries = 0;
    const auto trace = run_episode(t.question, env, backend, cfg);
    EXPECT_FALSE(trace.answered());
    EXPECT_EQ(trace.terminal, Terminal::kRetriesExhausted);
    ASSERT_EQ(trace.steps.size(), 1u);
    EXPECT_FALSE(trace.steps[0].ok);
    EXPECT_TRUE(trace.steps[0].retries.empty());
    EXPECT_EQ(trace.model_calls, 1u);
}

TEST_F(KbAgentTest, RetryLimitIsPerStep) {
    const auto& t = task("kb-none-01");
    auto script = eval::gold_script(t, store(), Scheme::kErrorFeedback);
    for (int i = 0; i < 4; ++i) script.insert(script.begin(), kInvalidFirstSteps[3]);
    auto env = env_for(t);
    ScriptedBackend backend(script);
    const auto trace = run_episode(t.question, env, backend, {});
    EXPECT_EQ(trace.terminal, Terminal::kRetriesExhausted);
    ASSERT_EQ(trace.steps.size(), 1u);
    EXPECT_EQ(trace.steps[0].retries.size(), 3u);
    EXPECT_EQ(trace.model_calls, 4u);
}

TEST_F(KbAgentTest, DecoupledInvalidSelectionsAreRetried) {
    const auto& t = task("kb-none-01");
    auto script = eval::gold_script(t, store(), Scheme::kDecoupled);
    script.insert(script.begin() + 1, {"99", "get_relations(Nobody)"});
    auto env = env_for(t);
    ScriptedBackend backend(script);
    AgentConfig cfg;
    cfg.scheme = Scheme::kDecoupled;
    const auto trace = run_episode(t.question, env, backend, cfg);
    EXPECT_EQ(trace.answer, t.gold);
    ASSERT_FALSE(trace.steps.empty());
    ASSERT_EQ(trace.steps[0].retries.size(), 2u);
    EXPECT_EQ(trace.steps[0].retries[0].act, "99");
    EXPECT_EQ(trace.steps[0].act, t.gold_actions[0]);

    // The third selection request carries both rejected replies as turns.
    const auto requests = backend.requests();
    ASSERT_GE(requests.size(), 4u);
    ASSERT_EQ(requests[3].size(), 5u);
    EXPECT_EQ(requests[3][1].role, llm::Role::kAssistant);
    EXPECT_EQ(requests[3][1].content, "99");
    EXPECT_TRUE(requests[3][2].content.starts_with("Error: selection 99 is not in the list."));

    // Selection retries stay out of the main context.
    const auto& next_thought_prompt = requests[4][0].content;
    EXPECT_EQ(next_thought_prompt.find("99"), std::string::npos);
}

TEST_F(KbAgentTest, DecoupledSingleCandidate) {
    KbEnvironment env(store(), {"Inception"});
    ASSERT_EQ(env.candidates().size(), 1u);
    ScriptedBackend backend({"I look at its relations.", "0"});
    AgentConfig cfg;
    cfg.scheme = Scheme::kDecoupled;
    cfg.max_steps = 1;
    const auto trace = run_episode("who starred in Inception?", env, backend, cfg);
    ASSERT_EQ(trace.steps.size(), 1u);
    EXPECT_EQ(trace.steps[0].act, "get_relations(Inception)");
    EXPECT_EQ(trace.steps[0].thought, "I look at its relations.");
    EXPECT_EQ(trace.terminal, Terminal::kBudgetExhausted);
}

TEST_F(KbAgentTest, DecoupledSelectionsExhaustRetries) {
    KbEnvironment env(store(), {"Inception"});
    ScriptedBackend backend({"think", "7", "8", "9", "10"});
    AgentConfig cfg;
    cfg.scheme = Scheme::kDecoupled;
    const auto trace = run_episode("q", env, backend, cfg);
    EXPECT_EQ(trace.terminal, Terminal::kRetriesExhausted);
    ASSERT_EQ(trace.steps.size(), 1u);
    EXPECT_FALSE(trace.steps[0].ok);
    EXPECT_EQ(trace.steps[0].thought, "think");
    EXPECT_EQ(trace.steps[0].retries.size(), 3u);
    EXPECT_EQ(backend.remaining(), 0u);
}

TEST_F(KbAgentTest, BudgetStopsEpisode) {
    const auto& t = task("kb-none-01");
    auto env = env_for(t);
    ScriptedBackend backend(eval::gold_script(t, store(), Scheme::kErrorFeedback));
    AgentConfig cfg;
    cfg.max_steps = 2;
    const auto trace = run_episode(t.question, env, backend, cfg);
    EXPECT_EQ(trace.terminal, Terminal::kBudgetExhausted);
    EXPECT_EQ(trace.steps.size(), 2u);
    EXPECT_FALSE(trace.answered());
}

TEST_F(KbAgentTest, BackendFailureEndsEpisode) {
    const auto& t = task("kb-none-01");
    auto env = env_for(t);
    auto script = eval::gold_script(t, store(), Scheme::kErrorFeedback);
    script.resize(2);
    ScriptedBackend backend(script);
    const auto trace = run_episode(t.question, env, backend, {});
    EXPECT_EQ(trace.terminal, Terminal::kTransportError);
    EXPECT_EQ(trace.steps.size(), 2u);
    EXPECT_FALSE(trace.detail.empty());
}

TEST_F(KbAgentTest, RunsAreDeterministic) {
    const auto& t = task("kb-none-03");
    auto run_once = [&] {
        auto env = env_for(t);
        auto script = eval::gold_script(t, store(), Scheme::kErrorFeedback);
        script.insert(script.begin() + 1, kInvalidFirstSteps[2]);
        ScriptedBackend backend(script);
        return to_jsonl(run_episode(t.question, env, backend, {}));
    };
    EXPECT_EQ(run_once(), run_once());
}

TEST_F(KbAgentTest, ContextOnlyGrows) {
    const auto& t = task("kb-none-03");
    auto env = env_for(t);
    auto script = eval::gold_script(t, store(), Scheme::kErrorFeedback);
    script.insert(script.begin() + 2, kInvalidFirstSteps[0]);
    ScriptedBackend backend(script);
    run_episode(t.question, env, backend, {});
    const auto requests = backend.requests();
    for (std::size_t i = 1; i < requests.size(); ++i) {
        const auto& prev = requests[i - 1][0].content;
        EXPECT_TRUE(requests[i][0].content.starts_with(prev)) << i;
    }
}

TEST_F(KbAgentTest, ZeroMaxStepsIsConfigError) {
    KbEnvironment env(store(), {"Inception"});
    ScriptedBackend backend({});
    AgentConfig cfg;
    cfg.max_steps = 0;
    EXPECT_THROW(run_episode("q", env, backend, cfg), ConfigError);
}

class DbAgentTest : public ::testing::Test {
protected:
    void SetUp() override { paths_ = fixtures::write_all(dir_.path()); }

    mw::testing::ScratchDir dir_{"dbagent"};
    fixtures::FixturePaths paths_;
};

TEST_F(DbAgentTest, GoldReplayProducesSql) {
    const auto tasks = fixtures::db_tasks(dir_.path());
    const auto& t = tasks.at(2);
    DbEnvironment env(db::DbSession::open(t.db_path));
    ScriptedBackend backend(eval::gold_script(t));
    const auto trace = run_episode(t.question, env, backend, {});
    EXPECT_EQ(trace.terminal, Terminal::kFinalAnswer);
    EXPECT_EQ(trace.answer, Answer::of_sql(t.gold_sql));
    EXPECT_EQ(env.session().assemble_sql().value.value_or(""), t.gold_sql);
}

TEST_F(DbAgentTest, ZeroShotPromptHasNoExample) {
    DbEnvironment env(db::DbSession::open(paths_.db));
    const auto header = render_header(env, "q", env.default_demonstration());
    EXPECT_EQ(header.find("\n\nExample:\n"), std::string::npos);
    EXPECT_NE(header.find("Database schema:\nCREATE TABLE departments"), std::string::npos);
}

TEST_F(DbAgentTest, DecoupledIsRejected) {
    DbEnvironment env(db::DbSession::open(paths_.db));
    ScriptedBackend backend({});
    AgentConfig cfg;
    cfg.scheme = Scheme::kDecoupled;
    EXPECT_THROW(run_episode("q", env, backend, cfg), ConfigError);
}

TEST_F(DbAgentTest, EmptyFinalAnswerIsRetried) {
    DbEnvironment env(db::DbSession::open(paths_.db));
    ScriptedBackend backend({"Thought 1: done.\nFinal Answer:", "Thought 1: done.\nFinal Answer: SELECT 1"});
    const auto trace = run_episode("q", env, backend, {});
    EXPECT_EQ(trace.answer, Answer::of_sql("SELECT 1"));
    ASSERT_EQ(trace.steps.size(), 1u);
    EXPECT_EQ(trace.steps[0].retries.size(), 1u);
}

TEST_F(DbAgentTest, ClauseArgumentsAreQuoted) {
    DbEnvironment env(db::DbSession::open(paths_.db));
    ScriptedBackend backend({"Thought 1: set it.\nAct 1: from(\"FROM employees\")", "Final Answer: SELECT 1"});
    const auto trace = run_episode("q", env, backend, {});
    ASSERT_EQ(trace.steps.size(), 2u);
    EXPECT_EQ(trace.steps[0].act, "from(\"FROM employees\")");
    EXPECT_EQ(env.render_action(ToolCall{"is_value_in_column", {"departments", "city", "Boston"}}),
              "is_value_in_column(departments, city, \"Boston\")");
}

}  // namespace
}  // namespace mw::agent
