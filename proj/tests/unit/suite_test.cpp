// SPDX-License-Identifier: Apache-2.0
#include "middleware/eval/suite.hpp"

#include <gtest/gtest.h>

#include "middleware/fixtures/fixtures.hpp"
#include "test_support.hpp"

namespace mw::eval {
namespace {

BackendFactory kb_gold(const std::vector<KbTask>& tasks, const kb::TripleStore& store, agent::Scheme scheme) {
    return [&tasks, &store, scheme](const std::string& id) -> std::shared_ptr<llm::ChatBackend> {
        for (const auto& t : tasks) {
            if (t.id == id) return std::make_shared<llm::ScriptedBackend>(gold_script(t, store, scheme));
        }
        throw std::invalid_argument(id);
    };
}

class SuiteTest : public ::testing::Test {
protected:
    kb::TripleStore store_ = fixtures::kb_store();
    std::vector<KbTask> tasks_ = fixtures::kb_tasks();
};

TEST_F(SuiteTest, GoldKbSuiteScoresPerfectly) {
    for (auto scheme : {agent::Scheme::kErrorFeedback, agent::Scheme::kDecoupled}) {
        SuiteConfig cfg;
        cfg.agent.scheme = scheme;
        const auto result = run_kb_suite(tasks_, store_, kb_gold(tasks_, store_, scheme), cfg);
        EXPECT_DOUBLE_EQ(result.report.overall.score, 1.0);
        EXPECT_DOUBLE_EQ(result.report.overall.valid, 1.0);
        EXPECT_EQ(result.report.overall.n, tasks_.size());
        EXPECT_EQ(result.traces.size(), tasks_.size());
        EXPECT_EQ(result.transport_failures, 0u);
        EXPECT_EQ(result.report.scheme, agent::to_string(scheme));
    }
}

TEST_F(SuiteTest, ParallelRunsMatchSerial) {
    SuiteConfig serial;
    SuiteConfig parallel;
    parallel.jobs = 4;
    const auto factory = kb_gold(tasks_, store_, agent::Scheme::kErrorFeedback);
    const auto a = run_kb_suite(tasks_, store_, factory, serial);
    const auto b = run_kb_suite(tasks_, store_, factory, parallel);
    EXPECT_EQ(to_json(a.report), to_json(b.report));
    for (std::size_t i = 0; i < a.traces.size(); ++i) EXPECT_EQ(agent::to_jsonl(a.traces[i]), agent::to_jsonl(b.traces[i]));
}

TEST_F(SuiteTest, WritesTraces) {
    mw::testing::ScratchDir dir("suite-traces");
    SuiteConfig cfg;
    cfg.trace_dir = dir / "traces";
    const auto result = run_kb_suite(tasks_, store_, kb_gold(tasks_, store_, agent::Scheme::kErrorFeedback), cfg);
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
        const auto text = mw::testing::read_file(*cfg.trace_dir / (tasks_[i].id + ".jsonl"));
        EXPECT_EQ(text, agent::to_jsonl(result.traces[i]));
    }
}

TEST_F(SuiteTest, TransportFailuresAreCounted) {
    SuiteConfig cfg;
    const auto result = run_kb_suite(
        tasks_, store_, [](const std::string&) { return std::make_shared<llm::ScriptedBackend>(std::vector<std::string>{}); },
        cfg);
    EXPECT_EQ(result.transport_failures, tasks_.size());
    EXPECT_DOUBLE_EQ(result.report.overall.valid, 0.0);
    EXPECT_EQ(result.report.records[0].terminal, "transport_error");
}

TEST_F(SuiteTest, WrongAnswersScoreZero) {
    SuiteConfig cfg;
    const auto result = run_kb_suite(
        tasks_, store_,
        [](const std::string&) {
            return std::make_shared<llm::ScriptedBackend>(std::vector<std::string>{"Thought 1: guess.\nFinal Answer: #0"});
        },
        cfg);
    EXPECT_DOUBLE_EQ(result.report.overall.score, 0.0);
    EXPECT_DOUBLE_EQ(result.report.overall.valid, 0.0);
}

TEST(DbSuiteTest, GoldDbSuiteScoresPerfectly) {
    mw::testing::ScratchDir dir("suite-db");
    fixtures::write_all(dir.path());
    const auto tasks = fixtures::db_tasks(dir.path());
    SuiteConfig cfg;
    cfg.jobs = 2;
    const auto result = run_db_suite(
        tasks,
        [&tasks](const std::string& id) -> std::shared_ptr<llm::ChatBackend> {
            for (const auto& t : tasks) {
                if (t.id == id) return std::make_shared<llm::ScriptedBackend>(gold_script(t));
            }
            throw std::invalid_argument(id);
        },
        cfg);
    EXPECT_DOUBLE_EQ(result.report.overall.score, 1.0);
    EXPECT_DOUBLE_EQ(result.report.overall.valid, 1.0);
    ASSERT_EQ(result.report.groups.size(), 2u);
    EXPECT_GT(result.report.groups[0].n, 0u);
    EXPECT_GT(result.report.groups[1].n, 0u);
    EXPECT_EQ(result.report.records[0].prediction, tasks[0].gold_sql);

    cfg.agent.scheme = agent::Scheme::kDecoupled;
    EXPECT_THROW(run_db_suite(tasks, nullptr, cfg), agent::ConfigError);
}

}  // namespace
}  // namespace mw::eval
