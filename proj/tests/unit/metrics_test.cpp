// SPDX-License-Identifier: Apache-2.0
#include "middleware/eval/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "middleware/fixtures/fixtures.hpp"
#include "sql_golden.hpp"
#include "sql_oracle.hpp"
#include "test_support.hpp"

namespace mw::eval {
namespace {

class MetricsTest : public ::testing::Test {
protected:
    void SetUp() override { mw::testing::create_golden_table(dir_ / "m.db"); }
    db::Connection conn() const { return db::Connection(dir_ / "m.db"); }

    mw::testing::ScratchDir dir_{"metrics"};
};

TEST_F(MetricsTest, GoldenPairsAgreeWithEngine) {
    const auto c = conn();
    for (const auto& p : mw::testing::kGoldenPairs) {
        EXPECT_EQ(execution_accuracy(c, p.predicted, p.gold, RowSemantics::kMultiset), p.multiset)
            << p.predicted << " | " << p.gold;
        EXPECT_EQ(execution_accuracy(c, p.predicted, p.gold, RowSemantics::kSet), p.set)
            << p.predicted << " | " << p.gold;
        EXPECT_EQ(mw::testing::engine_same_rows(c, p.predicted, p.gold, true), p.multiset) << p.predicted;
        EXPECT_EQ(mw::testing::engine_same_rows(c, p.predicted, p.gold, false), p.set) << p.predicted;
    }
}

TEST_F(MetricsTest, Validity) {
    const auto c = conn();
    EXPECT_TRUE(validity_sql(c, "SELECT * FROM t"));
    EXPECT_TRUE(validity_sql(c, "SELECT * FROM t;"));
    EXPECT_FALSE(validity_sql(c, "SELECT * FROM nope"));
    EXPECT_FALSE(validity_sql(c, "DELETE FROM t"));
    EXPECT_FALSE(validity_sql(c, "SELECT 1; SELECT 2"));
    EXPECT_FALSE(validity_sql(c, ""));
    EXPECT_FALSE(validity_sql(c, "SELEC 1"));
    EXPECT_FALSE(validity_sql(c, "SELECT abs(-9223372036854775807 - 1)"));
}

TEST_F(MetricsTest, GoldFailureThrows) {
    EXPECT_THROW(execution_accuracy(conn(), "SELECT 1", "SELECT nope FROM t"), db::SqliteError);
}

TEST(MetricsCompanyTest, FixtureGoldAgainstVariants) {
    mw::testing::ScratchDir dir("metrics-company");
    const auto paths = fixtures::write_all(dir.path());
    const auto tasks = fixtures::db_tasks(dir.path());
    db::Connection c(paths.db);
    std::mt19937 rng(11);
    std::vector<std::string> golds;
    for (const auto& t : tasks) golds.push_back(t.gold_sql);
    for (const auto& t : tasks) {
        EXPECT_TRUE(execution_accuracy(c, t.gold_sql, t.gold_sql)) << t.id;
        EXPECT_TRUE(validity_sql(c, t.gold_sql)) << t.id;
        for (int i = 0; i < 3; ++i) {
            const auto& other = golds[rng() % golds.size()];
            for (bool multiset : {true, false}) {
                const auto semantics = multiset ? RowSemantics::kMultiset : RowSemantics::kSet;
                EXPECT_EQ(execution_accuracy(c, other, t.gold_sql, semantics),
                          mw::testing::engine_same_rows(c, other, t.gold_sql, multiset))
                    << other << " | " << t.gold_sql;
            }
        }
    }
}

std::set<std::string> entities(std::initializer_list<const char*> names) { return {names.begin(), names.end()}; }

double oracle_f1(const std::set<std::string>& p, const std::set<std::string>& g) {
    std::vector<std::string> common;
    std::set_intersection(p.begin(), p.end(), g.begin(), g.end(), std::back_inserter(common));
    if (common.empty()) return 0.0;
    const double precision = static_cast<double>(common.size()) / static_cast<double>(p.size());
    const double recall = static_cast<double>(common.size()) / static_cast<double>(g.size());
    return 2 * precision * recall / (precision + recall);
}

TEST(KbF1Test, Identities) {
    using agent::Answer;
    const auto abc = Answer::of_entities(entities({"a", "b", "c"}));
    EXPECT_DOUBLE_EQ(kb_f1(abc, abc), 1.0);
    EXPECT_DOUBLE_EQ(kb_f1(Answer::of_entities(entities({"x"})), abc), 0.0);
    EXPECT_DOUBLE_EQ(kb_f1(Answer::of_entities({}), abc), 0.0);
    EXPECT_DOUBLE_EQ(kb_f1(abc, Answer::of_entities({})), 0.0);
    EXPECT_DOUBLE_EQ(kb_f1(Answer::of_entities({}), Answer::of_entities({})), 1.0);
    EXPECT_DOUBLE_EQ(kb_f1(Answer{}, abc), 0.0);
    EXPECT_DOUBLE_EQ(kb_f1(Answer::of_count(3), Answer::of_count(3)), 1.0);
    EXPECT_DOUBLE_EQ(kb_f1(Answer::of_count(3), Answer::of_count(4)), 0.0);
    EXPECT_DOUBLE_EQ(kb_f1(Answer::of_count(3), abc), 0.0);
    EXPECT_DOUBLE_EQ(kb_f1(abc, Answer::of_count(3)), 0.0);
    // P = 1/2, R = 1/3.
    EXPECT_DOUBLE_EQ(kb_f1(Answer::of_entities(entities({"a", "z"})), abc), 0.4);
}

TEST(KbF1Test, RandomSetsMatchFormula) {
    std::mt19937 rng(5);
    for (int i = 0; i < 500; ++i) {
        std::set<std::string> p;
        std::set<std::string> g;
        for (int k = 0; k < 8; ++k) {
            if (rng() % 2) p.insert("e" + std::to_string(rng() % 10));
            if (rng() % 2) g.insert("e" + std::to_string(rng() % 10));
        }
        if (p.empty() && g.empty()) continue;
        const double f = kb_f1(agent::Answer::of_entities(p), agent::Answer::of_entities(g));
        EXPECT_NEAR(f, oracle_f1(p, g), 1e-12);
        EXPECT_NEAR(f, kb_f1(agent::Answer::of_entities(g), agent::Answer::of_entities(p)), 1e-12);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
    }
}

TEST(KbValidityTest, AnsweredOnly) {
    agent::Trace t;
    t.terminal = agent::Terminal::kBudgetExhausted;
    EXPECT_FALSE(kb_validity(t));
    t.terminal = agent::Terminal::kFinalAnswer;
    EXPECT_TRUE(kb_validity(t));
}

}  // namespace
}  // namespace mw::eval
