// SPDX-License-Identifier: Apache-2.0
#include "middleware/kb/kb_tools.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kb_oracle.hpp"
#include "test_support.hpp"

namespace mw::kb {
namespace {

const char* kFamily =
    "Barack Obama\ttype\tpeople.person\n"
    "Barack Obama\tpeople.person.spouse_s\tMichelle Obama\n"
    "Barack Obama\tpeople.person.children\tMalia Obama\n"
    "Barack Obama\tpeople.person.children\tSasha Obama\n"
    "Barack Obama\tpeople.person.profession\tLawyer\n"
    "Barack Obama\tpeople.person.profession\tPolitician\n"
    "Barack Obama\tpeople.person.height\t#num#1.85\n"
    "Michelle Obama\ttype\tpeople.person\n"
    "Michelle Obama\tpeople.person.children\tMalia Obama\n"
    "Michelle Obama\tpeople.person.children\tSasha Obama\n"
    "Michelle Obama\tpeople.person.profession\tLawyer\n"
    "Malia Obama\ttype\tpeople.person\n"
    "Malia Obama\tpeople.person.birth_year\t#num#1998\n"
    "Sasha Obama\ttype\tpeople.person\n"
    "Sasha Obama\tpeople.person.birth_year\t#num#2001\n"
    "Sasha Obama\tpeople.person.birth_year\t#num#1990\n"
    "Lawyer\ttype\tpeople.profession\n"
    "Politician\ttype\tpeople.profession\n";

class KbSessionTest : public ::testing::Test {
protected:
    KbSessionTest() : store_(mw::testing::store_from_text(kFamily)), session_(store_, {"Barack Obama", "Michelle Obama"}) {}

    ToolResult run(const std::string& text) {
        auto p = parse_tool_call(text);
        EXPECT_TRUE(p) << text;
        return session_.execute(*p.call);
    }
    ToolResult ok(const std::string& text) {
        auto r = run(text);
        EXPECT_TRUE(r.ok()) << text << " -> " << r.observation;
        return r;
    }
    ToolErrorCode fails(const std::string& text) {
        const auto vars = session_.variables().size();
        const auto log = session_.log().size();
        auto r = run(text);
        EXPECT_FALSE(r.ok()) << text;
        EXPECT_EQ(session_.variables().size(), vars) << "failed action changed state: " << text;
        EXPECT_EQ(session_.log().size(), log);
        EXPECT_NE(r.observation.find(kRetryInstruction), std::string::npos);
        return r.error ? r.error->code : ToolErrorCode::kEngine;
    }

    TripleStore store_;
    KbSession session_;
};

TEST_F(KbSessionTest, RelationsThenNeighborsBuildsVariables) {
    EXPECT_EQ(ok("get_relations(Barack Obama)").observation,
              "[people.person.children, people.person.height, people.person.profession, people.person.spouse_s, type]");
    EXPECT_EQ(ok("get_neighbors(Barack Obama, people.person.children)").observation,
              "variable #0 (2 entities), which are instances of people.person");
    ASSERT_EQ(session_.variables().size(), 1u);
    EXPECT_EQ(session_.variables()[0].members, (EntitySet{"Malia Obama", "Sasha Obama"}));
    EXPECT_EQ(session_.log().size(), 2u);
}

TEST_F(KbSessionTest, ArgumentsMustBeTopicEntitiesOrVariables) {
    EXPECT_EQ(fails("get_relations(Malia Obama)"), ToolErrorCode::kUnknownArgument);
    EXPECT_EQ(fails("get_relations(#0)"), ToolErrorCode::kUnknownArgument);
    EXPECT_EQ(fails("get_relations(#00)"), ToolErrorCode::kUnknownArgument);
}

TEST_F(KbSessionTest, NeighborsRequireKnownRelation) {
    EXPECT_EQ(fails("get_neighbors(Barack Obama, people.person.children)"), ToolErrorCode::kPrerequisiteViolation);
    ok("get_relations(Barack Obama)");
    EXPECT_EQ(fails("get_neighbors(Barack Obama, people.person.parents)"), ToolErrorCode::kPrerequisiteViolation);
    // Relations learnt for one argument do not carry over to another.
    EXPECT_EQ(fails("get_neighbors(Michelle Obama, people.person.children)"), ToolErrorCode::kPrerequisiteViolation);
}

TEST_F(KbSessionTest, UnknownToolAndArity) {
    auto r = run("frobnicate(x)");
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.error->code, ToolErrorCode::kUnknownTool);
    for (auto tool : documented_tools()) {
        EXPECT_NE(r.observation.find(std::string(tool_name(tool))), std::string::npos);
    }
    EXPECT_EQ(fails("get_relations(Barack Obama, x)"), ToolErrorCode::kBadArity);
    EXPECT_EQ(fails("count()"), ToolErrorCode::kBadArity);
}

TEST_F(KbSessionTest, IntersectionRules) {
    ok("get_relations(Barack Obama)");
    ok("get_neighbors(Barack Obama, people.person.children)");     // #0
    ok("get_relations(Michelle Obama)");
    ok("get_neighbors(Michelle Obama, people.person.children)");   // #1
    ok("get_neighbors(Michelle Obama, people.person.profession)"); // #2
    EXPECT_EQ(fails("intersection(#0, Barack Obama)"), ToolErrorCode::kPrerequisiteViolation);
    EXPECT_EQ(fails("intersection(#0, #2)"), ToolErrorCode::kTypeMismatch);
    EXPECT_EQ(ok("intersection(#0, #1)").observation, "variable #3 (2 entities), which are instances of people.person");
}

TEST_F(KbSessionTest, SuperlativesNeedAttributesAndKeepPerEntityExtremes) {
    ok("get_relations(Barack Obama)");
    ok("get_neighbors(Barack Obama, people.person.children)");
    EXPECT_EQ(fails("argmax(#0, people.person.birth_year)"), ToolErrorCode::kPrerequisiteViolation);
    EXPECT_EQ(fails("get_attributes(Barack Obama)"), ToolErrorCode::kPrerequisiteViolation);
    EXPECT_EQ(ok("get_attributes(#0)").observation, "[people.person.birth_year]");
    ok("argmax(#0, people.person.birth_year)");
    EXPECT_EQ(session_.variables()[1].members, EntitySet{"Sasha Obama"});
    // Sasha's smallest value (1990) beats Malia's 1998.
    ok("argmin(#0, people.person.birth_year)");
    EXPECT_EQ(session_.variables()[2].members, EntitySet{"Sasha Obama"});
}

TEST_F(KbSessionTest, SuperlativeTiesAreKept) {
    const auto store = mw::testing::store_from_text(
        "q\tr\ta\nq\tr\tb\nq\tr\tc\na\tv\t#num#3\nb\tv\t#num#3\nc\tv\t#num#1\n");
    KbSession s(store, {"q"});
    ASSERT_TRUE(s.execute(ToolCall{"get_relations", {"q"}}).ok());
    ASSERT_TRUE(s.execute(ToolCall{"get_neighbors", {"q", "r"}}).ok());
    ASSERT_TRUE(s.execute(ToolCall{"get_attributes", {"#0"}}).ok());
    ASSERT_TRUE(s.execute(ToolCall{"argmax", {"#0", "v"}}).ok());
    EXPECT_EQ(s.variables()[1].members, (EntitySet{"a", "b"}));
}

TEST_F(KbSessionTest, CountAnswersOnlyRightAfterCount) {
    ok("get_relations(Barack Obama)");
    ok("get_neighbors(Barack Obama, people.person.children)");
    EXPECT_EQ(ok("count(#0)").observation, "2");
    EXPECT_EQ(ok("final_answer(#0)").observation, "final answer: 2 (count of #0)");
    ASSERT_TRUE(session_.final_answer().has_value());
    EXPECT_EQ(session_.final_answer()->count, 2);

    KbSession other(store_, {"Barack Obama"});
    ASSERT_TRUE(other.execute(ToolCall{"get_relations", {"Barack Obama"}}).ok());
    ASSERT_TRUE(other.execute(ToolCall{"get_neighbors", {"Barack Obama", "people.person.children"}}).ok());
    ASSERT_TRUE(other.execute(ToolCall{"count", {"#0"}}).ok());
    ASSERT_TRUE(other.execute(ToolCall{"get_relations", {"#0"}}).ok());
    ASSERT_TRUE(other.execute(ToolCall{"final_answer", {"#0"}}).ok());
    EXPECT_FALSE(other.final_answer()->count.has_value());
    EXPECT_EQ(other.final_answer()->entities, (EntitySet{"Malia Obama", "Sasha Obama"}));
}

TEST_F(KbSessionTest, FinalAnswerNeedsAVariable) {
    EXPECT_EQ(fails("final_answer(Barack Obama)"), ToolErrorCode::kUnknownArgument);
}

TEST_F(KbSessionTest, ListsAreTruncated) {
    KbToolsConfig config;
    config.list_limit = 2;
    KbSession s(store_, {"Barack Obama"}, config);
    EXPECT_EQ(s.execute(ToolCall{"get_relations", {"Barack Obama"}}).observation,
              "[people.person.children, people.person.height] (+3 more)");
    // Truncated relations stay usable.
    EXPECT_TRUE(s.execute(ToolCall{"get_neighbors", {"Barack Obama", "type"}}).ok());
}

// Every action over the argument universe that succeeds must be offered as a
// candidate, and every candidate must succeed.
void check_candidates_exact(const KbSession& session) {
    const auto candidates = session.enumerate_candidates();
    std::vector<std::string> args(session.topic_entities());
    for (const auto& v : session.variables()) args.push_back(v.token());
    std::set<std::string> names;
    for (const auto& [k, rels] : session.relation_knowledge()) names.insert(rels.begin(), rels.end());
    for (const auto& [k, attrs] : session.attribute_knowledge()) names.insert(attrs.begin(), attrs.end());
    names.insert("unknown.relation");

    std::vector<KbAction> all;
    for (KbTool tool : {KbTool::kGetRelations, KbTool::kGetNeighbors, KbTool::kIntersection, KbTool::kGetAttributes,
                        KbTool::kArgmax, KbTool::kArgmin, KbTool::kCount, KbTool::kFinalAnswer}) {
        for (const auto& a : args) {
            if (tool_arity(tool) == 1) {
                all.push_back({tool, {a}});
            } else if (tool == KbTool::kIntersection) {
                for (const auto& b : args) all.push_back({tool, {a, b}});
            } else {
                for (const auto& n : names) all.push_back({tool, {a, n}});
            }
        }
    }
    for (const auto& action : all) {
        KbSession probe = session;
        const bool succeeded = probe.execute(action).ok();
        const bool offered = std::find(candidates.begin(), candidates.end(), action) != candidates.end();
        EXPECT_EQ(succeeded, offered) << action.render();
    }
}

TEST_F(KbSessionTest, CandidatesAreExactlyTheLegalActions) {
    check_candidates_exact(session_);
    ok("get_relations(Barack Obama)");
    check_candidates_exact(session_);
    ok("get_neighbors(Barack Obama, people.person.children)");
    ok("get_relations(Michelle Obama)");
    ok("get_neighbors(Michelle Obama, people.person.profession)");
    check_candidates_exact(session_);
    ok("get_attributes(#0)");
    ok("count(#1)");
    check_candidates_exact(session_);
}

TEST(KbCandidates, RandomWalksStayLegal) {
    std::mt19937 rng(99);
    for (int round = 0; round < 10; ++round) {
        mw::testing::RandomStoreSpec spec;
        spec.entities = 30;
        spec.triples = 300;
        const TripleStore store(mw::testing::random_triples(rng, spec));
        KbSession session(store, {"e1", "e2"});
        for (int step = 0; step < 12; ++step) {
            auto candidates = session.enumerate_candidates();
            ASSERT_FALSE(candidates.empty());
            check_candidates_exact(session);
            const auto pick = candidates[rng() % candidates.size()];
            if (pick.tool == KbTool::kFinalAnswer) continue;
            ASSERT_TRUE(session.execute(pick).ok()) << pick.render();
        }
    }
}

TEST(KbDocs, SevenCardsWithPrerequisites) {
    const auto& docs = kb_tool_docs();
    std::size_t cards = 0;
    for (std::size_t pos = docs.find("Prerequisite:"); pos != std::string::npos; pos = docs.find("Prerequisite:", pos + 1)) {
        ++cards;
    }
    EXPECT_EQ(cards, 7u);
    EXPECT_EQ(documented_tools().size(), 7u);
    for (auto tool : documented_tools()) {
        EXPECT_NE(docs.find(std::string(tool_name(tool)) + "("), std::string::npos);
    }
}

}  // namespace
}  // namespace mw::kb
