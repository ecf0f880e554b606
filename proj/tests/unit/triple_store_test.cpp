// SPDX-License-Identifier: Apache-2.0
#include "middleware/kb/triple_store.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "kb_oracle.hpp"
#include "test_support.hpp"

namespace mw::kb {
namespace {

using mw::testing::store_from_text;

TEST(TripleLoader, ReadsAllObjectKinds) {
    const auto store = store_from_text(
        "# comment line\n"
        "Barack Obama\tpeople.person.profession\tLawyer\n"
        "\n"
        "Barack Obama\tpeople.person.birth_year\t#num#1961\r\n"
        "Barack Obama\tcommon.topic.alias\t\"Barry \\\"O\\\"\"\n"
        "Barack Obama\ttype\tpeople.person\n");
    EXPECT_EQ(store.size(), 4u);
    EXPECT_TRUE(store.has_entity("Barack Obama"));
    EXPECT_TRUE(store.has_entity("Lawyer"));
    EXPECT_FALSE(store.has_entity("Barry"));
    EXPECT_EQ(store.relations_of({"Barack Obama"}),
              (std::vector<std::string>{"common.topic.alias", "people.person.birth_year", "people.person.profession",
                                        "type"}));
    EXPECT_EQ(store.numeric_attributes_of({"Barack Obama"}), std::vector<std::string>{"people.person.birth_year"});
    EXPECT_EQ(store.classes_of("Barack Obama"), std::set<std::string>{"people.person"});
    const auto values = store.attribute_values({"Barack Obama"}, "people.person.birth_year");
    ASSERT_EQ(values.size(), 1u);
    EXPECT_EQ(values[0].second, 1961.0);
}

TEST(TripleLoader, ReportsTheOffendingLine) {
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {"a\tb\n", 1},
        {"a\tb\tc\nx\ty\tz\tw\n", 2},
        {"a\tb\t#num#ten\n", 1},
        {"a\tb\t#3\n", 1},
        {"a(x)\tb\tc\n", 1},
        {"\tb\tc\n", 1},
    };
    for (const auto& [text, line] : cases) {
        std::istringstream in(text);
        try {
            load_triples(in);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const LoadError& e) {
            EXPECT_EQ(e.line(), line) << text;
            EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)), std::string::npos);
        }
    }
}

TEST(TripleLoader, FormatTripleRoundTrips) {
    const std::vector<Triple> triples{
        {"a", "r", TypedObject::entity("b c")},
        {"a", "n", TypedObject::number(-2.5)},
        {"a", "s", TypedObject::string("quote \" and \\ slash")},
    };
    std::string text;
    for (const auto& t : triples) text += format_triple(t) + "\n";
    std::istringstream in(text);
    const auto store = load_triples(in);
    auto sorted = triples;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(store.triples(), sorted);
}

TEST(TokenRules, RejectsGrammarCharacters) {
    EXPECT_TRUE(is_valid_token("Barack Obama"));
    EXPECT_TRUE(is_valid_token("film.film.genre"));
    for (const char* bad : {"", "#0", " lead", "trail ", "a,b", "a(b", "a)b", "a\"b", "a{b", "a]b", "a\tb"}) {
        EXPECT_FALSE(is_valid_token(bad)) << bad;
    }
}

TEST(TripleStore, DuplicatesCollapse) {
    TripleStore store({{"a", "r", TypedObject::entity("b")}, {"a", "r", TypedObject::entity("b")}});
    EXPECT_EQ(store.size(), 1u);
    EXPECT_EQ(store.entity_count(), 2u);
}

TEST(TripleStore, UnknownEntitiesYieldEmptyResults) {
    TripleStore store({{"a", "r", TypedObject::entity("b")}});
    EXPECT_TRUE(store.relations_of({"zzz"}).empty());
    EXPECT_TRUE(store.neighbors_of({"zzz"}, "r").empty());
    EXPECT_TRUE(store.neighbors_of({"a"}, "missing").empty());
    EXPECT_TRUE(store.classes_of("b").empty());
}

TEST(TripleStore, MatchesFullScanOnRandomStores) {
    std::mt19937 rng(1234);
    for (int round = 0; round < 25; ++round) {
        mw::testing::RandomStoreSpec spec;
        spec.triples = 50 + rng() % 800;
        const auto triples = mw::testing::random_triples(rng, spec);
        const TripleStore store(triples);
        const mw::testing::ScanOracle oracle{triples};
        for (int q = 0; q < 40; ++q) {
            const auto es = mw::testing::random_entity_set(rng, spec.entities, 4);
            const auto r = "rel" + std::to_string(rng() % spec.relations);
            const auto a = "attr" + std::to_string(rng() % 3);
            ASSERT_EQ(store.relations_of(es), oracle.relations_of(es));
            ASSERT_EQ(store.neighbors_of(es, r), oracle.neighbors_of(es, r));
            ASSERT_EQ(store.numeric_attributes_of(es), oracle.numeric_attributes_of(es));
            ASSERT_EQ(store.attribute_values(es, a), oracle.attribute_values(es, a));
            const auto e = *es.begin();
            ASSERT_EQ(store.classes_of(e), oracle.classes_of(e));
            ASSERT_EQ(store.has_entity(e), oracle.has_entity(e));
        }
    }
}

}  // namespace
}  // namespace mw::kb
