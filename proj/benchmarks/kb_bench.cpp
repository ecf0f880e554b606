// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "middleware/action.hpp"
#include "middleware/fixtures/fixtures.hpp"
#include "middleware/kb/kb_tools.hpp"
#include "middleware/kb/triple_store.hpp"

namespace {

using mw::kb::TripleStore;
using mw::kb::TypedObject;

TripleStore synthetic_store(std::size_t triples) {
    std::mt19937 rng(17);
    const std::size_t entities = triples / 8 + 1;
    std::vector<mw::kb::Triple> out;
    out.reserve(triples);
    for (std::size_t i = 0; i < triples; ++i) {
        const auto subject = "e" + std::to_string(rng() % entities);
        if (i % 5 == 0) {
            out.push_back({subject, "attr" + std::to_string(rng() % 4), TypedObject::number(rng() % 1000)});
        } else {
            out.push_back({subject, "rel" + std::to_string(rng() % 16),
                           TypedObject::entity("e" + std::to_string(rng() % entities))});
        }
    }
    return TripleStore(out);
}

mw::kb::EntitySet sample_entities(std::size_t n, std::size_t entities) {
    mw::kb::EntitySet out;
    std::mt19937 rng(3);
    while (out.size() < n) out.insert("e" + std::to_string(rng() % entities));
    return out;
}

void BM_RelationsOf(benchmark::State& state) {
    const auto triples = static_cast<std::size_t>(state.range(0));
    const auto store = synthetic_store(triples);
    const auto es = sample_entities(32, triples / 8 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(store.relations_of(es));
}
BENCHMARK(BM_RelationsOf)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_NeighborsOf(benchmark::State& state) {
    const auto triples = static_cast<std::size_t>(state.range(0));
    const auto store = synthetic_store(triples);
    const auto es = sample_entities(32, triples / 8 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(store.neighbors_of(es, "rel3"));
}
BENCHMARK(BM_NeighborsOf)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void BM_AttributeValues(benchmark::State& state) {
    const auto triples = static_cast<std::size_t>(state.range(0));
    const auto store = synthetic_store(triples);
    const auto es = sample_entities(64, triples / 8 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(store.attribute_values(es, "attr1"));
}
BENCHMARK(BM_AttributeValues)->Arg(10'000)->Arg(100'000);

// Candidate enumeration midway through each fixture task's gold chain.
void BM_EnumerateCandidates(benchmark::State& state) {
    const auto store = mw::fixtures::kb_store();
    std::vector<mw::kb::KbSession> sessions;
    for (const auto& task : mw::fixtures::kb_tasks()) {
        mw::kb::KbSession session(store, task.entities);
        for (std::size_t i = 0; i + 1 < task.gold_actions.size() / 2 + 1; ++i) {
            session.execute(*mw::parse_tool_call(task.gold_actions[i]).call);
        }
        sessions.push_back(std::move(session));
    }
    std::size_t candidates = 0;
    for (auto _ : state) {
        for (const auto& s : sessions) candidates += s.enumerate_candidates().size();
    }
    benchmark::DoNotOptimize(candidates);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * sessions.size()));
}
BENCHMARK(BM_EnumerateCandidates);

}  // namespace
