// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>
#include <unistd.h>

#include "middleware/db/db_tools.hpp"
#include "middleware/fixtures/fixtures.hpp"

namespace {

// Built once per process and removed at exit.
struct CompanyDb {
    CompanyDb() : path(std::filesystem::temp_directory_path() / ("mw-bench-" + std::to_string(::getpid()) + ".db")) {
        mw::fixtures::build_company_db(path);
    }
    ~CompanyDb() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::filesystem::path path;
};

const std::filesystem::path& company_db() {
    static const CompanyDb db;
    return db.path;
}

void BM_FindExact(benchmark::State& state) {
    const auto session = mw::db::DbSession::open(company_db());
    for (auto _ : state) benchmark::DoNotOptimize(session.find_columns_containing_value("Research"));
}
BENCHMARK(BM_FindExact);

void BM_FindFuzzy(benchmark::State& state) {
    const auto session = mw::db::DbSession::open(company_db());
    for (auto _ : state) benchmark::DoNotOptimize(session.find_columns_containing_value_fuzzy("Reserch"));
}
BENCHMARK(BM_FindFuzzy);

void BM_IsValueInColumn(benchmark::State& state) {
    const auto session = mw::db::DbSession::open(company_db());
    for (auto _ : state) benchmark::DoNotOptimize(session.is_value_in_column("departments", "name", "Sales"));
}
BENCHMARK(BM_IsValueInColumn);

void BM_SetClause(benchmark::State& state) {
    auto session = mw::db::DbSession::open(company_db());
    session.set_clause(mw::db::ClauseKind::kFrom,
                       "FROM employees AS e JOIN departments AS d ON e.department_id = d.id");
    for (auto _ : state) {
        benchmark::DoNotOptimize(session.set_clause(mw::db::ClauseKind::kWhere, "WHERE d.name = 'Research'"));
    }
}
BENCHMARK(BM_SetClause);

}  // namespace
