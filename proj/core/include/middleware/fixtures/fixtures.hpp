// SPDX-License-Identifier: Apache-2.0
//
// Bundled test corpus: a small film/music knowledge base with annotated
// questions, and a generated company database with clause-building tasks.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "middleware/eval/tasks.hpp"
#include "middleware/kb/triple_store.hpp"

namespace mw::fixtures {

inline constexpr const char* kKbFile = "kb.tsv";
inline constexpr const char* kKbTasksFile = "kb_tasks.jsonl";
inline constexpr const char* kDbFile = "company.db";
inline constexpr const char* kDbTasksFile = "db_tasks.jsonl";

const std::string& kb_triples_tsv();
const std::string& kb_tasks_jsonl();

kb::TripleStore kb_store();
std::vector<eval::KbTask> kb_tasks();

/// Writes the company database to `path`, replacing any existing file. The
/// content depends only on the built-in seed.
void build_company_db(const std::filesystem::path& path);

/// Tasks over the company database, with `db` set to kDbFile and db_path
/// resolved against `base_dir`.
std::vector<eval::DbTask> db_tasks(const std::filesystem::path& base_dir);

struct FixturePaths {
    std::filesystem::path kb;
    std::filesystem::path kb_tasks;
    std::filesystem::path db;
    std::filesystem::path db_tasks;
};

FixturePaths write_all(const std::filesystem::path& dir);

}  // namespace mw::fixtures
