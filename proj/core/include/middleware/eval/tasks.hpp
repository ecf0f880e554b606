// SPDX-License-Identifier: Apache-2.0
//
// Task files are JSON lines.
//   db: {"id", "question", "db", "gold_sql", "requires_content", "gold_actions"?}
//   kb: {"id", "question", "entities", "category", "gold_answer": {"entities"} | {"count"}, "gold_actions"?}
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "middleware/agent/answer.hpp"

namespace mw::eval {

class TaskFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DbTask {
    std::string id;
    std::string question;
    std::string db;  // as written in the file
    std::filesystem::path db_path;  // resolved against the task file's directory
    std::string gold_sql;
    bool requires_content = false;
    std::vector<std::string> gold_actions;
};

enum class KbCategory { kCounting, kSuperlative, kNone };

std::string_view to_string(KbCategory category);
std::optional<KbCategory> kb_category_from_string(std::string_view text);

struct KbTask {
    std::string id;
    std::string question;
    std::vector<std::string> entities;
    KbCategory category = KbCategory::kNone;
    agent::Answer gold;
    std::vector<std::string> gold_actions;
};

std::vector<DbTask> parse_db_tasks(std::istream& in, const std::filesystem::path& base_dir);
std::vector<KbTask> parse_kb_tasks(std::istream& in);
std::vector<DbTask> load_db_tasks(const std::filesystem::path& path);
std::vector<KbTask> load_kb_tasks(const std::filesystem::path& path);

std::string to_jsonl(const std::vector<DbTask>& tasks);
std::string to_jsonl(const std::vector<KbTask>& tasks);

}  // namespace mw::eval
