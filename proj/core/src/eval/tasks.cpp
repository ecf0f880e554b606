// SPDX-License-Identifier: Apache-2.0
#include "middleware/eval/tasks.hpp"

#include <fstream>
#include <istream>
#include <set>

#include <nlohmann/json.hpp>

#include "middleware/text.hpp"

namespace mw::eval {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kCategoryNames[] = {"Counting", "Superlative", "None"};

template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t lineno = 0;
    std::set<std::string> ids;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto where = "line " + std::to_string(lineno) + ": ";
        try {
            auto j = Json::parse(line);
            if (!j.is_object()) throw TaskFormatError(where + "expected a JSON object");
            auto id = j.at("id").get<std::string>();
            if (id.empty()) throw TaskFormatError(where + "empty task id");
            if (!ids.insert(id).second) throw TaskFormatError(where + "duplicate task id '" + id + "'");
            fn(j, where);
        } catch (const Json::exception& e) {
            throw TaskFormatError(where + e.what());
        }
    }
}

std::vector<std::string> optional_strings(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return {};
    return j.at(key).get<std::vector<std::string>>();
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open task file " + path.string());
    return in;
}

}  // namespace

std::string_view to_string(KbCategory category) { return kCategoryNames[static_cast<int>(category)]; }

std::optional<KbCategory> kb_category_from_string(std::string_view text) {
    for (int i = 0; i < 3; ++i) {
        if (kCategoryNames[i] == text) return static_cast<KbCategory>(i);
    }
    return std::nullopt;
}

std::vector<DbTask> parse_db_tasks(std::istream& in, const std::filesystem::path& base_dir) {
    std::vector<DbTask> tasks;
    for_each_record(in, [&](const Json& j, const std::string&) {
        DbTask t;
        t.id = j.at("id").get<std::string>();
        t.question = j.at("question").get<std::string>();
        t.db = j.at("db").get<std::string>();
        const std::filesystem::path p(t.db);
        t.db_path = p.is_absolute() ? p : base_dir / p;
        t.gold_sql = j.at("gold_sql").get<std::string>();
        t.requires_content = j.at("requires_content").get<bool>();
        t.gold_actions = optional_strings(j, "gold_actions");
        tasks.push_back(std::move(t));
    });
    return tasks;
}

std::vector<KbTask> parse_kb_tasks(std::istream& in) {
    std::vector<KbTask> tasks;
    for_each_record(in, [&](const Json& j, const std::string& where) {
        KbTask t;
        t.id = j.at("id").get<std::string>();
        t.question = j.at("question").get<std::string>();
        t.entities = j.at("entities").get<std::vector<std::string>>();
        auto category = kb_category_from_string(j.at("category").get<std::string>());
        if (!category) throw TaskFormatError(where + "category must be Counting, Superlative or None");
        t.category = *category;
        const auto& gold = j.at("gold_answer");
        if (gold.contains("count")) {
            t.gold = agent::Answer::of_count(gold.at("count").get<std::int64_t>());
        } else if (gold.contains("entities")) {
            auto list = gold.at("entities").get<std::vector<std::string>>();
            t.gold = agent::Answer::of_entities({list.begin(), list.end()});
        } else {
            throw TaskFormatError(where + "gold_answer needs an entities list or a count");
        }
        t.gold_actions = optional_strings(j, "gold_actions");
        tasks.push_back(std::move(t));
    });
    return tasks;
}

std::vector<DbTask> load_db_tasks(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_db_tasks(in, path.parent_path());
}

std::vector<KbTask> load_kb_tasks(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_kb_tasks(in);
}

std::string to_jsonl(const std::vector<DbTask>& tasks) {
    std::string out;
    for (const auto& t : tasks) {
        Json j{{"id", t.id},
               {"question", t.question},
               {"db", t.db},
               {"gold_sql", t.gold_sql},
               {"requires_content", t.requires_content}};
        if (!t.gold_actions.empty()) j["gold_actions"] = t.gold_actions;
        out += j.dump() + "\n";
    }
    return out;
}

std::string to_jsonl(const std::vector<KbTask>& tasks) {
    std::string out;
    for (const auto& t : tasks) {
        Json gold;
        if (t.gold.kind == agent::Answer::Kind::kCount) {
            gold["count"] = t.gold.count;
        } else {
            gold["entities"] = std::vector<std::string>(t.gold.entities.begin(), t.gold.entities.end());
        }
        Json j{{"id", t.id},
               {"question", t.question},
               {"entities", t.entities},
               {"category", to_string(t.category)},
               {"gold_answer", gold}};
        if (!t.gold_actions.empty()) j["gold_actions"] = t.gold_actions;
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace mw::eval
