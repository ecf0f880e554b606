// SPDX-License-Identifier: Apache-2.0
#include "middleware/eval/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <nlohmann/json.hpp>

namespace mw::eval {

using Json = nlohmann::ordered_json;

namespace {

double mean(double sum, std::size_t n) { return n == 0 ? 0.0 : sum / static_cast<double>(n); }

GroupStats stats(const std::string& name, const std::vector<const TaskRecord*>& members) {
    GroupStats g;
    g.name = name;
    g.n = members.size();
    double score = 0.0;
    double valid = 0.0;
    for (const auto* r : members) {
        score += r->score;
        valid += r->valid ? 1.0 : 0.0;
    }
    g.score = mean(score, g.n);
    g.valid = mean(valid, g.n);
    return g;
}

Json group_json(const GroupStats& g) {
    Json j{{"name", g.name}, {"n", g.n}};
    j["score"] = g.n == 0 ? Json(nullptr) : Json(g.score);
    j["valid"] = g.n == 0 ? Json(nullptr) : Json(g.valid);
    return j;
}

GroupStats group_from_json(const Json& j) {
    GroupStats g;
    g.name = j.at("name").get<std::string>();
    g.n = j.at("n").get<std::size_t>();
    g.score = j.at("score").is_null() ? 0.0 : j.at("score").get<double>();
    g.valid = j.at("valid").is_null() ? 0.0 : j.at("valid").get<double>();
    return g;
}

std::string percent(const GroupStats& g, double value) {
    if (g.n == 0) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", value * 100.0);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

}  // namespace

const std::vector<std::string>& report_groups(const std::string& environment) {
    static const std::vector<std::string> db{"N", "Y"};
    static const std::vector<std::string> kb{"Counting", "Superlative", "None"};
    if (environment == "db") return db;
    if (environment == "kb") return kb;
    throw ReportError("unknown environment '" + environment + "'");
}

RunReport aggregate(const std::string& environment, const std::string& scheme,
                    const std::vector<std::pair<std::string, std::string>>& expected,
                    std::vector<TaskRecord> records) {
    const auto& names = report_groups(environment);
    if (records.size() != expected.size()) {
        throw ReportError("expected " + std::to_string(expected.size()) + " task results but got " +
                          std::to_string(records.size()));
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].id != expected[i].first) {
            throw ReportError("result '" + records[i].id + "' does not match task '" + expected[i].first + "'");
        }
        records[i].group = expected[i].second;
        if (std::find(names.begin(), names.end(), records[i].group) == names.end()) {
            throw ReportError("task '" + records[i].id + "' has unknown group '" + records[i].group + "'");
        }
    }

    RunReport report;
    report.environment = environment;
    report.scheme = scheme;
    report.records = std::move(records);
    std::vector<const TaskRecord*> all;
    std::map<std::string, std::vector<const TaskRecord*>> by_group;
    double steps = 0.0;
    double tokens = 0.0;
    double wall = 0.0;
    for (const auto& r : report.records) {
        all.push_back(&r);
        by_group[r.group].push_back(&r);
        steps += static_cast<double>(r.steps);
        tokens += static_cast<double>(r.input_tokens);
        wall += static_cast<double>(r.wall_ms);
    }
    for (const auto& name : names) report.groups.push_back(stats(name, by_group[name]));
    report.overall = stats("overall", all);
    report.mean_steps = mean(steps, all.size());
    report.mean_input_tokens = mean(tokens, all.size());
    report.mean_wall_ms = mean(wall, all.size());
    return report;
}

std::string to_json(const RunReport& report) {
    Json tasks = Json::array();
    for (const auto& r : report.records) {
        tasks.push_back(Json{{"id", r.id},
                             {"group", r.group},
                             {"score", r.score},
                             {"valid", r.valid},
                             {"answered", r.answered},
                             {"terminal", r.terminal},
                             {"prediction", r.prediction},
                             {"steps", r.steps},
                             {"retries", r.retries},
                             {"input_tokens", r.input_tokens},
                             {"wall_ms", r.wall_ms}});
    }
    Json groups = Json::array();
    for (const auto& g : report.groups) groups.push_back(group_json(g));
    Json j{{"environment", report.environment},
           {"scheme", report.scheme},
           {"metric", report.environment == "db" ? "EX" : "F1"},
           {"groups", groups},
           {"overall", group_json(report.overall)},
           {"efficiency", Json{{"mean_steps", report.mean_steps},
                               {"mean_input_tokens", report.mean_input_tokens},
                               {"mean_wall_ms", report.mean_wall_ms}}},
           {"tasks", tasks}};
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    try {
        const auto j = Json::parse(text);
        RunReport report;
        report.environment = j.at("environment").get<std::string>();
        report.scheme = j.at("scheme").get<std::string>();
        for (const auto& g : j.at("groups")) report.groups.push_back(group_from_json(g));
        report.overall = group_from_json(j.at("overall"));
        const auto& eff = j.at("efficiency");
        report.mean_steps = eff.at("mean_steps").get<double>();
        report.mean_input_tokens = eff.at("mean_input_tokens").get<double>();
        report.mean_wall_ms = eff.at("mean_wall_ms").get<double>();
        for (const auto& t : j.at("tasks")) {
            TaskRecord r;
            r.id = t.at("id").get<std::string>();
            r.group = t.at("group").get<std::string>();
            r.score = t.at("score").get<double>();
            r.valid = t.at("valid").get<bool>();
            r.answered = t.at("answered").get<bool>();
            r.terminal = t.at("terminal").get<std::string>();
            r.prediction = t.at("prediction").get<std::string>();
            r.steps = t.at("steps").get<std::size_t>();
            r.retries = t.at("retries").get<std::size_t>();
            r.input_tokens = t.at("input_tokens").get<std::size_t>();
            r.wall_ms = t.at("wall_ms").get<std::int64_t>();
            report.records.push_back(std::move(r));
        }
        return report;
    } catch (const Json::exception& e) {
        throw ReportError(std::string("malformed report: ") + e.what());
    }
}

std::string to_text(const RunReport& report) {
    const bool db = report.environment == "db";
    const std::string metric = db ? "EX" : "F1";
    std::vector<std::string> headers;
    for (const auto& g : report.groups) headers.push_back(db ? "content " + g.name : g.name);
    headers.push_back("Overall");

    std::vector<GroupStats> columns = report.groups;
    columns.push_back(report.overall);
    constexpr std::size_t kWidth = 13;

    std::string out = (db ? "database" : "knowledge base") + std::string(" suite, scheme ") + report.scheme + "\n";
    out += pad("", 6);
    for (const auto& h : headers) out += pad(h, kWidth);
    out += "\n" + pad("n", 6);
    for (const auto& c : columns) out += pad(std::to_string(c.n), kWidth);
    out += "\n" + pad(metric, 6);
    for (const auto& c : columns) out += pad(percent(c, c.score), kWidth);
    out += "\n" + pad("VA", 6);
    for (const auto& c : columns) out += pad(percent(c, c.valid), kWidth);
    char buf[160];
    std::snprintf(buf, sizeof buf, "\nmean steps %.2f, mean input tokens %.1f, mean wall time %.1f ms\n",
                  report.mean_steps, report.mean_input_tokens, report.mean_wall_ms);
    out += buf;
    return out;
}

}  // namespace mw::eval
