// SPDX-License-Identifier: Apache-2.0
#include "middleware/agent/trace.hpp"

#include <istream>

#include <nlohmann/json.hpp>

#include "middleware/text.hpp"

namespace mw::agent {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kSchemeNames[] = {"error-feedback", "decoupled"};
constexpr std::string_view kTerminalNames[] = {"running", "final_answer", "budget_exhausted", "retries_exhausted",
                                               "transport_error"};

Json answer_json(const Answer& a) {
    switch (a.kind) {
        case Answer::Kind::kNone: return nullptr;
        case Answer::Kind::kEntities: return Json{{"entities", std::vector<std::string>(a.entities.begin(), a.entities.end())}};
        case Answer::Kind::kCount: return Json{{"count", a.count}};
        case Answer::Kind::kSql: return Json{{"sql", a.sql}};
    }
    return nullptr;
}

Answer answer_from_json(const Json& j) {
    if (j.is_null()) return {};
    if (!j.is_object()) throw TraceFormatError("answer must be an object or null");
    if (j.contains("entities")) {
        auto list = j.at("entities").get<std::vector<std::string>>();
        return Answer::of_entities({list.begin(), list.end()});
    }
    if (j.contains("count")) return Answer::of_count(j.at("count").get<std::int64_t>());
    if (j.contains("sql")) return Answer::of_sql(j.at("sql").get<std::string>());
    throw TraceFormatError("answer object has no entities, count or sql field");
}

}  // namespace

std::string_view to_string(Scheme scheme) { return kSchemeNames[static_cast<int>(scheme)]; }

std::optional<Scheme> scheme_from_string(std::string_view text) {
    for (int i = 0; i < 2; ++i) {
        if (kSchemeNames[i] == text) return static_cast<Scheme>(i);
    }
    return std::nullopt;
}

std::string_view to_string(Terminal terminal) { return kTerminalNames[static_cast<int>(terminal)]; }

std::optional<Terminal> terminal_from_string(std::string_view text) {
    for (int i = 0; i < 5; ++i) {
        if (kTerminalNames[i] == text) return static_cast<Terminal>(i);
    }
    return std::nullopt;
}

bool Step::is_final() const { return act.starts_with(kFinalAnswerPrefix); }

std::size_t Trace::retry_count() const {
    std::size_t n = 0;
    for (const auto& s : steps) n += s.retries.size();
    return n;
}

std::string answer_text(const Answer& answer) {
    switch (answer.kind) {
        case Answer::Kind::kNone: return "none";
        case Answer::Kind::kEntities: {
            std::vector<std::string> items(answer.entities.begin(), answer.entities.end());
            return render_set(items, items.size());
        }
        case Answer::Kind::kCount: return std::to_string(answer.count);
        case Answer::Kind::kSql: return answer.sql;
    }
    return "none";
}

std::string to_jsonl(const Trace& trace) {
    std::string out;
    for (const auto& s : trace.steps) {
        Json retries = Json::array();
        for (const auto& r : s.retries) retries.push_back(Json{{"thought", r.thought}, {"act", r.act}, {"obs", r.obs}});
        Json line{{"t", s.t},         {"thought", s.thought},         {"act", s.act},
                  {"obs", s.obs},     {"ok", s.ok},                   {"retries", std::move(retries)},
                  {"scheme", to_string(trace.scheme)}};
        out += line.dump();
        out += '\n';
    }
    Json final_line{{"terminal", to_string(trace.terminal)},
                    {"answered", trace.answered()},
                    {"answer", answer_json(trace.answer)},
                    {"steps", trace.steps.size()},
                    {"input_tokens", trace.input_tokens},
                    {"wall_ms", trace.wall_ms}};
    if (!trace.detail.empty()) final_line["detail"] = trace.detail;
    out += final_line.dump();
    out += '\n';
    return out;
}

Trace parse_trace_jsonl(std::istream& in) {
    Trace trace;
    std::string line;
    std::size_t lineno = 0;
    bool finished = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto where = "line " + std::to_string(lineno) + ": ";
        if (finished) throw TraceFormatError(where + "content after the final record");
        Json j;
        try {
            j = Json::parse(line);
        } catch (const Json::exception& e) {
            throw TraceFormatError(where + "invalid JSON (" + e.what() + ")");
        }
        if (!j.is_object()) throw TraceFormatError(where + "expected a JSON object");
        try {
            if (j.contains("terminal")) {
                auto terminal = terminal_from_string(j.at("terminal").get<std::string>());
                if (!terminal) throw TraceFormatError(where + "unknown terminal");
                trace.terminal = *terminal;
                trace.answer = answer_from_json(j.at("answer"));
                trace.input_tokens = j.at("input_tokens").get<std::size_t>();
                trace.wall_ms = j.at("wall_ms").get<std::int64_t>();
                if (j.contains("detail")) trace.detail = j.at("detail").get<std::string>();
                if (j.at("steps").get<std::size_t>() != trace.steps.size()) {
                    throw TraceFormatError(where + "step count does not match the step records");
                }
                if (j.at("answered").get<bool>() != trace.answered()) {
                    throw TraceFormatError(where + "answered flag contradicts the terminal");
                }
                finished = true;
                continue;
            }
            Step s;
            s.t = j.at("t").get<std::size_t>();
            s.thought = j.at("thought").get<std::string>();
            s.act = j.at("act").get<std::string>();
            s.obs = j.at("obs").get<std::string>();
            s.ok = j.value("ok", true);
            for (const auto& r : j.at("retries")) {
                s.retries.push_back({r.value("thought", ""), r.at("act").get<std::string>(), r.at("obs").get<std::string>()});
            }
            auto scheme = scheme_from_string(j.at("scheme").get<std::string>());
            if (!scheme) throw TraceFormatError(where + "unknown scheme");
            if (!trace.steps.empty() && (s.t <= trace.steps.back().t || *scheme != trace.scheme)) {
                throw TraceFormatError(where + "step index or scheme out of sequence");
            }
            trace.scheme = *scheme;
            trace.steps.push_back(std::move(s));
        } catch (const Json::exception& e) {
            throw TraceFormatError(where + "missing or mistyped field (" + e.what() + ")");
        }
    }
    return trace;
}

}  // namespace mw::agent
