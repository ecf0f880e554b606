// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mw::eval {

class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Outcome of one task. `score` is EX (0 or 1) for databases and F1 for the
/// knowledge base; `valid` is VA.
struct TaskRecord {
    std::string id;
    std::string group;  // "N"/"Y" (needs cell values) or the KB category
    double score = 0.0;
    bool valid = false;
    bool answered = false;
    std::string terminal;
    std::string prediction;
    std::size_t steps = 0;
    std::size_t retries = 0;
    std::size_t input_tokens = 0;
    std::int64_t wall_ms = 0;
};

struct GroupStats {
    std::string name;
    std::size_t n = 0;
    double score = 0.0;  // mean; 0 when n == 0
    double valid = 0.0;
};

struct RunReport {
    std::string environment;  // "db" or "kb"
    std::string scheme;
    std::vector<TaskRecord> records;
    std::vector<GroupStats> groups;
    GroupStats overall;
    double mean_steps = 0.0;
    double mean_input_tokens = 0.0;
    double mean_wall_ms = 0.0;
};

/// Group names in report order for an environment.
const std::vector<std::string>& report_groups(const std::string& environment);

/// `expected` lists (task id, group) in task order; records must cover the
/// same ids in the same order.
RunReport aggregate(const std::string& environment, const std::string& scheme,
                    const std::vector<std::pair<std::string, std::string>>& expected,
                    std::vector<TaskRecord> records);

/// Pretty JSON; group means are null for empty groups.
std::string to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);
std::string to_text(const RunReport& report);

}  // namespace mw::eval
