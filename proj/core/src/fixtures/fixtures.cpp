// SPDX-License-Identifier: Apache-2.0
#include "middleware/fixtures/fixtures.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "middleware/action.hpp"
#include "middleware/db/sqlite.hpp"

namespace mw::fixtures {

namespace {

constexpr std::uint32_t kSeed = 20240611;
constexpr int kEmployees = 600;
constexpr int kAssignments = 900;

struct Department {
    const char* name;
    const char* city;
    std::int64_t budget;
};

constexpr std::array<Department, 8> kDepartments{{
    {"Research", "Boston", 1200000},
    {"Sales", "Chicago", 800000},
    {"Marketing", "New York", 650000},
    {"Engineering", "San Francisco", 2100000},
    {"Finance", "Chicago", 500000},
    {"Human Resources", "Austin", 350000},
    {"Support", "Denver", 420000},
    {"Legal", "Boston", 300000},
}};

constexpr std::array<const char*, 20> kFirstNames{
    "Maria", "James", "Wei", "Aisha", "Carlos", "Elena", "Tom", "Priya", "Jonas", "Fatima",
    "Liam", "Sofia", "Kenji", "Olga", "Diego", "Hannah", "Omar", "Chloe", "Ivan", "Grace"};

constexpr std::array<const char*, 25> kLastNames{
    "Garcia", "Smith", "Chen", "Khan", "Lopez", "Novak", "Brown", "Patel", "Berg", "Haddad",
    "Murphy", "Rossi", "Tanaka", "Ivanova", "Silva", "Schmidt", "Ali", "Martin", "Petrov", "Kim",
    "Jensen", "Okafor", "Dubois", "Moreau", "Walsh"};

constexpr std::array<const char*, 6> kTitles{"Analyst", "Engineer", "Associate", "Specialist", "Coordinator",
                                             "Director"};

constexpr std::array<const char*, 50> kProjects{
    "Apollo",   "Borealis", "Cobalt",   "Delta",    "Ember",    "Falcon",   "Granite", "Harbor",  "Iris",
    "Juniper",  "Kestrel",  "Lumen",    "Meridian", "Nimbus",   "Onyx",     "Pioneer", "Quartz",  "Raven",
    "Sierra",   "Tundra",   "Umbra",    "Vortex",   "Willow",   "Xenon",    "Yarrow",  "Zephyr",  "Atlas",
    "Beacon",   "Cascade",  "Drift",    "Echo",     "Fjord",    "Glacier",  "Horizon", "Indigo",  "Jade",
    "Keystone", "Lattice",  "Mosaic",   "Nova",     "Orbit",    "Prism",    "Quill",   "Ridge",   "Summit",
    "Tidal",    "Unity",    "Vantage",  "Wavelength", "Zenith"};

constexpr std::array<const char*, 3> kStatuses{"active", "completed", "on hold"};
constexpr std::array<const char*, 4> kRoles{"lead", "developer", "reviewer", "tester"};

const char* kSchema = R"sql(
CREATE TABLE departments (
    id INTEGER PRIMARY KEY,
    name TEXT NOT NULL,
    city TEXT NOT NULL,
    budget INTEGER NOT NULL
);
CREATE TABLE employees (
    id INTEGER PRIMARY KEY,
    first_name TEXT NOT NULL,
    last_name TEXT NOT NULL,
    department_id INTEGER NOT NULL REFERENCES departments(id),
    title TEXT,
    hire_date TEXT NOT NULL,
    salary INTEGER NOT NULL,
    is_manager TEXT NOT NULL
);
CREATE TABLE projects (
    id INTEGER PRIMARY KEY,
    name TEXT NOT NULL UNIQUE,
    department_id INTEGER NOT NULL REFERENCES departments(id),
    start_date TEXT NOT NULL,
    budget REAL NOT NULL,
    status TEXT NOT NULL
);
CREATE TABLE assignments (
    employee_id INTEGER NOT NULL REFERENCES employees(id),
    project_id INTEGER NOT NULL REFERENCES projects(id),
    hours INTEGER NOT NULL,
    role TEXT NOT NULL,
    PRIMARY KEY (employee_id, project_id)
);
)sql";

// Raw engine outputs reduced with %, so the data is identical on every
// standard library.
class Draw {
public:
    explicit Draw(std::uint32_t seed) : engine_(seed) {}
    std::uint32_t below(std::uint32_t n) { return engine_() % n; }

private:
    std::mt19937 engine_;
};

std::string date(Draw& draw, int first_year, int years) {
    const int year = first_year + static_cast<int>(draw.below(years));
    const int month = 1 + static_cast<int>(draw.below(12));
    const int day = 1 + static_cast<int>(draw.below(28));
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

struct DbTaskSpec {
    const char* id;
    const char* question;
    bool requires_content;
    std::vector<std::string> navigation;
    const char* from;
    const char* where;
    const char* select;
    const char* group_by = "";
    const char* having = "";
    const char* order_by = "";
};

constexpr const char* kEmpDept = "FROM employees AS e JOIN departments AS d ON e.department_id = d.id";
constexpr const char* kProjDept = "FROM projects AS p JOIN departments AS d ON p.department_id = d.id";
constexpr const char* kAsgProj = "FROM assignments AS a JOIN projects AS p ON a.project_id = p.id";

const std::vector<DbTaskSpec>& db_task_specs() {
    static const std::vector<DbTaskSpec> specs{
        {"db-01", "How many employees does the company have?", false, {}, "FROM employees", "",
         "SELECT COUNT(*)"},
        {"db-02", "How many employees work in the Research department?", true,
         {R"(find_columns_containing_value("Research"))"}, kEmpDept, "WHERE d.name = 'Research'", "SELECT COUNT(*)"},
        {"db-03", "List the first and last names of the managers in the Sales department.", true,
         {"get_distinct_values(employees, is_manager)"}, kEmpDept, "WHERE d.name = 'Sales' AND e.is_manager = 'T'",
         "SELECT e.first_name, e.last_name"},
        {"db-04", "What is the average salary in each department?", false, {}, kEmpDept, "",
         "SELECT d.name, AVG(e.salary)", "GROUP BY d.name"},
        {"db-05", "Which departments have more than 80 employees, and how many?", false, {}, kEmpDept, "",
         "SELECT d.name, COUNT(*)", "GROUP BY d.name", "HAVING COUNT(*) > 80"},
        {"db-06", "Who are the five best paid employees?", false, {}, "FROM employees", "",
         "SELECT first_name, last_name, salary", "", "", "ORDER BY salary DESC, id LIMIT 5"},
        {"db-07", "Which projects are on hold?", true, {"get_distinct_values(projects, status)"}, "FROM projects",
         "WHERE status = 'on hold'", "SELECT name"},
        {"db-08", "Which department runs the Borealis project?", true,
         {R"(find_columns_containing_value_fuzzy("borealis"))"}, kProjDept, "WHERE p.name = 'Borealis'",
         "SELECT d.name"},
        {"db-09", "How many employees were hired in 2010?", true, {"get_date_format(employees, hire_date)"},
         "FROM employees", "WHERE hire_date LIKE '2010-%'", "SELECT COUNT(*)"},
        {"db-10", "Which departments are located in Boston?", true,
         {R"(is_value_in_column(departments, city, "Boston"))"}, "FROM departments", "WHERE city = 'Boston'",
         "SELECT name"},
        {"db-11", "How many hours are booked for each assignment role?", false, {}, "FROM assignments", "",
         "SELECT role, SUM(hours)", "GROUP BY role"},
        {"db-12", "Which project has the largest budget?", false, {}, "FROM projects", "", "SELECT name, budget", "",
         "", "ORDER BY budget DESC LIMIT 1"},
        {"db-13", "What is the total budget of active projects?", true, {"get_distinct_values(projects, status)"},
         "FROM projects", "WHERE status = 'active'", "SELECT SUM(budget)"},
        {"db-14", "How many employees were hired in each year?", false, {}, "FROM employees", "",
         "SELECT substr(hire_date, 1, 4) AS year, COUNT(*)", "GROUP BY year", "", "ORDER BY year"},
        {"db-15", "How many Engineering employees earn more than 90000?", true,
         {R"(find_columns_containing_value("Engineering"))"}, kEmpDept,
         "WHERE d.name = 'Engineering' AND e.salary > 90000", "SELECT COUNT(*)"},
        {"db-16", "How many employees have no title?", false, {}, "FROM employees", "WHERE title IS NULL",
         "SELECT COUNT(*)"},
        {"db-17", "How many different employees work on the Apollo project?", true,
         {R"(find_columns_containing_value("Apollo"))"}, kAsgProj, "WHERE p.name = 'Apollo'",
         "SELECT COUNT(DISTINCT a.employee_id)"},
        {"db-18", "Which projects have more than 20 assignments?", false, {}, kAsgProj, "",
         "SELECT p.name, COUNT(*)", "GROUP BY p.id", "HAVING COUNT(*) > 20"},
        {"db-19", "How many lead assignments are held by employees of departments in Chicago?", true,
         {"get_distinct_values(assignments, role)", R"(is_value_in_column(departments, city, "Chicago"))"},
         "FROM assignments AS a JOIN employees AS e ON a.employee_id = e.id JOIN departments AS d ON "
         "e.department_id = d.id",
         "WHERE a.role = 'lead' AND d.city = 'Chicago'", "SELECT COUNT(*)"},
        {"db-20", "What is the average number of hours per assignment?", false, {}, "FROM assignments", "",
         "SELECT AVG(hours)"},
        {"db-21", "Which department has the largest budget?", false, {}, "FROM departments", "", "SELECT name", "",
         "", "ORDER BY budget DESC LIMIT 1"},
        {"db-22", "How many employees are called Maria?", true, {R"(find_columns_containing_value("Maria"))"},
         "FROM employees", "WHERE first_name = 'Maria'", "SELECT COUNT(*)"},
        {"db-23", "When was the earliest hire?", false, {}, "FROM employees", "", "SELECT MIN(hire_date)"},
        {"db-24", "Which Marketing projects started in 2021 or later?", true,
         {"get_date_format(projects, start_date)"}, kProjDept,
         "WHERE d.name = 'Marketing' AND p.start_date >= '2021-01-01'", "SELECT p.name"},
        {"db-25", "How many projects are there in each status?", false, {}, "FROM projects", "",
         "SELECT status, COUNT(*)", "GROUP BY status", "", "ORDER BY COUNT(*) DESC, status"},
        {"db-26", "What is the total salary paid to managers?", true,
         {R"(is_value_in_column(employees, is_manager, "T"))"}, "FROM employees", "WHERE is_manager = 'T'",
         "SELECT SUM(salary)"},
        {"db-27", "Which departments pay an average salary above 70000?", false, {}, kEmpDept, "",
         "SELECT d.name", "GROUP BY d.id", "HAVING AVG(e.salary) > 70000"},
        {"db-28", "How many reviewer assignments are there on completed projects?", true,
         {R"(search_by_SQL("SELECT DISTINCT status FROM projects"))"}, kAsgProj,
         "WHERE a.role = 'reviewer' AND p.status = 'completed'", "SELECT COUNT(*)"},
        {"db-29", "Who are the three most recently hired employees?", false, {}, "FROM employees", "",
         "SELECT first_name, last_name, hire_date", "", "", "ORDER BY hire_date DESC, id LIMIT 3"},
        {"db-30", "How many different last names occur in the Support department?", true,
         {R"(find_columns_containing_value_fuzzy("support"))"}, kEmpDept, "WHERE d.name = 'Support'",
         "SELECT COUNT(DISTINCT e.last_name)"},
        {"db-31", "Which department has the fewest employees?", false, {}, kEmpDept, "", "SELECT d.name, COUNT(*)",
         "GROUP BY d.id", "", "ORDER BY COUNT(*) ASC, d.name LIMIT 1"},
        {"db-32", "Which Human Resources employees were hired before 2010?", true,
         {R"(find_columns_containing_value("Human Resources"))"}, kEmpDept,
         "WHERE d.name = 'Human Resources' AND e.hire_date < '2010-01-01'", "SELECT e.first_name, e.last_name"},
    };
    return specs;
}

std::string clause_call(const char* tool, const char* clause) {
    return render_tool_call(ToolCall{tool, {clause}}, {true});
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

kb::TripleStore kb_store() {
    std::istringstream in(kb_triples_tsv());
    return kb::load_triples(in);
}

std::vector<eval::KbTask> kb_tasks() {
    std::istringstream in(kb_tasks_jsonl());
    return eval::parse_kb_tasks(in);
}

void build_company_db(const std::filesystem::path& path) {
    std::filesystem::remove(path);
    db::Connection conn(path, db::Connection::Mode::kReadWriteCreate);
    conn.exec(kSchema);
    conn.exec("BEGIN");
    Draw draw(kSeed);

    auto insert_dept = conn.prepare("INSERT INTO departments VALUES (?, ?, ?, ?)");
    for (std::size_t i = 0; i < kDepartments.size(); ++i) {
        const auto& d = kDepartments[i];
        insert_dept.reset();
        insert_dept.bind(1, static_cast<std::int64_t>(i + 1));
        insert_dept.bind(2, std::string_view(d.name));
        insert_dept.bind(3, std::string_view(d.city));
        insert_dept.bind(4, d.budget);
        insert_dept.step();
    }

    auto insert_emp = conn.prepare("INSERT INTO employees VALUES (?, ?, ?, ?, ?, ?, ?, ?)");
    for (int id = 1; id <= kEmployees; ++id) {
        insert_emp.reset();
        insert_emp.bind(1, static_cast<std::int64_t>(id));
        insert_emp.bind(2, std::string_view(kFirstNames[draw.below(kFirstNames.size())]));
        insert_emp.bind(3, std::string_view(kLastNames[draw.below(kLastNames.size())]));
        insert_emp.bind(4, static_cast<std::int64_t>(1 + draw.below(kDepartments.size())));
        const auto title = draw.below(20);
        if (title == 0) {
            insert_emp.bind_null(5);
        } else {
            insert_emp.bind(5, std::string_view(kTitles[title % kTitles.size()]));
        }
        insert_emp.bind(6, date(draw, 2005, 19));
        insert_emp.bind(7, static_cast<std::int64_t>(40000 + 50 * draw.below(1200)));
        insert_emp.bind(8, std::string_view(draw.below(10) == 0 ? "T" : "F"));
        insert_emp.step();
    }

    auto insert_proj = conn.prepare("INSERT INTO projects VALUES (?, ?, ?, ?, ?, ?)");
    for (std::size_t i = 0; i < kProjects.size(); ++i) {
        insert_proj.reset();
        insert_proj.bind(1, static_cast<std::int64_t>(i + 1));
        insert_proj.bind(2, std::string_view(kProjects[i]));
        insert_proj.bind(3, static_cast<std::int64_t>(1 + draw.below(kDepartments.size())));
        insert_proj.bind(4, date(draw, 2015, 9));
        insert_proj.bind(5, 50000.0 + 1250.5 * draw.below(400));
        insert_proj.bind(6, std::string_view(kStatuses[draw.below(kStatuses.size())]));
        insert_proj.step();
    }

    auto insert_asg = conn.prepare("INSERT INTO assignments VALUES (?, ?, ?, ?)");
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    while (pairs.size() < static_cast<std::size_t>(kAssignments)) {
        const auto emp = 1 + draw.below(kEmployees);
        const auto proj = 1 + draw.below(kProjects.size());
        const auto hours = 5 + draw.below(200);
        const auto role = kRoles[draw.below(kRoles.size())];
        if (!pairs.emplace(emp, proj).second) continue;
        insert_asg.reset();
        insert_asg.bind(1, static_cast<std::int64_t>(emp));
        insert_asg.bind(2, static_cast<std::int64_t>(proj));
        insert_asg.bind(3, static_cast<std::int64_t>(hours));
        insert_asg.bind(4, std::string_view(role));
        insert_asg.step();
    }
    conn.exec("COMMIT");
}

std::vector<eval::DbTask> db_tasks(const std::filesystem::path& base_dir) {
    std::vector<eval::DbTask> tasks;
    for (const auto& spec : db_task_specs()) {
        eval::DbTask t;
        t.id = spec.id;
        t.question = spec.question;
        t.db = kDbFile;
        t.db_path = base_dir / kDbFile;
        t.requires_content = spec.requires_content;
        t.gold_actions = spec.navigation;
        t.gold_actions.push_back(clause_call("from", spec.from));
        t.gold_actions.push_back(clause_call("where", spec.where));
        t.gold_actions.push_back(clause_call("select", spec.select));
        std::string sql = std::string(spec.select) + " " + spec.from;
        for (const auto& [tool, clause] : {std::pair{"where", spec.where}, std::pair{"group_by", spec.group_by},
                                           std::pair{"having", spec.having}, std::pair{"order_by", spec.order_by}}) {
            if (*clause == '\0') continue;
            sql += " ";
            sql += clause;
            if (std::string_view(tool) != "where") t.gold_actions.push_back(clause_call(tool, clause));
        }
        t.gold_sql = std::move(sql);
        tasks.push_back(std::move(t));
    }
    return tasks;
}

FixturePaths write_all(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    FixturePaths paths{dir / kKbFile, dir / kKbTasksFile, dir / kDbFile, dir / kDbTasksFile};
    write_text(paths.kb, kb_triples_tsv());
    write_text(paths.kb_tasks, kb_tasks_jsonl());
    build_company_db(paths.db);
    write_text(paths.db_tasks, eval::to_jsonl(db_tasks(dir)));
    return paths;
}

}  // namespace mw::fixtures
