#include "trop/report.hpp"

#include <sstream>

namespace trop {

std::string rat_display(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

void Report::check(const std::string& name, const std::string& expected,
                   const std::string& actual, const std::string& source) {
    checks.push_back(ReportEntry{name, expected, actual, source, expected == actual});
}

void Report::note(const std::string& key, const nlohmann::ordered_json& value) {
    payload[key] = value;
}

bool Report::all_pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::render_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"actual", c.actual},
                               {"source", c.source},
                               {"pass", c.pass}});
    j["results"] = payload;
    j["pass"] = all_pass();
    return j.dump(2) + "\n";
}

std::string Report::render_text() const {
    std::ostringstream out;
    out << "== " << command << "\n";
    for (auto& [key, value] : payload.items()) {
        if (value.is_string())
            out << key << ": " << value.get<std::string>() << "\n";
        else
            out << key << ": " << value.dump() << "\n";
    }
    for (auto& c : checks)
        out << (c.pass ? "ok   " : "FAIL ") << c.name << " = " << c.actual << " (expected "
            << c.expected << ", " << c.source << ")\n";
    out << (all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return out.str();
}

} // namespace trop
