#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trop/rational.hpp"

namespace trop {

// pretty form for humans: denominator 1 omitted
std::string rat_display(const Rat& r);

struct ReportEntry {
    std::string name;
    std::string expected;
    std::string actual;
    std::string source; // "reference", "derived", or "definition"
    bool pass = true;
};

struct Report {
    std::string command;
    std::vector<ReportEntry> checks;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();

    void check(const std::string& name, const std::string& expected, const std::string& actual,
               const std::string& source);
    void note(const std::string& key, const nlohmann::ordered_json& value);
    bool all_pass() const;
    std::string render_json() const;
    std::string render_text() const;
};

} // namespace trop
