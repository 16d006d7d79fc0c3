#pragma once

#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <bosonkit/verify.hpp>

namespace bosonkit {

/// Machine-readable result of one CLI command.
struct output_record {
    static constexpr int schema_version = 1;

    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<result_row> results;
    std::vector<check_result> checks;

    bool passed() const
    {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    void add_suite(const suite_result& suite)
    {
        for (const auto& row : suite.rows) {
            result_row tagged;
            tagged.emplace_back("suite", suite.suite);
            tagged.insert(tagged.end(), row.begin(), row.end());
            results.push_back(std::move(tagged));
        }
        checks.insert(checks.end(), suite.checks.begin(), suite.checks.end());
    }
};

namespace detail {

inline bool has_field(const result_row& row, const std::string& key)
{
    for (const auto& [k, v] : row) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

inline std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline nlohmann::ordered_json to_json(const output_record& rec)
{
    nlohmann::ordered_json j;
    j["schema"] = output_record::schema_version;
    j["command"] = rec.command;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.parameters) {
        j["parameters"][k] = v;
    }
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& row : rec.results) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (const auto& [k, v] : row) {
            r[k] = v;
        }
        r["provenance"] = detail::has_field(row, "abs_error") ? "bounded" : "exact";
        j["results"].push_back(std::move(r));
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : rec.checks) {
        j["checks"].push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    }
    j["status"] = rec.passed() ? "pass" : "fail";
    return j;
}

inline output_record from_json(const nlohmann::ordered_json& j)
{
    output_record rec;
    if (j.at("schema").get<int>() != output_record::schema_version) {
        throw error(errc::malformed, "unknown output schema");
    }
    rec.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items()) {
        rec.parameters.emplace_back(k, v.get<std::string>());
    }
    for (const auto& r : j.at("results")) {
        result_row row;
        for (const auto& [k, v] : r.items()) {
            if (k != "provenance") {
                row.emplace_back(k, v.get<std::string>());
            }
        }
        rec.results.push_back(std::move(row));
    }
    for (const auto& c : j.at("checks")) {
        rec.checks.push_back({c.at("name").get<std::string>(), c.at("status").get<std::string>() == "pass",
                              c.at("detail").get<std::string>()});
    }
    return rec;
}

inline void write_csv(std::ostream& os, const output_record& rec)
{
    std::vector<std::string> columns;
    std::set<std::string> seen;
    for (const auto& row : rec.results) {
        for (const auto& [k, v] : row) {
            if (seen.insert(k).second) {
                columns.push_back(k);
            }
        }
    }
    if (!columns.empty()) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? "," : "") << columns[i];
        }
        os << ",provenance\n";
        for (const auto& row : rec.results) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                std::string value;
                for (const auto& [k, v] : row) {
                    if (k == columns[i]) {
                        value = v;
                    }
                }
                os << (i ? "," : "") << detail::csv_escape(value);
            }
            os << "," << (detail::has_field(row, "abs_error") ? "bounded" : "exact") << "\n";
        }
    }
    if (!rec.checks.empty()) {
        if (!columns.empty()) {
            os << "\n";
        }
        os << "check,status,detail\n";
        for (const auto& c : rec.checks) {
            os << detail::csv_escape(c.name) << "," << (c.passed ? "pass" : "fail") << ","
               << detail::csv_escape(c.detail) << "\n";
        }
    }
}

inline void write_plain(std::ostream& os, const output_record& rec)
{
    os << rec.command;
    for (const auto& [k, v] : rec.parameters) {
        os << " " << k << "=" << v;
    }
    os << "\n";
    for (const auto& row : rec.results) {
        for (const auto& [k, v] : row) {
            os << "  " << k << "=" << v;
        }
        os << "\n";
    }
    for (const auto& c : rec.checks) {
        os << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    }
    if (!rec.checks.empty()) {
        os << (rec.passed() ? "all checks passed" : "verification FAILED") << "\n";
    }
}

} // namespace bosonkit
