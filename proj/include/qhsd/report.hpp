#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace qhsd {

// Human-readable and machine-readable renderings of one verification run.
// Statuses: pass | fail | advisory | skipped.  Only "fail" affects the exit
// code; advisory entries report computed facts the file did not pin down.
struct ReportEntry {
    std::string name;
    std::string status;
    std::string details;
};

struct VerificationReport {
    std::string subject;
    std::vector<ReportEntry> entries;

    void add(std::string name, std::string status, std::string details = "") {
        entries.push_back({std::move(name), std::move(status), std::move(details)});
    }
    void add_pass_fail(std::string name, bool ok, std::string details = "") {
        add(std::move(name), ok ? "pass" : "fail", std::move(details));
    }

    bool pass() const {
        for (const auto& e : entries)
            if (e.status == "fail") return false;
        return true;
    }
    int exit_code() const { return pass() ? 0 : 1; }

    std::string text() const {
        std::ostringstream os;
        os << "verification report: " << subject << "\n";
        for (const auto& e : entries) {
            os << "  [" << e.status << "] " << e.name;
            if (!e.details.empty()) os << ": " << e.details;
            os << "\n";
        }
        os << (pass() ? "RESULT: pass" : "RESULT: FAIL") << "\n";
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& e : entries)
            checks.push_back({{"name", e.name}, {"status", e.status}, {"details", e.details}});
        return nlohmann::json{{"subject", subject}, {"checks", checks}, {"pass", pass()}};
    }
};

}  // namespace qhsd
