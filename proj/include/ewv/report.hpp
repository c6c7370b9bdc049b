#pragma once

// Verification report assembly: typed check entries, JSON serialization with
// a versioned schema, and the line-oriented text rendering.

#include "ewv/config.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ewv {

using Json = nlohmann::ordered_json;

struct CheckEntry {
    std::string check_id;
    std::string paper_anchor;  // equation tag or "plumbing"
    bool pass = false;
    Json measured;
    Json expected;
    Json tolerance;
};

struct SuiteReport {
    std::string suite;
    std::string mode = "strict";
    unsigned seed = 0;
    std::vector<CheckEntry> entries;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    void add(CheckEntry e) { entries.push_back(std::move(e)); }
};

Json report_json(const SuiteReport& r, const Config& raw_config);
std::string report_text(const SuiteReport& r);

}  // namespace ewv
