#include "ewv/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace ewv {

int SuiteReport::passed() const {
    int n = 0;
    for (const auto& e : entries) n += e.pass ? 1 : 0;
    return n;
}

int SuiteReport::failed() const { return static_cast<int>(entries.size()) - passed(); }

namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Plain rendering for the text format: strings unquoted, numbers round-trip.
std::string plain(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

}  // namespace

Json report_json(const SuiteReport& r, const Config& raw_config) {
    Json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["mode"] = r.mode;
    j["seed"] = r.seed;
    j["timestamp"] = utc_now();
    Json cfg = Json::object();
    for (const auto& [k, v] : raw_config.raw()) cfg[k] = v;
    j["config"] = cfg;
    j["summary"] = Json{{"pass", r.passed()}, {"fail", r.failed()}};
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json je;
        je["check_id"] = e.check_id;
        je["paper_anchor"] = e.paper_anchor;
        je["status"] = e.pass ? "PASS" : "FAIL";
        je["measured"] = e.measured;
        je["expected"] = e.expected;
        je["tolerance"] = e.tolerance;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream out;
    for (const auto& e : r.entries) {
        out << "CHECK " << e.check_id << ' ' << (e.pass ? "PASS" : "FAIL")
            << " measured=" << plain(e.measured) << " expected=" << plain(e.expected)
            << " tol=" << plain(e.tolerance) << '\n';
    }
    out << "SUITE " << r.suite << " pass=" << r.passed() << " fail=" << r.failed() << '\n';
    return out.str();
}

}  // namespace ewv
