// Drives the installed ewverify binary end to end. Invoked as
//   test_cli <path-to-ewverify> <path-to-default-config> [doctest args]

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_bin;
std::string g_cfg;

std::filesystem::path temp_path(const std::string& tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("ewv-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" +
            tag);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path write_temp(const std::string& tag, const std::string& text) {
    const auto p = temp_path(tag);
    std::ofstream(p) << text;
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const auto cap = temp_path("stdout.txt");
    const std::string cmd = g_bin + " " + args + " > " + cap.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = slurp(cap);
    std::filesystem::remove(cap);
    return r;
}

std::string drop_timestamp(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("\"timestamp\"") == std::string::npos) out << line << '\n';
    return out.str();
}

}  // namespace

TEST_CASE("passing suite exits 0 and prints one line per check") {
    const auto r = run_cli("--suite mass --config " + g_cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const std::regex check_line(R"(CHECK \S+ (PASS|FAIL) measured=.+ expected=.+ tol=.+)");
    const std::regex suite_line(R"(SUITE \S+ pass=\d+ fail=\d+)");
    std::istringstream in(r.out);
    std::string line;
    int checks = 0, suites = 0;
    while (std::getline(in, line)) {
        if (line.rfind("CHECK ", 0) == 0) {
            CHECK(std::regex_match(line, check_line));
            ++checks;
        } else if (line.rfind("SUITE ", 0) == 0) {
            CHECK(std::regex_match(line, suite_line));
            ++suites;
        }
    }
    CHECK(checks >= 4);
    CHECK(suites == 1);
}

TEST_CASE("usage and configuration problems exit 2") {
    CHECK(run_cli("--suite bogus").exit_code == 2);
    CHECK(run_cli("--config /nonexistent/nope.ini --suite mass").exit_code == 2);

    const auto bad = write_temp("bad.ini", "[constants]\nalpha = banana\n");
    const auto r = run_cli("--suite mass --config " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("error") != std::string::npos);
    std::filesystem::remove(bad);

    const auto noeq = write_temp("noeq.ini", "[sweep]\npoints\n");
    CHECK(run_cli("--suite mass --config " + noeq.string()).exit_code == 2);
    std::filesystem::remove(noeq);

    CHECK(run_cli("--suite mass --out /nonexistent-dir/rep.json").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("a flipped gradient rule turns into check failures, not a crash") {
    const auto flip = write_temp("flip.ini", "[rules]\nflip_sign_of = xi\n");
    const auto r = run_cli("--suite rules --config " + flip.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    std::filesystem::remove(flip);

    // an unknown rule name is a configuration error instead
    const auto bogus = write_temp("flip2.ini", "[rules]\nflip_sign_of = banana\n");
    CHECK(run_cli("--suite rules --config " + bogus.string()).exit_code == 2);
    std::filesystem::remove(bogus);
}

TEST_CASE("json report carries the versioned schema") {
    const auto out = temp_path("rep.json");
    const auto r = run_cli("--suite mass --config " + g_cfg + " --format json --out " +
                           out.string());
    CHECK(r.exit_code == 0);

    const auto j = nlohmann::json::parse(slurp(out));
    std::filesystem::remove(out);
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "mass");
    CHECK(j["mode"] == "strict");
    CHECK(j["seed"].is_number());
    CHECK(j["timestamp"].is_string());
    CHECK(j["config"].is_object());
    CHECK(j["summary"]["fail"] == 0);
    REQUIRE(j["entries"].is_array());
    REQUIRE(!j["entries"].empty());
    for (const auto& e : j["entries"]) {
        CHECK(e.contains("check_id"));
        CHECK(e.contains("paper_anchor"));
        CHECK((e["status"] == "PASS" || e["status"] == "FAIL"));
        CHECK(e.contains("measured"));
        CHECK(e.contains("expected"));
        CHECK(e.contains("tolerance"));
    }

    // stdout carries the same document (modulo timestamp)
    const auto js = nlohmann::json::parse(r.out);
    CHECK(js["suite"] == "mass");
    CHECK(js["entries"].size() == j["entries"].size());
}

TEST_CASE("seed and mode flags land in the report") {
    const auto r = run_cli("--suite symbolic --seed 42 --mode associative --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["seed"] == 42);
    CHECK(j["mode"] == "associative");

    const auto rs = run_cli("--suite symbolic --format json");
    CHECK(nlohmann::json::parse(rs.out)["mode"] == "strict");
}

TEST_CASE("repeated runs are identical up to the timestamp") {
    const auto o1 = temp_path("rep1.json");
    const auto o2 = temp_path("rep2.json");
    CHECK(run_cli("--suite symbolic --config " + g_cfg + " --out " + o1.string()).exit_code ==
          0);
    CHECK(run_cli("--suite symbolic --config " + g_cfg + " --out " + o2.string()).exit_code ==
          0);
    const std::string a = drop_timestamp(slurp(o1));
    const std::string b = drop_timestamp(slurp(o2));
    std::filesystem::remove(o1);
    std::filesystem::remove(o2);
    CHECK(!a.empty());
    CHECK(a == b);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <ewverify> <config> [doctest args]\n");
        return 64;
    }
    g_bin = argv[1];
    g_cfg = argv[2];

    std::vector<char*> rest;
    rest.push_back(argv[0]);
    for (int i = 3; i < argc; ++i) rest.push_back(argv[i]);

    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
