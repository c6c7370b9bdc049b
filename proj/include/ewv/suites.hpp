#pragma once

// Named verification suites composing the library modules into report
// entries: symbolic, rules, pairings, fourier, amplitudes, mass, all.

#include "ewv/config.hpp"
#include "ewv/report.hpp"
#include "ewv/rules.hpp"

#include <string>
#include <vector>

namespace ewv {

const std::vector<std::string>& suite_names();  // without "all"

// Throws ConfigError for an unknown suite name or bad config knobs.
SuiteReport run_suite(const std::string& name, const RunConfig& rc, Mode mode);

}  // namespace ewv
