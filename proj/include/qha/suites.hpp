#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qha/config.hpp"
#include "qha/error_table.hpp"
#include "qha/report.hpp"
#include "qha/symbol.hpp"

namespace qha {

/// Named registry of test symbols referenced from configs.
Symbol registry_symbol(const std::string& name);

struct SuiteResult {
  Report report;
  std::vector<std::pair<std::string, ErrorTable>> tables;  // name -> CSV payload
};

/// suite in {core, conv, groups, wiener, bergman, all}.
SuiteResult run_suite(const RunConfig& config, const std::string& suite);

/// study in {sot, approx_identity, truncation}.
SuiteResult run_convergence(const RunConfig& config, const std::string& study);

}  // namespace qha
