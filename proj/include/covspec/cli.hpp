#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace covspec::cli {

enum ExitCode : int { ok = 0, failure = 1, invalid_input = 2, capacity = 3 };

/// Runs one command line (program name excluded). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Aligned plain-text rendering of a JSON report.
std::string render_table(const nlohmann::json& report);

}  // namespace covspec::cli
