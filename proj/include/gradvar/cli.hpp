#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradvar/cases.hpp"

namespace gradvar::cli {

/// Exit codes: success, a requested check failed, bad input or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kReportSchemaVersion = 1;

/// Runs one command line. `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const cases::CaseReport& report);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string digest(const std::string& bytes);

}  // namespace gradvar::cli
