#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gwpa::cli {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

/// Runs `gwpa <command> <spec> [args] [options]` with args excluding the
/// program name. Reports go to out, diagnostics to err. Exit codes signal
/// tool errors only: a mathematical "fails" verdict still exits 0.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwpa::cli
