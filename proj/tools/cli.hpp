// cli.hpp
// Command-line surface for the toolkit. run() is the whole program minus
// argv marshalling so the tests can drive it in-process.
//
// Exit codes: 0 success, 2 usage or validation error, 3 exhaustion (an
// even N with no partition — the counterexample signal), 4 I/O failure,
// 5 completeness verification failure.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace goldbach::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kExhausted = 3;
inline constexpr int kIoError = 4;
inline constexpr int kVerifyFailed = 5;

// args are argv[1..]; normal output goes to out (or the --out file),
// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldbach::cli
