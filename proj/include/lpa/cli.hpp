#ifndef LPA_CLI_HPP
#define LPA_CLI_HPP

#include "lpa/json_io.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kVerificationFailure = 2 };

struct SuiteResult {
    bool pass = false;
    json_io::Json detail;  // extra per-n fields, may be null
};

/// Writes the verify document for results[i] at n = first + i. Returns
/// kVerificationFailure, with the first failing n on err, unless all pass.
int write_verify_report(const std::string& suite, std::size_t max, std::size_t first,
                        const std::vector<SuiteResult>& results, std::ostream& out, std::ostream& err);

/// Runs one subcommand. args excludes the program name. JSON goes to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli

#endif  // LPA_CLI_HPP
