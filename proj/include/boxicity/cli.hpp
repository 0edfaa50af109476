#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace boxicity::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,  // verification failed or the answer is "no"
    kInputError = 2,
    kBudgetExceeded = 3,
};

/// Summary printed by `construct`.
struct RunReport {
    long long n = 0;
    long long m = 0;
    long long max_degree = 0;
    int colors = 0;
    long long raw_dimension = 0;
    long long pruned_dimension = 0;
    long long bound = 0;  // 2*max_degree^2 + 2
    bool verified = false;
    double seconds = 0.0;
};

std::string format_report(const RunReport& r);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxicity::cli
