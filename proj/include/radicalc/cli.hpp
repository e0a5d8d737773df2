#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radicalc/numeric.hpp"
#include "radicalc/reduced_set.hpp"

namespace radicalc::cli {

enum ExitCode : int {
    kSuccess = 0,      // success, rational, reduced set
    kNegative = 1,     // irrational, not reduced
    kUsageError = 2,   // usage, syntax, and domain errors
    kBudgetError = 3,  // factor or tuple budget exhausted
};

struct CliConfig {
    unsigned precision_bits = kDefaultPrecisionBits;
    std::uint64_t tuple_budget = kDefaultTupleBudget;
    std::uint64_t factor_budget = kDefaultFactorBudget;
    bool json = false;
};

/// Runs one `radicalc` invocation. `args` excludes the program name;
/// `env_bits` is the value of RADICALC_BITS, if set.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_bits = std::nullopt);

} // namespace radicalc::cli
