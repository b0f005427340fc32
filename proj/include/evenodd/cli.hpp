// cli.hpp
// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#pragma once

#include "evenodd/oracles.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evenodd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// Environment variable overriding the default comparison tolerance.
inline constexpr const char* kToleranceEnv = "EVENODD_TOLERANCE";

enum class Command { Classify, Run, Table, Verify, Dj };
enum class OutputFormat { Text, Json };

struct RunConfig {
    Command command = Command::Table;
    std::optional<TruthTable> function;
    OutputFormat output_format = OutputFormat::Text;
    bool trace = false;
    std::optional<double> tolerance_override;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// run/classify/dj need a function; table/verify must not have one.
void validate(const RunConfig& config);

// Parses a tolerance override; nullopt for a null or empty value.
std::optional<double> parse_tolerance(const char* value);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* tolerance_env = nullptr);

int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace evenodd::cli
