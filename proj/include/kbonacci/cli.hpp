#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kbonacci::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
};

/// Environment variable that overrides the enumeration cap (the --cap flag wins).
inline constexpr const char* kCapEnvVar = "KBONACCI_ENUM_CAP";

/// Inclusive integer range written "a..b", or a single value "a".
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    /// Throws ParameterError on malformed text or lo > hi.
    static IntRange parse(std::string_view text);
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. `cap_env` is the raw value of KBONACCI_ENUM_CAP, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> cap_env = std::nullopt);

} // namespace kbonacci::cli
