#pragma once

#include "betaproof/hpfloat.hpp"
#include "betaproof/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace betaproof::cli {

enum class Format { Json, Csv, Text };

std::string to_string(Format f);
/// Throws ConfigError for anything but json, csv, text.
Format parse_format(const std::string& text);

/// Invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Prefix of the environment variables mirroring the flags, e.g.
/// BETAPROOF_PRECISION, BETAPROOF_GRID.
inline constexpr const char* kEnvPrefix = "BETAPROOF_";

struct RunConfig {
    int precision_digits = 50;
    int grid_n = 1000;
    Rational enclosure_width{1, 1000000};
    std::string output_path;
    /// Unset means the command's natural format.
    std::optional<Format> format;
    /// Argument of the `bounds` command.
    std::string bounds_x = "1";
    unsigned threads = 1;

    [[nodiscard]] Precision precision() const { return Precision{precision_digits}; }
    [[nodiscard]] Format format_or(Format fallback) const { return format.value_or(fallback); }
};

/// Throws ConfigError naming the first violated invariant.
void validate(const RunConfig& cfg);

}  // namespace betaproof::cli
