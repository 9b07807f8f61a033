#include "betaproof/cli/config.hpp"

namespace betaproof::cli {

std::string to_string(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "text";
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "text") return Format::Text;
    throw ConfigError("format must be one of json, csv, text");
}

void validate(const RunConfig& cfg) {
    if (cfg.precision_digits < 30) throw ConfigError("precision_digits must be ≥ 30");
    if (cfg.grid_n < 2) throw ConfigError("grid_n must be ≥ 2");
    if (cfg.enclosure_width.sign() <= 0) throw ConfigError("enclosure_width must be > 0");
    if (cfg.threads < 1) throw ConfigError("threads must be ≥ 1");
}

}  // namespace betaproof::cli
