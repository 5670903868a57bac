#pragma once

#include <optional>
#include <string>

namespace zetasum {

enum class PrecisionMode { Standard, Extended };
enum class OutputFormat { Text, Json, Csv };

struct CliConfig {
    PrecisionMode precision_mode = PrecisionMode::Standard;
    double tol_abs = 1e-10;
    double tol_rel = 0.0;
    double contour_height = 200.0;
    long term_cap = 1000000;
    OutputFormat format = OutputFormat::Text;
    std::string out_path;
    bool with_timestamps = false;

    void validate() const;
};

// Key = value lines, '#' comments. Unknown keys are an error.
CliConfig load_config_file(const std::string& path, CliConfig base = {});
// Reads ZETASUM_CONFIG when set; returns base otherwise.
CliConfig load_config_from_env(CliConfig base = {});

}  // namespace zetasum
