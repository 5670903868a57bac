#include "zetasum/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zetasum {

void CliConfig::validate() const {
    if (!(tol_abs > 0.0)) throw std::invalid_argument("config: tol_abs must be > 0");
    if (tol_rel < 0.0) throw std::invalid_argument("config: tol_rel must be >= 0");
    if (!(contour_height > 0.0)) throw std::invalid_argument("config: contour_height must be > 0");
    if (term_cap < 1000) throw std::invalid_argument("config: term_cap must be >= 1000");
}

CliConfig load_config_file(const std::string& path, CliConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw std::runtime_error("config: bad line " + std::to_string(lineno));
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "precision_mode") {
            if (val == "standard")
                base.precision_mode = PrecisionMode::Standard;
            else if (val == "extended")
                base.precision_mode = PrecisionMode::Extended;
            else
                throw std::runtime_error("config: precision_mode must be standard|extended");
        } else if (key == "tol_abs")
            base.tol_abs = std::stod(val);
        else if (key == "tol_rel")
            base.tol_rel = std::stod(val);
        else if (key == "contour_height")
            base.contour_height = std::stod(val);
        else if (key == "term_cap")
            base.term_cap = std::stol(val);
        else if (key == "format") {
            if (val == "text")
                base.format = OutputFormat::Text;
            else if (val == "json")
                base.format = OutputFormat::Json;
            else if (val == "csv")
                base.format = OutputFormat::Csv;
            else
                throw std::runtime_error("config: format must be text|json|csv");
        } else if (key == "out")
            base.out_path = val;
        else
            throw std::runtime_error("config: unknown key " + key);
    }
    base.validate();
    return base;
}

CliConfig load_config_from_env(CliConfig base) {
    const char* p = std::getenv("ZETASUM_CONFIG");
    if (p && *p) return load_config_file(p, base);
    return base;
}

}  // namespace zetasum
