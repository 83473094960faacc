#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace gvkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitTheorem = 3;

enum class Format { Csv, Json };

/* One command per process. Precedence: explicit flags > the JSON file
 * named by GVKIT_CONFIG > built-in defaults. */
struct RunConfig {
    int kmax = 5;
    int gmax = 5;
    int dmax = 5;
    int hmax = 5;
    std::uint64_t seed = 1;
    int random_count = 0;
    std::string input;
    std::string output;
    Format format = Format::Csv;
};

/* Defaults, overlaid with the GVKIT_CONFIG file when the variable is set.
 * A malformed config file is a usage-level error (throws SchemaError). */
RunConfig config_from_env();

int cmd_k3(const RunConfig& cfg, std::ostream& out);
int cmd_gw(const RunConfig& cfg, std::ostream& out);
int cmd_gv_invert(const RunConfig& cfg, std::ostream& out);
int cmd_parity(const RunConfig& cfg, std::ostream& out);
int cmd_cech(const RunConfig& cfg, std::ostream& out);

/* Full argv-level entry point used by main() and the tests. */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gvkit::cli
