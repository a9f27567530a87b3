#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "weierstab/rational.hpp"
#include "weierstab/surface.hpp"
#include "weierstab/wall_scan.hpp"

namespace weierstab {

enum class OutputFormat { json, table };

/// Sizes of the randomized suites run by `verify`.
struct VerifySizes {
    std::size_t classes = 1000;      // random classes per parameter set
    std::size_t param_sets = 10;
    std::size_t oracle_pairs = 1000;
    std::size_t wall_pairs = 100;
    std::size_t theorem_classes = 100; // per side
};

struct RunConfig {
    SurfaceParams params = SurfaceParams::create(Rational(0), Rational(2), Rational(1), Rational(1));
    Rational u_max = Rational(1);
    std::uint64_t candidate_cap = default_candidate_cap;
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 42;
    VerifySizes verify;
};

inline constexpr const char* config_env_var = "WEIER_STAB_CONFIG";
inline constexpr const char* default_config_file = "weier-stab.json";

/// Resolves the config file: explicit path, then $WEIER_STAB_CONFIG, then
/// ./weier-stab.json if present. Returns nullopt when none applies.
std::optional<std::string> resolve_config_path(const std::optional<std::string>& explicit_path);

/// Loads a JSON config. Missing keys keep their defaults; invalid surface
/// parameters raise ParameterError naming the broken invariant.
RunConfig load_config(const std::string& path);
RunConfig config_from_json_text(const std::string& text);

} // namespace weierstab
