#include "weierstab/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weierstab/json_io.hpp"

namespace weierstab {

std::optional<std::string> resolve_config_path(const std::optional<std::string>& explicit_path) {
    if (explicit_path) return explicit_path;
    if (const char* env = std::getenv(config_env_var); env != nullptr && *env != '\0') return std::string(env);
    if (std::filesystem::exists(default_config_file)) return std::string(default_config_file);
    return std::nullopt;
}

namespace {

std::uint64_t read_count(const io::Json& j, const char* key) {
    if (!j.is_number_unsigned()) throw ParseError(std::string("config field \"") + key + "\" must be a non-negative integer", key);
    return j.get<std::uint64_t>();
}

} // namespace

RunConfig config_from_json_text(const std::string& text) {
    const io::Json j = io::parse_json(text, "config");
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "params") {
            cfg.params = io::params_from_json(value);
        } else if (key == "u_max") {
            cfg.u_max = io::rational_from_json(value, "u_max");
            if (cfg.u_max.sign() <= 0) throw ParameterError("config u_max must be positive");
        } else if (key == "candidate_cap") {
            cfg.candidate_cap = read_count(value, "candidate_cap");
        } else if (key == "format") {
            const auto f = value.is_string() ? value.get<std::string>() : std::string{};
            if (f == "json") cfg.format = OutputFormat::json;
            else if (f == "table") cfg.format = OutputFormat::table;
            else throw ParseError("config format must be \"json\" or \"table\"", "format");
        } else if (key == "seed") {
            cfg.seed = read_count(value, "seed");
        } else if (key == "verify") {
            if (!value.is_object()) throw ParseError("config verify must be an object", "verify");
            for (const auto& [vk, vv] : value.items()) {
                if (vk == "classes") cfg.verify.classes = read_count(vv, "classes");
                else if (vk == "param_sets") cfg.verify.param_sets = read_count(vv, "param_sets");
                else if (vk == "oracle_pairs") cfg.verify.oracle_pairs = read_count(vv, "oracle_pairs");
                else if (vk == "wall_pairs") cfg.verify.wall_pairs = read_count(vv, "wall_pairs");
                else if (vk == "theorem_classes") cfg.verify.theorem_classes = read_count(vv, "theorem_classes");
                else throw ParseError("unknown verify key \"" + vk + "\"", vk);
            }
        } else {
            throw ParseError("unknown config key \"" + key + "\"", key);
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return config_from_json_text(buf.str());
    } catch (const ParameterError& e) {
        throw ParameterError(path + ": " + e.what());
    }
}

} // namespace weierstab
