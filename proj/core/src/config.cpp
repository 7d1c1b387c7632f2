#include "affine/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "affine/csv.hpp"
#include "affine/version.hpp"

namespace affine {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const char* where,
                  std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError(std::string(where) + ": expected a JSON object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ConfigError(std::string(where) + ": unknown field \"" + key + "\"");
    }
}

double get_num(const json& obj, const char* where, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(std::string(where) + "." + key + ": expected number");
    return v.get<double>();
}

std::uint64_t get_u64(const json& obj, const char* where, const char* key,
                      std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        throw ConfigError(std::string(where) + "." + key + ": expected nonnegative integer");
    if (v.is_number_integer() && v.get<std::int64_t>() < 0)
        throw ConfigError(std::string(where) + "." + key + ": expected nonnegative integer");
    return v.get<std::uint64_t>();
}

bool get_bool(const json& obj, const char* where, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) throw ConfigError(std::string(where) + "." + key + ": expected bool");
    return v.get<bool>();
}

ModelParams model_from_json(const json& j) {
    require_keys(j, "model", {"alpha", "beta", "phi", "lambda", "r0"});
    ModelParams m;
    m.alpha = get_num(j, "model", "alpha", m.alpha);
    m.beta = get_num(j, "model", "beta", m.beta);
    m.phi = get_num(j, "model", "phi", m.phi);
    m.lambda = get_num(j, "model", "lambda", m.lambda);
    m.r0 = get_num(j, "model", "r0", m.r0);
    return m;
}

SimConfig sim_from_json(const json& j) {
    require_keys(j, "sim",
                 {"n_paths", "t_max", "dt", "seed", "scheme", "record_every", "absorb",
                  "threads"});
    SimConfig s;
    s.n_paths = get_u64(j, "sim", "n_paths", s.n_paths);
    s.t_max = get_num(j, "sim", "t_max", s.t_max);
    s.dt = get_num(j, "sim", "dt", s.dt);
    s.seed = get_u64(j, "sim", "seed", s.seed);
    if (j.contains("scheme")) {
        if (!j.at("scheme").is_string()) throw ConfigError("sim.scheme: expected string");
        try {
            s.scheme = scheme_from_string(j.at("scheme").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("sim.scheme: ") + e.what());
        }
    }
    s.record_every = get_u64(j, "sim", "record_every", s.record_every);
    s.absorb = get_bool(j, "sim", "absorb", s.absorb);
    s.threads = static_cast<unsigned>(get_u64(j, "sim", "threads", s.threads));
    return s;
}

GridSpec grid_from_json(const json& j) {
    require_keys(j, "check.grid", {"t0", "t1", "nt", "q0", "q1", "nq", "h"});
    GridSpec g;
    g.t0 = get_num(j, "check.grid", "t0", g.t0);
    g.t1 = get_num(j, "check.grid", "t1", g.t1);
    g.nt = static_cast<int>(get_u64(j, "check.grid", "nt", static_cast<std::uint64_t>(g.nt)));
    g.q0 = get_num(j, "check.grid", "q0", g.q0);
    g.q1 = get_num(j, "check.grid", "q1", g.q1);
    g.nq = static_cast<int>(get_u64(j, "check.grid", "nq", static_cast<std::uint64_t>(g.nq)));
    g.h = get_num(j, "check.grid", "h", g.h);
    return g;
}

CheckConfig check_from_json(const json& j) {
    require_keys(j, "check",
                 {"grid", "pde_tolerance", "ks_threshold", "chi2_bins", "chi2_p_min",
                  "s_checkpoints", "s_increment_t", "s_increment_dt", "scaling_c",
                  "scaling_t", "lattice_n"});
    CheckConfig c;
    if (j.contains("grid")) c.grid = grid_from_json(j.at("grid"));
    c.pde_tolerance = get_num(j, "check", "pde_tolerance", c.pde_tolerance);
    c.ks_threshold = get_num(j, "check", "ks_threshold", c.ks_threshold);
    c.chi2_bins = static_cast<int>(
        get_u64(j, "check", "chi2_bins", static_cast<std::uint64_t>(c.chi2_bins)));
    c.chi2_p_min = get_num(j, "check", "chi2_p_min", c.chi2_p_min);
    if (j.contains("s_checkpoints")) {
        const auto& arr = j.at("s_checkpoints");
        if (!arr.is_array()) throw ConfigError("check.s_checkpoints: expected array");
        c.s_checkpoints.clear();
        for (const auto& v : arr) {
            if (!v.is_number()) throw ConfigError("check.s_checkpoints: expected numbers");
            c.s_checkpoints.push_back(v.get<double>());
        }
    }
    c.s_increment_t = get_num(j, "check", "s_increment_t", c.s_increment_t);
    c.s_increment_dt = get_num(j, "check", "s_increment_dt", c.s_increment_dt);
    c.scaling_c = get_num(j, "check", "scaling_c", c.scaling_c);
    c.scaling_t = get_num(j, "check", "scaling_t", c.scaling_t);
    c.lattice_n = static_cast<int>(
        get_u64(j, "check", "lattice_n", static_cast<std::uint64_t>(c.lattice_n)));
    return c;
}

DensityConfig density_from_json(const json& j) {
    require_keys(j, "density", {"q_min", "q_max", "n_points"});
    DensityConfig d;
    if (j.contains("q_min")) d.q_min = get_num(j, "density", "q_min", 0.0);
    if (j.contains("q_max")) d.q_max = get_num(j, "density", "q_max", 0.0);
    d.n_points = static_cast<int>(
        get_u64(j, "density", "n_points", static_cast<std::uint64_t>(d.n_points)));
    return d;
}

}  // namespace

void RunConfig::validate() const {
    try {
        (void)derive(model);
        sim.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (check.chi2_bins < 2) throw ConfigError("check.chi2_bins must be >= 2");
    if (check.lattice_n < 2) throw ConfigError("check.lattice_n must be >= 2");
    if (density.n_points < 2) throw ConfigError("density.n_points must be >= 2");
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    require_keys(j, "config", {"model", "sim", "check", "density", "output_dir"});
    RunConfig cfg;
    if (j.contains("model")) cfg.model = model_from_json(j.at("model"));
    if (j.contains("sim")) cfg.sim = sim_from_json(j.at("sim"));
    if (j.contains("check")) cfg.check = check_from_json(j.at("check"));
    if (j.contains("density")) cfg.density = density_from_json(j.at("density"));
    if (j.contains("output_dir")) {
        if (!j.at("output_dir").is_string()) throw ConfigError("output_dir: expected string");
        cfg.output_dir = j.at("output_dir").get<std::string>();
    }
    cfg.validate();
    return cfg;
}

nlohmann::json run_config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["model"] = {{"alpha", cfg.model.alpha},
                  {"beta", cfg.model.beta},
                  {"phi", cfg.model.phi},
                  {"lambda", cfg.model.lambda},
                  {"r0", cfg.model.r0}};
    j["sim"] = {{"n_paths", cfg.sim.n_paths},
                {"t_max", cfg.sim.t_max},
                {"dt", cfg.sim.dt},
                {"seed", cfg.sim.seed},
                {"scheme", to_string(cfg.sim.scheme)},
                {"record_every", cfg.sim.record_every},
                {"absorb", cfg.sim.absorb},
                {"threads", cfg.sim.threads}};
    j["check"] = {{"grid",
                   {{"t0", cfg.check.grid.t0},
                    {"t1", cfg.check.grid.t1},
                    {"nt", cfg.check.grid.nt},
                    {"q0", cfg.check.grid.q0},
                    {"q1", cfg.check.grid.q1},
                    {"nq", cfg.check.grid.nq},
                    {"h", cfg.check.grid.h}}},
                  {"pde_tolerance", cfg.check.pde_tolerance},
                  {"ks_threshold", cfg.check.ks_threshold},
                  {"chi2_bins", cfg.check.chi2_bins},
                  {"chi2_p_min", cfg.check.chi2_p_min},
                  {"s_checkpoints", cfg.check.s_checkpoints},
                  {"s_increment_t", cfg.check.s_increment_t},
                  {"s_increment_dt", cfg.check.s_increment_dt},
                  {"scaling_c", cfg.check.scaling_c},
                  {"scaling_t", cfg.check.scaling_t},
                  {"lattice_n", cfg.check.lattice_n}};
    j["density"] = nlohmann::json::object();
    if (cfg.density.q_min) j["density"]["q_min"] = *cfg.density.q_min;
    if (cfg.density.q_max) j["density"]["q_max"] = *cfg.density.q_max;
    j["density"]["n_points"] = cfg.density.n_points;
    j["output_dir"] = cfg.output_dir;
    return j;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    // A manifest embeds the full resolved config under "config"; accept it
    // directly so runs can be replayed from their own manifests.
    if (j.is_object() && j.contains("config")) {
        return run_config_from_json(j.at("config"));
    }
    return run_config_from_json(j);
}

nlohmann::json manifest_to_json(const RunManifest& m) {
    nlohmann::json j;
    j["tool"] = "affinesim";
    j["version"] = m.version;
    j["command"] = m.command;
    j["config"] = run_config_to_json(m.config);
    j["derived"] = {{"phi_tilde", m.derived.phi_tilde}, {"delta", m.derived.delta},
                    {"big_c", m.derived.big_c},         {"big_d", m.derived.big_d},
                    {"theta", m.derived.theta},         {"x0", m.derived.x0},
                    {"z0", m.derived.z0}};
    j["seed"] = m.config.sim.seed;
    j["duration_seconds"] = m.duration_seconds;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& [name, pass] : m.checks) {
        checks.push_back({{"name", name}, {"pass", pass}});
    }
    j["checks"] = checks;
    j["outputs"] = m.outputs;
    return j;
}

std::string resolve_output_dir(const RunConfig& cfg) {
    if (!cfg.output_dir.empty()) return cfg.output_dir;
    if (const char* env = std::getenv("AFFINESIM_OUT_DIR"); env != nullptr && *env != '\0')
        return env;
    return ".";
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace affine
