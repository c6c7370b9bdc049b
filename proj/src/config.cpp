#include "ewv/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ewv {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
    const auto p = s.find_first_of("#;");
    return p == std::string::npos ? s : s.substr(0, p);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(body.substr(1, body.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": expected key = value, got '" + body + "'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        cfg.values_[section + "." + key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    return values_.count(section + "." + key) > 0;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    const auto it = values_.find(section + "." + key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    const auto it = values_.find(section + "." + key);
    if (it == values_.end()) return fallback;
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0')
        throw ConfigError("bad numeric value for " + section + "." + key + ": '" + it->second +
                          "'");
    return v;
}

int Config::get_int(const std::string& section, const std::string& key, int fallback) const {
    const auto it = values_.find(section + "." + key);
    if (it == values_.end()) return fallback;
    char* end = nullptr;
    const long v = std::strtol(it->second.c_str(), &end, 10);
    if (end == it->second.c_str() || *end != '\0')
        throw ConfigError("bad integer value for " + section + "." + key + ": '" + it->second +
                          "'");
    return static_cast<int>(v);
}

RunConfig RunConfig::from(const Config& c) {
    RunConfig r;
    r.alpha = c.get_double("constants", "alpha", r.alpha);
    r.g_fermi = c.get_double("constants", "g_fermi_over_hbarc3", r.g_fermi);
    r.hbarc = c.get_double("constants", "hbarc", r.hbarc);
    r.mollifier = c.get_string("mollifier", "profile", r.mollifier);
    r.eps0 = c.get_double("sweep", "eps0", r.eps0);
    r.eta0 = c.get_double("sweep", "eta0", r.eta0);
    r.ratio = c.get_double("sweep", "ratio", r.ratio);
    r.points = c.get_int("sweep", "points", r.points);
    r.theta_nodes = c.get_int("pairings", "theta_nodes", r.theta_nodes);
    r.phi_nodes = c.get_int("pairings", "phi_nodes", r.phi_nodes);
    r.bump_width = c.get_double("pairings", "bump_width", r.bump_width);
    r.obs_time = c.get_double("pairings", "obs_time", r.obs_time);
    r.ray_accel = c.get_double("worldline", "ray_accel", r.ray_accel);
    r.ray_tau0 = c.get_double("worldline", "ray_tau0", r.ray_tau0);
    r.ray_dir[0] = c.get_double("worldline", "ray_dir_x", r.ray_dir[0]);
    r.ray_dir[1] = c.get_double("worldline", "ray_dir_y", r.ray_dir[1]);
    r.ray_dir[2] = c.get_double("worldline", "ray_dir_z", r.ray_dir[2]);
    r.fd_step = c.get_double("rules", "step", r.fd_step);
    r.fd_points = c.get_int("rules", "points_per_worldline", r.fd_points);
    r.flip_sign_of = c.get_string("rules", "flip_sign_of", r.flip_sign_of);
    r.trials = c.get_int("amplitudes", "trials", r.trials);
    r.tol_rules = c.get_double("tolerances", "rules", r.tol_rules);
    r.tol_distance = c.get_double("tolerances", "retarded_distance", r.tol_distance);
    r.tol_pairing = c.get_double("tolerances", "pairing", r.tol_pairing);
    r.tol_fourier = c.get_double("tolerances", "fourier", r.tol_fourier);
    r.tol_coulomb = c.get_double("tolerances", "coulomb", r.tol_coulomb);
    r.tol_amplitudes = c.get_double("tolerances", "amplitudes", r.tol_amplitudes);
    r.gauge_control_floor = c.get_double("tolerances", "gauge_control_floor", r.gauge_control_floor);
    r.mass_center = c.get_double("tolerances", "mass_center", r.mass_center);
    r.mass_window = c.get_double("tolerances", "mass_window", r.mass_window);
    r.seed = static_cast<unsigned>(c.get_int("run", "seed", static_cast<int>(r.seed)));
    return r;
}

}  // namespace ewv
