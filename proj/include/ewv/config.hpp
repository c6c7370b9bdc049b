#pragma once

// INI-style configuration: [section] headers over key = value lines, with
// # or ; comments. Typed getters fall back to supplied defaults; parse and
// conversion problems raise ConfigError.

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace ewv {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;

    const std::map<std::string, std::string>& raw() const { return values_; }

  private:
    std::map<std::string, std::string> values_;  // "section.key" -> value
};

// Every knob the suites read, resolved against defaults.
struct RunConfig {
    // constants
    double alpha = 1.0 / 137.036;
    double g_fermi = 1.166e-5;
    double hbarc = 0.1973269804;
    // mollifier
    std::string mollifier = "poly";
    // sweep ladders
    double eps0 = 0.2;
    double eta0 = 0.2;
    double ratio = 0.5;
    int points = 6;
    // pairings
    int theta_nodes = 32;
    int phi_nodes = 64;
    double bump_width = 1.0;
    double obs_time = 3.0;
    double ray_accel = 0.8;
    double ray_tau0 = 0.25;
    std::array<double, 3> ray_dir{0.6, 0.0, 0.8};
    // rule validation (step is a fraction of the local retarded distance)
    double fd_step = 1e-2;
    int fd_points = 12;
    std::string flip_sign_of;  // empty: standard table
    // amplitudes
    int trials = 1000;
    // tolerances
    double tol_rules = 1e-5;
    double tol_distance = 1e-9;
    double tol_pairing = 1e-4;
    double tol_fourier = 1e-6;
    double tol_coulomb = 1e-6;
    double tol_amplitudes = 1e-12;
    double gauge_control_floor = 1e-3;
    double mass_center = 51.5;
    double mass_window = 0.1;
    // seed
    unsigned seed = 20260815;

    static RunConfig from(const Config& c);
};

}  // namespace ewv
