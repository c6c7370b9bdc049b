#pragma once

// Numeric pairings of regularized generalized functions against smooth test
// functions: radial sweeps with Richardson limits, the Coulomb generating
// check, the delta-shell pairings over worldline frames, and the radial
// Fourier identities.

#include "ewv/extrapolate.hpp"
#include "ewv/mollifier.hpp"
#include "ewv/rules.hpp"
#include "ewv/worldline.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace ewv {

// Smooth compactly supported radial test function, optionally carrying the
// singular weight 1/xi^n (n = 0 or 2) under the r^2 dr pairing measure.
struct TestFunction {
    std::string name;
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    double support_hi = 1;  // value vanishes for xi >= support_hi
    double sup_abs = 1;     // max |value|
    int weight_n = 0;       // pairing integrand uses value * xi^(2 - weight_n)

    double at0() const { return value(0); }
    TestFunction with_weight(int n) const {
        TestFunction t = *this;
        t.weight_n = n;
        return t;
    }
};

// Bump centered at 0: exp(1 - b^2/(b^2 - xi^2)) on [0, b), C-infinity, peak 1.
TestFunction bump(double b);
// Bump on [c - w, c + w] with c - w > 0: support away from the origin.
TestFunction shifted_bump(double c, double w);

// epsilon-indexed representative of a generalized function on the half line.
struct RegularizedGenFunc {
    enum class Kind { Upsilon, Delta, DeltaPrime, OneOverXi, Custom };
    Kind kind = Kind::Custom;
    std::string name;
    std::function<double(double, double)> eval;  // (xi, eps)
};

RegularizedGenFunc reg_upsilon(const Mollifier& m);
RegularizedGenFunc reg_delta(const Mollifier& m);
RegularizedGenFunc reg_delta_prime(const Mollifier& m);
RegularizedGenFunc reg_one_over_xi();

using PairingResult = SweepResult;

// <g_eps, f>: integral of g(xi,eps) * f(xi) * xi^(2-n) over the half line for
// each eps in the (geometric, decreasing) sweep, then the Richardson limit.
PairingResult pair_radial(const RegularizedGenFunc& g, const TestFunction& f,
                          const std::vector<double>& eps_sweep);

// --- Coulomb generating check ---

struct CoulombEntry {
    double a = 0;
    double residual = 0;          // <d_r Phi_a - phi_a, T>, log-form generating function
    double printed_variant = 0;   // same pairing for the 1/r-weighted variant
};

struct CoulombReport {
    std::vector<CoulombEntry> entries;
    double sup_T = 1;
    double worst_residual = 0;  // max |residual| over the sweep (log form)
};

CoulombReport coulomb_generating_check(const std::vector<double>& a_sweep,
                                       const TestFunction& T, double charge = 1);

// --- delta-shell pairings against a worldline frame ---

struct ShellPairingConfig {
    int theta_nodes = 32;
    int phi_nodes = 64;
    double eps0 = 0.2;
    double ratio = 0.5;
    int points = 6;
    double charge = 1;
    double obs_time = 3;  // lab time of the spatial pairing slice
};

// Component results are in four-vector form (x0, x1, x2, x3).
struct ShellPairingResult {
    std::array<PairingResult, 4> n0;  // against T: expect -> 0
    std::array<PairingResult, 4> n2;  // against T/xi^2
    std::array<double, 4> expected_n2{};
};

// Spatial pairing over R^3 around a charge at rest: angular tensor grid times
// adaptive radial quadrature, frames solved from the worldline each node.
ShellPairingResult shell_pairing_rest(const SymExpr& shell, const Mollifier& m,
                                      const TestFunction& T, const ShellPairingConfig& cfg);

// Pairing along one null ray X(s) = Z(tau0) + s*K leaving an accelerated
// worldline: the frame invariants are constant on the ray, kappa != 0.
ShellPairingResult shell_pairing_ray(const SymExpr& shell, const Worldline& w, double tau0,
                                     const std::array<double, 3>& ray_dir, const Mollifier& m,
                                     const TestFunction& T, const ShellPairingConfig& cfg);

// --- radial Fourier identities ---

struct FourierSweepConfig {
    double eta0 = 0.2;  // damping ladder start for the 1/xi transform
    double eps0 = 0.2;  // mollifier ladder start for the shell transform
    double ratio = 0.5;
    int points = 6;
};

struct FourierCheckResult {
    double q = 1;
    SweepResult inverse_distance;  // expect 1/q^2
    SweepResult shell_over_xi2;    // expect 1
};

std::vector<FourierCheckResult> fourier_checks(const std::vector<double>& q_values,
                                               const Mollifier& m, const FourierSweepConfig& cfg);

}  // namespace ewv
