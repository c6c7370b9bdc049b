#pragma once

// Timelike worldlines with closed-form derivatives, and the retarded frame
// (proper time, invariant distance, null direction) seen from a field point.

#include "ewv/biquat.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ewv {

struct FourVec {
    double t = 0, x = 0, y = 0, z = 0;

    friend FourVec operator+(const FourVec& a, const FourVec& b) {
        return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend FourVec operator-(const FourVec& a, const FourVec& b) {
        return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend FourVec operator*(double s, const FourVec& a) { return {s * a.t, s * a.x, s * a.y, s * a.z}; }
};

// Metric contraction, signature (-,+,+,+).
inline double mdot(const FourVec& a, const FourVec& b) {
    return -a.t * b.t + a.x * b.x + a.y * b.y + a.z * b.z;
}

// Invariant pairing with the opposite sign; positive on pairs of
// future-pointing causal vectors. xi, kappa, chi are defined through it.
inline double udot(const FourVec& a, const FourVec& b) { return -mdot(a, b); }

inline std::array<double, 4> lower(const FourVec& v) { return {-v.t, v.x, v.y, v.z}; }

inline double euclid2(const FourVec& v) { return v.t * v.t + v.x * v.x + v.y * v.y + v.z * v.z; }

inline BQ to_minquat(const FourVec& v) { return minquat(v.t, {v.x, v.y, v.z}); }

inline FourVec from_minquat(const BQ& b) {
    return {minquat_time(b), b.x.real(), b.y.real(), b.z.real()};
}

struct RetardationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Worldline {
  public:
    enum class Kind { Rest, Uniform, Hyperbolic, Circular };

    static Worldline rest(const std::array<double, 3>& origin = {0, 0, 0});
    static Worldline uniform(const std::array<double, 3>& beta,
                             const std::array<double, 3>& origin = {0, 0, 0});
    static Worldline hyperbolic(double accel, const std::array<double, 3>& axis = {0, 0, 1});
    static Worldline circular(double radius, double omega);

    Kind kind() const { return kind_; }
    std::string name() const;

    FourVec pos(double tau) const;
    FourVec vel(double tau) const;   // d/dtau, unit timelike
    FourVec acc(double tau) const;   // d2/dtau2
    FourVec jerk(double tau) const;  // d3/dtau3

    // Proper time at which the worldline crosses coordinate time t.
    double tau_at_coordinate_time(double t) const;

  private:
    Kind kind_ = Kind::Rest;
    std::array<double, 3> origin_{0, 0, 0};
    std::array<double, 3> beta_{0, 0, 0};
    std::array<double, 3> axis_{0, 0, 1};
    double gamma_ = 1.0;
    double accel_ = 1.0;
    double radius_ = 1.0;
    double omega_ = 0.0;
};

struct RetardedFrame {
    double tau = 0;    // retarded proper time
    double xi = 0;     // invariant distance, udot(vel, R) > 0
    double kappa = 0;  // udot(acc, K)
    double chi = 0;    // udot(jerk, K)
    FourVec X, Z, R, K;
    FourVec Zdot, Zddot, Zdddot;
};

// Root of the null condition on the past cone: (X - Z(tau))^2 = 0 with
// x0 > z0(tau). Bracket by stepping back along the cone, then safeguarded
// Newton to |residual| <= tol * (1 + |X|^2).
double retarded_time(const Worldline& w, const FourVec& X, double tol = 1e-13);

RetardedFrame retarded_frame(const Worldline& w, const FourVec& X);

}  // namespace ewv
