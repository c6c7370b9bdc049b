#include "ewv/worldline.hpp"

#include <algorithm>
#include <cmath>

namespace ewv {

Worldline Worldline::rest(const std::array<double, 3>& origin) {
    Worldline w;
    w.kind_ = Kind::Rest;
    w.origin_ = origin;
    return w;
}

Worldline Worldline::uniform(const std::array<double, 3>& beta, const std::array<double, 3>& origin) {
    const double b2 = beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2];
    if (b2 >= 1.0) throw std::invalid_argument("speed must be < 1");
    Worldline w;
    w.kind_ = Kind::Uniform;
    w.beta_ = beta;
    w.origin_ = origin;
    w.gamma_ = 1.0 / std::sqrt(1.0 - b2);
    return w;
}

Worldline Worldline::hyperbolic(double accel, const std::array<double, 3>& axis) {
    if (accel <= 0.0) throw std::invalid_argument("acceleration must be positive");
    const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (n == 0.0) throw std::invalid_argument("zero axis");
    Worldline w;
    w.kind_ = Kind::Hyperbolic;
    w.accel_ = accel;
    w.axis_ = {axis[0] / n, axis[1] / n, axis[2] / n};
    return w;
}

Worldline Worldline::circular(double radius, double omega) {
    const double b = std::abs(radius * omega);
    if (b >= 1.0) throw std::invalid_argument("orbital speed must be < 1");
    Worldline w;
    w.kind_ = Kind::Circular;
    w.radius_ = radius;
    w.omega_ = omega;
    w.gamma_ = 1.0 / std::sqrt(1.0 - b * b);
    return w;
}

std::string Worldline::name() const {
    switch (kind_) {
        case Kind::Rest: return "rest";
        case Kind::Uniform: return "uniform";
        case Kind::Hyperbolic: return "hyperbolic";
        case Kind::Circular: return "circular";
    }
    return "?";
}

FourVec Worldline::pos(double tau) const {
    switch (kind_) {
        case Kind::Rest:
            return {tau, origin_[0], origin_[1], origin_[2]};
        case Kind::Uniform:
            return {gamma_ * tau, origin_[0] + gamma_ * tau * beta_[0],
                    origin_[1] + gamma_ * tau * beta_[1], origin_[2] + gamma_ * tau * beta_[2]};
        case Kind::Hyperbolic: {
            const double s = std::sinh(accel_ * tau) / accel_, c = std::cosh(accel_ * tau) / accel_;
            return {s, c * axis_[0], c * axis_[1], c * axis_[2]};
        }
        case Kind::Circular: {
            const double ph = omega_ * gamma_ * tau;
            return {gamma_ * tau, radius_ * std::cos(ph), radius_ * std::sin(ph), 0.0};
        }
    }
    return {};
}

FourVec Worldline::vel(double tau) const {
    switch (kind_) {
        case Kind::Rest:
            return {1, 0, 0, 0};
        case Kind::Uniform:
            return {gamma_, gamma_ * beta_[0], gamma_ * beta_[1], gamma_ * beta_[2]};
        case Kind::Hyperbolic: {
            const double s = std::sinh(accel_ * tau), c = std::cosh(accel_ * tau);
            return {c, s * axis_[0], s * axis_[1], s * axis_[2]};
        }
        case Kind::Circular: {
            const double ph = omega_ * gamma_ * tau, b = radius_ * omega_;
            return {gamma_, -gamma_ * b * std::sin(ph), gamma_ * b * std::cos(ph), 0.0};
        }
    }
    return {};
}

FourVec Worldline::acc(double tau) const {
    switch (kind_) {
        case Kind::Rest:
        case Kind::Uniform:
            return {0, 0, 0, 0};
        case Kind::Hyperbolic: {
            const double s = accel_ * std::sinh(accel_ * tau), c = accel_ * std::cosh(accel_ * tau);
            return {s, c * axis_[0], c * axis_[1], c * axis_[2]};
        }
        case Kind::Circular: {
            const double ph = omega_ * gamma_ * tau, b = radius_ * omega_;
            const double a = gamma_ * gamma_ * omega_ * b;
            return {0.0, -a * std::cos(ph), -a * std::sin(ph), 0.0};
        }
    }
    return {};
}

FourVec Worldline::jerk(double tau) const {
    switch (kind_) {
        case Kind::Rest:
        case Kind::Uniform:
            return {0, 0, 0, 0};
        case Kind::Hyperbolic: {
            const double g2 = accel_ * accel_;
            const FourVec v = vel(tau);
            return {g2 * v.t, g2 * v.x, g2 * v.y, g2 * v.z};
        }
        case Kind::Circular: {
            const double ph = omega_ * gamma_ * tau, b = radius_ * omega_;
            const double j = gamma_ * gamma_ * gamma_ * omega_ * omega_ * b;
            return {0.0, j * std::sin(ph), -j * std::cos(ph), 0.0};
        }
    }
    return {};
}

double Worldline::tau_at_coordinate_time(double t) const {
    switch (kind_) {
        case Kind::Rest:
            return t;
        case Kind::Uniform:
        case Kind::Circular:
            return t / gamma_;
        case Kind::Hyperbolic:
            return std::asinh(accel_ * t) / accel_;
    }
    return t;
}

double retarded_time(const Worldline& w, const FourVec& X, double tol) {
    const auto residual = [&](double tau) {
        const FourVec r = X - w.pos(tau);
        return mdot(r, r);
    };
    const auto slope = [&](double tau) {
        return 2.0 * udot(w.vel(tau), X - w.pos(tau));
    };

    // z0(tau_hi) = x0 puts the worldline point simultaneous with X, which is
    // after the retarded point; residual there is |xvec - zvec|^2 >= 0.
    double hi = w.tau_at_coordinate_time(X.t);
    double fhi = residual(hi);
    if (fhi <= 0.0) {
        // X is on (or numerically on) the worldline itself.
        const FourVec d = X - w.pos(hi);
        if (std::sqrt(std::max(d.x * d.x + d.y * d.y + d.z * d.z, 0.0)) <=
            1e-12 * (1.0 + std::sqrt(euclid2(X))))
            throw RetardationError("field point lies on the worldline");
    }

    const FourVec d0 = X - w.pos(hi);
    double step = std::max(std::sqrt(std::max(d0.x * d0.x + d0.y * d0.y + d0.z * d0.z, 0.0)),
                           1e-3 * (1.0 + std::abs(X.t)));
    double lo = hi - step;
    int expand = 0;
    while (residual(lo) >= 0.0) {
        step *= 2.0;
        lo = hi - step;
        if (++expand > 200) throw RetardationError("failed to bracket the retarded time");
    }

    const double target = tol * (1.0 + euclid2(X));
    double a = lo, b = hi;  // residual(a) < 0 <= residual(b)
    double tau = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        const double f = residual(tau);
        if (f < 0.0) a = tau; else b = tau;
        const double df = slope(tau);
        double next = (df != 0.0) ? tau - f / df : 0.5 * (a + b);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::abs(f) <= target && std::abs(next - tau) <= 1e-15 * (1.0 + std::abs(tau))) {
            return next;
        }
        tau = next;
    }
    if (std::abs(residual(tau)) <= target) return tau;
    throw RetardationError("retarded-time iteration did not converge");
}

RetardedFrame retarded_frame(const Worldline& w, const FourVec& X) {
    RetardedFrame f;
    f.X = X;
    f.tau = retarded_time(w, X);
    f.Z = w.pos(f.tau);
    f.Zdot = w.vel(f.tau);
    f.Zddot = w.acc(f.tau);
    f.Zdddot = w.jerk(f.tau);
    f.R = X - f.Z;
    f.xi = udot(f.Zdot, f.R);
    if (f.xi <= 1e-14 * (1.0 + std::sqrt(euclid2(X))))
        throw RetardationError("field point lies on the worldline");
    f.K = (1.0 / f.xi) * f.R;
    f.kappa = udot(f.Zddot, f.K);
    f.chi = udot(f.Zdddot, f.K);
    return f;
}

}  // namespace ewv
