#pragma once

// Unit biquaternions acting on four-vectors by X -> L X herm(L).
// Boosts are Hermitian (real scalar + imaginary vector), rotations are real.

#include "ewv/biquat.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ewv {

inline std::array<double, 3> normalized(const std::array<double, 3>& v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (n == 0.0) throw std::invalid_argument("zero axis");
    return {v[0] / n, v[1] / n, v[2] / n};
}

struct LorentzFactor {
    BQ boost{bq_one()};  // Hermitian part
    BQ rot{bq_one()};    // real rotation part

    BQ full() const { return boost * rot; }

    BQ apply(const BQ& v) const {
        const BQ l = full();
        return l * v * herm(l);
    }

    // B herm(B): Hermitian, reduces to 1 at rest. The Minkowski four-velocity
    // obtained by boosting i is i times this factor.
    BQ velocity_factor() const { return boost * herm(boost); }
};

// Boost with rapidity r along a unit axis; boosting i (the rest four-velocity)
// gives i*cosh(r) + sinh(r)*axis, i.e. motion along +axis.
inline LorentzFactor boost_factor(double rapidity, const std::array<double, 3>& axis) {
    const auto a = normalized(axis);
    const double c = std::cosh(rapidity / 2.0), s = std::sinh(rapidity / 2.0);
    LorentzFactor f;
    f.boost = {c, -cplx_i * (s * a[0]), -cplx_i * (s * a[1]), -cplx_i * (s * a[2])};
    return f;
}

inline LorentzFactor boost_to_velocity(const std::array<double, 3>& beta) {
    const double b = std::sqrt(beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2]);
    if (b >= 1.0) throw std::invalid_argument("speed must be < 1");
    if (b == 0.0) return {};
    return boost_factor(std::atanh(b), {beta[0] / b, beta[1] / b, beta[2] / b});
}

// Right-hand-rule rotation by angle about a unit axis.
inline LorentzFactor rotation_factor(double angle, const std::array<double, 3>& axis) {
    const auto a = normalized(axis);
    const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    LorentzFactor f;
    f.rot = {c, s * a[0], s * a[1], s * a[2]};
    return f;
}

inline LorentzFactor compose(const LorentzFactor& b, const LorentzFactor& r) {
    LorentzFactor f;
    f.boost = b.boost;
    f.rot = r.rot;
    return f;
}

inline bool is_unit(const LorentzFactor& f, double tol = 1e-12) {
    const BQ n = f.full() * conj_quat(f.full());
    return std::abs(n.w - 1.0) <= tol && std::abs(n.x) <= tol && std::abs(n.y) <= tol &&
           std::abs(n.z) <= tol;
}

}  // namespace ewv
