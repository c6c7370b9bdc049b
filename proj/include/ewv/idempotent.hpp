#pragma once

// Chiral idempotents sigma = (1 + i nu)/2 for a unit vector nu, the null
// directions they generate, and the left/right splitting of biquaternions.

#include "ewv/biquat.hpp"
#include "ewv/lorentz.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ewv {

// Spherical convention: theta measured from e3, phi from e1 in the e1-e2 plane.
inline std::array<double, 3> direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

struct Idempotent {
    std::array<double, 3> nu{0.0, 0.0, 1.0};

    explicit Idempotent(const std::array<double, 3>& n) : nu(normalized(n)) {}
    Idempotent(double theta, double phi) : nu(direction(theta, phi)) {}

    // sigma = (1 + i nu)/2; sigma*sigma = sigma, sigma*conj_quat(sigma) = 0.
    BQ sigma() const {
        return {0.5, cplx_i * (0.5 * nu[0]), cplx_i * (0.5 * nu[1]), cplx_i * (0.5 * nu[2])};
    }
    BQ sigma_bar() const { return conj_quat(sigma()); }
};

// Null four-vector attached to an idempotent: K = 2i b sigma_bar herm(b).
// At b = 1 this is i + nu.
inline BQ k_vector(const BQ& b, const Idempotent& s) {
    return (2.0 * cplx_i) * (b * s.sigma_bar() * herm(b));
}

// Null interval of invariant distance xi in direction (theta, phi), frame L:
// R = xi * L (i + nu) herm(L).
inline BQ null_interval(double xi, const LorentzFactor& l, double theta, double phi) {
    const auto n = direction(theta, phi);
    const BQ rest = minquat(1.0, n);
    BQ r = l.apply(rest);
    return std::complex<double>(xi, 0.0) * r;
}

// Unit real quaternion acting on idempotent directions: nu -> w nu conj(w).
struct GaugeRotation {
    BQ q{bq_one()};

    GaugeRotation() = default;
    explicit GaugeRotation(const BQ& w) : q(w) {
        const BQ n = w * conj_quat(w);
        if (std::abs(n.w - 1.0) > 1e-9 || std::abs(bq_im(w).w) > 1e-9)
            throw std::invalid_argument("gauge rotation must be a unit real quaternion");
    }
    GaugeRotation(double angle, const std::array<double, 3>& axis) {
        const auto a = normalized(axis);
        const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
        q = {c, s * a[0], s * a[1], s * a[2]};
    }
};

inline Idempotent weiss_rotate(const GaugeRotation& w, const Idempotent& s) {
    const BQ nu = bq_real_vec(s.nu);
    const BQ r = w.q * nu * conj_quat(w.q);
    return Idempotent(std::array<double, 3>{r.x.real(), r.y.real(), r.z.real()});
}

enum class FactorSide { Right, Left };

// Split b into real quaternions against sigma/sigma_bar:
//   Right: b = sigma*qa + sigma_bar*qb   (qa = 2 Re(sigma b))
//   Left:  b = qa*sigma + qb*sigma_bar   (qa = 2 Re(b sigma))
inline std::pair<BQ, BQ> chiral_decompose(const BQ& b, const Idempotent& s,
                                          FactorSide side = FactorSide::Right) {
    const BQ re = bq_re(b), im = bq_im(b);
    const BQ nu = bq_real_vec(s.nu);
    if (side == FactorSide::Right) return {re - nu * im, re + nu * im};
    return {re - im * nu, re + im * nu};
}

}  // namespace ewv
