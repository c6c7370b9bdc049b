#include "ewv/electroweak.hpp"

#include <cmath>
#include <random>

namespace ewv {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

}  // namespace

CouplingConstants CouplingConstants::derive(double alpha, double g_fermi_over_hbarc3,
                                            double hbarc) {
    CouplingConstants c;
    c.alpha = alpha;
    c.g_fermi_over_hbarc3 = g_fermi_over_hbarc3;
    c.hbarc = hbarc;
    c.m_w = mass_estimate(alpha, g_fermi_over_hbarc3);
    c.lambda = hbarc / c.m_w;
    c.g_w = 3 * alpha / (c.m_w * c.m_w);
    return c;
}

double mass_estimate(double alpha, double g_fermi_over_hbarc3) {
    if (g_fermi_over_hbarc3 <= 0) throw std::invalid_argument("Fermi constant must be positive");
    return std::sqrt(3 * kSqrt2 * alpha / g_fermi_over_hbarc3);
}

double mass_estimate_half_coefficient(double alpha, double g_fermi_over_hbarc3) {
    if (g_fermi_over_hbarc3 <= 0) throw std::invalid_argument("Fermi constant must be positive");
    return std::sqrt(1.5 * kSqrt2 * alpha / g_fermi_over_hbarc3);
}

double fermi_from_mass(double alpha, double m_w) {
    if (m_w <= 0) throw std::invalid_argument("mass must be positive");
    return 3 * kSqrt2 * alpha / (m_w * m_w);
}

Propagator propagator_em(double q2, const LorentzFactor& l, const CouplingConstants& c) {
    if (q2 == 0) throw std::invalid_argument("EM propagator needs nonzero momentum transfer");
    Propagator p;
    p.kind = Propagator::Kind::EM;
    p.boost = l;
    p.value = (cplx_i * (c.alpha / q2)) * l.velocity_factor();
    return p;
}

Propagator propagator_weak(const Idempotent& s, const LorentzFactor& l,
                           const CouplingConstants& c) {
    Propagator p;
    p.kind = Propagator::Kind::Weak;
    p.boost = l;
    p.value = (cplx_i * c.g_w) * (l.boost * s.sigma_bar() * herm(l.boost));
    return p;
}

TransitionAmplitude amplitude(const SpinState& df, const Propagator& prop, const SpinState& di) {
    TransitionAmplitude t;
    t.channel = prop.kind;
    t.value = cplx_i * scalar_part(herm(df.d) * conj_quat(prop.value) * di.d);
    return t;
}

BQ left_part(const BQ& d, const Idempotent& s) {
    const auto [qa, qb] = chiral_decompose(d, s, FactorSide::Right);
    (void)qb;
    return s.sigma() * qa;
}

namespace {

BQ random_biquat(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    auto c = [&] { return std::complex<double>(n(rng), n(rng)); };
    return {c(), c(), c(), c()};
}

BQ random_real_quat(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {std::complex<double>(n(rng), 0.0), std::complex<double>(n(rng), 0.0),
            std::complex<double>(n(rng), 0.0), std::complex<double>(n(rng), 0.0)};
}

Idempotent random_idempotent(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double theta = std::acos(2 * u(rng) - 1);
    const double phi = 2 * 3.141592653589793238462643 * u(rng);
    return Idempotent(theta, phi);
}

double rel_dev(std::complex<double> a, std::complex<double> b) {
    const double denom = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / denom;
}

}  // namespace

ChiralityReport verify_chirality(int trials, unsigned seed, double tol) {
    ChiralityReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const BQ di = random_biquat(rng);
        const BQ dfq = random_biquat(rng);
        const Idempotent s = random_idempotent(rng);
        const std::complex<double> full = scalar_part(herm(dfq) * s.sigma() * di);
        const std::complex<double> left =
            scalar_part(herm(left_part(dfq, s)) * left_part(di, s));
        rep.max_rel_dev = std::max(rep.max_rel_dev, rel_dev(full, left));
    }
    // Right-handed state against an axis-aligned idempotent. Grouped as
    // sigma * (sigma_bar * q) the components cancel pairwise with no
    // intermediate rounding, so the product is the exact zero biquaternion.
    {
        std::mt19937_64 rng2(seed + 1);
        const Idempotent s(std::array<double, 3>{0, 0, 1});
        const BQ di = s.sigma_bar() * random_real_quat(rng2);
        const BQ dfq = random_biquat(rng2);
        rep.right_handed_amp = std::abs(scalar_part(herm(dfq) * (s.sigma() * di)));
    }
    rep.pass = rep.max_rel_dev <= tol && rep.right_handed_amp == 0.0;
    return rep;
}

GaugeReport verify_gauge_covariance(int trials, unsigned seed, double tol, double control_floor) {
    GaugeReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const CouplingConstants c =
        CouplingConstants::derive(1.0 / 137.036, 1.166e-5, 0.1973269804);
    const LorentzFactor rest;

    double sum_uncomp = 0;
    for (int t = 0; t < trials; ++t) {
        const Idempotent s0 = random_idempotent(rng);
        const SpinState di0{random_biquat(rng)};
        const SpinState df0{random_biquat(rng)};
        const double angle = 2 * 3.141592653589793238462643 * u(rng);
        const GaugeRotation w(angle, {2 * u(rng) - 1, 2 * u(rng) - 1, 2 * u(rng) - 1});

        const TransitionAmplitude base = amplitude(df0, propagator_weak(s0, rest, c), di0);

        const Idempotent s1 = weiss_rotate(w, s0);
        const SpinState di1{w.q * di0.d};
        const SpinState df1{w.q * df0.d};
        const TransitionAmplitude moved = amplitude(df1, propagator_weak(s1, rest, c), di1);
        rep.max_rel_dev = std::max(rep.max_rel_dev, rel_dev(base.value, moved.value));

        const TransitionAmplitude uncomp = amplitude(df0, propagator_weak(s1, rest, c), di0);
        sum_uncomp += rel_dev(base.value, uncomp.value);
    }
    rep.mean_uncompensated = sum_uncomp / std::max(1, trials);
    rep.pass = rep.max_rel_dev <= tol && rep.mean_uncompensated > control_floor;
    return rep;
}

}  // namespace ewv
