#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ewv/electroweak.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <random>

using namespace ewv;

namespace {

constexpr double kPi = 3.141592653589793238462643;

CouplingConstants consts() {
    return CouplingConstants::derive(1.0 / 137.036, 1.166e-5, 0.1973269804);
}

BQ rand_bq(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    auto c = [&] { return std::complex<double>(n(rng), n(rng)); };
    return {c(), c(), c(), c()};
}

Idempotent rand_idem(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return {std::acos(2.0 * u(rng) - 1.0), 2.0 * kPi * u(rng)};
}

LorentzFactor rand_boost(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return boost_factor(1.2 * u(rng), {u(rng) + 1.5, u(rng), u(rng)});
}

double dev(const BQ& a, const BQ& b) { return std::sqrt(abs2(a - b)); }

}  // namespace

TEST_CASE("EM propagator is alpha over q2 times the source velocity factor") {
    const auto c = consts();
    const LorentzFactor rest;

    const auto unit = propagator_em(c.alpha, rest, c);
    CHECK(unit.kind == Propagator::Kind::EM);
    CHECK(unit.value.w == cplx_i);
    CHECK(unit.value.x == std::complex<double>(0.0));
    CHECK(unit.value.y == std::complex<double>(0.0));
    CHECK(unit.value.z == std::complex<double>(0.0));

    const auto p1 = propagator_em(1.0, rest, c);
    const auto p2 = propagator_em(2.0, rest, c);
    CHECK(p2.value.w == 0.5 * p1.value.w);

    CHECK_THROWS_AS(propagator_em(0.0, rest, c), std::invalid_argument);

    // Moving source: the value is (alpha/q2) times the four-velocity minquat.
    const std::array<double, 3> beta{0.3, -0.1, 0.2};
    const double gamma = 1.0 / std::sqrt(1.0 - 0.14);
    const double q2 = 0.7;
    const auto moving = propagator_em(q2, boost_to_velocity(beta), c);
    const BQ want = (c.alpha / q2) *
                    minquat(gamma, {gamma * beta[0], gamma * beta[1], gamma * beta[2]});
    CHECK(dev(moving.value, want) <= 1e-13 * (c.alpha / q2) * gamma);
    CHECK(mink_norm(moving.value) ==
          doctest::Approx(-(c.alpha / q2) * (c.alpha / q2)).epsilon(1e-12));
}

TEST_CASE("weak propagator is the contact coupling times a chiral null direction") {
    const auto c = consts();
    const Idempotent s(0.4, 1.1);

    const auto pw = propagator_weak(s, LorentzFactor{}, c);
    CHECK(pw.kind == Propagator::Kind::Weak);
    CHECK(dev(pw.value, (cplx_i * c.g_w) * s.sigma_bar()) == 0.0);

    // any frame: Cayley-null, and equal to (g_w/2) times the attached k vector
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        const Idempotent si = rand_idem(rng);
        const LorentzFactor l = rand_boost(rng);
        const auto p = propagator_weak(si, l, c);
        const double scale = std::sqrt(abs2(p.value));
        CHECK(std::abs(cayley_norm(p.value)) <= 1e-13 * scale * scale);
        CHECK(dev(p.value, (0.5 * c.g_w) * k_vector(l.boost, si)) <= 1e-14 * scale);
    }
}

TEST_CASE("rest-frame amplitudes reduce to scalar products") {
    const auto c = consts();
    const LorentzFactor rest;
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.3, 3.0);

    for (int t = 0; t < 50; ++t) {
        const SpinState df{rand_bq(rng)}, di{rand_bq(rng)};
        const Idempotent s = rand_idem(rng);
        const double q2 = u(rng);
        const double scale = std::sqrt(abs2(df.d) * abs2(di.d));

        const auto em = amplitude(df, propagator_em(q2, rest, c), di);
        CHECK(em.channel == Propagator::Kind::EM);
        const auto em_want = -(c.alpha / q2) * scalar_part(herm(df.d) * di.d);
        CHECK(std::abs(em.value - em_want) <= 1e-13 * (c.alpha / q2) * scale);

        const auto wk = amplitude(df, propagator_weak(s, rest, c), di);
        CHECK(wk.channel == Propagator::Kind::Weak);
        const auto wk_want = -c.g_w * scalar_part(herm(df.d) * s.sigma() * di.d);
        CHECK(std::abs(wk.value - wk_want) <= 1e-13 * c.g_w * scale);
    }
}

TEST_CASE("chirality identity: only left parts couple") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const BQ d = rand_bq(rng);
        const Idempotent s = rand_idem(rng);
        const double scale = std::sqrt(abs2(d));

        // left_part(d) == sigma * d: sigma annihilates the sigma_bar half
        CHECK(dev(left_part(d, s), s.sigma() * d) <= 1e-13 * scale);

        const auto [qa, qb] = chiral_decompose(d, s, FactorSide::Right);
        CHECK(dev(s.sigma() * qa + s.sigma_bar() * qb, d) <= 1e-13 * scale);
    }

    // full amplitude vs left parts only, and the sigma_bar mirror for right parts
    std::mt19937_64 rng2(6);
    for (int t = 0; t < 60; ++t) {
        const BQ df = rand_bq(rng2), di = rand_bq(rng2);
        const Idempotent s = rand_idem(rng2);
        const double scale = std::sqrt(abs2(df) * abs2(di));

        const auto full = scalar_part(herm(df) * s.sigma() * di);
        const auto left = scalar_part(herm(left_part(df, s)) * left_part(di, s));
        CHECK(std::abs(full - left) <= 1e-13 * scale);

        const BQ rf = s.sigma_bar() * chiral_decompose(df, s).second;
        const BQ ri = s.sigma_bar() * chiral_decompose(di, s).second;
        const auto mirror = scalar_part(herm(df) * s.sigma_bar() * di);
        CHECK(std::abs(mirror - scalar_part(herm(rf) * ri)) <= 1e-13 * scale);
    }
}

TEST_CASE("right-handed state decouples exactly in the axis-aligned frame") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n(0.0, 1.0);
    const Idempotent s(std::array<double, 3>{0.0, 0.0, 1.0});
    for (int t = 0; t < 40; ++t) {
        const BQ qb{n(rng), n(rng), n(rng), n(rng)};
        const BQ di = s.sigma_bar() * qb;
        const BQ df = rand_bq(rng);
        // sigma * (sigma_bar * qb) cancels component by component: exact zero
        CHECK(std::abs(scalar_part(herm(df) * (s.sigma() * di))) == 0.0);
    }
}

TEST_CASE("compensated gauge rotation leaves the weak amplitude invariant") {
    const auto c = consts();
    const LorentzFactor rest;
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    for (int t = 0; t < 30; ++t) {
        const Idempotent s0 = rand_idem(rng);
        const SpinState di{rand_bq(rng)}, df{rand_bq(rng)};
        const GaugeRotation w(kPi * u(rng), {u(rng) + 1.4, u(rng), u(rng)});

        const auto base = amplitude(df, propagator_weak(s0, rest, c), di);
        const auto moved = amplitude(SpinState{w.q * df.d},
                                     propagator_weak(weiss_rotate(w, s0), rest, c),
                                     SpinState{w.q * di.d});
        CHECK(std::abs(moved.value - base.value) <=
              1e-13 * (std::abs(base.value) + c.g_w));
    }

    const GaugeRotation id(0.0, {0.0, 0.0, 1.0});
    CHECK(id.q == bq_one());
}

TEST_CASE("verification sweeps pass with their documented thresholds") {
    const auto ch = verify_chirality(400, 20260815);
    CHECK(ch.trials == 400);
    CHECK(ch.pass);
    CHECK(ch.max_rel_dev <= 1e-12);
    CHECK(ch.right_handed_amp == 0.0);

    const auto g = verify_gauge_covariance(400, 20260815);
    CHECK(g.pass);
    CHECK(g.max_rel_dev <= 1e-12);
    CHECK(g.mean_uncompensated > 1e-3);
}

TEST_CASE("contact coupling fixes the boson mass near 51.5 GeV") {
    const auto c = consts();

    CHECK(c.m_w == doctest::Approx(51.5).epsilon(0.002));
    CHECK(mass_estimate(c.alpha, c.g_fermi_over_hbarc3) == c.m_w);

    // alternate 3/2 coefficient sits at m / sqrt(2)
    const double mv = mass_estimate_half_coefficient(c.alpha, c.g_fermi_over_hbarc3);
    CHECK(mv == doctest::Approx(c.m_w / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(mv < c.m_w);

    CHECK(fermi_from_mass(c.alpha, c.m_w) ==
          doctest::Approx(c.g_fermi_over_hbarc3).epsilon(1e-12));
    CHECK(c.lambda * c.m_w == doctest::Approx(c.hbarc).epsilon(1e-12));
    CHECK(c.g_w == doctest::Approx(c.g_fermi_over_hbarc3 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(c.lambda == doctest::Approx(0.00383).epsilon(0.01));

    CHECK_THROWS_AS(mass_estimate(c.alpha, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fermi_from_mass(c.alpha, -1.0), std::invalid_argument);
}
