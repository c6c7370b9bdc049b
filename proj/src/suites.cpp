#include "ewv/suites.hpp"

#include "ewv/electroweak.hpp"
#include "ewv/genfun.hpp"
#include "ewv/idempotent.hpp"
#include "ewv/numgrad.hpp"
#include "ewv/quadrature.hpp"
#include "ewv/worldline.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ewv {
namespace {

constexpr double kPi = 3.14159265358979323846;

CheckEntry make(std::string id, std::string anchor, bool pass, Json measured, Json expected,
                Json tolerance) {
    CheckEntry e;
    e.check_id = std::move(id);
    e.paper_anchor = std::move(anchor);
    e.pass = pass;
    e.measured = std::move(measured);
    e.expected = std::move(expected);
    e.tolerance = std::move(tolerance);
    return e;
}

double rel_dev(double measured, double expected) {
    return std::abs(measured - expected) / std::max(std::abs(expected), 1e-300);
}

// Rule table with the configured sign knob applied; the knob exists so a
// deliberately wrong table can demonstrate that the validation suite fails.
RuleTable table_for(const RunConfig& rc) {
    RuleTable rt = standard_rules();
    if (!rc.flip_sign_of.empty()) {
        auto it = rt.sign.find(rc.flip_sign_of);
        if (it == rt.sign.end())
            throw ConfigError("rules.flip_sign_of: unknown rule '" + rc.flip_sign_of + "'");
        it->second = -it->second;
    }
    return rt;
}

// ---------- symbolic ----------

void suite_symbolic(SuiteReport& rep, const RunConfig& rc, Mode mode) {
    const RuleTable rt = table_for(rc);

    const SymExpr wave = dalembertian(charge_weighted_interval(), rt);
    const SymExpr wave_expect = wave_of_interval_expected();
    rep.add(make("wave-of-interval", "cau:2", identical(wave, wave_expect), to_string(wave),
                 to_string(wave_expect), "exact"));

    const SymExpr reduced = assoc_simplify(wave, Mode::Associative);
    const SymExpr reduced_expect = lienard_wiechert_term() + shell_term_expected();
    rep.add(make("shell-term-reduction", "cau:4", identical(reduced, reduced_expect),
                 to_string(reduced), to_string(reduced_expect), "exact"));

    SymExpr interval;
    interval.nfree = 1;
    interval.terms.push_back({Rational(1), 0, 0, 0, 0, 0, Dist::One, {{Atom::R, 0, 0}}});
    const SymExpr wave_r = dalembertian(canonical(interval), rt);
    SymExpr wave_r_expect;
    wave_r_expect.nfree = 1;
    wave_r_expect.terms.push_back({Rational(2), 0, 0, -1, 0, 0, Dist::One, {{Atom::U, 0, 0}}});
    canonicalize(wave_r_expect);
    rep.add(make("wave-of-bare-interval", "sec:4", identical(wave_r, wave_r_expect),
                 to_string(wave_r), to_string(wave_r_expect), "exact"));

    SymExpr constant;
    constant.terms.push_back({Rational(1), 1, 0, 0, 0, 0, Dist::One, {}});
    const SymExpr wave_c = dalembertian(canonical(constant), rt);
    rep.add(make("wave-of-constant", "plumbing", wave_c.terms.empty(), to_string(wave_c), "0",
                 "exact"));

    rep.add(make("strict-term-count", "plumbing", wave.terms.size() == 5,
                 static_cast<int>(wave.terms.size()), 5, "exact"));

    // Equality across the simplification gap is mode-sensitive: the strict
    // forms differ, the order-reduced forms agree.
    const bool same = expr_equal(wave, reduced_expect, mode);
    const bool expect_same = mode == Mode::Associative;
    rep.add(make("mode-equivalence", "cau:3", same == expect_same, same, expect_same, "exact"));
}

// ---------- rules ----------

void suite_rules(SuiteReport& rep, const RunConfig& rc) {
    const RuleTable rt = table_for(rc);
    for (const RuleDeviation& rd : validate_rule_table(rt, rc.fd_step, rc.fd_points, rc.seed)) {
        rep.add(make("rule-grad-" + rd.rule, "def:5", rd.max_rel <= rc.tol_rules, rd.max_rel, 0.0,
                     rc.tol_rules));
    }

    // Invariant distance against its 3-D closed form |x-z| gamma (1 - rho.beta)
    // on uniform-velocity worldlines (rest included).
    std::mt19937_64 rng(rc.seed ^ 0x5bd1e995ULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::array<std::array<double, 3>, 4> betas{
        {{0, 0, 0}, {0.30, -0.12, 0.20}, {0, 0, 0.85}, {-0.55, 0.10, 0.05}}};
    double worst = 0;
    for (const auto& beta : betas) {
        const Worldline w = Worldline::uniform(beta);
        for (int n = 0; n < 25; ++n) {
            const double t = -1.0 + 3.0 * unit(rng);
            const FourVec z_now = w.pos(w.tau_at_coordinate_time(t));
            const double r = 0.2 + 1.8 * unit(rng);
            const double ct = 2.0 * unit(rng) - 1.0;
            const double st = std::sqrt(1.0 - ct * ct);
            const double ph = 2.0 * kPi * unit(rng);
            const FourVec x{t, z_now.x + r * st * std::cos(ph), z_now.y + r * st * std::sin(ph),
                            z_now.z + r * ct};
            const RetardedFrame fr = retarded_frame(w, x);
            const FourVec d = x - fr.Z;
            const double dist = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
            const double gamma = fr.Zdot.t;
            const double radial_beta =
                (d.x * fr.Zdot.x + d.y * fr.Zdot.y + d.z * fr.Zdot.z) / (dist * gamma);
            const double xi_3d = dist * gamma * (1.0 - radial_beta);
            worst = std::max(worst, std::abs(fr.xi - xi_3d) / xi_3d);
        }
    }
    rep.add(make("retarded-distance-3d", "def:6", worst <= rc.tol_distance, worst, 0.0,
                 rc.tol_distance));
}

// ---------- pairings ----------

void suite_pairings(SuiteReport& rep, const RunConfig& rc) {
    const RuleTable rt = table_for(rc);
    const Mollifier moll = Mollifier::by_name(rc.mollifier);
    const TestFunction T = bump(rc.bump_width);
    const std::vector<double> ladder = geometric_ladder(rc.eps0, rc.ratio, rc.points);

    const PairingResult d0 = pair_radial(reg_delta(moll), T, ladder);
    rep.add(make("delta-pairing-vanishes", "cau:5",
                 std::abs(d0.extrapolated) <= 1e-8 * T.sup_abs && d0.converged, d0.extrapolated,
                 0.0, 1e-8));
    rep.add(make("delta-pairing-order", "cau:5", d0.rate >= 1.9, d0.rate, 2.0, 0.1));

    const PairingResult d2 = pair_radial(reg_delta(moll), T.with_weight(2), ladder);
    rep.add(make("delta-weighted-limit", "cau:6", rel_dev(d2.extrapolated, T.at0()) <= 1e-7,
                 d2.extrapolated, T.at0(), 1e-7));

    RegularizedGenFunc step_over_xi;
    step_over_xi.kind = RegularizedGenFunc::Kind::Custom;
    step_over_xi.name = "Ups/xi";
    step_over_xi.eval = [moll](double xi, double eps) {
        return xi > 0.0 ? moll.step(xi, eps) / xi : 0.0;
    };
    const PairingResult du = pair_radial(step_over_xi, T, ladder);
    const double ramp_oracle =
        integrate([&](double x) { return T.value(x) * x; }, 0.0, T.support_hi).value;
    rep.add(make("upsilon-over-xi-limit", "gen:3", rel_dev(du.extrapolated, ramp_oracle) <= 1e-8,
                 du.extrapolated, ramp_oracle, 1e-8));

    const PairingResult d2_alt =
        pair_radial(reg_delta(Mollifier::by_name("cosine")), T.with_weight(2), ladder);
    const double profile_gap = std::abs(d2.extrapolated - d2_alt.extrapolated);
    rep.add(make("profile-independence", "cau:6",
                 profile_gap <= 1e-7 * std::max(1.0, std::abs(T.at0())), profile_gap, 0.0, 1e-7));

    // Delta-shell residue of the wave of the charge-weighted interval, paired
    // over a spatial slice. Rest frame: the n=0 pairing dies at second order,
    // the n=2 pairing lands on (3/2) e T(0) in the time slot.
    const SymExpr shell = dalembertian(charge_weighted_interval(), rt) - lienard_wiechert_term();
    ShellPairingConfig pc;
    pc.theta_nodes = rc.theta_nodes;
    pc.phi_nodes = rc.phi_nodes;
    pc.eps0 = rc.eps0;
    pc.ratio = rc.ratio;
    pc.points = rc.points;
    pc.obs_time = rc.obs_time;
    const ShellPairingResult sr = shell_pairing_rest(shell, moll, T, pc);
    const double scale = std::abs(sr.expected_n2[0]);
    rep.add(make("shell-rest-limit-n0", "cau:5",
                 std::abs(sr.n0[0].extrapolated) <= rc.tol_pairing * scale, sr.n0[0].extrapolated,
                 0.0, rc.tol_pairing * scale));
    rep.add(make("shell-rest-order-n0", "cau:5", sr.n0[0].rate >= 1.9, sr.n0[0].rate, 2.0, 0.1));
    rep.add(make("shell-rest-limit-n2-time", "cau:6",
                 rel_dev(sr.n2[0].extrapolated, sr.expected_n2[0]) <= rc.tol_pairing,
                 sr.n2[0].extrapolated, sr.expected_n2[0], rc.tol_pairing));
    double vec_worst = 0;
    for (int mu = 1; mu < 4; ++mu)
        vec_worst = std::max(vec_worst, std::abs(sr.n2[mu].extrapolated));
    rep.add(make("shell-rest-n2-vector", "cau:6", vec_worst <= rc.tol_pairing * scale, vec_worst,
                 0.0, rc.tol_pairing * scale));

    // Same residue along a null ray off a hyperbolic worldline: the kappa
    // terms carry an extra xi factor and drop out of the limit.
    const Worldline hyp = Worldline::hyperbolic(rc.ray_accel);
    const ShellPairingResult ray = shell_pairing_ray(shell, hyp, rc.ray_tau0, rc.ray_dir, moll, T, pc);
    double ray_scale = 0;
    for (int mu = 0; mu < 4; ++mu)
        ray_scale = std::max(ray_scale, std::abs(ray.expected_n2[mu]));
    double ray_worst = 0;
    double ray_n0 = 0;
    for (int mu = 0; mu < 4; ++mu) {
        ray_worst =
            std::max(ray_worst, std::abs(ray.n2[mu].extrapolated - ray.expected_n2[mu]) / ray_scale);
        ray_n0 = std::max(ray_n0, std::abs(ray.n0[mu].extrapolated) / ray_scale);
    }
    const double ray_tol = 5.0 * rc.tol_pairing;
    rep.add(make("shell-ray-n2", "cau:6", ray_worst <= ray_tol, ray_worst, 0.0, ray_tol));
    rep.add(make("shell-ray-limit-n0", "cau:5", ray_n0 <= ray_tol, ray_n0, 0.0, ray_tol));

    // Logarithmic generating function of the radial 1/r field.
    const std::vector<double> a_sweep{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
    const CoulombReport cb = coulomb_generating_check(a_sweep, T);
    rep.add(make("coulomb-log-generating", "gen:3", cb.worst_residual <= rc.tol_coulomb * cb.sup_T,
                 cb.worst_residual, 0.0, rc.tol_coulomb * cb.sup_T));
    rep.add(make("coulomb-printed-variant", "gen:5", std::isfinite(cb.entries.back().printed_variant),
                 cb.entries.back().printed_variant, "recorded, no asserted value", "-"));
    const TestFunction T_shift = shifted_bump(0.55, 0.25);
    const CoulombReport cb_shift = coulomb_generating_check({0.2, 0.1, 0.05}, T_shift);
    rep.add(make("coulomb-shifted-support", "gen:3", cb_shift.worst_residual <= 1e-12,
                 cb_shift.worst_residual, 0.0, 1e-12));
}

// ---------- fourier ----------

void suite_fourier(SuiteReport& rep, const RunConfig& rc) {
    const Mollifier moll = Mollifier::by_name(rc.mollifier);
    FourierSweepConfig fc;
    fc.eta0 = rc.eta0;
    fc.eps0 = rc.eps0;
    fc.ratio = rc.ratio;
    fc.points = rc.points;
    double collapse_lo = 0, collapse_hi = 0;
    bool first = true;
    for (const FourierCheckResult& f : fourier_checks({0.5, 1.0, 2.0, 5.0}, moll, fc)) {
        std::ostringstream tag;
        tag << "-q" << f.q;
        const double expect_inv = 1.0 / (f.q * f.q);
        rep.add(make("fourier-inverse-distance" + tag.str(), "ele:3",
                     rel_dev(f.inverse_distance.extrapolated, expect_inv) <= rc.tol_fourier,
                     f.inverse_distance.extrapolated, expect_inv, rc.tol_fourier));
        rep.add(make("fourier-shell" + tag.str(), "ele:4",
                     rel_dev(f.shell_over_xi2.extrapolated, 1.0) <= rc.tol_fourier,
                     f.shell_over_xi2.extrapolated, 1.0, rc.tol_fourier));
        const double scaled = f.q * f.q * f.inverse_distance.extrapolated;
        collapse_lo = first ? scaled : std::min(collapse_lo, scaled);
        collapse_hi = first ? scaled : std::max(collapse_hi, scaled);
        first = false;
    }
    rep.add(make("fourier-scaling-collapse", "ele:3",
                 collapse_hi - collapse_lo <= 2.0 * rc.tol_fourier, collapse_hi - collapse_lo, 0.0,
                 2.0 * rc.tol_fourier));
}

// ---------- amplitudes ----------

BQ random_bq(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::array<double, 8> a{};
    for (double& v : a) v = u(rng);
    return from_array8(a);
}

Idempotent random_idempotent(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double ct = 2.0 * u(rng) - 1.0;
    return Idempotent(std::acos(ct), 2.0 * kPi * u(rng));
}

LorentzFactor random_boost(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double ct = 2.0 * u(rng) - 1.0;
    const double st = std::sqrt(1.0 - ct * ct);
    const double ph = 2.0 * kPi * u(rng);
    return boost_factor(2.0 * u(rng), {st * std::cos(ph), st * std::sin(ph), ct});
}

double max_component(const BQ& b) {
    return std::max(std::max(std::abs(b.w), std::abs(b.x)), std::max(std::abs(b.y), std::abs(b.z)));
}

void suite_amplitudes(SuiteReport& rep, const RunConfig& rc) {
    const CouplingConstants cc = CouplingConstants::derive(rc.alpha, rc.g_fermi, rc.hbarc);

    const ChiralityReport ch = verify_chirality(rc.trials, rc.seed, rc.tol_amplitudes);
    rep.add(make("chirality-identity", "ele:13", ch.max_rel_dev <= rc.tol_amplitudes,
                 ch.max_rel_dev, 0.0, rc.tol_amplitudes));
    rep.add(make("chirality-right-zero", "ele:13", ch.right_handed_amp == 0.0,
                 ch.right_handed_amp, 0.0, "exact"));

    const GaugeReport gr =
        verify_gauge_covariance(rc.trials, rc.seed + 1, rc.tol_amplitudes, rc.gauge_control_floor);
    rep.add(make("gauge-covariance", "ele:16", gr.max_rel_dev <= rc.tol_amplitudes, gr.max_rel_dev,
                 0.0, rc.tol_amplitudes));
    rep.add(make("gauge-uncompensated-control", "ele:14",
                 gr.mean_uncompensated > rc.gauge_control_floor, gr.mean_uncompensated,
                 "above control floor", rc.gauge_control_floor));

    // Channel reductions at unit boost, plus structural propagator facts.
    std::mt19937_64 rng(rc.seed + 2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const LorentzFactor rest_frame;
    double em_worst = 0, weak_worst = 0, null_worst = 0, kdir_worst = 0;
    for (int t = 0; t < 200; ++t) {
        const SpinState df{random_bq(rng)};
        const SpinState di{random_bq(rng)};
        const Idempotent s = random_idempotent(rng);
        const double q2 = 0.25 + 4.0 * u(rng);

        const TransitionAmplitude em = amplitude(df, propagator_em(q2, rest_frame, cc), di);
        const std::complex<double> em_ref =
            -(cc.alpha / q2) * scalar_part(herm(df.d) * di.d);
        em_worst = std::max(em_worst, std::abs(em.value - em_ref) * q2 / cc.alpha);

        const TransitionAmplitude wk = amplitude(df, propagator_weak(s, rest_frame, cc), di);
        const std::complex<double> wk_ref = -cc.g_w * scalar_part(herm(df.d) * s.sigma() * di.d);
        weak_worst = std::max(weak_worst, std::abs(wk.value - wk_ref) / cc.g_w);

        const LorentzFactor l = random_boost(rng);
        const Propagator pw = propagator_weak(s, l, cc);
        const double pw_scale = max_component(pw.value);
        null_worst =
            std::max(null_worst, std::abs(cayley_norm(pw.value)) / (pw_scale * pw_scale));
        const BQ kv = k_vector(l.boost, s);
        const BQ rebuilt = std::complex<double>(0.5 * cc.g_w, 0.0) * kv;
        const BQ gap = pw.value - rebuilt;
        kdir_worst = std::max(kdir_worst, max_component(gap) / (cc.g_w * max_component(kv)));
    }
    rep.add(make("em-reduction", "ele:11", em_worst <= rc.tol_amplitudes, em_worst, 0.0,
                 rc.tol_amplitudes));
    rep.add(make("weak-reduction", "ele:13", weak_worst <= rc.tol_amplitudes, weak_worst, 0.0,
                 rc.tol_amplitudes));
    rep.add(make("weak-null-norm", "ele:9", null_worst <= rc.tol_amplitudes, null_worst, 0.0,
                 rc.tol_amplitudes));
    rep.add(make("propagator-k-consistency", "def:10", kdir_worst <= rc.tol_amplitudes, kdir_worst,
                 0.0, rc.tol_amplitudes));
}

// ---------- mass ----------

void suite_mass(SuiteReport& rep, const RunConfig& rc) {
    const double m = mass_estimate(rc.alpha, rc.g_fermi);
    rep.add(make("mass-estimate", "ele:17", std::abs(m - rc.mass_center) <= rc.mass_window, m,
                 rc.mass_center, rc.mass_window));

    const double mv = mass_estimate_half_coefficient(rc.alpha, rc.g_fermi);
    rep.add(make("mass-variant-coefficient", "ele:7", std::isfinite(mv) && mv < m, mv,
                 "recorded for comparison", "-"));

    const double gf = fermi_from_mass(rc.alpha, m);
    rep.add(make("fermi-roundtrip", "ele:17", rel_dev(gf, rc.g_fermi) <= 1e-12, gf, rc.g_fermi,
                 1e-12));

    const CouplingConstants cc = CouplingConstants::derive(rc.alpha, rc.g_fermi, rc.hbarc);
    rep.add(make("compton-consistency", "ele:7", rel_dev(cc.lambda * cc.m_w, cc.hbarc) <= 1e-12,
                 cc.lambda * cc.m_w, cc.hbarc, 1e-12));
    rep.add(make("contact-coupling-value", "ele:9",
                 rel_dev(cc.g_w, rc.g_fermi / std::sqrt(2.0)) <= 1e-12, cc.g_w,
                 rc.g_fermi / std::sqrt(2.0), 1e-12));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"symbolic", "rules",      "pairings",
                                                "fourier",  "amplitudes", "mass"};
    return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& rc, Mode mode) {
    SuiteReport rep;
    rep.suite = name;
    rep.mode = mode == Mode::Associative ? "associative" : "strict";
    rep.seed = rc.seed;
    if (name == "symbolic") {
        suite_symbolic(rep, rc, mode);
    } else if (name == "rules") {
        suite_rules(rep, rc);
    } else if (name == "pairings") {
        suite_pairings(rep, rc);
    } else if (name == "fourier") {
        suite_fourier(rep, rc);
    } else if (name == "amplitudes") {
        suite_amplitudes(rep, rc);
    } else if (name == "mass") {
        suite_mass(rep, rc);
    } else if (name == "all") {
        suite_symbolic(rep, rc, mode);
        suite_rules(rep, rc);
        suite_pairings(rep, rc);
        suite_fourier(rep, rc);
        suite_amplitudes(rep, rc);
        suite_mass(rep, rc);
    } else {
        throw ConfigError("unknown suite: " + name);
    }
    return rep;
}

}  // namespace ewv
