#include "ewv/genfun.hpp"

#include "ewv/lorentz.hpp"
#include "ewv/numgrad.hpp"
#include "ewv/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>

namespace ewv {

TestFunction bump(double b) {
    if (b <= 0) throw std::invalid_argument("bump width must be positive");
    TestFunction t;
    t.name = "bump";
    t.support_hi = b;
    t.sup_abs = 1;
    t.value = [b](double xi) {
        if (std::abs(xi) >= b) return 0.0;
        return std::exp(1 - b * b / (b * b - xi * xi));
    };
    t.deriv = [b, v = t.value](double xi) {
        if (std::abs(xi) >= b) return 0.0;
        const double d = b * b - xi * xi;
        return v(xi) * (-2 * b * b * xi / (d * d));
    };
    return t;
}

TestFunction shifted_bump(double c, double w) {
    if (w <= 0 || c - w <= 0)
        throw std::invalid_argument("shifted bump must stay inside the open half line");
    TestFunction t;
    t.name = "shifted-bump";
    t.support_hi = c + w;
    t.sup_abs = 1;
    t.value = [c, w](double xi) {
        const double u = xi - c;
        if (std::abs(u) >= w) return 0.0;
        return std::exp(1 - w * w / (w * w - u * u));
    };
    t.deriv = [c, w, v = t.value](double xi) {
        const double u = xi - c;
        if (std::abs(u) >= w) return 0.0;
        const double d = w * w - u * u;
        return v(xi) * (-2 * w * w * u / (d * d));
    };
    return t;
}

RegularizedGenFunc reg_upsilon(const Mollifier& m) {
    return {RegularizedGenFunc::Kind::Upsilon, "Ups[" + m.name() + "]",
            [m](double xi, double eps) { return m.step(xi, eps); }};
}

RegularizedGenFunc reg_delta(const Mollifier& m) {
    return {RegularizedGenFunc::Kind::Delta, "del[" + m.name() + "]",
            [m](double xi, double eps) { return m.delta(xi, eps); }};
}

RegularizedGenFunc reg_delta_prime(const Mollifier& m) {
    return {RegularizedGenFunc::Kind::DeltaPrime, "del'[" + m.name() + "]",
            [m](double xi, double eps) { return m.delta_prime(xi, eps); }};
}

RegularizedGenFunc reg_one_over_xi() {
    return {RegularizedGenFunc::Kind::OneOverXi, "1/xi",
            [](double xi, double) { return xi > 0 ? 1.0 / xi : 0.0; }};
}

namespace {

double pair_once(const RegularizedGenFunc& g, const TestFunction& f, double eps) {
    const int pw = 2 - f.weight_n;
    auto integrand = [&](double xi) {
        return g.eval(xi, eps) * f.value(xi) * std::pow(xi, pw);
    };
    const double hi = f.support_hi;
    double total = 0;
    // Split at the representative's own scale so the adaptive pass sees the
    // sharp feature on its own interval.
    const double split = std::min(eps, hi);
    if (g.kind == RegularizedGenFunc::Kind::OneOverXi && f.weight_n == 2) {
        // integrable endpoint at 0
        total += integrate_singular(integrand, 0, split).value;
    } else {
        total += integrate(integrand, 0, split).value;
    }
    if (hi > split) total += integrate(integrand, split, hi).value;
    return total;
}

}  // namespace

PairingResult pair_radial(const RegularizedGenFunc& g, const TestFunction& f,
                          const std::vector<double>& eps_sweep) {
    std::vector<std::pair<double, double>> samples;
    samples.reserve(eps_sweep.size());
    for (double eps : eps_sweep) {
        if (eps <= 0) throw std::invalid_argument("regularization scale must be positive");
        samples.emplace_back(eps, pair_once(g, f, eps));
    }
    return richardson_from_samples(std::move(samples));
}

CoulombReport coulomb_generating_check(const std::vector<double>& a_sweep,
                                       const TestFunction& T, double charge) {
    CoulombReport rep;
    rep.sup_T = T.sup_abs;
    auto psi_prime = [&T](double r) {  // (T r^2)' = T' r^2 + 2 r T
        return T.deriv(r) * r * r + 2 * r * T.value(r);
    };
    const double hi = T.support_hi;
    for (double a : a_sweep) {
        if (a <= 0) throw std::invalid_argument("cutoff must be positive");
        CoulombEntry entry;
        entry.a = a;
        if (a < hi) {
            // <d_r Phi_a, T> computed distributionally as -<Phi_a, (T r^2)'>
            // with Phi_a = e log(r/a) past the cutoff.
            const double dphi = -integrate([&](double r) { return charge * std::log(r / a) * psi_prime(r); },
                                           a, hi)
                                     .value;
            const double coul = integrate([&](double r) { return charge * r * T.value(r); }, a, hi).value;
            entry.residual = dphi - coul;

            // The 1/r-weighted variant of the generating function, reported
            // as measured (no assertion): does its derivative also give e/r?
            const double dphi_var =
                -integrate_singular(
                     [&](double r) { return (charge / r) * std::log(r / a) * psi_prime(r); }, 0,
                     hi)
                     .value;
            const double coul_full =
                integrate([&](double r) { return charge * r * T.value(r); }, 0, hi).value;
            entry.printed_variant = dphi_var - coul_full;
        }
        rep.worst_residual = std::max(rep.worst_residual, std::abs(entry.residual));
        rep.entries.push_back(entry);
    }
    return rep;
}

namespace {

struct GlTableDeleter {
    void operator()(gsl_integration_glfixed_table* t) const {
        gsl_integration_glfixed_table_free(t);
    }
};

// Tensor-product angular grid: Gauss-Legendre in cos(theta), uniform
// midpoints in phi. Weights sum to 4*pi.
struct AngularGrid {
    std::vector<std::array<double, 3>> dirs;
    std::vector<double> weights;
};

AngularGrid angular_grid(int ntheta, int nphi) {
    std::unique_ptr<gsl_integration_glfixed_table, GlTableDeleter> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(ntheta)));
    if (!table) throw std::runtime_error("angular table allocation failed");
    AngularGrid g;
    const double dphi = 2 * 3.141592653589793238462643 / nphi;
    for (int i = 0; i < ntheta; ++i) {
        double ct = 0, wt = 0;
        gsl_integration_glfixed_point(-1, 1, static_cast<std::size_t>(i), &ct, &wt, table.get());
        const double st = std::sqrt(std::max(0.0, 1 - ct * ct));
        for (int j = 0; j < nphi; ++j) {
            const double phi = (j + 0.5) * dphi;
            g.dirs.push_back({st * std::cos(phi), st * std::sin(phi), ct});
            g.weights.push_back(wt * dphi);
        }
    }
    return g;
}

// Contravariant components of a rule-expression covector on a concrete frame.
std::array<double, 4> eval_vector_on_frame(const SymExpr& expr, const RetardedFrame& fr,
                                           const Mollifier& m, double eps, double charge) {
    EvalContext ctx = eval_context(fr);
    ctx.e = charge;
    ctx.bind(Dist::Step, m.step(fr.xi, eps));
    ctx.bind(Dist::Delta, m.delta(fr.xi, eps));
    ctx.bind(Dist::DeltaP, m.delta_prime(fr.xi, eps));
    const std::array<double, 4> low = evaluate_covector(expr, ctx);
    return {-low[0], low[1], low[2], low[3]};
}

}  // namespace

ShellPairingResult shell_pairing_rest(const SymExpr& shell, const Mollifier& m,
                                      const TestFunction& T, const ShellPairingConfig& cfg) {
    const Worldline w = Worldline::rest();
    const AngularGrid grid = angular_grid(cfg.theta_nodes, cfg.phi_nodes);
    const double four_pi = 4 * 3.141592653589793238462643;

    ShellPairingResult res;
    res.expected_n2 = {1.5 * cfg.charge * T.at0(), 0, 0, 0};

    const std::vector<double> ladder = geometric_ladder(cfg.eps0, cfg.ratio, cfg.points);
    for (int n : {0, 2}) {
        std::array<std::vector<std::pair<double, double>>, 4> samples;
        for (double eps : ladder) {
            std::array<double, 4> acc{};
            for (std::size_t node = 0; node < grid.dirs.size(); ++node) {
                const auto& d = grid.dirs[node];
                for (int mu = 0; mu < 4; ++mu) {
                    auto integrand = [&, mu](double r) {
                        const FourVec X{cfg.obs_time, r * d[0], r * d[1], r * d[2]};
                        const RetardedFrame fr = retarded_frame(w, X);
                        const auto v = eval_vector_on_frame(shell, fr, m, eps, cfg.charge);
                        return v[static_cast<std::size_t>(mu)] * T.value(fr.xi) *
                               std::pow(fr.xi, 2 - n);
                    };
                    // Every term carries a shell factor, so support is [0, eps].
                    // The lower edge stays off the worldline itself; the
                    // omitted sliver is beyond machine precision (rho ~ s^3).
                    acc[static_cast<std::size_t>(mu)] +=
                        grid.weights[node] * integrate(integrand, 1e-9, eps).value;
                }
            }
            for (int mu = 0; mu < 4; ++mu)
                samples[static_cast<std::size_t>(mu)].emplace_back(
                    eps, acc[static_cast<std::size_t>(mu)] / four_pi);
        }
        auto& dest = (n == 0) ? res.n0 : res.n2;
        for (int mu = 0; mu < 4; ++mu)
            dest[static_cast<std::size_t>(mu)] =
                richardson_from_samples(samples[static_cast<std::size_t>(mu)]);
    }
    return res;
}

ShellPairingResult shell_pairing_ray(const SymExpr& shell, const Worldline& w, double tau0,
                                     const std::array<double, 3>& ray_dir, const Mollifier& m,
                                     const TestFunction& T, const ShellPairingConfig& cfg) {
    const auto dir = normalized(ray_dir);
    const FourVec z = w.pos(tau0);
    const FourVec u = w.vel(tau0);
    // Null ray direction k = (1, dir)/(u0 - u.dir) so that the frame sees
    // unit retarded distance per unit ray parameter.
    const double denom = u.t - (u.x * dir[0] + u.y * dir[1] + u.z * dir[2]);
    if (denom <= 0) throw std::invalid_argument("ray direction outside the forward cone");
    const FourVec k{1 / denom, dir[0] / denom, dir[1] / denom, dir[2] / denom};

    ShellPairingResult res;
    {
        // Expected limit: (3/2) e T(0) along the frame's null vector.
        const FourVec probe = z + 1.0 * k;
        const RetardedFrame fr = retarded_frame(w, probe);
        res.expected_n2 = {1.5 * cfg.charge * T.at0() * fr.K.t,
                           1.5 * cfg.charge * T.at0() * fr.K.x,
                           1.5 * cfg.charge * T.at0() * fr.K.y,
                           1.5 * cfg.charge * T.at0() * fr.K.z};
    }

    const std::vector<double> ladder = geometric_ladder(cfg.eps0, cfg.ratio, cfg.points);
    for (int n : {0, 2}) {
        auto& dest = (n == 0) ? res.n0 : res.n2;
        for (int mu = 0; mu < 4; ++mu) {
            std::vector<std::pair<double, double>> samples;
            for (double eps : ladder) {
                auto integrand = [&, mu](double s) {
                    const FourVec X = z + s * k;
                    const RetardedFrame fr = retarded_frame(w, X);
                    const auto v = eval_vector_on_frame(shell, fr, m, eps, cfg.charge);
                    return v[static_cast<std::size_t>(mu)] * T.value(fr.xi) *
                           std::pow(fr.xi, 2 - n);
                };
                samples.emplace_back(eps, integrate(integrand, 1e-9, eps).value);
            }
            dest[static_cast<std::size_t>(mu)] = richardson_from_samples(std::move(samples));
        }
    }
    return res;
}

std::vector<FourierCheckResult> fourier_checks(const std::vector<double>& q_values,
                                               const Mollifier& m,
                                               const FourierSweepConfig& cfg) {
    std::vector<FourierCheckResult> out;
    for (double q : q_values) {
        if (q <= 0) throw std::invalid_argument("momentum must be positive");
        FourierCheckResult r;
        r.q = q;
        // (1/(4pi)) int (1/xi) e^{-i q.x} d^3xi reduces to
        // int_0^inf (sin q xi / (q xi)) e^{-eta xi} xi dxi, damped, eta -> 0.
        r.inverse_distance = richardson_limit(
            [&](double eta) {
                auto damped = [q, eta](double xi) { return std::exp(-eta * xi) / q; };
                return integrate_sin_tail(damped, 0, q).value;
            },
            cfg.eta0, cfg.ratio, cfg.points);
        // Same reduction for del(xi)/xi^2: the xi^2 cancels and the shell
        // samples sinc at 0.
        r.shell_over_xi2 = richardson_limit(
            [&](double eps) {
                auto integrand = [&](double s) {
                    const double x = q * eps * s;
                    const double sinc = (std::abs(x) < 1e-8) ? 1 - x * x / 6 : std::sin(x) / x;
                    return m.rho(s) * sinc;
                };
                return integrate(integrand, 0, 1).value;
            },
            cfg.eps0, cfg.ratio, cfg.points);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ewv
