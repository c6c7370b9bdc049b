#include "ewv/numgrad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace ewv {

EvalContext eval_context(const RetardedFrame& fr) {
    EvalContext ctx;
    ctx.K = lower(fr.K);
    ctx.U = lower(fr.Zdot);
    ctx.A = lower(fr.Zddot);
    ctx.J = lower(fr.Zdddot);
    ctx.xi = fr.xi;
    ctx.kap = fr.kappa;
    ctx.chi = fr.chi;
    return ctx;
}

namespace {

constexpr int kFields = 19;  // tau, xi, kappa, then R, K, U, A lowered

std::array<double, kFields> frame_fields(const Worldline& w, const FourVec& X) {
    const RetardedFrame fr = retarded_frame(w, X);
    std::array<double, kFields> f{};
    f[0] = fr.tau;
    f[1] = fr.xi;
    f[2] = fr.kappa;
    auto put4 = [&f](int base, const FourVec& v) {
        const std::array<double, 4> lv = lower(v);
        for (int c = 0; c < 4; ++c) f[static_cast<std::size_t>(base + c)] = lv[static_cast<std::size_t>(c)];
    };
    put4(3, fr.R);
    put4(7, fr.K);
    put4(11, fr.Zdot);
    put4(15, fr.Zddot);
    return f;
}

struct Probe {
    Worldline w;
    FourVec X;
};

std::vector<Probe> make_probes(int per_worldline, unsigned seed) {
    std::vector<Worldline> lines;
    lines.push_back(Worldline::rest());
    lines.push_back(Worldline::uniform({0.30, -0.12, 0.20}));
    lines.push_back(Worldline::hyperbolic(0.8, {0, 0, 1}));
    lines.push_back(Worldline::circular(0.6, 0.7));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> utau(-0.5, 1.5);
    std::uniform_real_distribution<double> udt(0.6, 1.8);
    std::uniform_real_distribution<double> ur(0.05, 0.85);
    std::uniform_real_distribution<double> ucos(-1.0, 1.0);
    std::uniform_real_distribution<double> uphi(0.0, 6.283185307179586);

    std::vector<Probe> probes;
    for (const auto& w : lines) {
        for (int p = 0; p < per_worldline; ++p) {
            const double tau0 = utau(rng);
            const double dt = udt(rng);
            const double r = ur(rng) * dt;  // stay inside the forward cone
            const double c = ucos(rng), s = std::sqrt(std::max(0.0, 1 - c * c));
            const double phi = uphi(rng);
            const FourVec base = w.pos(tau0);
            probes.push_back(
                {w, {base.t + dt, base.x + r * s * std::cos(phi), base.y + r * s * std::sin(phi),
                     base.z + r * c}});
        }
    }
    return probes;
}

}  // namespace

std::vector<RuleDeviation> validate_rule_table(const RuleTable& rt, double step,
                                               int points_per_worldline, unsigned seed) {
    std::vector<RuleDeviation> out = {{"tau"}, {"xi"}, {"kappa"}, {"R"}, {"K"}, {"U"}, {"A"}};

    for (const auto& pr : make_probes(points_per_worldline, seed)) {
        const RetardedFrame fr0 = retarded_frame(pr.w, pr.X);
        const EvalContext ctx = eval_context(fr0);
        // Frame fields steepen like inverse powers of the retarded distance,
        // so a step proportional to it keeps the stencil's truncation error
        // roughly scale-free across the point cloud.
        const double h = step * fr0.xi;

        const auto gtau = evaluate_covector(rt.grad_tau(0, 1), ctx);
        const auto gxi = evaluate_covector(rt.grad_xi(0, 1), ctx);
        const auto gkap = evaluate_covector(rt.grad_kappa(0, 1), ctx);
        const auto mR = evaluate_matrix(rt.grad_atom(Atom::R, 1, 0, 2), ctx);
        const auto mK = evaluate_matrix(rt.grad_atom(Atom::K, 1, 0, 2), ctx);
        const auto mU = evaluate_matrix(rt.grad_atom(Atom::U, 1, 0, 2), ctx);
        const auto mA = evaluate_matrix(rt.grad_atom(Atom::A, 1, 0, 2), ctx);

        std::array<double, 7> scale;
        scale.fill(1.0);
        auto widen = [&scale](int which, double v) {
            auto& s = scale[static_cast<std::size_t>(which)];
            s = std::max(s, std::abs(v));
        };
        for (int c = 0; c < 4; ++c) {
            const auto cu = static_cast<std::size_t>(c);
            widen(0, gtau[cu]);
            widen(1, gxi[cu]);
            widen(2, gkap[cu]);
            for (int r = 0; r < 4; ++r) {
                const auto ru = static_cast<std::size_t>(r);
                widen(3, mR[ru][cu]);
                widen(4, mK[ru][cu]);
                widen(5, mU[ru][cu]);
                widen(6, mA[ru][cu]);
            }
        }

        for (int mu = 0; mu < 4; ++mu) {
            std::array<DiffResult, kFields> d{};
            for (int fld = 0; fld < kFields; ++fld) {
                d[static_cast<std::size_t>(fld)] = coordinate_diff(
                    [&pr, fld](const FourVec& Y) {
                        return frame_fields(pr.w, Y)[static_cast<std::size_t>(fld)];
                    },
                    pr.X, mu, h);
            }
            auto note = [&out, &scale](int which, double numeric, double symbolic, double err) {
                auto& rd = out[static_cast<std::size_t>(which)];
                const double s = scale[static_cast<std::size_t>(which)];
                const double dev = std::abs(numeric - symbolic) / s;
                if (dev > rd.max_rel) {
                    rd.max_rel = dev;
                    rd.worst_err_est = err / s;
                }
            };
            const auto mu_u = static_cast<std::size_t>(mu);
            note(0, d[0].value, gtau[mu_u], d[0].err_est);
            note(1, d[1].value, gxi[mu_u], d[1].err_est);
            note(2, d[2].value, gkap[mu_u], d[2].err_est);
            for (int nu = 0; nu < 4; ++nu) {
                const auto nu_u = static_cast<std::size_t>(nu);
                note(3, d[3 + nu_u].value, mR[mu_u][nu_u], d[3 + nu_u].err_est);
                note(4, d[7 + nu_u].value, mK[mu_u][nu_u], d[7 + nu_u].err_est);
                note(5, d[11 + nu_u].value, mU[mu_u][nu_u], d[11 + nu_u].err_est);
                note(6, d[15 + nu_u].value, mA[mu_u][nu_u], d[15 + nu_u].err_est);
            }
        }
    }
    return out;
}

}  // namespace ewv
