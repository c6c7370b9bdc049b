#pragma once

// Finite-difference cross-check of the gradient rule table. Every rule is a
// claim about coordinate derivatives of retarded-frame fields; here those
// derivatives are measured directly with a five-point stencil and compared
// against the table's symbolic prediction evaluated on the same frame.

#include "ewv/rules.hpp"
#include "ewv/worldline.hpp"

#include <string>
#include <vector>

namespace ewv {

// Lowered frame data ready for numeric evaluation of rule expressions.
EvalContext eval_context(const RetardedFrame& fr);

struct DiffResult {
    double value = 0;    // half-step stencil (the more accurate one)
    double err_est = 0;  // |full-step - half-step|
};

// Fourth-order central difference of f along coordinate axis mu, with a
// paired half-step pass for an error estimate.
template <class F>
DiffResult coordinate_diff(F&& f, const FourVec& X, int mu, double h);

struct RuleDeviation {
    std::string rule;
    double max_rel = 0;        // worst |numeric - symbolic| / gradient scale over all probes
    double worst_err_est = 0;  // stencil error estimate at the worst probe, same scaling
};

// Probe the rule table against four worldline families (at rest, drifting,
// constantly accelerated, circular) on a deterministic point cloud. The
// finite-difference step is `step` times the retarded distance at each probe,
// which keeps the stencil resolved where the frame fields steepen near the
// source; deviations are reported relative to the gradient magnitude at the
// probe (floored at one, so near-zero gradients compare absolutely).
std::vector<RuleDeviation> validate_rule_table(const RuleTable& rt, double step = 1e-2,
                                               int points_per_worldline = 12,
                                               unsigned seed = 20260815);

// --- implementation ---

namespace detail {
inline FourVec shifted(FourVec X, int mu, double d) {
    switch (mu) {
        case 0: X.t += d; break;
        case 1: X.x += d; break;
        case 2: X.y += d; break;
        default: X.z += d; break;
    }
    return X;
}
}  // namespace detail

template <class F>
DiffResult coordinate_diff(F&& f, const FourVec& X, int mu, double h) {
    auto at = [&](double d) { return f(detail::shifted(X, mu, d)); };
    const double fm2 = at(-h), fm1 = at(-h / 2), fp1 = at(h / 2), fp2 = at(h);
    const double fm4 = at(-2 * h), fp4 = at(2 * h);
    const double half = (8 * (fp1 - fm1) - (fp2 - fm2)) / (6 * h);
    const double full = (8 * (fp2 - fm2) - (fp4 - fm4)) / (12 * h);
    return {half, std::abs(full - half)};
}

}  // namespace ewv
