#pragma once

// Richardson extrapolation of a limit h -> 0 from samples on a geometric
// ladder h_k = h0 * r^k: estimates the convergence order from successive
// differences, then removes the leading error term.

#include <functional>
#include <utility>
#include <vector>

namespace ewv {

struct SweepResult {
    std::vector<std::pair<double, double>> samples;  // (h, value)
    double extrapolated = 0;
    double rate = 0;         // observed order p where value(h) ~ L + C h^p
    bool converged = false;  // residual differences decayed monotonically at the end
};

// Analyze precomputed samples. The ladder must be geometric (common ratio
// within 1e-6); throws std::invalid_argument otherwise.
SweepResult richardson_from_samples(std::vector<std::pair<double, double>> samples);

// Evaluate value_at on the ladder h0 * ratio^k, k = 0..npoints-1, and analyze.
SweepResult richardson_limit(const std::function<double(double)>& value_at, double h0,
                             double ratio, int npoints);

// Convenience: the ladder itself.
std::vector<double> geometric_ladder(double h0, double ratio, int npoints);

}  // namespace ewv
