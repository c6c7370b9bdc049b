#include "ewv/extrapolate.hpp"

#include <cmath>
#include <stdexcept>

namespace ewv {

std::vector<double> geometric_ladder(double h0, double ratio, int npoints) {
    if (h0 <= 0 || ratio <= 0 || ratio >= 1 || npoints < 2)
        throw std::invalid_argument("geometric ladder needs h0 > 0, 0 < ratio < 1, >= 2 points");
    std::vector<double> h(static_cast<std::size_t>(npoints));
    double v = h0;
    for (auto& x : h) {
        x = v;
        v *= ratio;
    }
    return h;
}

SweepResult richardson_from_samples(std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 3) throw std::invalid_argument("need at least 3 sweep samples");
    const double r = samples[1].first / samples[0].first;
    if (!(r > 0 && r < 1)) throw std::invalid_argument("sweep must be decreasing");
    for (std::size_t k = 1; k + 1 < samples.size(); ++k) {
        const double rk = samples[k + 1].first / samples[k].first;
        if (std::abs(rk - r) > 1e-6 * r)
            throw std::invalid_argument("sweep ladder is not geometric");
    }

    SweepResult out;
    out.samples = std::move(samples);
    const auto& s = out.samples;
    const std::size_t n = s.size();

    double scale = 0;
    for (const auto& [h, v] : s) scale = std::max(scale, std::abs(v));

    std::vector<double> d(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) d[k] = s[k + 1].second - s[k].second;

    const double tiny = 1e-14 * scale + 1e-300;
    const double d_last = d.back();
    if (std::abs(d_last) <= tiny) {
        // Already at the numerical floor: the last value is the limit.
        out.extrapolated = s.back().second;
        out.rate = 0;
        out.converged = true;
        return out;
    }

    // Observed order from the last pair of differences: |d_k| ~ C h_k^p.
    const double d_prev = d[d.size() - 2];
    if (std::abs(d_prev) > tiny && std::abs(d_last) < std::abs(d_prev))
        out.rate = std::log(std::abs(d_prev) / std::abs(d_last)) / std::log(1.0 / r);

    // Monotone decay of the trailing differences.
    out.converged = true;
    const std::size_t tail = std::min<std::size_t>(3, d.size());
    for (std::size_t k = d.size() - tail; k + 1 < d.size(); ++k)
        if (!(std::abs(d[k + 1]) < std::abs(d[k]))) out.converged = false;

    // v_n = L + C h_n^p and d_last = C h_n^p (1/r^p - 1) ... eliminate C.
    if (out.rate > 0) {
        const double rp = std::pow(r, out.rate);
        out.extrapolated = s.back().second + d_last * rp / (1 - rp);
    } else {
        out.extrapolated = s.back().second;
        out.converged = false;
    }
    return out;
}

SweepResult richardson_limit(const std::function<double(double)>& value_at, double h0,
                             double ratio, int npoints) {
    std::vector<std::pair<double, double>> samples;
    for (double h : geometric_ladder(h0, ratio, npoints)) samples.emplace_back(h, value_at(h));
    return richardson_from_samples(std::move(samples));
}

}  // namespace ewv
