#include "ewv/mollifier.hpp"

#include <cmath>

namespace ewv {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kTwoPi = 2 * kPi;

// Quadratic reweighting of the polynomial bump that kills the first and
// second moments: 140 s^3 (1-s)^3 (54 - 216 s + 198 s^2).
double moment2_weight(double s) { return 54 + s * (-216 + 198 * s); }

}  // namespace

Mollifier Mollifier::by_name(const std::string& name) {
    if (name == "poly") return Mollifier(Profile::Poly);
    if (name == "cosine") return Mollifier(Profile::Cosine);
    if (name == "poly-moment2") return Mollifier(Profile::PolyMoment2);
    throw std::invalid_argument("unknown mollifier profile: " + name);
}

double Mollifier::rho(double s) const {
    if (s <= 0 || s >= 1) return 0;
    switch (profile_) {
        case Profile::Poly: {
            const double u = s * (1 - s);
            return 140 * u * u * u;
        }
        case Profile::Cosine: {
            const double c = 1 - std::cos(kTwoPi * s);
            return (2.0 / 3.0) * c * c;
        }
        case Profile::PolyMoment2: {
            const double u = s * (1 - s);
            return 140 * u * u * u * moment2_weight(s);
        }
    }
    return 0;
}

double Mollifier::drho(double s) const {
    if (s <= 0 || s >= 1) return 0;
    switch (profile_) {
        case Profile::Poly: {
            const double u = s * (1 - s);
            return 420 * u * u * (1 - 2 * s);
        }
        case Profile::Cosine: {
            const double c = 1 - std::cos(kTwoPi * s);
            return (4.0 / 3.0) * c * kTwoPi * std::sin(kTwoPi * s);
        }
        case Profile::PolyMoment2: {
            const double u = s * (1 - s);
            return 420 * u * u * (1 - 2 * s) * moment2_weight(s) +
                   140 * u * u * u * (-216 + 396 * s);
        }
    }
    return 0;
}

double Mollifier::cdf(double s) const {
    if (s <= 0) return 0;
    if (s >= 1) return 1;
    switch (profile_) {
        case Profile::Poly:
            return s * s * s * s * (35 + s * (-84 + s * (70 - 20 * s)));
        case Profile::Cosine:
            return s - 2 * std::sin(kTwoPi * s) / (3 * kPi) +
                   std::sin(2 * kTwoPi * s) / (12 * kPi);
        case Profile::PolyMoment2:
            return s * s * s * s *
                   (1890 + s * (-10584 + s * (23520 + s * (-25920 + s * (14175 - 3080 * s)))));
    }
    return 0;
}

int Mollifier::moment_order() const { return profile_ == Profile::PolyMoment2 ? 2 : 0; }

std::string Mollifier::name() const {
    switch (profile_) {
        case Profile::Poly: return "poly";
        case Profile::Cosine: return "cosine";
        case Profile::PolyMoment2: return "poly-moment2";
    }
    return "?";
}

}  // namespace ewv
