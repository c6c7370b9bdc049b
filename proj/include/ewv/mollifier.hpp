#pragma once

// Smooth one-sided mollifier profiles on [0,1] with unit mass, used to build
// regularized representatives of the half-line step, the delta shell, and its
// derivative. Closed-form antiderivatives keep the step representative exact.

#include <stdexcept>
#include <string>

namespace ewv {

class Mollifier {
  public:
    enum class Profile { Poly, Cosine, PolyMoment2 };

    explicit Mollifier(Profile p = Profile::Poly) : profile_(p) {}
    static Mollifier by_name(const std::string& name);  // poly | cosine | poly-moment2

    double rho(double s) const;   // density, compact support [0,1]
    double drho(double s) const;  // d(rho)/ds
    double cdf(double s) const;   // integral of rho from 0 to s
    int moment_order() const;     // vanishing higher moments: 0 or 2
    std::string name() const;
    Profile profile() const { return profile_; }

    // Scaled representatives in the radial variable.
    double delta(double xi, double eps) const { return rho(xi / eps) / eps; }
    double delta_prime(double xi, double eps) const { return drho(xi / eps) / (eps * eps); }
    double step(double xi, double eps) const { return cdf(xi / eps); }

  private:
    Profile profile_;
};

}  // namespace ewv
