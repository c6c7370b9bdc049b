#pragma once

// Thin RAII wrappers over GSL adaptive integration. All routines throw
// QuadratureError instead of aborting, and accept any callable.

#include <functional>
#include <stdexcept>
#include <string>

namespace ewv {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadResult {
    double value = 0;
    double abs_err = 0;
};

// Adaptive Gauss-Kronrod on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-14, double rel_tol = 1e-10);

// Adaptive with extrapolation, tolerant of integrable endpoint trouble.
QuadResult integrate_singular(const std::function<double(double)>& f, double a, double b,
                              double abs_tol = 1e-14, double rel_tol = 1e-10);

// Fourier tail: evaluates the convergent improper integral
// int_a^inf f(x) sin(omega x) dx by cycle acceleration.
QuadResult integrate_sin_tail(const std::function<double(double)>& f, double a, double omega,
                              double abs_tol = 1e-12);

}  // namespace ewv
