#pragma once

// Biquaternions: quaternions with complex coefficients over the basis
// {1, e1, e2, e3}, Hamilton products e1*e2 = e3 (cyclic), ei*ei = -1.
// The complex imaginary unit commutes with the basis.
//
// Three conjugations:
//   conj_quat(b)    vector part negated            (b-bar)
//   conj_complex(b) coefficients conjugated        (b-star)
//   herm(b)         both                           (b-plus)

#include "ewv/rational.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace ewv {

inline std::complex<double> conj_scalar(const std::complex<double>& s) { return std::conj(s); }

template <class S>
struct Biquat {
    S w{}, x{}, y{}, z{};

    friend Biquat operator+(const Biquat& a, const Biquat& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Biquat operator-(const Biquat& a, const Biquat& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Biquat operator-(const Biquat& a) { return {-a.w, -a.x, -a.y, -a.z}; }

    // Hamilton product (non-commutative)
    friend Biquat operator*(const Biquat& a, const Biquat& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
    friend Biquat operator*(const S& s, const Biquat& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
    friend Biquat operator*(const Biquat& a, const S& s) { return s * a; }

    friend bool operator==(const Biquat& a, const Biquat& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

template <class S>
Biquat<S> conj_quat(const Biquat<S>& b) {
    return {b.w, -b.x, -b.y, -b.z};
}

template <class S>
Biquat<S> conj_complex(const Biquat<S>& b) {
    return {conj_scalar(b.w), conj_scalar(b.x), conj_scalar(b.y), conj_scalar(b.z)};
}

template <class S>
Biquat<S> herm(const Biquat<S>& b) {
    return conj_complex(conj_quat(b));
}

// S[b] = (b + b-bar)/2, the coefficient of 1. Cyclic: S[ab] = S[ba].
template <class S>
S scalar_part(const Biquat<S>& b) {
    return b.w;
}

// Cayley norm b * b-bar; a complex scalar, not positive definite.
template <class S>
S cayley_norm(const Biquat<S>& b) {
    return b.w * b.w + b.x * b.x + b.y * b.y + b.z * b.z;
}

using BQ = Biquat<std::complex<double>>;
using BQExact = Biquat<RationalComplex>;

inline constexpr std::complex<double> cplx_i{0.0, 1.0};

inline BQ bq_one() { return {1.0, 0.0, 0.0, 0.0}; }

inline BQ bq_real_vec(const std::array<double, 3>& v) { return {0.0, v[0], v[1], v[2]}; }

// Minkowski four-vector as a biquaternion: X = i x0 + xvec
// (imaginary scalar, real vector).
inline BQ minquat(double x0, const std::array<double, 3>& v) {
    return {cplx_i * x0, v[0], v[1], v[2]};
}

inline double minquat_time(const BQ& b) { return b.w.imag(); }
inline std::array<double, 3> minquat_space(const BQ& b) { return {b.x.real(), b.y.real(), b.z.real()}; }

inline double abs2(const BQ& b) {
    return std::norm(b.w) + std::norm(b.x) + std::norm(b.y) + std::norm(b.z);
}

inline bool is_minquat(const BQ& b, double tol = 1e-12) {
    const double scale = std::sqrt(abs2(b)) + 1.0;
    return std::abs(b.w.real()) <= tol * scale && std::abs(b.x.imag()) <= tol * scale &&
           std::abs(b.y.imag()) <= tol * scale && std::abs(b.z.imag()) <= tol * scale;
}

// Minkowski norm via the Cayley norm: X X-bar = -(x0)^2 + |xvec|^2.
inline double mink_norm(const BQ& b) { return cayley_norm(b).real(); }

inline bool is_null(const BQ& b, double tol = 1e-12) {
    return std::abs(mink_norm(b)) <= tol * (abs2(b) + 1e-300);
}

// Report serialization order: [Re w, Im w, Re x, Im x, Re y, Im y, Re z, Im z].
inline std::array<double, 8> to_array8(const BQ& b) {
    return {b.w.real(), b.w.imag(), b.x.real(), b.x.imag(),
            b.y.real(), b.y.imag(), b.z.real(), b.z.imag()};
}

inline BQ from_array8(const std::array<double, 8>& a) {
    return {{a[0], a[1]}, {a[2], a[3]}, {a[4], a[5]}, {a[6], a[7]}};
}

// Split into real quaternions: b = re(b) + i * im(b).
inline BQ bq_re(const BQ& b) { return {b.w.real(), b.x.real(), b.y.real(), b.z.real()}; }
inline BQ bq_im(const BQ& b) { return {b.w.imag(), b.x.imag(), b.y.imag(), b.z.imag()}; }

}  // namespace ewv
