#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ewv {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Complex number with exact rational parts. Used wherever an algebraic
// identity must hold exactly rather than to rounding.
struct RationalComplex {
    Rational re{0};
    Rational im{0};

    RationalComplex() = default;
    RationalComplex(long long n) : re(n) {}  // NOLINT: implicit by design
    RationalComplex(Rational r) : re(std::move(r)) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline RationalComplex conj_scalar(const RationalComplex& s) { return {s.re, -s.im}; }

inline RationalComplex rc_i() { return {Rational(0), Rational(1)}; }

inline std::string to_string(const RationalComplex& s) {
    return "(" + to_string(s.re) + "," + to_string(s.im) + ")";
}

}  // namespace ewv
