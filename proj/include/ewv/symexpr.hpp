#pragma once

// Symbolic sums of terms
//     coeff * e^a * lam^b * xi^p * kap^q * chi^r * dist * (tensor word)
// with exact rational coefficients. The tensor word multiplies indexed atoms:
// the metric g and the retarded-frame vectors K (null direction), U (velocity),
// A (acceleration), J (jerk). R (the interval) is accepted on input and
// normalized to xi*K. dist is one of {1, Ups, del, del', del''}: the half-line
// step (Ups(0) = 0, Ups' = del) and its derivatives, all functions of xi.
//
// Index slots >= 0 are free and shared across terms; negative values are
// per-term contraction bonds, each appearing exactly twice.

#include "ewv/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ewv {

enum class Dist : std::uint8_t { One = 0, Step = 1, Delta = 2, DeltaP = 3, DeltaPP = 4 };

enum class Atom : std::uint8_t { G = 0, K = 1, U = 2, A = 3, J = 4, R = 5 };

struct IndexedAtom {
    Atom atom;
    std::int16_t i = 0;
    std::int16_t j = 0;  // used by G only

    friend bool operator==(const IndexedAtom&, const IndexedAtom&) = default;
    friend auto operator<=>(const IndexedAtom&, const IndexedAtom&) = default;
};

struct SymTerm {
    Rational coeff{1};
    int e = 0;    // charge power
    int lam = 0;  // length-constant power
    int xi = 0;
    int kap = 0;
    int chi = 0;
    Dist dist = Dist::One;
    std::vector<IndexedAtom> atoms;
};

struct SymExpr {
    int nfree = 0;
    std::vector<SymTerm> terms;
};

// Normalize in place: R -> xi*K, atoms sorted, like terms merged, zero terms
// dropped, terms ordered by (dist rank, xi power, tensor word, remaining
// powers). Terms must not contain unresolved bonds.
void canonicalize(SymExpr& e);
SymExpr canonical(SymExpr e);

bool identical(const SymExpr& a, const SymExpr& b);  // canonical forms equal

SymExpr operator+(const SymExpr& a, const SymExpr& b);
SymExpr operator-(const SymExpr& a, const SymExpr& b);
SymExpr operator*(const Rational& c, const SymExpr& e);

std::string to_string(const SymExpr& e);
std::string to_string(const SymTerm& t);
std::string dist_name(Dist d);

}  // namespace ewv
