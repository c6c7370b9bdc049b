#pragma once

// Causal differentiation of retarded-frame expressions. A gradient appends
// one covariant slot; the wave operator applies two gradients and contracts
// them with the metric. Contractions of frame vectors resolve through a
// value table so a convention change is a table edit, not a code edit.

#include "ewv/symexpr.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace ewv {

struct RuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Strict, Associative };

// Value of a contracted pair of frame vectors: coeff * kap^k * chi^c, or zero.
struct ContractionEntry {
    bool zero = false;
    Rational coeff{1};
    int kap = 0;
    int chi = 0;
};

struct RuleTable {
    std::map<std::pair<Atom, Atom>, ContractionEntry> contraction;
    std::map<std::string, Rational> sign;  // per-rule sign knob; flip for negative controls

    Rational rule_sign(const std::string& name) const;
    const ContractionEntry& contract(Atom a, Atom b) const;

    // Gradient rules. m is the new covariant slot, i the differentiated
    // atom's slot; nfree is the free-slot count of the result.
    SymExpr grad_xi(int m, int nfree) const;
    SymExpr grad_kappa(int m, int nfree) const;
    SymExpr grad_tau(int m, int nfree) const;
    SymExpr grad_atom(Atom a, int i, int m, int nfree) const;
};

RuleTable standard_rules();

// d_mu, one term at a time: explicit position dependence plus the retarded
// chain rule. Adds one free slot (the last one).
SymExpr causal_grad(const SymExpr& e, const RuleTable& rt);

// Two causal gradients contracted with the metric.
SymExpr dalembertian(const SymExpr& e, const RuleTable& rt);

// Contract two free slots of an expression with the metric.
SymExpr contract_slots(const SymExpr& e, int sa, int sb, const RuleTable& rt);

// Associative mode reduces distribution order: xi*del^(k) -> -k*del^(k-1),
// iterated. Strict mode keeps every term. Neither discards xi*del.
SymExpr assoc_simplify(SymExpr e, Mode mode);

// Moment identity xi^n * del^(k) -> 0 for n > k. Valid only at pairing level
// (it is not stable under division by xi^2), hence kept out of assoc_simplify.
SymExpr drop_scaled_deltas(SymExpr e);

bool expr_equal(const SymExpr& a, const SymExpr& b, Mode mode = Mode::Strict);

// --- numeric evaluation ---

struct EvalContext {
    std::array<double, 4> K{}, U{}, A{}, J{};  // lowered components
    double xi = 1, kap = 0, chi = 0;
    double e = 1, lam = 1;

    void bind(Dist d, double v);
    bool bound(Dist d) const;
    double dist_value(Dist d) const;

  private:
    std::array<bool, 5> has_{true, false, false, false, false};
    std::array<double, 5> val_{1, 0, 0, 0, 0};
};

double evaluate_scalar(const SymExpr& e, const EvalContext& ctx);
std::array<double, 4> evaluate_covector(const SymExpr& e, const EvalContext& ctx);
std::array<std::array<double, 4>, 4> evaluate_matrix(const SymExpr& e, const EvalContext& ctx);

// --- reference expressions (free slot 0) ---

SymExpr charge_weighted_interval();  // (e/2) * R_m * Ups(xi)
SymExpr lienard_wiechert_term();     // e * xi^-1 * Ups * U_m
SymExpr wave_of_interval_expected(); // e/xi Ups U_m + e/2 K_m ((4-6 xi kap) del + (1-2 xi kap) xi del')
SymExpr shell_term_expected();       // e (3 - 4 xi kap)/2 * del * K_m

}  // namespace ewv
