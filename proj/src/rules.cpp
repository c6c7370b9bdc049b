#include "ewv/rules.hpp"

#include <algorithm>
#include <cstdlib>

namespace ewv {

namespace {

std::int16_t slot16(int i) { return static_cast<std::int16_t>(i); }

IndexedAtom vec_at(Atom a, int i) { return IndexedAtom{a, slot16(i), 0}; }
IndexedAtom g_at(int i, int j) { return IndexedAtom{Atom::G, slot16(i), slot16(j)}; }

const char* atom_label(Atom a) {
    switch (a) {
        case Atom::G: return "g";
        case Atom::K: return "K";
        case Atom::U: return "U";
        case Atom::A: return "A";
        case Atom::J: return "J";
        case Atom::R: return "R";
    }
    return "?";
}

// base * rule: multiply every rule term into the base term and append.
void append_product(SymExpr& out, const SymTerm& base, const SymExpr& rule) {
    for (const auto& r : rule.terms) {
        SymTerm t = base;
        t.coeff *= r.coeff;
        t.e += r.e;
        t.lam += r.lam;
        t.xi += r.xi;
        t.kap += r.kap;
        t.chi += r.chi;
        t.atoms.insert(t.atoms.end(), r.atoms.begin(), r.atoms.end());
        out.terms.push_back(std::move(t));
    }
}

Dist raise_order(Dist d) {
    switch (d) {
        case Dist::Step: return Dist::Delta;
        case Dist::Delta: return Dist::DeltaP;
        case Dist::DeltaP: return Dist::DeltaPP;
        default: throw RuleError("no derivative stored beyond del''");
    }
}

int delta_order(Dist d) {
    switch (d) {
        case Dist::Delta: return 0;
        case Dist::DeltaP: return 1;
        case Dist::DeltaPP: return 2;
        default: return -1;  // not a delta
    }
}

}  // namespace

Rational RuleTable::rule_sign(const std::string& name) const {
    auto it = sign.find(name);
    if (it == sign.end()) throw RuleError("unknown rule name: " + name);
    return it->second;
}

const ContractionEntry& RuleTable::contract(Atom a, Atom b) const {
    if (static_cast<int>(b) < static_cast<int>(a)) std::swap(a, b);
    auto it = contraction.find({a, b});
    if (it == contraction.end())
        throw RuleError(std::string("no contraction value for ") + atom_label(a) + "." +
                        atom_label(b));
    return it->second;
}

SymExpr RuleTable::grad_xi(int m, int nfree) const {
    const Rational s = rule_sign("xi");
    SymExpr e;
    e.nfree = nfree;
    SymTerm t1;  // -U_m
    t1.coeff = -s;
    t1.atoms = {vec_at(Atom::U, m)};
    SymTerm t2;  // +K_m
    t2.coeff = s;
    t2.atoms = {vec_at(Atom::K, m)};
    SymTerm t3;  // -xi*kap*K_m
    t3.coeff = -s;
    t3.xi = 1;
    t3.kap = 1;
    t3.atoms = {vec_at(Atom::K, m)};
    e.terms = {t1, t2, t3};
    return e;
}

SymExpr RuleTable::grad_kappa(int m, int nfree) const {
    const Rational s = rule_sign("kappa");
    SymExpr e;
    e.nfree = nfree;
    SymTerm t1;  // -chi*K_m
    t1.coeff = -s;
    t1.chi = 1;
    t1.atoms = {vec_at(Atom::K, m)};
    SymTerm t2;  // -xi^-1*A_m
    t2.coeff = -s;
    t2.xi = -1;
    t2.atoms = {vec_at(Atom::A, m)};
    SymTerm t3;  // +xi^-1*kap*U_m
    t3.coeff = s;
    t3.xi = -1;
    t3.kap = 1;
    t3.atoms = {vec_at(Atom::U, m)};
    SymTerm t4;  // -xi^-1*kap*K_m
    t4.coeff = -s;
    t4.xi = -1;
    t4.kap = 1;
    t4.atoms = {vec_at(Atom::K, m)};
    SymTerm t5;  // +kap^2*K_m
    t5.coeff = s;
    t5.kap = 2;
    t5.atoms = {vec_at(Atom::K, m)};
    e.terms = {t1, t2, t3, t4, t5};
    return e;
}

SymExpr RuleTable::grad_tau(int m, int nfree) const {
    const Rational s = rule_sign("tau");
    SymExpr e;
    e.nfree = nfree;
    SymTerm t;  // -K_m
    t.coeff = -s;
    t.atoms = {vec_at(Atom::K, m)};
    e.terms = {t};
    return e;
}

SymExpr RuleTable::grad_atom(Atom a, int i, int m, int nfree) const {
    SymExpr e;
    e.nfree = nfree;
    switch (a) {
        case Atom::R: {
            const Rational s = rule_sign("R");
            SymTerm t1;  // g_mi
            t1.coeff = s;
            t1.atoms = {g_at(m, i)};
            SymTerm t2;  // K_m U_i
            t2.coeff = s;
            t2.atoms = {vec_at(Atom::K, m), vec_at(Atom::U, i)};
            e.terms = {t1, t2};
            return e;
        }
        case Atom::K: {
            const Rational s = rule_sign("K");
            SymTerm t1;  // xi^-1 g_mi
            t1.coeff = s;
            t1.xi = -1;
            t1.atoms = {g_at(m, i)};
            SymTerm t2;  // xi^-1 K_m U_i
            t2.coeff = s;
            t2.xi = -1;
            t2.atoms = {vec_at(Atom::K, m), vec_at(Atom::U, i)};
            SymTerm t3;  // xi^-1 K_i U_m
            t3.coeff = s;
            t3.xi = -1;
            t3.atoms = {vec_at(Atom::U, m), vec_at(Atom::K, i)};
            SymTerm t4;  // -xi^-1 K_m K_i
            t4.coeff = -s;
            t4.xi = -1;
            t4.atoms = {vec_at(Atom::K, m), vec_at(Atom::K, i)};
            SymTerm t5;  // +kap K_m K_i
            t5.coeff = s;
            t5.kap = 1;
            t5.atoms = {vec_at(Atom::K, m), vec_at(Atom::K, i)};
            e.terms = {t1, t2, t3, t4, t5};
            return e;
        }
        case Atom::U: {
            const Rational s = rule_sign("U");
            SymTerm t;  // -K_m A_i
            t.coeff = -s;
            t.atoms = {vec_at(Atom::K, m), vec_at(Atom::A, i)};
            e.terms = {t};
            return e;
        }
        case Atom::A: {
            const Rational s = rule_sign("A");
            SymTerm t;  // -K_m J_i
            t.coeff = -s;
            t.atoms = {vec_at(Atom::K, m), vec_at(Atom::J, i)};
            e.terms = {t};
            return e;
        }
        case Atom::G:
            return e;  // constant
        case Atom::J:
            throw RuleError("no gradient rule for the jerk vector");
    }
    throw RuleError("unhandled atom in grad_atom");
}

RuleTable standard_rules() {
    RuleTable rt;
    auto put = [&rt](Atom a, Atom b, ContractionEntry ce) { rt.contraction[{a, b}] = ce; };
    // Metric contractions of the null frame, timelike convention (-,+,+,+):
    // the scalar values below absorb the lowered-index pairing.
    put(Atom::K, Atom::K, {.zero = true});
    put(Atom::K, Atom::U, {.coeff = Rational(-1)});
    put(Atom::U, Atom::U, {.coeff = Rational(-1)});
    put(Atom::K, Atom::A, {.coeff = Rational(-1), .kap = 1});
    put(Atom::U, Atom::A, {.zero = true});
    put(Atom::K, Atom::J, {.coeff = Rational(-1), .chi = 1});
    for (const char* n : {"xi", "kappa", "tau", "R", "K", "U", "A"}) rt.sign[n] = Rational(1);
    return rt;
}

SymExpr causal_grad(const SymExpr& in, const RuleTable& rt) {
    SymExpr e = canonical(in);
    const int m = e.nfree;  // the new slot
    SymExpr out;
    out.nfree = e.nfree + 1;
    for (const auto& t : e.terms) {
        if (t.xi != 0) {
            SymTerm base = t;
            base.coeff *= Rational(t.xi);
            base.xi -= 1;
            append_product(out, base, rt.grad_xi(m, out.nfree));
        }
        if (t.kap != 0) {
            SymTerm base = t;
            base.coeff *= Rational(t.kap);
            base.kap -= 1;
            append_product(out, base, rt.grad_kappa(m, out.nfree));
        }
        if (t.chi != 0) throw RuleError("no gradient rule for chi");
        if (t.dist != Dist::One) {
            SymTerm base = t;
            base.dist = raise_order(t.dist);
            append_product(out, base, rt.grad_xi(m, out.nfree));
        }
        for (std::size_t k = 0; k < t.atoms.size(); ++k) {
            const IndexedAtom& ia = t.atoms[k];
            if (ia.atom == Atom::G) continue;
            SymTerm base = t;
            base.atoms.erase(base.atoms.begin() + static_cast<std::ptrdiff_t>(k));
            append_product(out, base, rt.grad_atom(ia.atom, ia.i, m, out.nfree));
        }
    }
    canonicalize(out);
    return out;
}

SymExpr contract_slots(const SymExpr& in, int sa, int sb, const RuleTable& rt) {
    if (sa == sb) throw RuleError("cannot contract a slot with itself");
    SymExpr out;
    out.nfree = in.nfree - 2;
    const int lo = std::min(sa, sb);
    const int hi = std::max(sa, sb);
    for (SymTerm t : in.terms) {
        // Mark the contracted pair as bond -1 and close the slot gap.
        auto remap = [&](std::int16_t s) -> std::int16_t {
            if (s == sa || s == sb) return -1;
            int v = s;
            if (v > lo) --v;
            if (v > hi - 1) --v;  // hi already shifted down by the first decrement
            return slot16(v);
        };
        for (auto& ia : t.atoms) {
            ia.i = remap(ia.i);
            if (ia.atom == Atom::G) ia.j = remap(ia.j);
        }
        // Resolve the bond. A metric endpoint renames its partner's slot;
        // a metric bonded to itself is the trace; two frame vectors look up
        // the contraction table.
        struct End {
            std::size_t pos;
            bool second_slot;
        };
        std::vector<End> ends;
        for (std::size_t p = 0; p < t.atoms.size(); ++p) {
            const auto& ia = t.atoms[p];
            if (ia.i == -1) ends.push_back({p, false});
            if (ia.atom == Atom::G && ia.j == -1) ends.push_back({p, true});
        }
        if (ends.size() != 2) throw RuleError("contracted slot must appear exactly twice");
        auto erase_two = [&t](std::size_t p1, std::size_t p2) {
            t.atoms.erase(t.atoms.begin() + static_cast<std::ptrdiff_t>(std::max(p1, p2)));
            t.atoms.erase(t.atoms.begin() + static_cast<std::ptrdiff_t>(std::min(p1, p2)));
        };
        bool dead = false;
        if (ends[0].pos == ends[1].pos) {
            // g contracted with itself: trace of the metric.
            t.coeff *= Rational(4);
            t.atoms.erase(t.atoms.begin() + static_cast<std::ptrdiff_t>(ends[0].pos));
        } else {
            const bool g0 = t.atoms[ends[0].pos].atom == Atom::G;
            const bool g1 = t.atoms[ends[1].pos].atom == Atom::G;
            if (g0 || g1) {
                const End& ge = g0 ? ends[0] : ends[1];
                const End& oe = g0 ? ends[1] : ends[0];
                const IndexedAtom& g = t.atoms[ge.pos];
                const std::int16_t keep = ge.second_slot ? g.i : g.j;
                IndexedAtom& other = t.atoms[oe.pos];
                if (oe.second_slot)
                    other.j = keep;
                else
                    other.i = keep;
                t.atoms.erase(t.atoms.begin() + static_cast<std::ptrdiff_t>(ge.pos));
            } else {
                const ContractionEntry& ce =
                    rt.contract(t.atoms[ends[0].pos].atom, t.atoms[ends[1].pos].atom);
                if (ce.zero) {
                    dead = true;
                } else {
                    t.coeff *= ce.coeff;
                    t.kap += ce.kap;
                    t.chi += ce.chi;
                }
                erase_two(ends[0].pos, ends[1].pos);
            }
        }
        if (!dead) out.terms.push_back(std::move(t));
    }
    canonicalize(out);
    return out;
}

SymExpr dalembertian(const SymExpr& in, const RuleTable& rt) {
    SymExpr g2 = causal_grad(causal_grad(in, rt), rt);
    return contract_slots(g2, g2.nfree - 2, g2.nfree - 1, rt);
}

SymExpr assoc_simplify(SymExpr e, Mode mode) {
    if (mode == Mode::Strict) {
        canonicalize(e);
        return e;
    }
    for (auto& t : e.terms) {
        int k = delta_order(t.dist);
        while (k > 0 && t.xi > 0) {
            t.coeff *= Rational(-k);
            t.xi -= 1;
            --k;
            t.dist = (k == 1) ? Dist::DeltaP : Dist::Delta;
        }
    }
    canonicalize(e);
    return e;
}

SymExpr drop_scaled_deltas(SymExpr e) {
    for (auto& t : e.terms) {
        const int k = delta_order(t.dist);
        if (k >= 0 && t.xi > k) t.coeff = Rational(0);
    }
    canonicalize(e);
    return e;
}

bool expr_equal(const SymExpr& a, const SymExpr& b, Mode mode) {
    return identical(assoc_simplify(a, mode), assoc_simplify(b, mode));
}

void EvalContext::bind(Dist d, double v) {
    has_[static_cast<std::size_t>(d)] = true;
    val_[static_cast<std::size_t>(d)] = v;
}

bool EvalContext::bound(Dist d) const { return has_[static_cast<std::size_t>(d)]; }

double EvalContext::dist_value(Dist d) const {
    if (!bound(d)) throw EvalError("no numeric binding for distribution factor " + dist_name(d));
    return val_[static_cast<std::size_t>(d)];
}

namespace {

double ipow(double b, int n) {
    if (n < 0) return 1.0 / ipow(b, -n);
    double r = 1;
    while (n-- > 0) r *= b;
    return r;
}

double metric_ll(int mu, int nu) {
    if (mu != nu) return 0;
    return mu == 0 ? -1.0 : 1.0;
}

const std::array<double, 4>& vector_of(Atom a, const EvalContext& ctx) {
    switch (a) {
        case Atom::K: return ctx.K;
        case Atom::U: return ctx.U;
        case Atom::A: return ctx.A;
        case Atom::J: return ctx.J;
        default: break;
    }
    throw EvalError("no numeric value for atom");
}

// Evaluate one term with free slots bound to concrete (lowered) indices.
double eval_term(const SymTerm& t, const EvalContext& ctx, const std::array<int, 2>& idx,
                 int nfree) {
    double v = static_cast<double>(t.coeff);
    v *= ipow(ctx.e, t.e) * ipow(ctx.lam, t.lam) * ipow(ctx.xi, t.xi) * ipow(ctx.kap, t.kap) *
         ipow(ctx.chi, t.chi);
    v *= ctx.dist_value(t.dist);
    auto slot_index = [&](std::int16_t s) {
        if (s < 0 || s >= nfree) throw EvalError("unbound slot in evaluation");
        return idx[static_cast<std::size_t>(s)];
    };
    for (const auto& ia : t.atoms) {
        if (ia.atom == Atom::G) {
            v *= metric_ll(slot_index(ia.i), slot_index(ia.j));
        } else if (ia.atom == Atom::R) {
            v *= ctx.xi * vector_of(Atom::K, ctx)[static_cast<std::size_t>(slot_index(ia.i))];
        } else {
            v *= vector_of(ia.atom, ctx)[static_cast<std::size_t>(slot_index(ia.i))];
        }
    }
    return v;
}

double eval_expr(const SymExpr& e, const EvalContext& ctx, const std::array<int, 2>& idx) {
    double s = 0;
    for (const auto& t : e.terms) s += eval_term(t, ctx, idx, e.nfree);
    return s;
}

}  // namespace

double evaluate_scalar(const SymExpr& e, const EvalContext& ctx) {
    if (e.nfree != 0) throw EvalError("scalar evaluation needs a slot-free expression");
    return eval_expr(e, ctx, {0, 0});
}

std::array<double, 4> evaluate_covector(const SymExpr& e, const EvalContext& ctx) {
    if (e.nfree != 1) throw EvalError("covector evaluation needs exactly one free slot");
    std::array<double, 4> out{};
    for (int mu = 0; mu < 4; ++mu) out[static_cast<std::size_t>(mu)] = eval_expr(e, ctx, {mu, 0});
    return out;
}

std::array<std::array<double, 4>, 4> evaluate_matrix(const SymExpr& e, const EvalContext& ctx) {
    if (e.nfree != 2) throw EvalError("matrix evaluation needs exactly two free slots");
    std::array<std::array<double, 4>, 4> out{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            out[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
                eval_expr(e, ctx, {mu, nu});
    return out;
}

SymExpr charge_weighted_interval() {
    SymExpr e;
    e.nfree = 1;
    SymTerm t;
    t.coeff = Rational(1, 2);
    t.e = 1;
    t.dist = Dist::Step;
    t.atoms = {vec_at(Atom::R, 0)};
    e.terms = {t};
    canonicalize(e);
    return e;
}

SymExpr lienard_wiechert_term() {
    SymExpr e;
    e.nfree = 1;
    SymTerm t;
    t.e = 1;
    t.xi = -1;
    t.dist = Dist::Step;
    t.atoms = {vec_at(Atom::U, 0)};
    e.terms = {t};
    canonicalize(e);
    return e;
}

SymExpr wave_of_interval_expected() {
    SymExpr e;
    e.nfree = 1;
    SymTerm t1;  // e xi^-1 Ups U_m
    t1.e = 1;
    t1.xi = -1;
    t1.dist = Dist::Step;
    t1.atoms = {vec_at(Atom::U, 0)};
    SymTerm t2;  // 2 e del K_m
    t2.coeff = Rational(2);
    t2.e = 1;
    t2.dist = Dist::Delta;
    t2.atoms = {vec_at(Atom::K, 0)};
    SymTerm t3;  // -3 e xi kap del K_m
    t3.coeff = Rational(-3);
    t3.e = 1;
    t3.xi = 1;
    t3.kap = 1;
    t3.dist = Dist::Delta;
    t3.atoms = {vec_at(Atom::K, 0)};
    SymTerm t4;  // (1/2) e xi del' K_m
    t4.coeff = Rational(1, 2);
    t4.e = 1;
    t4.xi = 1;
    t4.dist = Dist::DeltaP;
    t4.atoms = {vec_at(Atom::K, 0)};
    SymTerm t5;  // -e xi^2 kap del' K_m
    t5.coeff = Rational(-1);
    t5.e = 1;
    t5.xi = 2;
    t5.kap = 1;
    t5.dist = Dist::DeltaP;
    t5.atoms = {vec_at(Atom::K, 0)};
    e.terms = {t1, t2, t3, t4, t5};
    canonicalize(e);
    return e;
}

SymExpr shell_term_expected() {
    SymExpr e;
    e.nfree = 1;
    SymTerm t1;  // (3/2) e del K_m
    t1.coeff = Rational(3, 2);
    t1.e = 1;
    t1.dist = Dist::Delta;
    t1.atoms = {vec_at(Atom::K, 0)};
    SymTerm t2;  // -2 e xi kap del K_m
    t2.coeff = Rational(-2);
    t2.e = 1;
    t2.xi = 1;
    t2.kap = 1;
    t2.dist = Dist::Delta;
    t2.atoms = {vec_at(Atom::K, 0)};
    e.terms = {t1, t2};
    canonicalize(e);
    return e;
}

}  // namespace ewv
