#include "ewv/symexpr.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace ewv {

namespace {

int dist_rank(Dist d) { return static_cast<int>(d); }

auto merge_key(const SymTerm& t) {
    return std::tie(t.e, t.lam, t.xi, t.kap, t.chi, t.dist, t.atoms);
}

bool term_less(const SymTerm& a, const SymTerm& b) {
    if (dist_rank(a.dist) != dist_rank(b.dist)) return dist_rank(a.dist) < dist_rank(b.dist);
    if (a.xi != b.xi) return a.xi < b.xi;
    if (a.atoms != b.atoms) return a.atoms < b.atoms;
    return std::tie(a.kap, a.chi, a.e, a.lam) < std::tie(b.kap, b.chi, b.e, b.lam);
}

}  // namespace

void canonicalize(SymExpr& e) {
    for (auto& t : e.terms) {
        for (auto& a : t.atoms) {
            if (a.atom == Atom::R) {
                a.atom = Atom::K;
                t.xi += 1;
            }
            if (a.atom != Atom::G) a.j = 0;
            if (a.atom == Atom::G && a.j < a.i) std::swap(a.i, a.j);  // g is symmetric
            if (a.i < 0 || a.j < 0) throw std::logic_error("unresolved bond in canonicalize");
        }
        std::sort(t.atoms.begin(), t.atoms.end());
    }
    std::sort(e.terms.begin(), e.terms.end(), term_less);
    std::vector<SymTerm> merged;
    for (auto& t : e.terms) {
        if (!merged.empty() && merge_key(merged.back()) == merge_key(t))
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const SymTerm& t) { return t.coeff == 0; });
    e.terms = std::move(merged);
}

SymExpr canonical(SymExpr e) {
    canonicalize(e);
    return e;
}

bool identical(const SymExpr& a, const SymExpr& b) {
    const SymExpr ca = canonical(a), cb = canonical(b);
    if (ca.nfree != cb.nfree || ca.terms.size() != cb.terms.size()) return false;
    for (size_t i = 0; i < ca.terms.size(); ++i) {
        const auto& x = ca.terms[i];
        const auto& y = cb.terms[i];
        if (x.coeff != y.coeff || merge_key(x) != merge_key(y)) return false;
    }
    return true;
}

SymExpr operator+(const SymExpr& a, const SymExpr& b) {
    if (a.nfree != b.nfree) throw std::invalid_argument("free-index mismatch");
    SymExpr out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    canonicalize(out);
    return out;
}

SymExpr operator-(const SymExpr& a, const SymExpr& b) { return a + Rational(-1) * b; }

SymExpr operator*(const Rational& c, const SymExpr& e) {
    SymExpr out = e;
    for (auto& t : out.terms) t.coeff *= c;
    canonicalize(out);
    return out;
}

std::string dist_name(Dist d) {
    switch (d) {
        case Dist::One: return "";
        case Dist::Step: return "Ups";
        case Dist::Delta: return "del";
        case Dist::DeltaP: return "del'";
        case Dist::DeltaPP: return "del''";
    }
    return "";
}

namespace {

std::string index_name(int slot) {
    static const char* names[] = {"m", "n", "p", "q", "r", "s"};
    if (slot >= 0 && slot < 6) return names[slot];
    return "i" + std::to_string(slot);
}

void append_power(std::string& s, const char* sym, int p) {
    if (p == 0) return;
    s += "*";
    s += sym;
    if (p != 1) s += "^" + std::to_string(p);
}

const char* atom_name(Atom a) {
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

std::string factors_of(const SymTerm& t) {
    std::string s;
    append_power(s, "e", t.e);
    append_power(s, "lam", t.lam);
    append_power(s, "xi", t.xi);
    append_power(s, "kap", t.kap);
    append_power(s, "chi", t.chi);
    if (t.dist != Dist::One) {
        s += "*";
        s += dist_name(t.dist);
    }
    for (const auto& a : t.atoms) {
        s += "*";
        s += atom_name(a.atom);
        if (a.atom == Atom::G)
            s += "_{" + index_name(a.i) + index_name(a.j) + "}";
        else
            s += "_" + index_name(a.i);
    }
    return s;
}

}  // namespace

std::string to_string(const SymTerm& t) {
    const std::string f = factors_of(t);
    if (f.empty()) return to_string(t.coeff);
    if (t.coeff == 1) return f.substr(1);
    if (t.coeff == -1) return "-" + f.substr(1);
    return to_string(t.coeff) + f;
}

std::string to_string(const SymExpr& e) {
    if (e.terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < e.terms.size(); ++i) {
        std::string ts = to_string(e.terms[i]);
        if (i == 0) {
            s = ts;
        } else if (!ts.empty() && ts[0] == '-') {
            s += " - " + ts.substr(1);
        } else {
            s += " + " + ts;
        }
    }
    return s;
}

}  // namespace ewv
