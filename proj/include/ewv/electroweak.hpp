#pragma once

// Propagators, transition amplitudes, the chirality selection identity,
// gauge covariance under compensated internal rotations, and the contact
// coupling / boson-mass relation.

#include "ewv/biquat.hpp"
#include "ewv/idempotent.hpp"
#include "ewv/lorentz.hpp"

#include <complex>
#include <stdexcept>

namespace ewv {

struct CouplingConstants {
    double alpha = 1.0 / 137.036;           // fine-structure constant, e^2 in natural units
    double g_fermi_over_hbarc3 = 1.166e-5;  // GeV^-2
    double hbarc = 0.1973269804;            // GeV * fm
    double m_w = 0;                         // GeV
    double lambda = 0;                      // fm, Compton length hbarc / m_w
    double g_w = 0;                         // GeV^-2, contact coupling 3 e^2 / m_w^2

    // Fill the derived fields from (alpha, g_fermi_over_hbarc3, hbarc).
    static CouplingConstants derive(double alpha, double g_fermi_over_hbarc3, double hbarc);
};

// Contact-coupling mass relation 3 e^2 / M^2 = G_F / sqrt(2), solved for M.
double mass_estimate(double alpha, double g_fermi_over_hbarc3);
// Same closed form with the alternate 3/2 coefficient, kept for comparison.
double mass_estimate_half_coefficient(double alpha, double g_fermi_over_hbarc3);
// Algebraic inverse: the Fermi constant implied by a given mass.
double fermi_from_mass(double alpha, double m_w);

struct Propagator {
    enum class Kind { EM, Weak };
    Kind kind = Kind::EM;
    BQ value;
    LorentzFactor boost;
};

// i (e^2/q^2) B herm(B); q2 must be nonzero.
Propagator propagator_em(double q2, const LorentzFactor& l, const CouplingConstants& c);
// i G_W B sigma_bar herm(B); momentum-independent contact form.
Propagator propagator_weak(const Idempotent& s, const LorentzFactor& l,
                           const CouplingConstants& c);

struct SpinState {
    BQ d;
};

struct TransitionAmplitude {
    std::complex<double> value;
    Propagator::Kind channel = Propagator::Kind::EM;
};

// T = i S[herm(D_f) conj_quat(Pi) D_i].
TransitionAmplitude amplitude(const SpinState& df, const Propagator& prop, const SpinState& di);

// Left part of a state w.r.t. an idempotent: sigma times the first factor of
// the right-sided chiral split (equal to sigma * D).
BQ left_part(const BQ& d, const Idempotent& s);

struct ChiralityReport {
    int trials = 0;
    double max_rel_dev = 0;          // worst |S[Df+ sigma Di] - S[DfL+ DiL]| relative
    double right_handed_amp = 0;     // weak amplitude of a right-handed state, exact-zero case
    bool pass = false;
};

ChiralityReport verify_chirality(int trials, unsigned seed, double tol = 1e-12);

struct GaugeReport {
    int trials = 0;
    double max_rel_dev = 0;           // compensated transforms, worst relative deviation
    double mean_uncompensated = 0;    // control: mean relative deviation without compensation
    bool pass = false;
};

GaugeReport verify_gauge_covariance(int trials, unsigned seed, double tol = 1e-12,
                                    double control_floor = 1e-3);

}  // namespace ewv
