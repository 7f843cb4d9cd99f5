#pragma once

#include "sqnmr/spin_algebra.hpp"

namespace sqnmr {

struct HamiltonianSpec {
    double omega0 = 0.0; // rad/s, Zeeman (2 pi gamma_n B0)
    double omegaQ = 0.0; // rad/s, quadrupole strength
    double eta = 0.0;    // [0, 1]
    double alphaQ = 0.0, betaQ = 0.0, gammaQ = 0.0; // ZYZ euler angles, radians

    // splitting between adjacent lines for I=3/2, eta=0; used as the time unit throughout
    double nuQ() const;
    void validate() const;
};

// H_Z = -omega0 Iz; ground state is m = +I
cxmat zeeman_hamiltonian(const HamiltonianSpec& spec, SpinQuantum s);

// (omegaQ/2) [ (3 Iz^2 - I(I+1)) + eta (Ix^2 - Iy^2) ], traceless convention
cxmat quadrupole_pas(const HamiltonianSpec& spec, SpinQuantum s);

// R H R^dag with R = exp(-i a Iz) exp(-i b Iy) exp(-i g Iz)
cxmat euler_rotate(const cxmat& H_pas, SpinQuantum s, double alpha, double beta, double gamma);

// quadrupole_pas rotated by the spec's euler angles into the lab frame
cxmat quadrupole_lab(const HamiltonianSpec& spec, SpinQuantum s);

// rotating-frame average of the lab-frame quadrupole term.
// order 1: the secular part V0 (the q=0 block under ad_Iz).
// order 2: V0 - (1/omega0) sum_{q>0} [V_q, V_-q] / q, the van Vleck correction
// for H_Z = -omega0 Iz (this sign makes H_Z + H_eff track exact eigenvalues
// to third order; the opposite sign degrades the error scaling to second order).
cxmat effective_hamiltonian(const HamiltonianSpec& spec, SpinQuantum s, int order);

} // namespace sqnmr
