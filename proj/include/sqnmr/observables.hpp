#pragma once

#include <array>
#include <vector>

#include "sqnmr/dynamics.hpp"
#include "sqnmr/errors.hpp"
#include "sqnmr/spin_algebra.hpp"

namespace sqnmr {

struct SqueezingTrace {
    std::vector<double> times;
    std::vector<double> xi;
    std::vector<std::array<double, 3>> msv; // <Ix>, <Iy>, <Iz>
    std::vector<std::array<double, 3>> abc; // A, B, C
};

struct Spectrum {
    std::vector<double> freq_offsets; // Hz from the carrier
    std::vector<double> amplitude;    // magnitude
    std::vector<double> phase;        // radians
};

// xi = sqrt((C - sqrt(A^2+B^2)) / I) with A = <Iy^2-Iz^2>, B = <IyIz+IzIy>, C = <Iy^2+Iz^2>.
// valid only with the mean spin along x: requires |<Iy>|, |<Iz>| < 1e-6 I and <Ix> != 0
double squeezing_parameter(const cxmat& rho, SpinQuantum s);

// literal min over the perpendicular plane: 721-point scan over phi in [0, pi)
// plus golden-section refinement to 1e-12, xi = sqrt(2 min Var / I)
double squeezing_bruteforce(const cxmat& rho, SpinQuantum s);

SqueezingTrace squeezing_trace(const Trajectory& traj, SpinQuantum s);

// rotate about z so the in-plane mean spin points along -x (receiver phase choice)
cxmat realign_to_minus_x(const cxmat& rho, SpinQuantum s);

// in-place radix-2 FFT; size must be a power of two
void fft_pow2(std::vector<cxd>& a);

// DFT of the (zero-padded) fid sampled at dt, fftshifted so offsets ascend through 0
Spectrum compute_spectrum(const std::vector<cxd>& signal, double dt, int zero_fill_factor);

} // namespace sqnmr
