#pragma once

#include <vector>

#include "sqnmr/spin_algebra.hpp"

namespace sqnmr {

struct CSSParams {
    double theta0; // [0, pi]
    double phi0;   // [0, 2pi)
};

struct EnvironmentSpec {
    double B0;          // tesla
    double temperature; // kelvin
    double gamma_n;     // Hz / T (cycles per second per tesla)

    double omega0() const; // 2 pi gamma_n B0, rad/s
};

struct HusimiGrid {
    std::vector<double> x_values;
    std::vector<double> y_values;
    Eigen::MatrixXd q_values; // q_values(i, j) = Q(x_i, y_j)
};

// amplitudes ~ binom(2I, I+m)^(1/2) cos(t/2)^(I+m) sin(t/2)^(I-m) e^(i(I-m)phi)
cxvec css_state(SpinQuantum s, CSSParams p);

// normalized e^(alpha I-) |I,I>; alpha = tan(theta/2) e^(i phi) matches css_state up to phase
cxvec css_unnormalized_exponential(SpinQuantum s, cxd alpha);

// exact Boltzmann state exp(-hbar H / kB T) / Z for H in rad/s; no high-T truncation
cxmat thermal_state(const cxmat& H, const EnvironmentSpec& env);

// hbar omega0 / (kB T); diagnostic only
double polarization_factor(const EnvironmentSpec& env);

// pi/2 pulse along y, phase chosen so a +Iz deviation maps to a -Ix deviation
cxmat rtes(const cxmat& rho_thermal, SpinQuantum s);

// F = Tr(ab) / sqrt(Tr(a^2) Tr(b^2))
double fidelity(const cxmat& a, const cxmat& b);

// rho - 1/dim, the deviation part
cxmat deviation(const cxmat& rho);

// Q(x, y) = <alpha| rho |alpha> with alpha = x + i y
HusimiGrid husimi_q(const cxmat& rho, SpinQuantum s, double x_lo, double x_hi, double y_lo,
                    double y_hi, int n_points);

} // namespace sqnmr
