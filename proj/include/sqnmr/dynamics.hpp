#pragma once

#include <optional>
#include <vector>

#include "sqnmr/spin_algebra.hpp"

namespace sqnmr {

struct RelaxationSpec {
    std::optional<double> T1; // seconds; absent = infinite
    std::optional<double> T2;

    bool active() const { return T1.has_value() || T2.has_value(); }
    void validate() const;
};

struct TimeGrid {
    double dt = 0.0;
    int n_steps = 0;

    void validate() const;
    double t(int k) const { return k * dt; }
};

// step size satisfying the dt <= min(T2, 2pi/omegaQ)/50 resolution rule
double relaxed_dt(double T2, double omegaQ);

struct Trajectory {
    std::vector<double> times;
    std::vector<cxmat> states;
};

// states[k] = U_k rho0 U_k^dag with U_k = exp(-i H k dt), one eigendecomposition
Trajectory propagate_unitary(const cxmat& rho0, const cxmat& H, const TimeGrid& grid);

// in the Iz eigenbasis: diagonals relax toward rho_eq diagonals by e^(-dt/T1),
// off-diagonals shrink by e^(-dt/T2); trace and hermiticity preserved
cxmat relaxation_step(const cxmat& rho, double dt, const RelaxationSpec& relax,
                      const cxmat& rho_eq);

// first-order splitting: unitary sub-step then relaxation_step, per step
Trajectory propagate_relaxed(const cxmat& rho0, const cxmat& H, const TimeGrid& grid,
                             const RelaxationSpec& relax, const cxmat& rho_eq);

// s(t_k) = Tr(rho(t_k) I+) e^(-t_k / T2), rho evolved unitarily under the rotating-frame H
std::vector<cxd> fid(const cxmat& rho0, const cxmat& H, const TimeGrid& grid, double T2,
                     SpinQuantum s);

} // namespace sqnmr
