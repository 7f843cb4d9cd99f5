#pragma once

#include <functional>
#include <vector>

#include "sqnmr/hamiltonians.hpp"
#include "sqnmr/observables.hpp"
#include "sqnmr/states.hpp"

namespace sqnmr {

// index-addressed work pool: each task owns its output slot, so results are
// bitwise identical for any thread count
void parallel_for(std::size_t n_tasks, int n_threads, const std::function<void(std::size_t)>& fn);

struct FidelityMapResult {
    std::vector<double> B_values; // tesla
    std::vector<double> T_values; // kelvin
    Eigen::MatrixXd F_full;       // (T index, B index)
    Eigen::MatrixXd F_dev;
};

// RTES-vs-target-CSS fidelity over a (B, T) grid; thermal state uses the full
// H = H_Z + H_Q unless literal_eq2 asks for the quadrupole-only exponent
FidelityMapResult fidelity_map(const HamiltonianSpec& quad, SpinQuantum s, double gamma_n,
                               const std::vector<double>& B_values,
                               const std::vector<double>& T_values, bool literal_eq2,
                               int n_threads);

std::vector<double> default_B_grid(); // 60 linear in [0, 9] T
std::vector<double> default_T_grid(); // 60 log in [1e-5, 10] K

struct TraceParams {
    HamiltonianSpec spec;
    cxmat rho0;
    double t_max = 0.0;
    int n_samples = 0;   // sampling when unitary; relaxation uses the dt/50 rule
    RelaxationSpec relax;
    cxmat rho_eq;        // relaxation target, required when relax is active
};

// evolve under the lab-frame quadrupole (Eq.-1 dynamics) and record xi(t)
SqueezingTrace compute_trace(const TraceParams& p, SpinQuantum s);

// one trace per eta value, shared grid, deterministic order
std::vector<SqueezingTrace> eta_family(const TraceParams& base, const std::vector<double>& etas,
                                       SpinQuantum s, int n_threads);

struct EulerGridResult {
    std::vector<double> betaQ; // radians
    std::vector<double> eta;
    Eigen::MatrixXd xi_min;    // (beta index, eta index)
    Eigen::MatrixXd t_argmin;  // seconds
};

// for each (betaQ, eta): order-N effective hamiltonian, CSS zeta(pi/2, pi) start,
// min_t xi over [0, t_max] from n_samples plus golden-section refinement
EulerGridResult euler_grid(const std::vector<double>& betas, const std::vector<double>& etas,
                           const HamiltonianSpec& base, SpinQuantum s, int order, double t_max,
                           int n_samples, int n_threads);

std::vector<double> default_beta_grid(); // 91 points, 0..90 deg in radians
std::vector<double> default_eta_grid(); // 21 points, 0..1

} // namespace sqnmr
