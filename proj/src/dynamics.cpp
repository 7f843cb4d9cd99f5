#include "sqnmr/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "sqnmr/constants.hpp"

namespace sqnmr {

void RelaxationSpec::validate() const {
    if (T1 && !(*T1 > 0.0)) throw std::invalid_argument("RelaxationSpec: T1 must be > 0");
    if (T2 && !(*T2 > 0.0)) throw std::invalid_argument("RelaxationSpec: T2 must be > 0");
    if (T1 && T2 && *T2 > 2.0 * *T1)
        throw std::invalid_argument("RelaxationSpec: T2 <= 2 T1 required");
}

void TimeGrid::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("TimeGrid: dt must be > 0");
    if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be positive");
}

double relaxed_dt(double T2, double omegaQ) {
    double lim = T2;
    if (omegaQ > 0.0) lim = std::min(lim, 2.0 * pi / omegaQ);
    return lim / 50.0;
}

static void require_hermitian(const cxmat& H, const char* who) {
    if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + H.cwiseAbs().maxCoeff()))
        throw std::invalid_argument(std::string(who) + ": H not hermitian");
}

Trajectory propagate_unitary(const cxmat& rho0, const cxmat& H, const TimeGrid& grid) {
    grid.validate();
    require_hermitian(H, "propagate_unitary");
    Eigen::SelfAdjointEigenSolver<cxmat> es(H);
    const auto& w = es.eigenvalues();
    const cxmat& V = es.eigenvectors();
    const cxmat rho_tilde = V.adjoint() * rho0 * V;
    Trajectory out;
    out.times.reserve(grid.n_steps + 1);
    out.states.reserve(grid.n_steps + 1);
    cxmat mid(w.size(), w.size());
    for (int k = 0; k <= grid.n_steps; ++k) {
        const double t = grid.t(k);
        for (int r = 0; r < w.size(); ++r)
            for (int c = 0; c < w.size(); ++c)
                mid(r, c) = rho_tilde(r, c) * std::exp(cxd(0, -(w(r) - w(c)) * t));
        out.times.push_back(t);
        out.states.push_back(V * mid * V.adjoint());
    }
    return out;
}

cxmat relaxation_step(const cxmat& rho, double dt, const RelaxationSpec& relax,
                      const cxmat& rho_eq) {
    relax.validate();
    const double f1 = relax.T1 ? std::exp(-dt / *relax.T1) : 1.0;
    const double f2 = relax.T2 ? std::exp(-dt / *relax.T2) : 1.0;
    cxmat out = f2 * rho;
    for (int r = 0; r < rho.rows(); ++r) {
        const double d = std::real(rho(r, r));
        const double eq = std::real(rho_eq(r, r));
        out(r, r) = eq + (d - eq) * f1;
    }
    return out;
}

Trajectory propagate_relaxed(const cxmat& rho0, const cxmat& H, const TimeGrid& grid,
                             const RelaxationSpec& relax, const cxmat& rho_eq) {
    if (!relax.active()) return propagate_unitary(rho0, H, grid); // same eigendecomposition path
    grid.validate();
    relax.validate();
    require_hermitian(H, "propagate_relaxed");
    if (relax.T2 && grid.dt > *relax.T2 / 50.0 * (1.0 + 1e-9))
        throw std::invalid_argument("propagate_relaxed: dt exceeds the T2/50 resolution rule");
    Eigen::SelfAdjointEigenSolver<cxmat> es(H);
    const auto& w = es.eigenvalues();
    const cxmat& V = es.eigenvectors();
    cxvec ph(w.size());
    for (int j = 0; j < w.size(); ++j) ph(j) = std::exp(cxd(0, -w(j) * grid.dt));
    const cxmat U = V * ph.asDiagonal() * V.adjoint();
    Trajectory out;
    out.times.reserve(grid.n_steps + 1);
    out.states.reserve(grid.n_steps + 1);
    cxmat rho = rho0;
    out.times.push_back(0.0);
    out.states.push_back(rho);
    for (int k = 1; k <= grid.n_steps; ++k) {
        rho = U * rho * U.adjoint();
        rho = relaxation_step(rho, grid.dt, relax, rho_eq);
        out.times.push_back(grid.t(k));
        out.states.push_back(rho);
    }
    return out;
}

std::vector<cxd> fid(const cxmat& rho0, const cxmat& H, const TimeGrid& grid, double T2,
                     SpinQuantum s) {
    const Trajectory traj = propagate_unitary(rho0, H, grid);
    const cxmat ip = op_ip(s);
    std::vector<cxd> out;
    out.reserve(traj.states.size());
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        const double damp = std::isfinite(T2) ? std::exp(-traj.times[k] / T2) : 1.0;
        out.push_back((traj.states[k] * ip).trace() * damp);
    }
    return out;
}

} // namespace sqnmr
