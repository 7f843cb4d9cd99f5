#include "sqnmr/sweeps.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sqnmr/constants.hpp"

namespace sqnmr {

void parallel_for(std::size_t n_tasks, int n_threads, const std::function<void(std::size_t)>& fn) {
    if (n_threads < 1) throw std::invalid_argument("parallel_for: n_threads must be >= 1");
    if (n_threads == 1 || n_tasks < 2) {
        for (std::size_t k = 0; k < n_tasks; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= n_tasks) return;
            try {
                fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min(static_cast<std::size_t>(n_threads), n_tasks);
    pool.reserve(n);
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::vector<double> default_B_grid() {
    std::vector<double> out(60);
    for (int k = 0; k < 60; ++k) out[k] = 9.0 * k / 59.0;
    return out;
}

std::vector<double> default_T_grid() {
    std::vector<double> out(60);
    const double lo = std::log10(1e-5), hi = std::log10(10.0);
    for (int k = 0; k < 60; ++k) out[k] = std::pow(10.0, lo + (hi - lo) * k / 59.0);
    return out;
}

FidelityMapResult fidelity_map(const HamiltonianSpec& quad, SpinQuantum s, double gamma_n,
                               const std::vector<double>& B_values,
                               const std::vector<double>& T_values, bool literal_eq2,
                               int n_threads) {
    FidelityMapResult out;
    out.B_values = B_values;
    out.T_values = T_values;
    out.F_full.resize(T_values.size(), B_values.size());
    out.F_dev.resize(T_values.size(), B_values.size());
    const cxvec zeta = css_state(s, {0.5 * pi, pi});
    const cxmat target = zeta * zeta.adjoint();
    const cxmat target_dev = deviation(target);
    const cxmat HQ = quadrupole_lab(quad, s);
    const cxmat iz = op_iz(s);
    const std::size_t nb = B_values.size();
    parallel_for(B_values.size() * T_values.size(), n_threads, [&](std::size_t idx) {
        const std::size_t ti = idx / nb, bi = idx % nb;
        const EnvironmentSpec env{B_values[bi], T_values[ti], gamma_n};
        const cxmat H_boltz = literal_eq2 ? HQ : cxmat(-env.omega0() * iz + HQ);
        const cxmat rho = rtes(thermal_state(H_boltz, env), s);
        out.F_full(ti, bi) = fidelity(rho, target);
        out.F_dev(ti, bi) = fidelity(deviation(rho), target_dev);
    });
    return out;
}

SqueezingTrace compute_trace(const TraceParams& p, SpinQuantum s) {
    if (!(p.t_max > 0.0)) throw std::invalid_argument("compute_trace: t_max must be > 0");
    const cxmat H = quadrupole_lab(p.spec, s);
    Trajectory traj;
    if (p.relax.active()) {
        p.relax.validate();
        const double T2 = p.relax.T2 ? *p.relax.T2 : std::numeric_limits<double>::infinity();
        double dt = relaxed_dt(T2, p.spec.omegaQ);
        if (!std::isfinite(dt)) throw std::invalid_argument("compute_trace: no finite time scale");
        const int n_steps = std::max(1, static_cast<int>(std::ceil(p.t_max / dt)));
        dt = p.t_max / n_steps;
        traj = propagate_relaxed(p.rho0, H, {dt, n_steps}, p.relax, p.rho_eq);
    } else {
        if (p.n_samples < 2) throw std::invalid_argument("compute_trace: n_samples must be >= 2");
        traj = propagate_unitary(p.rho0, H, {p.t_max / (p.n_samples - 1), p.n_samples - 1});
    }
    return squeezing_trace(traj, s);
}

std::vector<SqueezingTrace> eta_family(const TraceParams& base, const std::vector<double>& etas,
                                       SpinQuantum s, int n_threads) {
    for (double e : etas)
        if (!(e >= 0.0 && e <= 1.0))
            throw std::invalid_argument("eta_family: eta values must lie in [0, 1]");
    std::vector<SqueezingTrace> out(etas.size());
    // the initial state and relaxation target are shared across the family;
    // only the evolution hamiltonian's asymmetry changes
    parallel_for(etas.size(), n_threads, [&](std::size_t k) {
        TraceParams p = base;
        p.spec.eta = etas[k];
        out[k] = compute_trace(p, s);
    });
    return out;
}

namespace {

// xi of a pure state evolved under a diagonalized hamiltonian, with the in-plane
// mean spin rotated back onto -x before evaluation
struct CellEvaluator {
    SpinQuantum s;
    SpinOperators op;
    cxmat yy, zz, yz;
    Eigen::VectorXd w; // eigenvalues
    cxmat V;
    cxvec psi0_tilde;

    CellEvaluator(const cxmat& H, const cxvec& psi0, SpinQuantum spin)
        : s(spin), op(make_operators(spin)) {
        yy = op.iy * op.iy;
        zz = op.iz * op.iz;
        yz = op.iy * op.iz + op.iz * op.iy;
        Eigen::SelfAdjointEigenSolver<cxmat> es(H);
        w = es.eigenvalues();
        V = es.eigenvectors();
        psi0_tilde = V.adjoint() * psi0;
    }

    double xi_at(double t) const {
        cxvec ph(w.size());
        for (int j = 0; j < w.size(); ++j) ph(j) = std::exp(cxd(0, -w(j) * t)) * psi0_tilde(j);
        cxvec psi = V * ph;
        const double ex = std::real(psi.dot(op.ix * psi));
        const double ey = std::real(psi.dot(op.iy * psi));
        const double phi = std::atan2(ey, ex);
        // z-rotation by pi - phi puts the mean spin on -x; diagonal phases in m
        for (int r = 0; r < psi.size(); ++r)
            psi(r) *= std::exp(cxd(0, -(pi - phi) * s.m_of(r)));
        const double A = std::real(psi.dot(yy * psi)) - std::real(psi.dot(zz * psi));
        const double B = std::real(psi.dot(yz * psi));
        const double C = std::real(psi.dot(yy * psi)) + std::real(psi.dot(zz * psi));
        const double v = (C - std::hypot(A, B)) / s.value();
        return std::sqrt(std::max(v, 0.0));
    }
};

} // namespace

EulerGridResult euler_grid(const std::vector<double>& betas, const std::vector<double>& etas,
                           const HamiltonianSpec& base, SpinQuantum s, int order, double t_max,
                           int n_samples, int n_threads) {
    if (base.alphaQ != 0.0 || base.gammaQ != 0.0)
        throw std::invalid_argument(
            "euler_grid: alphaQ and gammaQ must be zero (mean spin leaves the x axis otherwise)");
    if (n_samples < 3) throw std::invalid_argument("euler_grid: n_samples must be >= 3");
    EulerGridResult out;
    out.betaQ = betas;
    out.eta = etas;
    out.xi_min.resize(betas.size(), etas.size());
    out.t_argmin.resize(betas.size(), etas.size());
    const cxvec psi0 = css_state(s, {0.5 * pi, pi});
    const std::size_t ne = etas.size();
    parallel_for(betas.size() * ne, n_threads, [&](std::size_t idx) {
        const std::size_t bi = idx / ne, ei = idx % ne;
        HamiltonianSpec spec = base;
        spec.betaQ = betas[bi];
        spec.eta = etas[ei];
        const cxmat Heff = effective_hamiltonian(spec, s, order);
        const CellEvaluator cell(Heff, psi0, s);
        const double dt = t_max / (n_samples - 1);
        int kbest = 0;
        double best = cell.xi_at(0.0);
        for (int k = 1; k < n_samples; ++k) {
            const double v = cell.xi_at(k * dt);
            if (v < best) { best = v; kbest = k; }
        }
        double a = std::max(0.0, (kbest - 1) * dt);
        double b = std::min(t_max, (kbest + 1) * dt);
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = cell.xi_at(x1), f2 = cell.xi_at(x2);
        while (b - a > 1e-12 * t_max) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a); f1 = cell.xi_at(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a); f2 = cell.xi_at(x2);
            }
        }
        double tm = 0.5 * (a + b);
        double xm = cell.xi_at(tm);
        if (best < xm) { xm = best; tm = kbest * dt; }
        out.xi_min(bi, ei) = xm;
        out.t_argmin(bi, ei) = tm;
    });
    return out;
}

std::vector<double> default_beta_grid() {
    std::vector<double> out(91);
    for (int k = 0; k <= 90; ++k) out[k] = k * pi / 180.0;
    return out;
}

std::vector<double> default_eta_grid() {
    std::vector<double> out(21);
    for (int k = 0; k <= 20; ++k) out[k] = k / 20.0;
    return out;
}

} // namespace sqnmr
