#include "sqnmr/run.hpp"

#include <filesystem>

#include "sqnmr/constants.hpp"
#include "sqnmr/io.hpp"
#include "sqnmr/observables.hpp"
#include "sqnmr/sweeps.hpp"

namespace sqnmr {

namespace {

double deg2rad(double d) { return d * pi / 180.0; }

cxmat initial_state(const RunConfig& cfg, SpinQuantum s) {
    if (cfg.initial_state == "css") {
        const cxvec z = css_state(s, {deg2rad(cfg.css_theta0_deg), deg2rad(cfg.css_phi0_deg)});
        return z * z.adjoint();
    }
    const HamiltonianSpec spec = cfg.hamiltonian();
    const cxmat H_full = zeeman_hamiltonian(spec, s) + quadrupole_lab(spec, s);
    const cxmat th = thermal_state(H_full, cfg.environment());
    if (cfg.initial_state == "thermal") return th;
    return rtes(th, s);
}

// equilibrium state that T1/T2 pull towards; spec carries the eta in play
cxmat relax_target_state(const RunConfig& cfg, const HamiltonianSpec& spec, SpinQuantum s) {
    if (cfg.relax_target == "mixed") {
        const int d = SpinQuantum(cfg.two_I).dim();
        return cxmat::Identity(d, d) / double(d);
    }
    if (cfg.relax_target == "lab-thermal")
        return thermal_state(zeeman_hamiltonian(spec, s) + quadrupole_lab(spec, s),
                             cfg.environment());
    return thermal_state(quadrupole_lab(spec, s), cfg.environment());
}

std::vector<std::vector<double>> trace_rows(const SqueezingTrace& tr, double nuQ_Hz) {
    std::vector<std::vector<double>> rows;
    rows.reserve(tr.times.size());
    for (std::size_t k = 0; k < tr.times.size(); ++k)
        rows.push_back({tr.times[k], tr.times[k] * nuQ_Hz, tr.xi[k], tr.msv[k][0], tr.msv[k][1],
                        tr.msv[k][2], tr.abc[k][0], tr.abc[k][1], tr.abc[k][2]});
    return rows;
}

void run_husimi(const RunConfig& cfg, const std::string& out) {
    const SpinQuantum s = cfg.spin();
    cxmat rho = initial_state(cfg, s);
    if (cfg.husimi_time_seconds > 0.0) {
        const cxmat H = quadrupole_lab(cfg.hamiltonian(), s);
        rho = propagate_unitary(rho, H, {cfg.husimi_time_seconds, 1}).states.back();
    }
    const double e = cfg.husimi_extent;
    const HusimiGrid g = husimi_q(rho, s, -e, e, -e, e, cfg.husimi_n);
    std::vector<std::vector<double>> rows;
    rows.reserve(g.x_values.size() * g.y_values.size());
    for (std::size_t i = 0; i < g.x_values.size(); ++i)
        for (std::size_t j = 0; j < g.y_values.size(); ++j)
            rows.push_back({g.x_values[i], g.y_values[j], g.q_values(i, j)});
    write_csv(out + "/husimi.csv", {"x", "y", "Q"}, rows);
    write_manifest(out, "husimi", config_echo(cfg), {"husimi.csv"});
}

void run_fidelity_map(const RunConfig& cfg, const std::string& out, int n_threads) {
    const SpinQuantum s = cfg.spin();
    const FidelityMapResult res =
        fidelity_map(cfg.hamiltonian(), s, cfg.gamma_n_MHz_per_T * 1e6, default_B_grid(),
                     default_T_grid(), cfg.boltzmann_literal_eq2, n_threads);
    std::vector<std::vector<double>> rows;
    rows.reserve(res.B_values.size() * res.T_values.size());
    for (std::size_t ti = 0; ti < res.T_values.size(); ++ti)
        for (std::size_t bi = 0; bi < res.B_values.size(); ++bi)
            rows.push_back(
                {res.B_values[bi], res.T_values[ti], res.F_full(ti, bi), res.F_dev(ti, bi)});
    write_csv(out + "/fidelity_map.csv", {"B_tesla", "T_kelvin", "F_full_rho", "F_deviation"},
              rows);
    write_manifest(out, "fidelity-map", config_echo(cfg), {"fidelity_map.csv"});
}

void run_squeeze(const RunConfig& cfg, const std::string& out) {
    const SpinQuantum s = cfg.spin();
    TraceParams p;
    p.spec = cfg.hamiltonian();
    p.rho0 = initial_state(cfg, s);
    p.t_max = cfg.t_max();
    p.n_samples = cfg.n_samples;
    p.relax = cfg.relaxation();
    if (p.relax.active()) p.rho_eq = relax_target_state(cfg, p.spec, s);
    const SqueezingTrace tr = compute_trace(p, s);
    write_csv(out + "/squeeze.csv",
              {"t_seconds", "nuQ_t", "xi", "Ix", "Iy", "Iz", "A", "B", "C"},
              trace_rows(tr, cfg.nuQ_Hz()));
    write_manifest(out, "squeeze", config_echo(cfg), {"squeeze.csv"});
}

void run_spectrum(const RunConfig& cfg, const std::string& out) {
    const SpinQuantum s = cfg.spin();
    const cxmat H = effective_hamiltonian(cfg.hamiltonian(), s, cfg.order);
    const cxmat rho0 = initial_state(cfg, s);
    const double T2 = cfg.spectrum_T2();
    const double dt = cfg.fid_t_max_over_T2 * T2 / cfg.fid_samples;
    const std::vector<cxd> signal = fid(rho0, H, {dt, cfg.fid_samples - 1}, T2, s);
    const Spectrum sp = compute_spectrum(signal, dt, cfg.zero_fill);
    std::vector<std::vector<double>> rows;
    rows.reserve(sp.freq_offsets.size());
    for (std::size_t k = 0; k < sp.freq_offsets.size(); ++k)
        rows.push_back({sp.freq_offsets[k], sp.amplitude[k], sp.phase[k]});
    write_csv(out + "/spectrum.csv", {"offset_Hz", "amplitude", "phase_rad"}, rows);
    write_manifest(out, "spectrum", config_echo(cfg), {"spectrum.csv"});
}

void run_eta_family(const RunConfig& cfg, const std::string& out, int n_threads) {
    const SpinQuantum s = cfg.spin();
    TraceParams base;
    base.spec = cfg.hamiltonian();
    base.rho0 = initial_state(cfg, s);
    base.t_max = cfg.t_max();
    base.n_samples = cfg.n_samples;
    base.relax = cfg.relaxation();
    std::vector<SqueezingTrace> traces;
    if (base.relax.active()) {
        // the equilibrium target tracks each family member's hamiltonian
        traces.resize(cfg.eta_values.size());
        parallel_for(cfg.eta_values.size(), n_threads, [&](std::size_t k) {
            TraceParams p = base;
            p.spec.eta = cfg.eta_values[k];
            p.rho_eq = relax_target_state(cfg, p.spec, s);
            traces[k] = compute_trace(p, s);
        });
    } else {
        traces = eta_family(base, cfg.eta_values, s, n_threads);
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < traces.size(); ++k) {
        const SqueezingTrace& tr = traces[k];
        for (std::size_t j = 0; j < tr.times.size(); ++j)
            rows.push_back(
                {cfg.eta_values[k], tr.times[j], tr.times[j] * cfg.nuQ_Hz(), tr.xi[j]});
    }
    write_csv(out + "/eta_family.csv", {"eta", "t_seconds", "nuQ_t", "xi"}, rows);
    write_manifest(out, "eta-family", config_echo(cfg), {"eta_family.csv"});
}

void run_euler_grid(const RunConfig& cfg, const std::string& out, int n_threads) {
    if (cfg.alphaQ_deg != 0.0 || cfg.gammaQ_deg != 0.0)
        throw config_error("euler-grid requires alphaQ_deg = 0 and gammaQ_deg = 0");
    const SpinQuantum s = cfg.spin();
    std::vector<double> betas_deg(91), betas(91);
    for (int k = 0; k <= 90; ++k) {
        betas_deg[k] = k;
        betas[k] = deg2rad(double(k));
    }
    const std::vector<double> etas = default_eta_grid();
    const EulerGridResult res = euler_grid(betas, etas, cfg.hamiltonian(), s, cfg.order,
                                           cfg.t_max(), cfg.n_samples, n_threads);
    std::vector<std::vector<double>> rows;
    rows.reserve(betas.size() * etas.size());
    for (std::size_t bi = 0; bi < betas.size(); ++bi)
        for (std::size_t ei = 0; ei < etas.size(); ++ei)
            rows.push_back({betas_deg[bi], etas[ei], res.xi_min(bi, ei), res.t_argmin(bi, ei)});
    write_csv(out + "/euler_grid.csv", {"betaQ_deg", "eta", "xi_min", "t_argmin_s"}, rows);
    write_manifest(out, "euler-grid", config_echo(cfg), {"euler_grid.csv"});
}

} // namespace

void run_subcommand(const std::string& name, const RunConfig& cfg, const std::string& out_dir,
                    int n_threads) {
    cfg.validate();
    if (n_threads < 1) throw config_error("thread count must be >= 1");
    std::filesystem::create_directories(out_dir);
    if (name == "husimi") run_husimi(cfg, out_dir);
    else if (name == "fidelity-map") run_fidelity_map(cfg, out_dir, n_threads);
    else if (name == "squeeze") run_squeeze(cfg, out_dir);
    else if (name == "spectrum") run_spectrum(cfg, out_dir);
    else if (name == "eta-family") run_eta_family(cfg, out_dir, n_threads);
    else if (name == "euler-grid") run_euler_grid(cfg, out_dir, n_threads);
    else throw config_error("unknown subcommand: " + name);
}

} // namespace sqnmr
