// acceptance gate: runs every shipping criterion end to end and prints one
// pass/fail line per criterion. exits nonzero if any line fails.

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sqnmr/config.hpp"
#include "sqnmr/constants.hpp"
#include "sqnmr/io.hpp"
#include "sqnmr/observables.hpp"
#include "sqnmr/run.hpp"
#include "sqnmr/sweeps.hpp"

using namespace sqnmr;
namespace fs = std::filesystem;

namespace {

int g_failed = 0;

void report(const char* id, bool ok, const std::string& detail) {
    std::printf("[%s] %s — %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) g_failed = 1;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return std::string(buf);
}

HamiltonianSpec working_point(double eta = 0.0, double beta = 0.0) {
    HamiltonianSpec spec;
    spec.omega0 = 2.0 * pi * 11.26e6 * 7.0;
    spec.omegaQ = 2.0 * pi * 200e3 / 3.0;
    spec.eta = eta;
    spec.betaQ = beta;
    return spec;
}

const EnvironmentSpec env_wp{7.0, 0.1, 11.26e6};
const double nuQ = 200e3;

double expect(const cxmat& rho, const cxmat& obs) { return std::real((rho * obs).trace()); }

// ---------------------------------------------------------------- A1
void a1() {
    double worst = 0.0;
    for (int two_I : {1, 2, 3, 5}) {
        SpinQuantum s(two_I);
        const SpinOperators op = make_operators(s);
        const cxd i(0, 1);
        const double c = s.value() * (s.value() + 1.0);
        const cxmat id = cxmat::Identity(s.dim(), s.dim());
        worst = std::max({worst,
                          (commutator(op.ix, op.iy) - i * op.iz).cwiseAbs().maxCoeff(),
                          (commutator(op.iy, op.iz) - i * op.ix).cwiseAbs().maxCoeff(),
                          (commutator(op.iz, op.ix) - i * op.iy).cwiseAbs().maxCoeff(),
                          (op.ix * op.ix + op.iy * op.iy + op.iz * op.iz - c * id)
                              .cwiseAbs()
                              .maxCoeff()});
    }
    report("A1", worst < 1e-12,
           fmt("commutators and casimir, two_I in {1,2,3,5}: max entry error %.2e (tol 1e-12)",
               worst));
}

// ---------------------------------------------------------------- A2
void a2() {
    double worst = 0.0;
    for (int two_I : {2, 3, 5}) {
        SpinQuantum s(two_I);
        const cxvec z = css_state(s, {0.5 * pi, pi});
        worst = std::max(worst, std::abs(squeezing_parameter(z * z.adjoint(), s) - 1.0));
    }
    report("A2", worst < 1e-10,
           fmt("xi(CSS) = 1 for I in {1, 3/2, 5/2}: max |xi - 1| = %.2e (tol 1e-10)", worst));
}

// ---------------------------------------------------------------- A3
void a3() {
    SpinQuantum s(3);
    const SpinOperators op = make_operators(s);
    std::mt19937 rng(12345);
    std::normal_distribution<double> g;
    const cxvec z0 = css_state(s, {0.5 * pi, pi});
    const cxmat rho0 = z0 * z0.adjoint();
    double worst = 0.0;
    int tested = 0;
    while (tested < 100) {
        cxmat G(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) G(r, c) = cxd(g(rng), g(rng));
        const cxmat U = exp_i_herm(cxmat((G + G.adjoint()) / 2.0), 1.0);
        cxmat rho = U * rho0 * U.adjoint();
        rho = realign_to_minus_x(rho, s);
        const double ex = expect(rho, op.ix), ez = expect(rho, op.iz);
        if (std::hypot(ex, ez) < 0.1) continue; // mean spin too short to define a frame
        const cxmat R = exp_i_herm(op.iy, -std::atan2(ez, -ex));
        rho = realign_to_minus_x(cxmat(R * rho * R.adjoint()), s);
        ++tested;
        worst = std::max(worst,
                         std::abs(squeezing_parameter(rho, s) - squeezing_bruteforce(rho, s)));
    }
    report("A3", worst < 1e-9,
           fmt("closed form vs plane scan on 100 randomized states: max gap %.2e (tol 1e-9)",
               worst));
}

// ---------------------------------------------------------------- A4
void a4() {
    SpinQuantum s(3);
    const cxvec z = css_state(s, {0.5 * pi, pi});
    TraceParams p;
    p.spec = working_point();
    p.rho0 = z * z.adjoint();
    // 2000 samples spaced nuQ dt = 1e-3: covers two periods minus one sample
    p.n_samples = 2000;
    p.t_max = 1.999 / nuQ;
    const SqueezingTrace tr = compute_trace(p, s);
    double worst = 0.0;
    for (int k = 0; k + 1000 < 2000; ++k)
        worst = std::max(worst, std::abs(tr.xi[k + 1000] - tr.xi[k]));
    // anti-squeezing peak inside the first period
    int kmax = 1;
    for (int k = 1; k < 1000; ++k)
        if (tr.xi[k] > tr.xi[kmax]) kmax = k;
    const double t_peak = tr.times[kmax] * nuQ;
    const bool ok = worst < 1e-8 && std::abs(t_peak - 0.5) < 0.001 + 1e-12;
    report("A4", ok,
           fmt("OAT periodicity max |xi(t+1/nuQ) - xi(t)| = %.2e (tol 1e-8); "
               "anti-squeezing at nuQ t = %.4f (want 0.5 +- 0.001)",
               worst, t_peak));
}

// ---------------------------------------------------------------- A5
void a5() {
    SpinQuantum s(3);
    const RunConfig cfg = parse_config(nlohmann::json::object());
    const cxmat H = effective_hamiltonian(cfg.hamiltonian(), s, cfg.order);
    const cxmat HZ_full =
        zeeman_hamiltonian(cfg.hamiltonian(), s) + quadrupole_lab(cfg.hamiltonian(), s);
    const cxmat rho0 = rtes(thermal_state(HZ_full, cfg.environment()), s);
    const double T2 = cfg.spectrum_T2();
    const double dt = cfg.fid_t_max_over_T2 * T2 / cfg.fid_samples;
    const std::vector<cxd> sig = fid(rho0, H, {dt, cfg.fid_samples - 1}, T2, s);
    const Spectrum sp = compute_spectrum(sig, dt, cfg.zero_fill);
    const double df = sp.freq_offsets[1] - sp.freq_offsets[0];

    // local maxima above a tenth of the global maximum
    const double amax = *std::max_element(sp.amplitude.begin(), sp.amplitude.end());
    std::vector<double> peaks;
    for (std::size_t k = 1; k + 1 < sp.amplitude.size(); ++k)
        if (sp.amplitude[k] > sp.amplitude[k - 1] && sp.amplitude[k] > sp.amplitude[k + 1] &&
            sp.amplitude[k] > 0.1 * amax)
            peaks.push_back(sp.freq_offsets[k]);
    bool peaks_ok = peaks.size() == 3;
    if (peaks_ok) {
        const double want[3] = {-200e3, 0.0, 200e3};
        for (int k = 0; k < 3; ++k) peaks_ok = peaks_ok && std::abs(peaks[k] - want[k]) <= df;
    }

    // absorption lineshape of the central peak: -Re S (the fid starts on -x)
    std::vector<double> absorb(sp.amplitude.size());
    for (std::size_t k = 0; k < absorb.size(); ++k)
        absorb[k] = -sp.amplitude[k] * std::cos(sp.phase[k]);
    const std::size_t k0 = std::size_t(
        std::max_element(absorb.begin() + absorb.size() / 2 - 8, absorb.begin() + absorb.size() / 2 + 8) -
        absorb.begin());
    const double half = 0.5 * absorb[k0];
    auto cross = [&](int dir) {
        std::size_t k = k0;
        while (absorb[k] > half) k += dir;
        // linear interpolation between the last two samples
        const double f1 = sp.freq_offsets[k - dir], f2 = sp.freq_offsets[k];
        const double a1 = absorb[k - dir], a2 = absorb[k];
        return f1 + (half - a1) * (f2 - f1) / (a2 - a1);
    };
    const double fwhm = cross(+1) - cross(-1);
    const double want_fwhm = 1.0 / (pi * T2);
    const bool fwhm_ok = std::abs(fwhm - want_fwhm) <= df;

    std::ostringstream pk;
    for (double p : peaks) pk << " " << p;
    report("A5", peaks_ok && fwhm_ok,
           fmt("triplet peaks at%s Hz (bin %.0f Hz); absorption FWHM %.0f Hz vs 1/(pi T2) = "
               "%.0f Hz",
               pk.str().c_str(), df, fwhm, want_fwhm));
}

// ---------------------------------------------------------------- A6
void a6() {
    SpinQuantum s(3);
    const EulerGridResult r =
        euler_grid(default_beta_grid(), default_eta_grid(), working_point(), s, 2, 2.0 / nuQ,
                   2000, 4);
    // claim 1: along eta = 1, the deepest minimum sits at the magic angle
    const std::size_t e1 = 20; // eta = 1.0
    int b_best = 0;
    for (int b = 0; b < 91; ++b)
        if (r.xi_min(b, e1) < r.xi_min(b_best, e1)) b_best = b;
    const bool claim1 = std::abs(double(b_best) - 54.74) <= 1.0;
    // claim 2: along beta = 60 deg, the deepest minimum sits at eta = 0.80
    const std::size_t b60 = 60;
    int e_best = 0;
    for (int e = 0; e < 21; ++e)
        if (r.xi_min(b60, e) < r.xi_min(b60, e_best)) e_best = e;
    const double eta_best = e_best / 20.0;
    const bool claim2 = std::abs(eta_best - 0.80) <= 0.05;
    report("A6", claim1 && claim2,
           fmt("eta=1 column argmin beta = %d deg (want 54.74 +- 1); beta=60 row argmin eta = "
               "%.2f (want 0.80 +- 0.05); min-xi surface is flat at 1/sqrt(3) to ~1e-6 at this "
               "working point, so the argmins are tie artifacts",
               b_best, eta_best));
}

// ---------------------------------------------------------------- A7
void a7() {
    SpinQuantum s(3);
    const HamiltonianSpec quad = working_point();
    // limits, computed directly
    const FidelityMapResult lim =
        fidelity_map(quad, s, 11.26e6, {7.0, 20.0}, {1e-5, 1e6}, false, 1);
    const double f_hot = lim.F_full(1, 0);
    const double f_cold = lim.F_full(0, 1);
    const bool hot_ok = std::abs(f_hot - 0.5) < 1e-6;
    const bool cold_ok = f_cold > 0.99;

    // full map: monotone in B along every fixed-T row, both conventions
    const FidelityMapResult map =
        fidelity_map(quad, s, 11.26e6, default_B_grid(), default_T_grid(), false, 4);
    bool mono = true;
    for (int ti = 0; ti < map.F_full.rows() && mono; ++ti)
        for (int bi = 1; bi < map.F_full.cols() && mono; ++bi)
            mono = map.F_full(ti, bi) >= map.F_full(ti, bi - 1) - 1e-12 &&
                   map.F_dev(ti, bi) >= map.F_dev(ti, bi - 1) - 1e-12;

    // working point, both conventions
    const FidelityMapResult wp = fidelity_map(quad, s, 11.26e6, {7.0}, {0.1}, false, 1);
    const double f_full = wp.F_full(0, 0), f_dev = wp.F_dev(0, 0);
    const bool wp_ok = std::abs(f_full - 0.65) <= 0.15 && std::abs(f_dev - 0.65) <= 0.15;

    report("A7", hot_ok && cold_ok && mono && wp_ok,
           fmt("F(hot) = %.7f (want 0.5 +- 1e-6); F(20 T, 10 uK) = %.4f (> 0.99); rows "
               "monotone in B: %s; F(7 T, 0.1 K) = %.3f full / %.3f deviation (want 0.65 +- "
               "0.15)",
               f_hot, f_cold, mono ? "yes" : "no", f_full, f_dev));
}

// ---------------------------------------------------------------- A8
void a8() {
    SpinQuantum s(3);
    const double wQ = working_point().omegaQ;
    TraceParams base;
    base.t_max = 2.0 / nuQ;
    base.relax.T1 = 0.8 / wQ;
    base.relax.T2 = 0.4 / wQ;

    const cxmat HZ = zeeman_hamiltonian(working_point(), s);
    const cxmat rho_sts = rtes(thermal_state(HZ + quadrupole_lab(working_point(), s), env_wp), s);
    const cxvec z = css_state(s, {0.5 * pi, pi});
    const cxmat rho_sss = z * z.adjoint();

    auto family_gap = [&](const cxmat& rho0) {
        std::vector<double> xi[2];
        for (int j : {0, 1}) {
            TraceParams p = base;
            p.spec = working_point(double(j));
            p.rho0 = rho0;
            p.rho_eq = thermal_state(quadrupole_lab(p.spec, s), env_wp);
            xi[j] = compute_trace(p, s).xi;
        }
        double d = 0.0;
        for (std::size_t k = 0; k < xi[0].size(); ++k)
            d = std::max(d, std::abs(xi[1][k] - xi[0][k]));
        return d;
    };

    TraceParams p0 = base;
    p0.spec = working_point(0.0);
    p0.rho0 = rho_sts;
    p0.rho_eq = thermal_state(quadrupole_lab(p0.spec, s), env_wp);
    const double xi0 = compute_trace(p0, s).xi.front();

    const double d_sts = family_gap(rho_sts);
    const double d_sss = family_gap(rho_sss);
    const bool ok = xi0 > 1.0 && d_sts < 0.2 * d_sss;
    report("A8", ok,
           fmt("STS xi(0) = %.4f (> 1); eta discrimination max|xi_1 - xi_0|: STS %.6f vs SSS "
               "%.6f, ratio %.4f (< 0.2)",
               xi0, d_sts, d_sss, d_sts / d_sss));
}

// ---------------------------------------------------------------- A9
void a9() {
    const fs::path root = fs::temp_directory_path() / "sqnmr_acceptance_a9";
    fs::remove_all(root);
    auto read = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    };
    RunConfig cfg = parse_config(nlohmann::json::object());
    bool ok = true;
    std::string detail;

    run_subcommand("fidelity-map", cfg, (root / "fm1").string(), 1);
    run_subcommand("fidelity-map", cfg, (root / "fm8").string(), 8);
    const std::string fm1 = read(root / "fm1" / "fidelity_map.csv");
    const std::string fm8 = read(root / "fm8" / "fidelity_map.csv");
    ok = ok && !fm1.empty() && fm1 == fm8;
    detail += fmt("fidelity-map csv 1 vs 8 threads: %s (%s)",
                  fm1 == fm8 ? "identical" : "DIFFER", fnv1a64_hex(fm1).c_str());

    cfg.n_samples = 500;
    run_subcommand("euler-grid", cfg, (root / "eg1").string(), 1);
    run_subcommand("euler-grid", cfg, (root / "eg8").string(), 8);
    const std::string eg1 = read(root / "eg1" / "euler_grid.csv");
    const std::string eg8 = read(root / "eg8" / "euler_grid.csv");
    ok = ok && !eg1.empty() && eg1 == eg8;
    detail += fmt("; euler-grid csv: %s (%s)", eg1 == eg8 ? "identical" : "DIFFER",
                  fnv1a64_hex(eg1).c_str());

    const std::string m1 = read(root / "eg1" / "euler_grid_manifest.json");
    const std::string m8 = read(root / "eg8" / "euler_grid_manifest.json");
    ok = ok && !m1.empty() && m1 == m8;
    detail += fmt("; manifests: %s", m1 == m8 ? "identical" : "DIFFER");
    fs::remove_all(root);
    report("A9", ok, detail);
}

// ---------------------------------------------------------------- A10
void a10() {
    SpinQuantum s(3);
    auto gap_error = [&](double ratio) {
        HamiltonianSpec spec = working_point(0.5, pi / 6.0);
        spec.omegaQ = spec.omega0 / ratio;
        const cxmat HZ = zeeman_hamiltonian(spec, s);
        Eigen::SelfAdjointEigenSolver<cxmat> exact(HZ + quadrupole_lab(spec, s));
        Eigen::SelfAdjointEigenSolver<cxmat> eff(HZ + effective_hamiltonian(spec, s, 2));
        const Eigen::VectorXd we = exact.eigenvalues(), wa = eff.eigenvalues();
        double err = 0.0;
        for (int k = 0; k + 1 < 4; ++k)
            err = std::max(err, std::abs((we(k + 1) - we(k)) - (wa(k + 1) - wa(k))));
        return err;
    };
    const double e100 = gap_error(100.0), e400 = gap_error(400.0);
    const double ratio = e100 / e400;
    // third order residual: error scales as (omegaQ/omega0)^3, ratio 4^3 = 64
    const bool ok = ratio > 32.0 && ratio < 128.0;
    report("A10", ok,
           fmt("transition frequency error %.3f rad/s at omega0/omegaQ = 100 vs %.3f at 400: "
               "ratio %.1f (want within factor 2 of 64)",
               e100, e400, ratio));
}

} // namespace

int main() {
    a1();
    a2();
    a3();
    a4();
    a5();
    a6();
    a7();
    a8();
    a9();
    a10();
    if (g_failed) std::printf("acceptance: FAILURES present\n");
    else std::printf("acceptance: all criteria pass\n");
    return g_failed;
}
