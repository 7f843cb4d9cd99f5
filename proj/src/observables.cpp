#include "sqnmr/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "sqnmr/constants.hpp"
#include "sqnmr/errors.hpp"

namespace sqnmr {

namespace {

struct PlaneMoments {
    double ex, ey, ez; // mean spin
    double A, B, C;    // perpendicular-plane second moments
};

double expval(const cxmat& rho, const cxmat& O) { return std::real((rho * O).trace()); }

PlaneMoments plane_moments(const cxmat& rho, SpinQuantum s) {
    const SpinOperators op = make_operators(s);
    PlaneMoments pm;
    pm.ex = expval(rho, op.ix);
    pm.ey = expval(rho, op.iy);
    pm.ez = expval(rho, op.iz);
    const cxmat yy = op.iy * op.iy, zz = op.iz * op.iz;
    pm.A = expval(rho, yy - zz);
    pm.B = expval(rho, op.iy * op.iz + op.iz * op.iy);
    pm.C = expval(rho, yy + zz);
    return pm;
}

void check_msv(const PlaneMoments& pm, SpinQuantum s) {
    const double tol = 1e-6 * s.value();
    if (std::abs(pm.ey) >= tol)
        throw precondition_error("mean spin not along x: |<Iy>| = " + std::to_string(pm.ey));
    if (std::abs(pm.ez) >= tol)
        throw precondition_error("mean spin not along x: |<Iz>| = " + std::to_string(pm.ez));
    if (pm.ex == 0.0) throw precondition_error("mean spin vanishes: <Ix> = 0");
}

} // namespace

double squeezing_parameter(const cxmat& rho, SpinQuantum s) {
    const PlaneMoments pm = plane_moments(rho, s);
    check_msv(pm, s);
    const double v = (pm.C - std::hypot(pm.A, pm.B)) / s.value();
    return std::sqrt(std::max(v, 0.0));
}

double squeezing_bruteforce(const cxmat& rho, SpinQuantum s) {
    const PlaneMoments pm = plane_moments(rho, s);
    check_msv(pm, s);
    const SpinOperators op = make_operators(s);
    const auto var_at = [&](double phi) {
        const cxmat perp = std::cos(phi) * op.iy + std::sin(phi) * op.iz;
        const double mean = expval(rho, perp);
        return expval(rho, perp * perp) - mean * mean;
    };
    const int n = 721;
    int best = 0;
    double vbest = var_at(0.0);
    for (int k = 1; k < n; ++k) {
        const double v = var_at(pi * k / n);
        if (v < vbest) { vbest = v; best = k; }
    }
    // golden-section refinement on the bracketing interval
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = pi * (best - 1) / n, b = pi * (best + 1) / n;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = var_at(x1), f2 = var_at(x2);
    while (b - a > 1e-12) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = var_at(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = var_at(x2);
        }
    }
    const double vmin = std::min({vbest, f1, f2});
    return std::sqrt(std::max(2.0 * vmin / s.value(), 0.0));
}

SqueezingTrace squeezing_trace(const Trajectory& traj, SpinQuantum s) {
    SqueezingTrace out;
    out.times = traj.times;
    out.xi.reserve(traj.states.size());
    out.msv.reserve(traj.states.size());
    out.abc.reserve(traj.states.size());
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        const PlaneMoments pm = plane_moments(traj.states[k], s);
        try {
            check_msv(pm, s);
        } catch (const precondition_error& e) {
            throw precondition_error("squeezing_trace at time index " + std::to_string(k) + ": " +
                                     e.what());
        }
        const double v = (pm.C - std::hypot(pm.A, pm.B)) / s.value();
        out.xi.push_back(std::sqrt(std::max(v, 0.0)));
        out.msv.push_back({pm.ex, pm.ey, pm.ez});
        out.abc.push_back({pm.A, pm.B, pm.C});
    }
    return out;
}

cxmat realign_to_minus_x(const cxmat& rho, SpinQuantum s) {
    const SpinOperators op = make_operators(s);
    const double ex = expval(rho, op.ix), ey = expval(rho, op.iy);
    const double phi = std::atan2(ey, ex);
    const cxmat R = exp_i_herm(op.iz, pi - phi);
    return R * rho * R.adjoint();
}

void fft_pow2(std::vector<cxd>& a) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * pi / double(len);
        const cxd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cxd w(1.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cxd u = a[i + k], v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

Spectrum compute_spectrum(const std::vector<cxd>& signal, double dt, int zero_fill_factor) {
    if (!(dt > 0.0)) throw std::invalid_argument("compute_spectrum: dt must be > 0");
    if (zero_fill_factor < 1)
        throw std::invalid_argument("compute_spectrum: zero_fill_factor must be >= 1");
    std::size_t n = 1;
    while (n < signal.size() * static_cast<std::size_t>(zero_fill_factor)) n <<= 1;
    std::vector<cxd> buf(n, cxd(0.0));
    std::copy(signal.begin(), signal.end(), buf.begin());
    fft_pow2(buf);
    Spectrum sp;
    sp.freq_offsets.resize(n);
    sp.amplitude.resize(n);
    sp.phase.resize(n);
    const double df = 1.0 / (double(n) * dt);
    // fftshift: negative offsets first, ascending through zero
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = (k + n / 2) % n;
        const double f = (double(k) - double(n / 2)) * df;
        sp.freq_offsets[k] = f;
        sp.amplitude[k] = std::abs(buf[src]);
        sp.phase[k] = std::arg(buf[src]);
    }
    return sp;
}

} // namespace sqnmr
