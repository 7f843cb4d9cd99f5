#include "sqnmr/states.hpp"

#include <cmath>
#include <stdexcept>

#include "sqnmr/constants.hpp"
#include "sqnmr/errors.hpp"

namespace sqnmr {

double EnvironmentSpec::omega0() const { return 2.0 * pi * gamma_n * B0; }

static void validate_env(const EnvironmentSpec& env) {
    if (!(env.temperature > 0.0))
        throw std::invalid_argument("EnvironmentSpec: temperature must be > 0");
    if (!(env.B0 >= 0.0)) throw std::invalid_argument("EnvironmentSpec: B0 must be >= 0");
    if (!(env.gamma_n > 0.0)) throw std::invalid_argument("EnvironmentSpec: gamma_n must be > 0");
}

static double binom(int n, int k) {
    double out = 1.0;
    for (int j = 1; j <= k; ++j) out *= double(n - k + j) / double(j);
    return out;
}

cxvec css_state(SpinQuantum s, CSSParams p) {
    if (!(p.theta0 >= 0.0 && p.theta0 <= pi))
        throw std::invalid_argument("CSSParams: theta0 outside [0, pi]");
    if (!(p.phi0 >= 0.0 && p.phi0 < 2.0 * pi))
        throw std::invalid_argument("CSSParams: phi0 outside [0, 2pi)");
    const double I = s.value();
    const double c = std::cos(0.5 * p.theta0), sn = std::sin(0.5 * p.theta0);
    cxvec v(s.dim());
    for (int r = 0; r < s.dim(); ++r) {
        const double m = s.m_of(r);
        const int up = static_cast<int>(std::lround(I + m));   // I+m
        const int dn = static_cast<int>(std::lround(I - m));   // I-m
        v(r) = std::sqrt(binom(s.two(), up)) * std::pow(c, up) * std::pow(sn, dn) *
               std::exp(cxd(0, dn * p.phi0));
    }
    v.normalize();
    return v;
}

cxvec css_unnormalized_exponential(SpinQuantum s, cxd alpha) {
    const cxmat im = op_im(s);
    cxvec term = cxvec::Zero(s.dim());
    term(0) = 1.0; // |I,I>
    cxvec acc = term;
    for (int n = 1; n < s.dim(); ++n) {
        term = (alpha / double(n)) * (im * term);
        acc += term;
    }
    acc.normalize();
    return acc;
}

cxmat thermal_state(const cxmat& H, const EnvironmentSpec& env) {
    validate_env(env);
    Eigen::SelfAdjointEigenSolver<cxmat> es(H);
    const auto& w = es.eigenvalues();
    const cxmat& V = es.eigenvectors();
    // shift by the ground energy so the exponent never overflows at mK scales
    Eigen::VectorXd p(w.size());
    const double wmin = w.minCoeff();
    for (int k = 0; k < w.size(); ++k)
        p(k) = std::exp(-hbar * (w(k) - wmin) / (k_B * env.temperature));
    p /= p.sum();
    return V * p.cast<cxd>().asDiagonal() * V.adjoint();
}

double polarization_factor(const EnvironmentSpec& env) {
    validate_env(env);
    return hbar * env.omega0() / (k_B * env.temperature);
}

cxmat rtes(const cxmat& rho_thermal, SpinQuantum s) {
    // exp(+i (pi/2) Iy): takes the +Iz-polarized deviation onto -Ix
    const cxmat R = exp_i_herm(op_iy(s), -0.5 * pi);
    return R * rho_thermal * R.adjoint();
}

double fidelity(const cxmat& a, const cxmat& b) {
    const double na = std::real((a * a).trace());
    const double nb = std::real((b * b).trace());
    if (na <= 0.0 || nb <= 0.0) throw std::invalid_argument("fidelity: zero-norm argument");
    return std::real((a * b).trace()) / std::sqrt(na * nb);
}

cxmat deviation(const cxmat& rho) {
    return rho - cxmat::Identity(rho.rows(), rho.cols()) / double(rho.rows());
}

HusimiGrid husimi_q(const cxmat& rho, SpinQuantum s, double x_lo, double x_hi, double y_lo,
                    double y_hi, int n_points) {
    if (n_points < 2) throw std::invalid_argument("husimi_q: n_points must be >= 2");
    HusimiGrid g;
    g.x_values.resize(n_points);
    g.y_values.resize(n_points);
    for (int k = 0; k < n_points; ++k) {
        g.x_values[k] = x_lo + (x_hi - x_lo) * k / double(n_points - 1);
        g.y_values[k] = y_lo + (y_hi - y_lo) * k / double(n_points - 1);
    }
    g.q_values.resize(n_points, n_points);
    for (int i = 0; i < n_points; ++i)
        for (int j = 0; j < n_points; ++j) {
            const cxvec v = css_unnormalized_exponential(s, cxd(g.x_values[i], g.y_values[j]));
            g.q_values(i, j) = std::real(v.dot(rho * v)); // v.dot conjugates the left side
        }
    return g;
}

} // namespace sqnmr
