#include "sqnmr/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace sqnmr {

SpinQuantum::SpinQuantum(int two_I) : two_I_(two_I) {
    if (two_I < 1)
        throw std::invalid_argument("SpinQuantum: 2I must be a positive integer, got " +
                                    std::to_string(two_I));
}

cxmat op_iz(SpinQuantum s) {
    cxmat out = cxmat::Zero(s.dim(), s.dim());
    for (int r = 0; r < s.dim(); ++r) out(r, r) = s.m_of(r);
    return out;
}

cxmat op_ip(SpinQuantum s) {
    const double I = s.value();
    cxmat out = cxmat::Zero(s.dim(), s.dim());
    // I+ |m> = sqrt(I(I+1) - m(m+1)) |m+1>, superdiagonal in descending-m basis
    for (int c = 1; c < s.dim(); ++c) {
        const double m = s.m_of(c);
        out(c - 1, c) = std::sqrt(I * (I + 1) - m * (m + 1));
    }
    return out;
}

cxmat op_im(SpinQuantum s) { return op_ip(s).adjoint(); }

cxmat op_ix(SpinQuantum s) {
    const cxmat ip = op_ip(s);
    return 0.5 * (ip + ip.adjoint());
}

cxmat op_iy(SpinQuantum s) {
    const cxmat ip = op_ip(s);
    return cxd(0, -0.5) * (ip - ip.adjoint());
}

SpinOperators make_operators(SpinQuantum s) {
    const cxmat ip = op_ip(s);
    const cxmat im = ip.adjoint();
    return {0.5 * (ip + im), cxd(0, -0.5) * (ip - im), op_iz(s), ip, im};
}

cxmat commutator(const cxmat& a, const cxmat& b) { return a * b - b * a; }

cxmat exp_i_herm(const cxmat& G, double angle) {
    Eigen::SelfAdjointEigenSolver<cxmat> es(G);
    const auto& w = es.eigenvalues();
    const cxmat& V = es.eigenvectors();
    cxvec phases(w.size());
    for (int k = 0; k < w.size(); ++k) phases(k) = std::exp(cxd(0, -angle * w(k)));
    return V * phases.asDiagonal() * V.adjoint();
}

cxmat rotation(SpinQuantum s, double angle, double nx, double ny, double nz) {
    const double n = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (n == 0.0) throw std::invalid_argument("rotation: zero axis");
    const SpinOperators op = make_operators(s);
    const cxmat G = (nx * op.ix + ny * op.iy + nz * op.iz) / n;
    return exp_i_herm(G, angle);
}

cxmat euler_rotation(SpinQuantum s, double alpha, double beta, double gamma) {
    const cxmat iy = op_iy(s), iz = op_iz(s);
    return exp_i_herm(iz, alpha) * exp_i_herm(iy, beta) * exp_i_herm(iz, gamma);
}

cxmat q_component(const cxmat& H, SpinQuantum s, int q) {
    cxmat out = cxmat::Zero(H.rows(), H.cols());
    for (int r = 0; r < H.rows(); ++r)
        for (int c = 0; c < H.cols(); ++c)
            if (static_cast<int>(std::lround(s.m_of(r) - s.m_of(c))) == q) out(r, c) = H(r, c);
    return out;
}

} // namespace sqnmr
