#include "sqnmr/hamiltonians.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "sqnmr/constants.hpp"

namespace sqnmr {

double HamiltonianSpec::nuQ() const { return 3.0 * omegaQ / (2.0 * pi); }

void HamiltonianSpec::validate() const {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("HamiltonianSpec: eta outside [0, 1]");
    if (!(omegaQ >= 0.0)) throw std::invalid_argument("HamiltonianSpec: omegaQ must be >= 0");
    if (!(omega0 >= 0.0)) throw std::invalid_argument("HamiltonianSpec: omega0 must be >= 0");
}

cxmat zeeman_hamiltonian(const HamiltonianSpec& spec, SpinQuantum s) {
    spec.validate();
    return -spec.omega0 * op_iz(s);
}

cxmat quadrupole_pas(const HamiltonianSpec& spec, SpinQuantum s) {
    spec.validate();
    const SpinOperators op = make_operators(s);
    const double I = s.value();
    const cxmat axial =
        3.0 * op.iz * op.iz - I * (I + 1) * cxmat::Identity(s.dim(), s.dim());
    const cxmat transverse = op.ix * op.ix - op.iy * op.iy;
    return 0.5 * spec.omegaQ * (axial + spec.eta * transverse);
}

cxmat euler_rotate(const cxmat& H_pas, SpinQuantum s, double alpha, double beta, double gamma) {
    if ((H_pas - H_pas.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + H_pas.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("euler_rotate: input not hermitian");
    const cxmat R = euler_rotation(s, alpha, beta, gamma);
    return R * H_pas * R.adjoint();
}

cxmat quadrupole_lab(const HamiltonianSpec& spec, SpinQuantum s) {
    // identity rotation stays exact: the aligned case is the workhorse
    if (spec.alphaQ == 0.0 && spec.betaQ == 0.0 && spec.gammaQ == 0.0)
        return quadrupole_pas(spec, s);
    return euler_rotate(quadrupole_pas(spec, s), s, spec.alphaQ, spec.betaQ, spec.gammaQ);
}

cxmat effective_hamiltonian(const HamiltonianSpec& spec, SpinQuantum s, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("effective_hamiltonian: order must be 1 or 2");
    const cxmat H = quadrupole_lab(spec, s);
    const cxmat V0 = q_component(H, s, 0);
    const double nonsecular = (H - V0).cwiseAbs().maxCoeff();
    if (spec.omega0 == 0.0) {
        if (nonsecular > 1e-12 * (1.0 + H.cwiseAbs().maxCoeff()))
            throw std::invalid_argument(
                "effective_hamiltonian: omega0 = 0 with nonsecular content, no rotating frame");
        return V0;
    }
    if (spec.omega0 < 10.0 * spec.omegaQ)
        std::cerr << "warning: omega0 < 10 omegaQ, order-2 average may be inaccurate\n";
    if (order == 1) return V0;
    cxmat corr = cxmat::Zero(s.dim(), s.dim());
    for (int q = 1; q <= s.two(); ++q) {
        const cxmat Vq = q_component(H, s, q);
        const cxmat Vmq = q_component(H, s, -q);
        corr += commutator(Vq, Vmq) / double(q);
    }
    return V0 - corr / spec.omega0;
}

} // namespace sqnmr
