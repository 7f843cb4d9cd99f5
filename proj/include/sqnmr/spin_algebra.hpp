#pragma once

#include <Eigen/Dense>
#include <complex>

namespace sqnmr {

using cxd = std::complex<double>;
using cxmat = Eigen::MatrixXcd;
using cxvec = Eigen::VectorXcd;

// spin quantum number stored as 2I so half-integer spins stay exact
class SpinQuantum {
public:
    explicit SpinQuantum(int two_I);
    int two() const { return two_I_; }
    double value() const { return 0.5 * two_I_; }
    int dim() const { return two_I_ + 1; }
    // basis is m = I, I-1, ..., -I (descending); |I,I> is the first basis vector
    double m_of(int row) const { return value() - row; }

private:
    int two_I_;
};

struct SpinOperators {
    cxmat ix, iy, iz, ip, im;
};

cxmat op_iz(SpinQuantum s);
cxmat op_ip(SpinQuantum s);
cxmat op_im(SpinQuantum s);
cxmat op_ix(SpinQuantum s);
cxmat op_iy(SpinQuantum s);
SpinOperators make_operators(SpinQuantum s);

cxmat commutator(const cxmat& a, const cxmat& b);

// exp(-i * angle * G) for hermitian G, via eigendecomposition
cxmat exp_i_herm(const cxmat& G, double angle);

// active rotation R(theta, n) = exp(-i theta n.I); states transform rho -> R rho R^dag
cxmat rotation(SpinQuantum s, double angle, double nx, double ny, double nz);

// active ZYZ euler rotation operator Rz(alpha) Ry(beta) Rz(gamma)
cxmat euler_rotation(SpinQuantum s, double alpha, double beta, double gamma);

// component of H with [Iz, V_q] = q V_q, i.e. entries with m_row - m_col = q
cxmat q_component(const cxmat& H, SpinQuantum s, int q);

} // namespace sqnmr
