#include <doctest.h>

#include "sqnmr/constants.hpp"
#include "sqnmr/spin_algebra.hpp"
#include "sqnmr/states.hpp"

using namespace sqnmr;

namespace {

double max_abs(const cxmat& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("quantum number bookkeeping") {
    CHECK_THROWS_AS(SpinQuantum(0), std::invalid_argument);
    CHECK_THROWS_AS(SpinQuantum(-2), std::invalid_argument);
    SpinQuantum s(3);
    CHECK(s.two() == 3);
    CHECK(s.value() == doctest::Approx(1.5));
    CHECK(s.dim() == 4);
    // basis is m descending from +I
    CHECK(s.m_of(0) == doctest::Approx(1.5));
    CHECK(s.m_of(3) == doctest::Approx(-1.5));
}

TEST_CASE("ladder operator matrix elements") {
    SpinQuantum s(3);
    const cxmat ip = op_ip(s);
    // <I,m+1| I+ |I,m> = sqrt(I(I+1) - m(m+1)); row 0 = m=3/2
    CHECK(std::abs(ip(0, 1)) == doctest::Approx(std::sqrt(3.0)));
    CHECK(std::abs(ip(1, 2)) == doctest::Approx(2.0));
    CHECK(std::abs(ip(2, 3)) == doctest::Approx(std::sqrt(3.0)));
    CHECK(max_abs(ip - op_im(s).adjoint()) < 1e-15);
}

TEST_CASE("commutation relations and casimir") {
    for (int two_I : {1, 2, 3, 5}) {
        SpinQuantum s(two_I);
        const SpinOperators op = make_operators(s);
        const cxd i(0, 1);
        CHECK(max_abs(commutator(op.ix, op.iy) - i * op.iz) < 1e-12);
        CHECK(max_abs(commutator(op.iy, op.iz) - i * op.ix) < 1e-12);
        CHECK(max_abs(commutator(op.iz, op.ix) - i * op.iy) < 1e-12);
        const double c = s.value() * (s.value() + 1.0);
        const cxmat casimir = op.ix * op.ix + op.iy * op.iy + op.iz * op.iz;
        CHECK(max_abs(casimir - c * cxmat::Identity(s.dim(), s.dim())) < 1e-12);
    }
}

TEST_CASE("rotations") {
    SpinQuantum s(3);
    const SpinOperators op = make_operators(s);

    SUBCASE("pi/2 pulse about y maps the pole onto the -x coherent state") {
        cxvec pole = cxvec::Zero(s.dim());
        pole(0) = 1.0;
        const cxmat R = exp_i_herm(op.iy, -0.5 * pi);
        const cxvec target = css_state(s, {0.5 * pi, pi});
        CHECK((R * pole - target).norm() < 1e-12);
    }

    SUBCASE("axis normalization") {
        const cxmat a = rotation(s, 0.7, 0.0, 0.0, 2.0);
        const cxmat b = exp_i_herm(op.iz, 0.7);
        CHECK(max_abs(a - b) < 1e-13);
        CHECK_THROWS_AS(rotation(s, 0.7, 0.0, 0.0, 0.0), std::invalid_argument);
    }

    SUBCASE("2pi rotation is -1 for half-integer spin, +1 for integer") {
        const cxmat r_half = rotation(SpinQuantum(3), 2.0 * pi, 0.0, 0.0, 1.0);
        CHECK(max_abs(r_half + cxmat::Identity(4, 4)) < 1e-12);
        const cxmat r_int = rotation(SpinQuantum(2), 2.0 * pi, 0.0, 0.0, 1.0);
        CHECK(max_abs(r_int - cxmat::Identity(3, 3)) < 1e-12);
    }

    SUBCASE("euler factorization") {
        const cxmat a = euler_rotation(s, 0.3, 1.1, -0.4);
        const cxmat b =
            exp_i_herm(op.iz, 0.3) * exp_i_herm(op.iy, 1.1) * exp_i_herm(op.iz, -0.4);
        CHECK(max_abs(a - b) < 1e-13);
    }

    SUBCASE("unitarity") {
        const cxmat r = rotation(s, 1.234, 0.3, -0.8, 0.5);
        CHECK(max_abs(r * r.adjoint() - cxmat::Identity(s.dim(), s.dim())) < 1e-13);
    }
}

TEST_CASE("coherence order decomposition") {
    SpinQuantum s(3);
    const SpinOperators op = make_operators(s);
    CHECK(max_abs(q_component(op.iz, s, 0) - op.iz) < 1e-15);
    CHECK(max_abs(q_component(op.ip, s, 1) - op.ip) < 1e-15);
    CHECK(max_abs(q_component(op.ip, s, -1)) < 1e-15);

    // a dense hermitian reassembles from its coherence orders
    cxmat h = cxmat::Random(4, 4);
    h = (h + h.adjoint()).eval();
    cxmat sum = cxmat::Zero(4, 4);
    for (int q = -3; q <= 3; ++q) sum += q_component(h, s, q);
    CHECK(max_abs(sum - h) < 1e-14);
}
