#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ybnet/checks.hpp"
#include "ybnet/twists.hpp"

using namespace ybnet;

namespace {

ParamPoint generic_point() {
    ParamPoint pt;
    pt.q = 0.55;
    pt.p = 0.11;
    pt.z = 1.31;
    pt.w = 0.37;
    pt.beta = 0.41;
    pt.r = 5.0;
    pt.s = 2.3;
    return pt;
}

}  // namespace

TEST_CASE("embed") {
    CHECK((embed(Mat4::identity(), 1, 2) - Mat8::identity()).max_abs() == 0.0);
    // swap on legs (1,3) exchanges the outer indices
    const Mat4 P = leg_swap();
    const Mat8 E = embed(P, 1, 3);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                const int from = 4 * a + 2 * b + c;
                const int to = 4 * c + 2 * b + a;
                CHECK(std::abs(E(to, from) - 1.0) < 1e-15);
            }
    // embed into (2,3) is 1 x M: direct Kronecker oracle
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat4 M;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) M(i, j) = cplx{u(rng), u(rng)};
    Mat8 direct;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            direct(i, j) = (i >> 2) == (j >> 2) ? M(i & 3, j & 3) : 0.0;
    CHECK((embed(M, 2, 3) - direct).max_abs() == 0.0);
    // weight projectors resolve the identity
    CHECK((weight_projector(+1, 1) + weight_projector(-1, 1) - Mat8::identity()).max_abs() == 0.0);
}

TEST_CASE("plain Yang-Baxter") {
    const ParamPoint pt = generic_point();
    CHECK(ybe_check(AlgebraId::FiniteClassical, {}, {}, {}, 1e-15).residual == 0.0);
    CHECK(ybe_check(AlgebraId::UqFace, 0.3, 0.7, pt, 1e-10).pass);
    CHECK(ybe_check(AlgebraId::DYrV8, 0.4, 0.9, pt, 1e-9).pass);
    CHECK(ybe_check(AlgebraId::Aqp, 1.31, 0.74, pt, 1e-9).pass);
}

TEST_CASE("shift convention is selected as one unit") {
    const auto& conv = shift_convention();
    CHECK(conv.delta == 1.0);
    CHECK(conv.delta_finite == 1.0);
}

TEST_CASE("dynamical Yang-Baxter") {
    const ParamPoint pt = generic_point();
    CHECK(dybe_check(AlgebraId::Bqpl, 1.31, 0.74, pt, 1e-9).pass);
    ParamPoint us;
    us.s = 3.7;
    CHECK(dybe_check(AlgebraId::FiniteUs, {}, {}, us, 1e-12).pass);
    // negative control: suppressed shifts leave a visible violation
    CHECK(dybe_check(AlgebraId::DYrs, 0.41, 0.83, pt, 1e-9, {}, true).residual > 1e-3);
    CHECK_THROWS_AS(dybe_check(AlgebraId::DY, 0.4, 0.8, pt, 1e-9), domain_error);
}

TEST_CASE("doubling the shift unit breaks the dynamical identity") {
    const ParamPoint pt = generic_point();
    ShiftConvention doubled{2.0, 1.0};
    CHECK(dybe_check(AlgebraId::Bqpl, 1.31, 0.74, pt, 1e-9, doubled).residual > 1e-3);
}

TEST_CASE("crossing is trivial on the unit matrix") {
    const Mat4 I = Mat4::identity();
    CHECK((transpose_leg2(I).inverse() - transpose_leg2(I.inverse())).max_abs() == 0.0);
}

TEST_CASE("unitarity") {
    CHECK(unitarity_check(AlgebraId::FiniteClassical, {}, 1e-15).residual == 0.0);
    const ParamPoint pt = generic_point();
    CHECK(unitarity_check(AlgebraId::Aqp, pt, 1e-9).residual > 1e-3);
    CHECK(unitarity_check(AlgebraId::UqVertex, pt, 1e-9).residual > 1e-3);
    // twisted image of the unit matrix is unitary by construction
    ParamPoint hp;
    hp.q = 0.55;
    auto tw = [&](cplx x) { return apply_twist(TwistId::H1, Mat4::identity(), x, hp, false); };
    CHECK(unitarity_residual(tw, cplx{1.31, 0.0}, false) < 1e-12);
}

TEST_CASE("crossing symmetry") {
    const ParamPoint pt = generic_point();
    CHECK(crossing_check(AlgebraId::Aqp, pt, 1e-9).pass);
    CHECK(crossing_check(AlgebraId::DYrV8, pt, 1e-9).pass);
    CHECK(crossing_check(AlgebraId::UqVertex, pt, 1e-9).pass);
    CHECK(crossing_check(AlgebraId::UqFace, pt, 1e-9).pass);
    CHECK(crossing_check(AlgebraId::DYrV6, pt, 1e-9).pass);
    CHECK(crossing_check(AlgebraId::DYrF, pt, 1e-9).pass);
    // the dynamical entries do not satisfy this form of the identity
    CHECK_FALSE(crossing_check(AlgebraId::Bqpl, pt, 1e-9).pass);
    CHECK_FALSE(crossing_gated(AlgebraId::Bqpl));
}

TEST_CASE("quasi-periodicity") {
    const ParamPoint pt = generic_point();
    CHECK(quasiperiodicity_check(AlgebraId::Aqp, pt, 1e-9).pass);
    CHECK(quasiperiodicity_check(AlgebraId::DYrV8, pt, 1e-9).pass);
}

TEST_CASE("double application of the nome shift composes") {
    // applying the shifted identity twice reproduces R up to the composed
    // conjugation: R(b - 2 i pi r) = C R(b) C^{-1} with C = (sigma1 x 1)^{-2}-frame
    const ParamPoint pt = generic_point();
    const cplx b = pt.Beta();
    const cplx r = pt.Rr();
    auto at = [&](cplx x) {
        ParamPoint p2 = pt;
        p2.beta = x;
        return eval_r(AlgebraId::DYrV8, p2).full();
    };
    const Mat4 S = kron(pauli(1), pauli(0));
    // one application: R(b - i pi r) = S^{-1} swap(R(-b))^{-1} S
    // two applications: R(b - 2 i pi r) = S^{-1} swap( S^{-1} swap(R(b))^{-1} S )^{-1} S
    const Mat4 inner = S.inverse() * swap_legs(at(b)).inverse() * S;
    const Mat4 expect = S.inverse() * swap_legs(inner).inverse() * S;
    const Mat4 lhs = at(b - cplx(0, 2.0 * std::numbers::pi) * r);
    CHECK((lhs - expect).max_abs() < 1e-9);
}

TEST_CASE("scalar insensitivity of the Yang-Baxter residual") {
    const ParamPoint pt = generic_point();
    // core residual and full residual both vanish when the scalar is regular
    auto full_at = [&](cplx x) {
        ParamPoint p2 = pt;
        p2.z = x;
        return eval_r(AlgebraId::UqFace, p2).full();
    };
    const Mat8 F = embed(full_at(0.3), 1, 2) * embed(full_at(0.21), 1, 3) * embed(full_at(0.7), 2, 3) -
                   embed(full_at(0.7), 2, 3) * embed(full_at(0.21), 1, 3) * embed(full_at(0.3), 1, 2);
    const double full_resid = F.max_abs();
    const double core_resid = ybe_check(AlgebraId::UqFace, 0.3, 0.7, pt, 1e-12).residual;
    CHECK(full_resid < 1e-12);
    CHECK(core_resid < 1e-12);
}
