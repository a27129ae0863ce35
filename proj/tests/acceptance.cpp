// Acceptance suite: every gate below must hold at its stated tolerance.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ybnet/finite.hpp"
#include "ybnet/network.hpp"
#include "ybnet/report.hpp"
#include "ybnet/suite.hpp"

using namespace ybnet;

namespace {

int failures = 0;

void line(int idx, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s  %2d %s (%s)\n", ok ? "PASS" : "FAIL", idx, what.c_str(), detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

constexpr std::uint64_t kSeed = 20260801;
constexpr int kPoints = 20;

void criterion_ybe() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int count = 0;
    for (AlgebraId id : suites::ybe_roster()) {
        PointSampler smp(kSeed ^ std::hash<std::string>{}(algebra_name(id)));
        for (int i = 0; i < kPoints; ++i) {
            ParamPoint pt = smp.sample(required_params(id));
            const cplx x1 = is_additive(id) ? smp.beta() : smp.spectral_z();
            const cplx x2 = is_additive(id) ? smp.beta() : smp.spectral_z();
            worst = std::max(worst, ybe_check(id, x1, x2, pt, 1e-9).residual);
            ++count;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line(1, "Yang-Baxter for the 9 non-dynamical entries", worst < 1e-9 && secs < 60.0,
         std::to_string(count) + " checks, max residual " + fmt(worst) + ", " + fmt(secs) + " s");
}

void criterion_dybe() {
    const auto& conv = shift_convention();
    const std::vector<AlgebraId> affine = {AlgebraId::Bqpl,         AlgebraId::UqLambda,
                                           AlgebraId::DYrs,         AlgebraId::DYs,
                                           AlgebraId::DYrsMinusInf, AlgebraId::UqLambdaGamma};
    double worst = 0.0;
    double control_min = 1e300;
    for (AlgebraId id : affine) {
        PointSampler smp(kSeed ^ std::hash<std::string>{}(algebra_name(id)));
        for (int i = 0; i < kPoints; ++i) {
            ParamPoint pt = smp.sample(required_params(id));
            if (pt.s) pt.s = smp.dybe_s();
            if (pt.r) pt.r = smp.dybe_r();
            const auto [x1, x2] = smp.spectral_pair(is_additive(id));
            worst = std::max(worst, dybe_check(id, x1, x2, pt, 1e-9, conv).residual);
            control_min =
                std::min(control_min, dybe_check(id, x1, x2, pt, 1e-9, conv, true).residual);
        }
    }
    line(2, "dynamical Yang-Baxter for the 6 dynamical entries",
         worst < 1e-9 && control_min > 1e-3,
         "delta=" + std::to_string(conv.delta) + ", max residual " + fmt(worst) +
             ", weakest suppressed-shift control " + fmt(control_min));
}

void criterion_twists() {
    double worst_edge = 0.0;
    for (const TwistEdge& e : network()) {
        if (e.kind == TwistKind::homothetical) continue;
        PointSampler smp(kSeed ^ std::hash<std::string>{}(e.name()));
        for (int i = 0; i < kPoints; ++i)
            worst_edge =
                std::max(worst_edge, check_twist_edge(e, sample_edge_point(e, smp), 1e-8).residual);
    }
    double worst_comp = 0.0;
    for (const CompositionIdentity& ci : composition_identities()) {
        PointSampler smp(kSeed ^ std::hash<std::string>{}(ci.name));
        ParamPoint pt;
        pt.q = smp.q_real();
        pt.p = smp.p_small();
        pt.z = smp.spectral_z();
        pt.w = smp.dynamical_w();
        pt.beta = smp.beta();
        pt.r = smp.r_real();
        pt.s = smp.dynamical_s();
        const double zmax = std::max(std::abs(*pt.z), 1.0 / std::abs(*pt.z));
        const double cap = 0.7 * std::abs(*pt.q) * std::abs(*pt.q) / zmax;
        if (std::abs(*pt.p) > cap) pt.p = cap;
        worst_comp = std::max(worst_comp, check_composition(ci, pt, 1e-10).residual);
    }
    line(3, "twist network and the 11 composition identities",
         worst_edge < 1e-8 && worst_comp < 1e-10,
         "max edge residual " + fmt(worst_edge) + ", max composition residual " + fmt(worst_comp));
}

void criterion_homothety() {
    double worst = 0.0;
    for (const TwistEdge& e : network()) {
        if (e.kind != TwistKind::homothetical || !e.gated) continue;
        PointSampler smp(kSeed ^ std::hash<std::string>{}(e.name()));
        for (int i = 0; i < kPoints; ++i)
            worst = std::max(worst, check_twist_edge(e, sample_edge_point(e, smp), 1e-8).residual);
    }
    // unitarity of the twisted images vs failure of the crossing-symmetric entries
    PointSampler smp(kSeed ^ 0x77ULL);
    double worst_unit = 0.0;
    double fail_floor = 1e300;
    for (int i = 0; i < kPoints; ++i) {
        ParamPoint hp;
        hp.q = smp.q_real();
        hp.p = smp.p_small();
        const cplx z = smp.spectral_z();
        const cplx b = smp.beta();
        auto h1 = [&](cplx x) { return apply_twist(TwistId::H1, Mat4::identity(), x, hp, false); };
        auto h2 = [&](cplx x) { return apply_twist(TwistId::H2, Mat4::identity(), x, hp, false); };
        auto h3 = [&](cplx x) { return apply_twist(TwistId::H3, Mat4::identity(), x, hp, false); };
        worst_unit = std::max({worst_unit, unitarity_residual(h1, z, false),
                               unitarity_residual(h2, z, false), unitarity_residual(h3, b, true)});
    }
    for (AlgebraId id : {AlgebraId::Aqp, AlgebraId::Bqpl, AlgebraId::UqVertex}) {
        for (int i = 0; i < 5; ++i) {
            double worst_here = 0.0;
            for (int k = 0; k < 3; ++k)
                worst_here = std::max(
                    worst_here, unitarity_check(id, smp.sample(required_params(id)), 1e-9).residual);
            fail_floor = std::min(fail_floor, worst_here);
        }
    }
    line(4, "homothetical edges, unitary images, non-unitary entries",
         worst < 1e-8 && worst_unit < 1e-9 && fail_floor > 1e-3,
         "max ratio deviation " + fmt(worst) + ", max image-unitarity residual " + fmt(worst_unit) +
             ", weakest expected failure " + fmt(fail_floor));
}

void criterion_structural() {
    double worst_qp = 0.0, worst_cr = 0.0, worst_eps = 0.0;
    for (AlgebraId id : {AlgebraId::Aqp, AlgebraId::DYrV8}) {
        PointSampler smp(kSeed ^ std::hash<std::string>{}("qp" + algebra_name(id)));
        for (int i = 0; i < kPoints; ++i)
            worst_qp = std::max(
                worst_qp, quasiperiodicity_check(id, smp.sample(required_params(id)), 1e-9).residual);
    }
    for (AlgebraId id : {AlgebraId::Aqp, AlgebraId::UqVertex, AlgebraId::UqFace, AlgebraId::DYrV6,
                         AlgebraId::DYrV8, AlgebraId::DYrF}) {
        PointSampler smp(kSeed ^ std::hash<std::string>{}("cr" + algebra_name(id)));
        for (int i = 0; i < kPoints; ++i)
            worst_cr = std::max(worst_cr,
                                crossing_check(id, smp.sample(required_params(id)), 1e-9).residual);
    }
    PointSampler smp(kSeed ^ 0x33ULL);
    for (int i = 0; i < kPoints; ++i) {
        const cplx z = smp.spectral_z();
        const double q = smp.q_real();
        const cplx b = smp.beta();
        const double r = smp.r_real();
        ParamPoint p1;
        p1.q = q;
        p1.r = r;
        p1.s = 1.0;
        const Mat4 r1 = apply_twist(TwistId::H1, Mat4::identity(), z, p1, false);
        const Mat4 r3 = apply_twist(TwistId::H3, Mat4::identity(), b, p1, false);
        const Mat4 r4 = apply_twist(TwistId::H4, Mat4::identity(), b, p1, false);
        for (double eps : {0.5, 2.0}) {
            ParamPoint p2 = p1;
            p2.s = eps;
            worst_eps = std::max(
                {worst_eps, (apply_twist(TwistId::H1, Mat4::identity(), z, p2, false) - r1).max_abs(),
                 (apply_twist(TwistId::H3, Mat4::identity(), b, p2, false) - r3).max_abs(),
                 (apply_twist(TwistId::H4, Mat4::identity(), b, p2, false) - r4).max_abs()});
        }
    }
    line(5, "quasi-periodicity, crossing, twist-parameter independence",
         worst_qp < 1e-9 && worst_cr < 1e-9 && worst_eps < 1e-9,
         "quasi-periodicity " + fmt(worst_qp) + ", crossing " + fmt(worst_cr) +
             ", eps-independence " + fmt(worst_eps));
}

void criterion_sklyanin() {
    double worst_j = 0.0, worst_z = 0.0, worst_j23 = 0.0;
    PointSampler smp(kSeed ^ 0x88ULL);
    for (double r : {3.0, 5.0, 10.0}) {
        ParamPoint pt;
        pt.beta = smp.beta();
        pt.r = r;
        const auto J = structure_constants(
            pauli_decompose(eval_r(AlgebraId::DYrV8, pt, {}, WithScalar::no).core));
        const double t2 = std::pow(std::tan(std::numbers::pi / (2.0 * r)), 2.0);
        worst_j = std::max({worst_j, std::abs(J.j12 - t2), std::abs(J.j31 + t2)});
        worst_j23 = std::max(worst_j23, std::abs(J.j23));
        ParamPoint zp;
        zp.r = r;
        worst_z = std::max(worst_z, z_independence_check(AlgebraId::DYrV8,
                                                         {smp.beta(), smp.beta(), smp.beta()}, zp,
                                                         1e-9)
                                        .residual);
    }
    ParamPoint dy;
    dy.beta = smp.beta();
    const auto J0 =
        structure_constants(pauli_decompose(eval_r(AlgebraId::DY, dy, {}, WithScalar::no).core));
    const double dyj = std::abs(J0.j12) + std::abs(J0.j23) + std::abs(J0.j31);
    line(6, "factorized structure constants",
         worst_j < 1e-10 && worst_j23 < 1e-12 && worst_z < 1e-9 && dyj < 1e-13,
         "tan^2 pattern " + fmt(worst_j) + ", |J23| " + fmt(worst_j23) + ", spectral independence " +
             fmt(worst_z) + ", rational case " + fmt(dyj));
}

void criterion_limits() {
    const std::vector<double> eps = {1e-1, 1e-2, 1e-3};
    bool all = true;
    double worst = 0.0;
    std::string bad;
    double square_a = 0.0, square_b = 0.0;
    for (const LimitEdge& e : standard_edges()) {
        const auto rep = limit_check(e, eps, 1e-6);
        if (!rep.pass) {
            all = false;
            bad += (bad.empty() ? "" : ", ") + e.name;
        }
        worst = std::max(worst, rep.extrapolated);
        if (e.name == "Bqpl=>DYs(viaUqLambda)") square_a = rep.extrapolated;
        if (e.name == "Bqpl=>DYs(viaDYrs)") square_b = rep.extrapolated;
    }
    const bool square_ok = square_a + square_b < 1e-6;
    line(7, "limit arrows decrease monotonically and extrapolate below 1e-6",
         all && square_ok,
         all ? ("worst extrapolated " + fmt(worst) + ", square corner gap <= " +
                fmt(square_a + square_b))
             : ("failing: " + bad));
}

void criterion_finite() {
    const auto& conv = shift_convention();
    PointSampler smp(kSeed ^ 0x99ULL);
    ParamPoint pq;
    pq.q = smp.q_real();
    pq.w = smp.dynamical_w();
    const double d_fi = (universal_twist_eval(UniversalKind::q_case, pq) -
                         eval_twist(TwistId::Fi, {}, pq).full())
                            .max_abs();
    ParamPoint ps;
    ps.s = smp.dynamical_s();
    const double d_fii = (universal_twist_eval(UniversalKind::classical_case, ps) -
                          eval_twist(TwistId::Fii, {}, ps).full())
                             .max_abs();
    double worst_cocycle = 0.0, control = 1e300;
    for (int i = 0; i < 10; ++i) {
        ParamPoint pt;
        pt.s = smp.dynamical_s();
        worst_cocycle = std::max(
            worst_cocycle,
            shifted_cocycle_check(UniversalKind::classical_case, pt, 1e-12, conv.delta_finite)
                .residual);
        control = std::min(
            control, shifted_cocycle_check(UniversalKind::classical_case, pt, 1e-12,
                                           conv.delta_finite, true)
                         .residual);
    }
    // q -> 1 scaling of the q-case series approaches the classical one
    ParamPoint cs;
    cs.s = 2.6;
    const Mat4 Fc = universal_twist_eval(UniversalKind::classical_case, cs);
    double prev = 1e9;
    bool monotone = true;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        ParamPoint pt;
        pt.q = 1.0 - eps;
        pt.w = std::pow(cplx(1.0 - eps), 2.0 * 2.6);
        const double err = (universal_twist_eval(UniversalKind::q_case, pt) - Fc).max_abs();
        if (err >= prev) monotone = false;
        prev = err;
    }
    line(8, "finite universal twists and the shifted cocycle",
         d_fi < 1e-12 && d_fii < 1e-12 && worst_cocycle < 1e-12 && control > 1e-3 && monotone,
         "series vs closed form " + fmt(std::max(d_fi, d_fii)) + ", cocycle " + fmt(worst_cocycle) +
             ", control " + fmt(control) + ", scaling gap " + fmt(prev));
}

void criterion_specfun() {
    SuiteConfig cfg;
    cfg.suites = {"specfun"};
    cfg.points = 50;
    cfg.seed = kSeed;
    RunReport rep;
    run_verify(cfg, rep);
    line(9, "special-function identities at 50 seeded points", rep.fail == 0,
         std::to_string(rep.pass) + " checks pass, " + std::to_string(rep.fail) + " fail");
}

void criterion_determinism() {
    SuiteConfig cfg;
    cfg.points = 2;
    cfg.seed = 123;
    cfg.jobs = 4;
    RunReport a, b;
    run_verify(cfg, a);
    run_verify(cfg, b);
    const std::string pa = a.payload(shift_convention()).dump();
    const std::string pb = b.payload(shift_convention()).dump();
    line(10, "identical config and seed give byte-identical reports", pa == pb,
         std::to_string(pa.size()) + " bytes");
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    criterion_ybe();
    criterion_dybe();
    criterion_twists();
    criterion_homothety();
    criterion_structural();
    criterion_sklyanin();
    criterion_limits();
    criterion_finite();
    criterion_specfun();
    criterion_determinism();
    std::printf("%s\n", failures == 0 ? "all criteria pass" : "criteria FAILED");
    return failures == 0 ? 0 : 1;
}
