#pragma once

// Numerical verification of the degeneration arrows: parameterized paths
// into each limit, entrywise or ratio error decay, convergence order
// estimation and Richardson extrapolation.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ybnet/checks.hpp"
#include "ybnet/rmatrix.hpp"

namespace ybnet {

enum class LimitMode {
    full,        // compare full matrices
    core,        // compare cores
    core_norm,   // compare cores after dividing each by its (2,3) entry
    ratio,       // max |entrywise ratio - 1| over nonzero target entries
};

struct LimitEdge {
    std::string name;  // "SRC=>DST"
    AlgebraId src;
    AlgebraId dst;
    LimitMode mode;
    std::function<ParamPoint(double)> path;  // eps -> source point
    ParamPoint dst_params;
    std::string description;
};

struct ConvergenceReport {
    std::string edge;
    std::vector<std::pair<double, double>> samples;  // (eps, error)
    double estimated_order = 0.0;
    double extrapolated = 0.0;
    bool monotone = false;
    bool degenerate_order = false;
    bool pass = false;
    std::string details;
};

/// Extrapolate the eps -> 0 error from the last two samples assuming the
/// estimated power-law order. Exact power-law decay extrapolates to ~0;
/// a plateau is returned as-is with the degenerate flag set.
inline std::pair<double, bool> richardson_extrapolate(
    const std::vector<std::pair<double, double>>& samples, double* order_out = nullptr) {
    if (samples.size() < 2) throw domain_error("richardson: need >= 2 samples");
    const auto& [e1, f1] = samples[samples.size() - 2];
    const auto& [e2, f2] = samples[samples.size() - 1];
    if (f2 <= 0.0) {
        if (order_out) *order_out = std::numeric_limits<double>::infinity();
        return {0.0, false};
    }
    const double p = std::log(f1 / f2) / std::log(e1 / e2);
    if (order_out) *order_out = p;
    if (p < 0.05) return {f2, true};
    const double rr = std::pow(e1 / e2, p);
    return {std::abs(f2 * rr - f1) / (rr - 1.0), false};
}

namespace detail {

inline double limit_error(const LimitEdge& e, double eps, const TruncationPolicy& pol,
                          bool force_full = false) {
    const ParamPoint sp = e.path(eps);
    const bool want_full = force_full || (e.mode == LimitMode::full);
    const auto a = eval_r(e.src, sp, pol, want_full ? WithScalar::yes : WithScalar::no);
    const auto b = eval_r(e.dst, e.dst_params, pol, want_full ? WithScalar::yes : WithScalar::no);
    const Mat4 A = want_full ? a.full() : a.core;
    const Mat4 B = want_full ? b.full() : b.core;
    switch (e.mode) {
        case LimitMode::full:
        case LimitMode::core:
            return (A - B).max_abs();
        case LimitMode::core_norm: {
            const cplx na = A(1, 2), nb = B(1, 2);
            if (na == cplx{} || nb == cplx{}) throw domain_error("limit: normalizing entry vanished");
            return (A * (1.0 / na) - B * (1.0 / nb)).max_abs();
        }
        case LimitMode::ratio: {
            double worst = 0.0;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    if (std::abs(B(i, j)) > 1e-12)
                        worst = std::max(worst, std::abs(A(i, j) / B(i, j) - 1.0));
            return worst;
        }
    }
    return 0.0;
}

}  // namespace detail

/// Drive a limit edge along a decreasing epsilon list. Errors at the noise
/// floor (1e-12) count as converged for monotonicity purposes.
inline ConvergenceReport limit_check(const LimitEdge& e, const std::vector<double>& eps_list,
                                     double tol,
                                     const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    if (eps_list.size() < 3) throw domain_error("limit_check: need >= 3 epsilons");
    ConvergenceReport rep;
    rep.edge = e.name;
    for (double eps : eps_list) rep.samples.emplace_back(eps, detail::limit_error(e, eps, pol));
    constexpr double floor = 1e-12;
    rep.monotone = true;
    for (std::size_t i = 0; i + 1 < rep.samples.size(); ++i)
        if (!(rep.samples[i + 1].second < rep.samples[i].second || rep.samples[i + 1].second <= floor))
            rep.monotone = false;
    auto [L, degen] = richardson_extrapolate(rep.samples, &rep.estimated_order);
    rep.extrapolated = L;
    rep.degenerate_order = degen;
    if (rep.samples.back().second <= floor) {
        // converged to the noise floor; order estimates are meaningless there
        rep.extrapolated = rep.samples.back().second;
        rep.degenerate_order = false;
        rep.details = "at noise floor";
    }
    rep.pass = rep.monotone && !rep.degenerate_order && rep.extrapolated <= tol;
    // diagnostic only: whether the full matrices (normalizations included)
    // also approach each other along the loosest part of the path
    if (e.mode != LimitMode::full) {
        try {
            const double f1 = detail::limit_error(e, eps_list[0], pol, true);
            const double f2 = detail::limit_error(e, eps_list[1], pol, true);
            rep.details += (rep.details.empty() ? "" : "; ");
            rep.details += f2 < f1 ? "full matrices converging" : "full matrices not converging";
        } catch (const std::exception&) {
            rep.details += (rep.details.empty() ? "" : "; ");
            rep.details += "full matrices not evaluable on this path";
        }
    }
    return rep;
}

/// The complete arrow inventory of the degeneration network.
inline std::vector<LimitEdge> standard_edges(cplx beta = 0.41, cplx z = 1.31, cplx q = 0.55,
                                             cplx w = 0.37, double r = 5.0, cplx s = 2.3) {
    using A = AlgebraId;
    const double pi_ = std::numbers::pi;
    std::vector<LimitEdge> v;
    auto P = [](auto fill) { ParamPoint pt; fill(pt); return pt; };

    // vertex family
    v.push_back({"Aqp=>UqVertex", A::Aqp, A::UqVertex, LimitMode::full,
                 [=](double e) { return P([&](ParamPoint& t) { t.z = z; t.q = q; t.p = e; }); },
                 P([&](ParamPoint& t) { t.z = z; t.q = q; }), "p -> 0"});
    v.push_back({"Aqp=>DYrV8", A::Aqp, A::DYrV8, LimitMode::core_norm,
                 [=](double e) {
                     const cplx qq = 1.0 - e;
                     return P([&](ParamPoint& t) {
                         t.q = qq;
                         t.z = std::pow(qq, cplx(0, 1) * beta / pi_);
                         t.p = std::pow(qq, 2.0 * r);
                     });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; t.r = r; }),
                 "scaling q -> 1, z = q^{i beta/pi}, p = q^{2r}"});
    v.push_back({"UqVertex=>DY", A::UqVertex, A::DY, LimitMode::core,
                 [=](double e) {
                     const cplx qq = 1.0 - e;
                     return P([&](ParamPoint& t) { t.q = qq; t.z = std::pow(qq, cplx(0, 1) * beta / pi_); });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; }), "scaling q -> 1, z = q^{i beta/pi}"});
    v.push_back({"DYrV8=>DY", A::DYrV8, A::DY, LimitMode::core,
                 [=](double e) { return P([&](ParamPoint& t) { t.beta = beta; t.r = 1.0 / e; }); },
                 P([&](ParamPoint& t) { t.beta = beta; }), "r -> inf"});

    // finite family
    v.push_back({"FiniteUq=>FiniteClassical", A::FiniteUq, A::FiniteClassical, LimitMode::full,
                 [=](double e) { return P([&](ParamPoint& t) { t.q = 1.0 - e; }); }, ParamPoint{},
                 "q -> 1"});
    v.push_back({"FiniteBql=>FiniteUq", A::FiniteBql, A::FiniteUq, LimitMode::full,
                 [=](double e) { return P([&](ParamPoint& t) { t.q = q; t.w = e; }); },
                 P([&](ParamPoint& t) { t.q = q; }), "w -> 0"});
    v.push_back({"FiniteBql=>FiniteUs", A::FiniteBql, A::FiniteUs, LimitMode::full,
                 [=](double e) {
                     const cplx qq = 1.0 - e;
                     return P([&](ParamPoint& t) { t.q = qq; t.w = std::pow(qq, 2.0 * s); });
                 },
                 P([&](ParamPoint& t) { t.s = s; }), "scaling q -> 1, w = q^{2s}"});
    v.push_back({"FiniteUs=>FiniteClassical", A::FiniteUs, A::FiniteClassical, LimitMode::full,
                 [=](double e) { return P([&](ParamPoint& t) { t.s = 1.0 / e; }); }, ParamPoint{},
                 "|s| -> inf"});

    // face family
    v.push_back({"Bqpl=>UqLambda", A::Bqpl, A::UqLambda, LimitMode::full,
                 [=](double e) { return P([&](ParamPoint& t) { t.z = z; t.q = q; t.w = w; t.p = e; }); },
                 P([&](ParamPoint& t) { t.z = z; t.q = q; t.w = w; }), "p -> 0"});
    v.push_back({"Bqpl=>DYrs", A::Bqpl, A::DYrs, LimitMode::core,
                 [=](double e) {
                     const cplx qq = 1.0 - e;
                     return P([&](ParamPoint& t) {
                         t.q = qq;
                         t.z = std::pow(qq, cplx(0, 2) * beta / pi_);
                         t.p = std::pow(qq, 2.0 * r);
                         t.w = std::pow(qq, 2.0 * s);
                     });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; t.r = r; t.s = s; }),
                 "scaling q -> 1, z = q^{2 i beta/pi}, p = q^{2r}, w = q^{2s}"});
    v.push_back({"UqLambda=>UqFace", A::UqLambda, A::UqFace, LimitMode::full,
                 [=](double e) { return P([&](ParamPoint& t) { t.z = z; t.q = q; t.w = e; }); },
                 P([&](ParamPoint& t) { t.z = z; t.q = q; }), "w -> 0"});
    v.push_back({"UqLambda=>DYs", A::UqLambda, A::DYs, LimitMode::core,
                 [=](double e) {
                     const cplx qq = 1.0 - e;
                     return P([&](ParamPoint& t) {
                         t.q = qq;
                         t.z = std::pow(qq, cplx(0, 2) * beta / pi_);
                         t.w = std::pow(qq, 2.0 * s);
                     });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; t.s = s; }),
                 "scaling q -> 1, z = q^{2 i beta/pi}, w = q^{2s}"});
    v.push_back({"DYrs=>DYs", A::DYrs, A::DYs, LimitMode::core,
                 [=](double e) { return P([&](ParamPoint& t) { t.beta = beta; t.r = 1.0 / e; t.s = s; }); },
                 P([&](ParamPoint& t) { t.beta = beta; t.s = s; }), "r -> inf"});
    v.push_back({"DYrs=>DYrsMinusInf", A::DYrs, A::DYrsMinusInf, LimitMode::ratio,
                 [=](double e) {
                     const double tt = std::round(1.0 / e);
                     return P([&](ParamPoint& t) { t.beta = beta; t.r = r; t.s = s - tt * r; });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; t.r = r; t.s = s; }),
                 "s << 0 keeping the oscillation: s = s0 - r/eps"});
    v.push_back({"DYrs=>DYrF", A::DYrs, A::DYrF, LimitMode::core,
                 [=](double e) {
                     return P([&](ParamPoint& t) { t.beta = beta; t.r = r; t.s = s + cplx(0, 1) / e; });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; t.r = r; }), "s -> i inf"});
    v.push_back({"DYrsMinusInf=>DYs", A::DYrsMinusInf, A::DYs, LimitMode::core,
                 [=](double e) { return P([&](ParamPoint& t) { t.beta = beta; t.r = 1.0 / e; t.s = s; }); },
                 P([&](ParamPoint& t) { t.beta = beta; t.s = s; }), "r -> inf"});
    v.push_back({"DYrF=>DY", A::DYrF, A::DY, LimitMode::core,
                 [=](double e) { return P([&](ParamPoint& t) { t.beta = beta; t.r = 1.0 / e; }); },
                 P([&](ParamPoint& t) { t.beta = beta; }), "r -> inf"});
    v.push_back({"DYs=>DY", A::DYs, A::DY, LimitMode::core,
                 [=](double e) { return P([&](ParamPoint& t) { t.beta = beta; t.s = 1.0 / e; }); },
                 P([&](ParamPoint& t) { t.beta = beta; }), "|s| -> inf"});
    v.push_back({"UqFace=>DY", A::UqFace, A::DY, LimitMode::core,
                 [=](double e) {
                     const cplx qq = 1.0 - e;
                     return P([&](ParamPoint& t) { t.q = qq; t.z = std::pow(qq, cplx(0, 2) * beta / pi_); });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; }), "scaling q -> 1, z = q^{2 i beta/pi}"});
    v.push_back({"Bqpl=>UqFace", A::Bqpl, A::UqFace, LimitMode::full,
                 [=](double e) {
                     return P([&](ParamPoint& t) { t.z = z; t.q = q; t.p = e * e; t.w = e; });
                 },
                 P([&](ParamPoint& t) { t.z = z; t.q = q; }),
                 "combined p, w -> 0 (p = eps^2, w = eps keeps p/w off the theta pole)"});
    v.push_back({"DYrs=>DY", A::DYrs, A::DY, LimitMode::core,
                 [=](double e) {
                     return P([&](ParamPoint& t) { t.beta = beta; t.r = 1.0 / e; t.s = cplx(0, 1) / e; });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; }), "combined r -> inf, s -> i inf"});

    // the two combined paths around the face square, both ending at DYs
    v.push_back({"Bqpl=>DYs(viaUqLambda)", A::Bqpl, A::DYs, LimitMode::core,
                 [=](double e) {
                     const cplx qq = 1.0 - e;
                     return P([&](ParamPoint& t) {
                         t.q = qq;
                         t.z = std::pow(qq, cplx(0, 2) * beta / pi_);
                         t.p = e * e;
                         t.w = std::pow(qq, 2.0 * s);
                     });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; t.s = s; }),
                 "square path through the non-elliptic limit"});
    v.push_back({"Bqpl=>DYs(viaDYrs)", A::Bqpl, A::DYs, LimitMode::core,
                 [=](double e) {
                     const cplx qq = 1.0 - e;
                     return P([&](ParamPoint& t) {
                         t.q = qq;
                         t.z = std::pow(qq, cplx(0, 2) * beta / pi_);
                         t.p = std::pow(qq, 2.0 / e);
                         t.w = std::pow(qq, 2.0 * s);
                     });
                 },
                 P([&](ParamPoint& t) { t.beta = beta; t.s = s; }),
                 "square path through the deformed double Yangian"});
    return v;
}

}  // namespace ybnet
