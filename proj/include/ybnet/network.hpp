#pragma once

// The directed network of twist connections between catalog entries, and the
// per-edge verification rule.

#include <optional>
#include <string>
#include <vector>

#include "ybnet/checks.hpp"
#include "ybnet/twists.hpp"

namespace ybnet {

enum class TwistKind { exact, conjectured_exact, rigid, homothetical };

inline std::string kind_name(TwistKind k) {
    switch (k) {
        case TwistKind::exact: return "exact";
        case TwistKind::conjectured_exact: return "conjectured";
        case TwistKind::rigid: return "rigid";
        case TwistKind::homothetical: return "homothetical";
    }
    return "?";
}

struct TwistEdge {
    AlgebraId src;
    AlgebraId dst;
    TwistId twist;
    TwistKind kind;
    /// identification applied to the sampled point to get the other side
    std::optional<ParamMapId> pmap;
    bool map_to_src = false;       // identification produces the source point, not the target
    bool square_spectral = false;  // target evaluated at z^2 (vertex -> face)
    bool compare_core = false;     // compare cores; scalars divergent or unpinned
    bool gated = true;             // gates the acceptance suite

    std::string name() const {
        return algebra_name(src) + "->" + algebra_name(dst) + "/" + twist_name(twist);
    }
};

/// Full edge list of the connection network.
inline const std::vector<TwistEdge>& network() {
    using A = AlgebraId;
    using T = TwistId;
    using K = TwistKind;
    using M = ParamMapId;
    static const std::vector<TwistEdge> edges = {
        // vertex family
        {A::UqVertex, A::Aqp, T::E1, K::exact, {}, false, false, false, true},
        {A::DY, A::DYrV8, T::E2, K::conjectured_exact, {}, false, false, false, true},
        {A::DY, A::DYrV6, T::E3, K::conjectured_exact, {}, false, false, false, true},
        {A::DYrV6, A::DYrV8, T::K, K::rigid, {}, false, false, false, true},
        // vertex <-> face presentation change
        {A::UqVertex, A::UqFace, T::K6, K::exact, {}, false, true, false, true},
        // face family
        {A::UqFace, A::Bqpl, T::F1, K::exact, {}, false, false, false, true},
        {A::UqFace, A::UqLambda, T::F3, K::conjectured_exact, {}, false, false, false, true},
        {A::UqLambda, A::Bqpl, T::F5, K::conjectured_exact, {}, false, false, false, true},
        {A::DY, A::DYs, T::F4, K::conjectured_exact, {}, false, false, false, true},
        {A::DYrV6, A::DYrF, T::K6, K::conjectured_exact, {}, false, false, false, true},
        {A::DYrV8, A::DYrF, T::K8, K::conjectured_exact, {}, false, false, false, true},
        {A::DY, A::DYrF, T::F7, K::conjectured_exact, {}, false, false, false, true},
        {A::DYrF, A::DYrsMinusInf, T::F3, K::conjectured_exact, {}, false, false, false, true},
        {A::DY, A::DYrsMinusInf, T::F10, K::conjectured_exact, {}, false, false, false, true},
        {A::DYs, A::DYrsMinusInf, T::F8, K::conjectured_exact, {}, false, false, false, true},
        {A::DYrsMinusInf, A::DYrs, T::G, K::conjectured_exact, {}, false, false, false, true},
        {A::DYs, A::DYrs, T::F6, K::conjectured_exact, {}, false, false, false, true},
        {A::DY, A::DYrs, T::F2, K::conjectured_exact, {}, false, false, false, true},
        {A::DYrF, A::DYrs, T::F11, K::conjectured_exact, {}, false, false, false, true},
        // Gamma-coefficient presentation of the dynamical trigonometric entry
        {A::UqLambda, A::UqLambdaGamma, T::G, K::conjectured_exact, M::identif, true, false, true, true},
        // pi-presentation connections
        {A::Bqpl, A::AqpPi, T::GPi, K::homothetical, {}, false, false, true, false},
        {A::DYrsMinusInf, A::AqpPiScaled, T::GHbarEta, K::conjectured_exact, {}, false, false, true, true},
        // finite
        {A::FiniteUq, A::FiniteBql, T::Fi, K::exact, {}, false, false, false, true},
        {A::FiniteClassical, A::FiniteUs, T::Fii, K::exact, {}, false, false, false, true},
        // homothetical: unit R-matrix to unitary images
        {A::FiniteClassical, A::UqVertex, T::H1, K::homothetical, {}, false, false, true, true},
        {A::FiniteClassical, A::Aqp, T::H2, K::homothetical, {}, false, false, true, true},
        {A::FiniteClassical, A::DY, T::H3, K::homothetical, {}, false, false, true, true},
        {A::FiniteClassical, A::DYrV6, T::H4, K::homothetical, {}, false, false, true, true},
        // homothetical: inverse scaling
        {A::DY, A::UqVertex, T::E3, K::homothetical, M::identiv, false, false, true, true},
        {A::DYrV8, A::Aqp, T::E4, K::homothetical, M::identiv, false, false, true, true},
        {A::DY, A::UqFace, T::F7, K::homothetical, M::identif2, false, false, true, true},
        {A::DYs, A::UqLambda, T::F8, K::homothetical, M::identif, false, false, true, true},
        {A::DYrs, A::Bqpl, T::F9, K::homothetical, M::identif, false, false, true, true},
        // homothetical: pure parameter identification (identity twist)
        {A::DYrV6, A::UqVertex, T::Id, K::homothetical, M::identiv, false, false, true, false},
        {A::DYrF, A::UqFace, T::Id, K::homothetical, M::identif2, false, false, true, false},
        {A::DYrsMinusInf, A::UqLambda, T::Id, K::homothetical, M::identif, false, false, true, false},
    };
    return edges;
}

/// Parameters a caller must sample for an edge: the sampled side's own set,
/// plus whatever the other side and the twist consume that the
/// identification map does not derive.
inline std::vector<std::string> edge_sample_params(const TwistEdge& e) {
    std::vector<std::string> out = required_params(e.map_to_src ? e.dst : e.src);
    auto add = [&](const std::string& n) {
        for (const auto& x : out)
            if (x == n) return;
        out.push_back(n);
    };
    std::vector<std::string> derived;
    if (e.pmap) {
        derived = {"z", "q"};
        if (*e.pmap == ParamMapId::identif) derived.push_back("w");
        add("beta");
        add("r");
        if (*e.pmap == ParamMapId::identif) add("s");
    }
    if (e.square_spectral) derived.push_back("z");
    const std::vector<std::string> other = required_params(e.map_to_src ? e.src : e.dst);
    for (const auto& n : other) {
        bool is_derived = false;
        for (const auto& d : derived)
            if (d == n) is_derived = true;
        if (!is_derived) add(n);
    }
    return out;
}

namespace detail {

inline std::optional<cplx> twist_argument(const TwistEdge& e, const ParamPoint& src_pt,
                                          const ParamPoint& dst_pt) {
    switch (twist_spectral(e.twist)) {
        case SpectralKind::none: return std::nullopt;
        case SpectralKind::additive: return src_pt.Beta();
        case SpectralKind::multiplicative:
            if (!is_additive(e.src)) return src_pt.Z();
            // additive source, multiplicative twist: the argument comes from
            // the identification map (e^{-beta/r} family)
            if (dst_pt.z) return *dst_pt.z;
            return std::exp(-src_pt.Beta() / src_pt.Rr());
    }
    return std::nullopt;
}

}  // namespace detail

/// Verify one edge at one parameter point. Exact/conjectured/rigid edges are
/// checked on full matrices (cores when flagged); homothetical edges check
/// that the entrywise ratio to the target is constant.
inline CheckReport check_twist_edge(const TwistEdge& e, const ParamPoint& src_pt, double tol,
                                    const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    ParamPoint base = src_pt;
    ParamPoint mapped = e.pmap ? param_map(*e.pmap, base) : base;
    ParamPoint eff_src = e.map_to_src ? mapped : base;
    ParamPoint dst_pt = e.map_to_src ? base : mapped;
    if (e.square_spectral) dst_pt.z = *dst_pt.z * *dst_pt.z;

    // twist parameters: the union of the sampled and mapped coordinates
    ParamPoint tw_pt = mapped;
    if (!tw_pt.beta) tw_pt.beta = base.beta;
    if (!tw_pt.r) tw_pt.r = base.r;
    if (!tw_pt.s) tw_pt.s = base.s;
    // additive-side edges express their twists in (beta, r, s) alone; stray
    // multiplicative coordinates on a shared point would misdirect the
    // parameter-preferring twists
    if (is_additive(e.src) && !e.pmap) {
        tw_pt.z.reset();
        tw_pt.q.reset();
        tw_pt.w.reset();
        tw_pt.p.reset();
    }
    // K6 between the additive deformed Yangians takes e^{-beta/r}
    if (e.twist == TwistId::K6 && is_additive(e.src))
        tw_pt.z = std::exp(-base.Beta() / base.Rr());
    std::optional<cplx> arg = detail::twist_argument(e, eff_src, tw_pt);

    const bool use_full = !e.compare_core && e.kind != TwistKind::homothetical;
    const auto src_val = eval_r(e.src, eff_src, pol, use_full ? WithScalar::yes : WithScalar::no);
    const auto dst_val = eval_r(e.dst, dst_pt, pol, use_full ? WithScalar::yes : WithScalar::no);
    const Mat4 R_src = use_full ? src_val.full() : src_val.core;
    const Mat4 R_dst = use_full ? dst_val.full() : dst_val.core;

    const Mat4 twisted = apply_twist(e.twist, R_src, arg, tw_pt, use_full, pol);

    CheckReport rep;
    if (e.kind == TwistKind::homothetical) {
        auto [c, resid] = homothety_factor(R_dst, twisted);
        rep = CheckReport::make("twist-edge", e.name(), kind_name(e.kind), resid, tol, e.gated);
        rep.details = "scalar=(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) + ")";
    } else {
        const double resid = (twisted - R_dst).max_abs();
        rep = CheckReport::make("twist-edge", e.name(), kind_name(e.kind), resid, tol, e.gated);
    }
    detail::record_point(rep, base);
    return rep;
}

/// The composition identities between twist matrices.
struct CompositionIdentity {
    std::string name;
    TwistId lhs;
    std::vector<CompositionFactor> rhs;
    std::vector<std::string> needs;  // parameters the identity is stated in
};

inline const std::vector<CompositionIdentity>& composition_identities() {
    using T = TwistId;
    static const std::vector<CompositionIdentity> ids = {
        {"E3 = K^-1 E2", T::E3, {{T::K, true}, {T::E2, false}}, {"beta", "r"}},
        {"K8 = K6 K^-1", T::K8, {{T::K6, false}, {T::K, true}}, {"beta", "r"}},
        {"F5 = F1 F3^-1", T::F5, {{T::F1, false}, {T::F3, true}}, {"z", "q", "p", "w"}},
        {"F7 = K8 E2", T::F7, {{T::K8, false}, {T::E2, false}}, {"beta", "r"}},
        {"F10 = F3 F7", T::F10, {{T::F3, false}, {T::F7, false}}, {"beta", "r", "s"}},
        {"F8 = F10 F4^-1", T::F8, {{T::F10, false}, {T::F4, true}}, {"beta", "r", "s"}},
        {"F6 = G F8", T::F6, {{T::G, false}, {T::F8, false}}, {"beta", "r", "s"}},
        {"F2 = G F10", T::F2, {{T::G, false}, {T::F10, false}}, {"beta", "r", "s"}},
        {"F11 = G F3", T::F11, {{T::G, false}, {T::F3, false}}, {"r", "s"}},
        {"F9 = F5 G^-1", T::F9, {{T::F5, false}, {T::G, true}}, {"z", "q", "p", "w", "r", "s"}},
        {"E4 = E1 K^-1", T::E4, {{T::E1, false}, {T::K, true}}, {"z", "q", "p"}},
    };
    return ids;
}

/// Check one composition identity entrywise at a parameter point. The point
/// must carry every parameter any factor needs; the spectral argument is
/// taken in the kind of the left-hand side.
inline CheckReport check_composition(const CompositionIdentity& ci, const ParamPoint& pt, double tol,
                                     const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    // keep only the parameters the identity is stated in
    ParamPoint p2;
    for (const auto& k : ci.needs) {
        if (k == "q") p2.q = pt.q;
        else if (k == "p") p2.p = pt.p;
        else if (k == "z") p2.z = pt.z;
        else if (k == "w") p2.w = pt.w;
        else if (k == "beta") p2.beta = pt.beta;
        else if (k == "r") p2.r = pt.r;
        else if (k == "s") p2.s = pt.s;
    }
    // multiplicative factors inside additive identities (K6 inside the
    // K8-type products) take z = e^{-beta/r}
    if (!p2.z && p2.beta && p2.r) p2.z = std::exp(-p2.Beta() / p2.Rr());
    std::optional<cplx> arg;
    switch (twist_spectral(ci.lhs)) {
        case SpectralKind::none: break;
        case SpectralKind::additive: arg = p2.Beta(); break;
        case SpectralKind::multiplicative: arg = p2.Z(); break;
    }
    const TwistValue lhs = eval_twist(ci.lhs, arg, p2, pol);
    const TwistValue rhs = compose_twists(ci.rhs, p2, pol);
    const double resid = (lhs.full() - rhs.full()).max_abs();
    auto rep = CheckReport::make("composition", ci.name, "twist-algebra", resid, tol);
    detail::record_point(rep, p2);
    return rep;
}

}  // namespace ybnet
