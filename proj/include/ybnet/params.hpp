#pragma once

#include <cmath>
#include <optional>
#include <map>
#include <string>

#include "ybnet/specfun.hpp"

namespace ybnet {

/// Parameter bag shared by every evaluator. Which fields must be present is
/// entry-specific; consistency links like p = q^{2r} or w = q^{2s} are never
/// applied implicitly, only by the explicit identification maps.
struct ParamPoint {
    std::optional<cplx> q;     // deformation parameter
    std::optional<cplx> p;     // elliptic nome
    std::optional<cplx> z;     // multiplicative spectral parameter
    std::optional<cplx> w;     // multiplicative dynamical parameter
    std::optional<cplx> beta;  // additive spectral parameter
    std::optional<cplx> r;     // deformation period
    std::optional<cplx> s;     // additive dynamical parameter

    // Weight-coordinate bookkeeping; never consumed by the evaluators.
    std::optional<cplx> central_charge;
    std::optional<cplx> sprime;
    std::optional<cplx> dcoeff;

    cplx require(const std::optional<cplx>& v, const char* name) const {
        if (!v) throw domain_error(std::string("missing parameter ") + name);
        return *v;
    }
    cplx Q() const { return require(q, "q"); }
    cplx P() const { return require(p, "p"); }
    cplx Z() const { return require(z, "z"); }
    cplx W() const { return require(w, "w"); }
    cplx Beta() const { return require(beta, "beta"); }
    cplx Rr() const { return require(r, "r"); }
    cplx S() const { return require(s, "s"); }

    static ParamPoint from_map(const std::map<std::string, cplx>& kv) {
        ParamPoint p;
        for (const auto& [k, v] : kv) {
            if (k == "q") p.q = v;
            else if (k == "p") p.p = v;
            else if (k == "z") p.z = v;
            else if (k == "w") p.w = v;
            else if (k == "beta") p.beta = v;
            else if (k == "r") p.r = v;
            else if (k == "s") p.s = v;
            else throw domain_error("unknown parameter " + k);
        }
        return p;
    }
};

enum class ParamMapId { identiv, identif, identif2 };

/// Parameter identification maps between additive (beta, r, s) and
/// multiplicative (z, q, w) coordinates:
///   identiv : z = e^{-beta/r},  q = e^{i pi/r}
///   identif : z = e^{-2beta/r}, q = e^{i pi/r}, w = e^{2 i pi s/r}
///   identif2: z = e^{-2beta/r}, q = e^{i pi/r}
inline ParamPoint param_map(ParamMapId id, ParamPoint pt) {
    const cplx b = pt.Beta();
    const cplx r = pt.Rr();
    const cplx ipi = cplx(0.0, std::numbers::pi);
    pt.q = std::exp(ipi / r);
    switch (id) {
        case ParamMapId::identiv:
            pt.z = std::exp(-b / r);
            break;
        case ParamMapId::identif:
            pt.z = std::exp(-2.0 * b / r);
            pt.w = std::exp(2.0 * ipi * pt.S() / r);
            break;
        case ParamMapId::identif2:
            pt.z = std::exp(-2.0 * b / r);
            break;
    }
    return pt;
}

}  // namespace ybnet
