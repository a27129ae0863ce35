#pragma once

// Twist matrices and the twist application rule R^F = F21 R12 F12^{-1}.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ybnet/mat.hpp"
#include "ybnet/params.hpp"
#include "ybnet/rmatrix.hpp"

namespace ybnet {

enum class TwistId {
    E1, E2, E3, E4,
    K, K6, K8,
    F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11,
    G, GPi, GHbarEta,
    H1, H2, H3, H4,
    Fi, Fii,
    Id,
};

inline std::string twist_name(TwistId id) {
    switch (id) {
        case TwistId::E1: return "E1";
        case TwistId::E2: return "E2";
        case TwistId::E3: return "E3";
        case TwistId::E4: return "E4";
        case TwistId::K: return "K";
        case TwistId::K6: return "K6";
        case TwistId::K8: return "K8";
        case TwistId::F1: return "F1";
        case TwistId::F2: return "F2";
        case TwistId::F3: return "F3";
        case TwistId::F4: return "F4";
        case TwistId::F5: return "F5";
        case TwistId::F6: return "F6";
        case TwistId::F7: return "F7";
        case TwistId::F8: return "F8";
        case TwistId::F9: return "F9";
        case TwistId::F10: return "F10";
        case TwistId::F11: return "F11";
        case TwistId::G: return "G";
        case TwistId::GPi: return "GPi";
        case TwistId::GHbarEta: return "GHbarEta";
        case TwistId::H1: return "H1";
        case TwistId::H2: return "H2";
        case TwistId::H3: return "H3";
        case TwistId::H4: return "H4";
        case TwistId::Fi: return "Fi";
        case TwistId::Fii: return "Fii";
        case TwistId::Id: return "Id";
    }
    return "?";
}

inline const std::vector<TwistId>& all_twists() {
    static const std::vector<TwistId> v = {
        TwistId::E1, TwistId::E2, TwistId::E3, TwistId::E4, TwistId::K,  TwistId::K6,
        TwistId::K8, TwistId::F1, TwistId::F2, TwistId::F3, TwistId::F4, TwistId::F5,
        TwistId::F6, TwistId::F7, TwistId::F8, TwistId::F9, TwistId::F10, TwistId::F11,
        TwistId::G,  TwistId::GPi, TwistId::GHbarEta, TwistId::H1, TwistId::H2,
        TwistId::H3, TwistId::H4, TwistId::Fi, TwistId::Fii, TwistId::Id};
    return v;
}

enum class SpectralKind { none, multiplicative, additive };

inline SpectralKind twist_spectral(TwistId id) {
    switch (id) {
        case TwistId::E1:
        case TwistId::E4:
        case TwistId::K6:
        case TwistId::F1:
        case TwistId::F5:
        case TwistId::F9:
        case TwistId::H1:
        case TwistId::H2: return SpectralKind::multiplicative;
        case TwistId::E2:
        case TwistId::E3:
        case TwistId::K8:
        case TwistId::F2:
        case TwistId::F6:
        case TwistId::F7:
        case TwistId::F8:
        case TwistId::F10:
        case TwistId::H3:
        case TwistId::H4: return SpectralKind::additive;
        default: return SpectralKind::none;
    }
}

struct TwistValue {
    cplx scalar_norm = 1.0;
    Mat4 core;
    Mat4 full() const { return core * scalar_norm; }
};

namespace detail {

// shared building blocks of the E-family and its face descendants

struct EParts {
    cplx apd, amd, bpc, bmc;  // a_E +- d_E, b_E +- c_E
    cplx rho;
};

inline EParts eparts_elliptic(cplx z, cplx q, cplx p, const TruncationPolicy& pol,
                              bool want_scalar = true) {
    EParts e;
    const cplx sp = std::sqrt(p);
    e.apd = qpoch1(-sp * q * z, p, pol) / qpoch1(-sp / q * z, p, pol);
    e.amd = qpoch1(sp * q * z, p, pol) / qpoch1(sp / q * z, p, pol);
    e.bpc = qpoch1(-p * q * z, p, pol) / qpoch1(-p / q * z, p, pol);
    e.bmc = qpoch1(p * q * z, p, pol) / qpoch1(p / q * z, p, pol);
    e.rho = 1.0;
    if (want_scalar) {
        const cplx q4 = q * q * q * q;
        e.rho = qpoch_multi(p * z * z, {p, q4}, pol) * qpoch_multi(p * q4 * z * z, {p, q4}, pol) /
                (qpoch_multi(p * q * q * z * z, {p, q4}, pol) *
                 qpoch_multi(p * q * q * z * z, {p, q4}, pol));
    }
    return e;
}

inline EParts eparts_scaled(cplx beta, cplx r) {
    EParts e;
    const cplx u = cplx(0, 1) * beta / std::numbers::pi;
    e.apd = 1.0;
    e.amd = std::exp(lgamma1(r - 1.0 + u, 2.0 * r) - lgamma1(r + 1.0 + u, 2.0 * r));
    e.bpc = 1.0;
    e.bmc = std::exp(lgamma1(2.0 * r - 1.0 + u, 2.0 * r) - lgamma1(2.0 * r + 1.0 + u, 2.0 * r));
    e.rho = std::exp(2.0 * lgamma2(r + 1.0 + u, r, 2.0) - lgamma2(r + u, r, 2.0) -
                     lgamma2(r + 2.0 + u, r, 2.0));
    return e;
}

inline Mat4 sym8v_t(cplx a, cplx b, cplx c, cplx d) {
    Mat4 m;
    m(0, 0) = a; m(0, 3) = d;
    m(1, 1) = b; m(1, 2) = c;
    m(2, 1) = c; m(2, 2) = b;
    m(3, 0) = d; m(3, 3) = a;
    return m;
}

// the rows shared by E3 / F7 / F10-style matrices
inline Mat4 hadamard_frame(cplx ad, cplx bc, cplx row2_left, cplx row2_mid, cplx row3_scale,
                           cplx col3_factor) {
    // [[1, -1, -(col3), 1],
    //  [i ad L, i bc M, -i bc M col3, -i ad L],
    //  [i ad R, -i bc R, i bc R col3, -i ad R],
    //  [-1, -1, -(col3), -1]]  with L = row2_left, M = row2_mid, R = row3_scale
    const cplx i{0, 1};
    Mat4 m;
    m(0, 0) = 1; m(0, 1) = -1; m(0, 2) = -col3_factor; m(0, 3) = 1;
    m(1, 0) = i * ad * row2_left;
    m(1, 1) = i * bc * row2_mid;
    m(1, 2) = -i * bc * row2_mid * col3_factor;
    m(1, 3) = -i * ad * row2_left;
    m(2, 0) = i * ad * row3_scale;
    m(2, 1) = -i * bc * row3_scale;
    m(2, 2) = i * bc * row3_scale * col3_factor;
    m(2, 3) = -i * ad * row3_scale;
    m(3, 0) = -1; m(3, 1) = -1; m(3, 2) = -col3_factor; m(3, 3) = -1;
    return m;
}

inline cplx g_of(cplx r, cplx s) {
    return std::exp(lgamma1(r - s, r) - 0.5 * lgamma1(r - s + 1.0, r) -
                    0.5 * lgamma1(r - s - 1.0, r));
}

inline cplx f3_entry(cplx w, cplx q) { return w * (q - 1.0 / q) / (1.0 - w); }

inline cplx f3_entry_trig(cplx s, cplx r) {
    const double pi = std::numbers::pi;
    return -std::exp(cplx(0, pi) * s / r) * std::sin(cplx(pi) / r) / std::sin(pi * s / r);
}

struct F1X {
    cplx x11, x12, x21, x22;
};

inline F1X f1_entries(cplx z, cplx q, cplx p, cplx w, const TruncationPolicy& pol) {
    const cplx arg = p / (q * q) * z;
    const cplx q2 = q * q;
    F1X x;
    x.x11 = qhyper_2phi1(w * q2, q2, w, p, arg, pol);
    x.x12 = w * (q - 1.0 / q) / (1.0 - w) * qhyper_2phi1(w * q2, p * q2, p * w, p, arg, pol);
    x.x21 = z * (p / w) * (q - 1.0 / q) / (1.0 - p / w) *
            qhyper_2phi1(p / w * q2, p * q2, p * p / w, p, arg, pol);
    x.x22 = qhyper_2phi1(p / w * q2, q2, p / w, p, arg, pol);
    return x;
}

inline cplx rho_f(cplx z, cplx q, cplx p, const TruncationPolicy& pol) {
    const cplx q4 = q * q * q * q;
    return qpoch_multi(p * z, {p, q4}, pol) * qpoch_multi(p * q4 * z, {p, q4}, pol) /
           (qpoch_multi(p * q * q * z, {p, q4}, pol) * qpoch_multi(p * q * q * z, {p, q4}, pol));
}

inline Mat4 mid_block(cplx m11, cplx m12, cplx m21, cplx m22) {
    Mat4 m = Mat4::identity();
    m(1, 1) = m11; m(1, 2) = m12; m(2, 1) = m21; m(2, 2) = m22;
    return m;
}

}  // namespace detail

/// Evaluate a twist matrix. `spectral` must be present exactly when the twist
/// is spectral-dependent. GPi is solved pointwise from the two catalog
/// entries it connects; see the network edge for details.
inline TwistValue eval_twist(TwistId id, std::optional<cplx> spectral, const ParamPoint& pt,
                             const TruncationPolicy& pol = TruncationPolicy::defaults(),
                             WithScalar with_scalar = WithScalar::yes) {
    const bool want_scalar = (with_scalar == WithScalar::yes);
    if (twist_spectral(id) != SpectralKind::none && !spectral)
        throw domain_error("eval_twist: missing spectral argument for " + twist_name(id));
    TwistValue out;
    const double pi = std::numbers::pi;
    const cplx i{0, 1};

    switch (id) {
        case TwistId::E1: {
            const auto e = detail::eparts_elliptic(*spectral, pt.Q(), pt.P(), pol, want_scalar);
            out.scalar_norm = e.rho;
            out.core = detail::sym8v_t((e.apd + e.amd) / 2.0, (e.bpc + e.bmc) / 2.0,
                                       (e.bpc - e.bmc) / 2.0, (e.apd - e.amd) / 2.0);
            break;
        }
        case TwistId::E2: {
            const auto e = detail::eparts_scaled(*spectral, pt.Rr());
            out.scalar_norm = e.rho;
            out.core = detail::sym8v_t((e.apd + e.amd) / 2.0, (e.bpc + e.bmc) / 2.0,
                                       (e.bpc - e.bmc) / 2.0, (e.apd - e.amd) / 2.0);
            break;
        }
        case TwistId::E3: {
            const auto e = detail::eparts_scaled(*spectral, pt.Rr());
            out.scalar_norm = e.rho / 2.0;
            out.core = detail::hadamard_frame(e.amd, e.bmc, 1.0, 1.0, 1.0, 1.0);
            break;
        }
        case TwistId::E4: {
            const auto e = detail::eparts_elliptic(*spectral, pt.Q(), pt.P(), pol, want_scalar);
            const cplx a = (e.apd + e.amd) / 2.0, d = (e.apd - e.amd) / 2.0;
            const cplx b = (e.bpc + e.bmc) / 2.0, c = (e.bpc - e.bmc) / 2.0;
            out.scalar_norm = e.rho / 2.0;
            Mat4 m;
            m(0, 0) = a - d; m(0, 1) = -(a + d); m(0, 2) = -(a + d); m(0, 3) = a - d;
            m(1, 0) = i * (b + c); m(1, 1) = i * (b - c); m(1, 2) = i * (c - b); m(1, 3) = -i * (b + c);
            m(2, 0) = i * (b + c); m(2, 1) = i * (c - b); m(2, 2) = i * (b - c); m(2, 3) = -i * (b + c);
            m(3, 0) = d - a; m(3, 1) = -(a + d); m(3, 2) = -(a + d); m(3, 3) = d - a;
            out.core = m;
            break;
        }
        case TwistId::K: {
            Mat4 m;
            const double h = 0.5;
            m(0, 0) = h; m(0, 1) = -h * i; m(0, 2) = -h * i; m(0, 3) = -h;
            m(1, 0) = -h; m(1, 1) = -h * i; m(1, 2) = h * i; m(1, 3) = -h;
            m(2, 0) = -h; m(2, 1) = h * i; m(2, 2) = -h * i; m(2, 3) = -h;
            m(3, 0) = h; m(3, 1) = h * i; m(3, 2) = h * i; m(3, 3) = -h;
            out.core = m;
            break;
        }
        case TwistId::K6: {
            const cplx z = *spectral;
            out.core = Mat4::identity();
            out.core(1, 1) = std::pow(z, -0.5);
            out.core(2, 2) = std::pow(z, 0.5);
            break;
        }
        case TwistId::K8: {
            const cplx e = std::exp(*spectral / (2.0 * pt.Rr()));
            out.scalar_norm = 0.5;
            Mat4 m;
            m(0, 0) = 1; m(0, 1) = -1; m(0, 2) = -1; m(0, 3) = 1;
            m(1, 0) = i * e; m(1, 1) = i * e; m(1, 2) = -i * e; m(1, 3) = -i * e;
            m(2, 0) = i / e; m(2, 1) = -i / e; m(2, 2) = i / e; m(2, 3) = -i / e;
            m(3, 0) = -1; m(3, 1) = -1; m(3, 2) = -1; m(3, 3) = -1;
            out.core = m;
            break;
        }
        case TwistId::F1: {
            const auto x = detail::f1_entries(*spectral, pt.Q(), pt.P(), pt.W(), pol);
            if (want_scalar) out.scalar_norm = detail::rho_f(*spectral, pt.Q(), pt.P(), pol);
            out.core = detail::mid_block(x.x11, x.x12, x.x21, x.x22);
            break;
        }
        case TwistId::F3: {
            // prefers (q, w); falls back to the trigonometric parametrization
            if (pt.q && pt.w)
                out.core = detail::mid_block(1.0, detail::f3_entry(*pt.w, *pt.q), 0.0, 1.0);
            else
                out.core = detail::mid_block(1.0, detail::f3_entry_trig(pt.S(), pt.Rr()), 0.0, 1.0);
            break;
        }
        case TwistId::F4: {
            out.core = detail::mid_block(1.0, -1.0 / pt.S(), 0.0, 1.0);
            break;
        }
        case TwistId::F5: {
            const auto x = detail::f1_entries(*spectral, pt.Q(), pt.P(), pt.W(), pol);
            const cplx xi = detail::f3_entry(pt.W(), pt.Q());
            if (want_scalar) out.scalar_norm = detail::rho_f(*spectral, pt.Q(), pt.P(), pol);
            out.core = detail::mid_block(x.x11, x.x12 - xi * x.x11, x.x21, x.x22 - xi * x.x21);
            break;
        }
        case TwistId::F7: {
            const auto e = detail::eparts_scaled(*spectral, pt.Rr());
            const cplx ep = std::exp(*spectral / (2.0 * pt.Rr()));
            out.scalar_norm = e.rho / 2.0;
            out.core = detail::hadamard_frame(e.amd, e.bmc, ep, ep, 1.0 / ep, 1.0);
            break;
        }
        case TwistId::F10: {
            const cplx r = pt.Rr(), s = pt.S();
            const auto e = detail::eparts_scaled(*spectral, r);
            const cplx eb = std::exp(*spectral / (2.0 * r));
            const cplx osc = std::exp(i * cplx(pi) * s / r) * std::sin(cplx(pi) / r) /
                             std::sin(pi * s / r) / eb;
            out.scalar_norm = e.rho / 2.0;
            out.core = detail::hadamard_frame(e.amd, e.bmc, eb - osc, eb + osc, 1.0 / eb, 1.0);
            break;
        }
        case TwistId::F8: {
            const cplx r = pt.Rr(), s = pt.S();
            const auto e = detail::eparts_scaled(*spectral, r);
            const cplx eb = std::exp(*spectral / (2.0 * r));
            const cplx osc = std::exp(i * cplx(pi) * s / r) * std::sin(cplx(pi) / r) /
                             std::sin(pi * s / r) / eb;
            out.scalar_norm = e.rho / 2.0;
            out.core = detail::hadamard_frame(e.amd, e.bmc, eb - osc, eb + osc, 1.0 / eb,
                                              1.0 + 1.0 / s);
            // column 3 carries (1 - s^{-1}) in rows 2,3 but (1 + s^{-1}) in
            // rows 1,4; fix rows 2,3:
            const cplx fix = (1.0 - 1.0 / s) / (1.0 + 1.0 / s);
            out.core(1, 2) *= fix;
            out.core(2, 2) *= fix;
            break;
        }
        case TwistId::F6: {
            TwistValue f8 = eval_twist(TwistId::F8, spectral, pt, pol, with_scalar);
            const cplx g = detail::g_of(pt.Rr(), pt.S());
            // row 2 scaled by 1/g, row 3 by g
            for (int j = 0; j < 4; ++j) {
                f8.core(1, j) /= g;
                f8.core(2, j) *= g;
            }
            out = f8;
            break;
        }
        case TwistId::F2: {
            TwistValue f10 = eval_twist(TwistId::F10, spectral, pt, pol, with_scalar);
            const cplx g = detail::g_of(pt.Rr(), pt.S());
            for (int j = 0; j < 4; ++j) {
                f10.core(1, j) /= g;
                f10.core(2, j) *= g;
            }
            out = f10;
            break;
        }
        case TwistId::F11: {
            const cplx g = detail::g_of(pt.Rr(), pt.S());
            out.core = detail::mid_block(1.0 / g, detail::f3_entry_trig(pt.S(), pt.Rr()) / g, 0.0, g);
            break;
        }
        case TwistId::F9: {
            // includes the same normalization prefactor as F1/F5, which the
            // composition F9 = F5 G^{-1} carries through
            const auto x = detail::f1_entries(*spectral, pt.Q(), pt.P(), pt.W(), pol);
            const cplx xi = detail::f3_entry(pt.W(), pt.Q());
            const cplx g = detail::g_of(pt.Rr(), pt.S());
            if (want_scalar) out.scalar_norm = detail::rho_f(*spectral, pt.Q(), pt.P(), pol);
            out.core = detail::mid_block(g * x.x11, (x.x12 - xi * x.x11) / g,
                                         g * x.x21, (x.x22 - xi * x.x21) / g);
            break;
        }
        case TwistId::G: {
            const cplx g = detail::g_of(pt.Rr(), pt.S());
            out.core = detail::mid_block(1.0 / g, 0.0, 0.0, g);
            break;
        }
        case TwistId::GHbarEta: {
            const cplx r = pt.Rr(), s = pt.S();
            const cplx g = std::sqrt(std::sin(pi * (s - 1.0) / r) / std::sin(pi * s / r));
            out.core = detail::mid_block(1.0 / g, 0.0, 0.0, g);
            break;
        }
        case TwistId::GPi: {
            // solved diagonal gauge: g^2 taken from the (2,2) entries of the
            // two connected matrices at this point
            const Mat4 src = eval_r(AlgebraId::Bqpl, pt, pol, WithScalar::no).core;
            const Mat4 dst = eval_r(AlgebraId::AqpPi, pt, pol, WithScalar::no).core;
            const cplx g = std::sqrt(dst(1, 1) / src(1, 1));
            out.core = detail::mid_block(1.0 / g, 0.0, 0.0, g);
            break;
        }
        case TwistId::H1: {
            const cplx z = *spectral, q = pt.Q();
            const cplx eps = pt.s ? *pt.s : cplx{1.0};  // spurious parameter, rides in s
            const cplx den = q / z - z / q;
            const cplx sq = std::sqrt(q);
            const cplx u = (sq * std::pow(z, (-1.0 - eps) / 2.0) - std::pow(z, (1.0 + eps) / 2.0) / sq) / den;
            const cplx v = (sq * std::pow(z, (-1.0 + eps) / 2.0) - std::pow(z, (1.0 - eps) / 2.0) / sq) / den;
            out.core = detail::mid_block(u, v, v, u);
            break;
        }
        case TwistId::H2: {
            const cplx z = *spectral, q = pt.Q(), p = pt.P();
            const cplx sp = std::sqrt(p), sq = std::sqrt(q);
            const cplx den = q / z - z / q;
            const cplx ApD = qpoch1(-sp / (q * z), p, pol) * qpoch1(-sp * q * z, p, pol);
            const cplx AmD = qpoch1(sp / (q * z), p, pol) * qpoch1(sp * q * z, p, pol);
            const cplx fp = (sq / z - z / sq + sq - 1.0 / sq) / den;
            const cplx fm = (sq / z - z / sq - sq + 1.0 / sq) / den;
            const cplx BpC = fp * qpoch1(-p / (q * z), p, pol) * qpoch1(-p * q * z, p, pol);
            const cplx BmC = fm * qpoch1(p / (q * z), p, pol) * qpoch1(p * q * z, p, pol);
            out.core = detail::sym8v_t((ApD + AmD) / 2.0, (BpC + BmC) / 2.0,
                                       (BpC - BmC) / 2.0, (ApD - AmD) / 2.0);
            break;
        }
        case TwistId::H3: {
            const cplx b = *spectral;
            const cplx eps = pt.s ? *pt.s : cplx{1.0};
            const cplx den = 2.0 * (pi - i * b);
            out.core = detail::mid_block((pi - i * b * (1.0 + eps)) / den,
                                         (pi - i * b * (1.0 - eps)) / den,
                                         (pi - i * b * (1.0 - eps)) / den,
                                         (pi - i * b * (1.0 + eps)) / den);
            break;
        }
        case TwistId::H4: {
            const cplx b = *spectral, r = pt.Rr();
            const cplx eps = pt.s ? *pt.s : cplx{1.0};
            const cplx den = std::sin((pi - i * b) / r);
            out.core = detail::mid_block(std::sin((pi - i * b - eps * i * b) / (2.0 * r)) / den,
                                         std::sin((pi - i * b + eps * i * b) / (2.0 * r)) / den,
                                         std::sin((pi - i * b + eps * i * b) / (2.0 * r)) / den,
                                         std::sin((pi - i * b - eps * i * b) / (2.0 * r)) / den);
            break;
        }
        case TwistId::Fi: {
            out.core = detail::mid_block(1.0, detail::f3_entry(pt.W(), pt.Q()), 0.0, 1.0);
            break;
        }
        case TwistId::Fii: {
            out.core = detail::mid_block(1.0, -1.0 / pt.S(), 0.0, 1.0);
            break;
        }
        case TwistId::Id: {
            out.core = Mat4::identity();
            break;
        }
    }
    return out;
}

/// R^F = F21(reflected arg) R F12(arg)^{-1}. Constant twists ignore the
/// argument; the reflection is multiplicative or additive per the twist.
inline Mat4 apply_twist(TwistId id, const Mat4& R, std::optional<cplx> arg, const ParamPoint& pt,
                        bool use_full = true,
                        const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    std::optional<cplx> refl;
    switch (twist_spectral(id)) {
        case SpectralKind::none: break;
        case SpectralKind::multiplicative: refl = 1.0 / arg.value(); break;
        case SpectralKind::additive: refl = -arg.value(); break;
    }
    const WithScalar ws = use_full ? WithScalar::yes : WithScalar::no;
    const TwistValue f21v = eval_twist(id, refl, pt, pol, ws);
    const TwistValue f12v = eval_twist(id, arg.has_value() && twist_spectral(id) != SpectralKind::none
                                               ? arg : std::optional<cplx>{},
                                       pt, pol, ws);
    const Mat4 F21 = swap_legs(use_full ? f21v.full() : f21v.core);
    const Mat4 F12 = use_full ? f12v.full() : f12v.core;
    return F21 * R * F12.inverse();
}

struct CompositionFactor {
    TwistId id;
    bool inverted = false;
};

/// Ordered product of evaluated twists (full matrices). Each factor draws
/// its spectral argument in its own kind from the point: beta for additive
/// factors, z for multiplicative ones.
inline TwistValue compose_twists(const std::vector<CompositionFactor>& factors,
                                 const ParamPoint& pt,
                                 const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    TwistValue acc;
    acc.core = Mat4::identity();
    for (const auto& f : factors) {
        std::optional<cplx> arg;
        if (twist_spectral(f.id) == SpectralKind::additive) arg = pt.Beta();
        if (twist_spectral(f.id) == SpectralKind::multiplicative) arg = pt.Z();
        TwistValue v = eval_twist(f.id, arg, pt, pol);
        if (f.inverted) {
            v.core = v.core.inverse();
            v.scalar_norm = 1.0 / v.scalar_norm;
        }
        acc.scalar_norm *= v.scalar_norm;
        acc.core = acc.core * v.core;
    }
    return acc;
}

/// Estimate the scalar of A ~ c B: c from B's max-modulus entry, residual the
/// worst deviation over entries with |B| above tol.
inline std::pair<cplx, double> homothety_factor(const Mat4& A, const Mat4& B, double tol = 1e-11) {
    std::size_t bi = 0, bj = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (std::abs(B(i, j)) > best) { best = std::abs(B(i, j)); bi = i; bj = j; }
    if (best <= tol) throw domain_error("homothety_factor: reference matrix is numerically zero");
    const cplx c = A(bi, bj) / B(bi, bj);
    double resid = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (std::abs(B(i, j)) > tol)
                resid = std::max(resid, std::abs(A(i, j) - c * B(i, j)));
    return {c, resid};
}

}  // namespace ybnet
