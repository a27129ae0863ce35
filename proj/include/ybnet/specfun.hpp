#pragma once

// Complex special functions: q-Pochhammer products, theta functions,
// q-hypergeometric series, Gamma / multiple Gamma, Barnes double sine.
// Everything is a pure function of its arguments.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybnet/mat.hpp"

namespace ybnet {

struct TruncationPolicy {
    int max_terms = 10000;        // hard cap on factors/terms per product or series
    double term_tolerance = 1e-15;  // stop once contributions deviate from neutral by less

    static const TruncationPolicy& defaults() {
        static const TruncationPolicy p{};
        return p;
    }
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct truncation_error : std::runtime_error {
    cplx partial;
    explicit truncation_error(const std::string& what, cplx part)
        : std::runtime_error(what), partial(part) {}
};

namespace detail {
inline constexpr double two_pi = 2.0 * std::numbers::pi;
}

// ---------------------------------------------------------------------------
// q-Pochhammer
// ---------------------------------------------------------------------------

/// (x;q)_n finite product.
inline cplx qpoch_finite(cplx x, cplx q, int n) {
    cplx prod = 1.0;
    cplx t = x;
    for (int k = 0; k < n; ++k) {
        prod *= (1.0 - t);
        t *= q;
    }
    return prod;
}

/// (z;b)_inf for a single base |b| < 1.
inline cplx qpoch1(cplx z, cplx b, const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    if (std::abs(b) >= 1.0) throw domain_error("qpoch: |base| >= 1");
    cplx prod = 1.0;
    cplx t = z;
    for (int k = 0; k < pol.max_terms; ++k) {
        if (std::abs(t) < pol.term_tolerance) return prod;
        prod *= (1.0 - t);
        t *= b;
    }
    throw truncation_error("qpoch: not converged within max_terms", prod);
}

/// log (z;b)_inf as a sum of principal logs (safe against under/overflow).
inline cplx log_qpoch1(cplx z, cplx b, const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    if (std::abs(b) >= 1.0) throw domain_error("qpoch: |base| >= 1");
    cplx acc = 0.0;
    cplx t = z;
    for (int k = 0; k < pol.max_terms; ++k) {
        if (std::abs(t) < pol.term_tolerance) return acc;
        acc += std::log(1.0 - t);
        t *= b;
    }
    throw truncation_error("log_qpoch: not converged within max_terms", acc);
}

/// Multi-base infinite product (z; b1,...,bm)_inf over all multi-indices.
inline cplx qpoch_multi(cplx z, std::span<const cplx> bases,
                        const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    for (const cplx& b : bases)
        if (std::abs(b) >= 1.0) throw domain_error("qpoch_multi: |base| >= 1");
    if (bases.empty()) return 1.0 - z;
    if (bases.size() == 1) return qpoch1(z, bases[0], pol);
    cplx prod = 1.0;
    cplx t = z;
    for (int k = 0; k < pol.max_terms; ++k) {
        if (std::abs(t) < pol.term_tolerance) return prod;
        prod *= qpoch_multi(t, bases.subspan(1), pol);
        t *= bases[0];
    }
    throw truncation_error("qpoch_multi: not converged within max_terms", prod);
}

inline cplx qpoch_multi(cplx z, std::initializer_list<cplx> bases,
                        const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    std::vector<cplx> b(bases);
    return qpoch_multi(z, std::span<const cplx>(b), pol);
}

// ---------------------------------------------------------------------------
// Theta
// ---------------------------------------------------------------------------

/// Theta_p(z) = (z;p)_inf (p/z;p)_inf (p;p)_inf, with Theta_0(z) = 1-z.
inline cplx theta(cplx p, cplx z, const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    if (p == cplx{}) return 1.0 - z;
    if (std::abs(p) >= 1.0) throw domain_error("theta: |p| >= 1");
    if (z == cplx{}) throw domain_error("theta: z = 0");
    return qpoch1(z, p, pol) * qpoch1(p / z, p, pol) * qpoch1(p, p, pol);
}

/// log Theta_p(z) without the (p;p)_inf factor; used for balanced theta ratios.
inline cplx log_theta_nc(cplx p, cplx z, const TruncationPolicy& pol) {
    if (z == cplx{}) throw domain_error("theta: z = 0");
    return log_qpoch1(z, p, pol) + log_qpoch1(p / z, p, pol);
}

/// prod Theta_p(num_i) / prod Theta_p(den_i) with equal counts, evaluated in
/// log space. Near p -> 1 the individual thetas underflow; their balanced
/// ratios stay O(1).
inline cplx theta_ratio(cplx p, std::initializer_list<cplx> num, std::initializer_list<cplx> den,
                        const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    if (num.size() != den.size()) throw std::invalid_argument("theta_ratio: unbalanced");
    if (p == cplx{}) {
        cplx r = 1.0;
        auto itn = num.begin(), itd = den.begin();
        for (; itn != num.end(); ++itn, ++itd) r *= (1.0 - *itn) / (1.0 - *itd);
        return r;
    }
    if (std::abs(p) >= 1.0) throw domain_error("theta: |p| >= 1");
    cplx acc = 0.0;
    for (const cplx& z : num) acc += log_theta_nc(p, z, pol);
    for (const cplx& z : den) acc -= log_theta_nc(p, z, pol);
    return std::exp(acc);
}

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

namespace detail {

// Lanczos, g = 7, n = 9.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline cplx lgamma_positive(cplx z) {
    // valid for Re z > 0.5; log of Lanczos form
    z -= 1.0;
    cplx x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
    const cplx t = z + lanczos_g + 0.5;
    return 0.5 * std::log(detail::two_pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace detail

/// log Gamma(z), principal determination away from the poles.
inline cplx clgamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw domain_error("clgamma: pole at non-positive integer");
    if (z.real() >= 0.5) return detail::lgamma_positive(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const cplx pi = std::numbers::pi;
    return std::log(pi / std::sin(pi * z)) - detail::lgamma_positive(1.0 - z);
}

/// Ordinary complex Gamma.
inline cplx cgamma(cplx z) { return std::exp(clgamma(z)); }

/// log Gamma_1(x|w) = (x/w - 1/2) log w + log Gamma(x/w) - log sqrt(2 pi),
/// the zeta-regularized normalization.
inline cplx lgamma1(cplx x, cplx w) {
    return (x / w - 0.5) * std::log(w) + clgamma(x / w) - 0.5 * std::log(detail::two_pi);
}

inline cplx gamma1(cplx x, cplx w) { return std::exp(lgamma1(x, w)); }

namespace detail {

// coefficients of u/(1-e^{-u}) = sum p_k u^k  (Bernoulli B_k^+ / k!)
inline constexpr double bern_over_fact[33] = {
    1.00000000000000000e+00,  5.00000000000000000e-01,  8.33333333333333287e-02,
    0.0,                      -1.38888888888888894e-03, 0.0,
    3.30687830687830710e-05,  0.0,                      -8.26719576719576754e-07,
    0.0,                      2.08767569878681002e-08,  0.0,
    -5.28419013868749322e-10, 0.0,                      1.33825365306846789e-11,
    0.0,                      -3.38968029632258272e-13, 0.0,
    8.58606205627784517e-15,  0.0,                      -2.17486869855806192e-16,
    0.0,                      5.50900282836022953e-18,  0.0,
    -1.39544646858125223e-19, 0.0,                      3.53470703962946728e-21,
    0.0,                      -8.95351742703754628e-23, 0.0,
    2.26795245233768293e-24,  0.0,                      -5.74479066887220246e-26};

inline constexpr int gamma2_series_order = 26;

// Asymptotic expansion of log Gamma_2(x|w1,w2) for large |x|; the c_n are the
// Taylor coefficients of P(w1 t) P(w2 t) with P(u) = u/(1-e^{-u}).
inline cplx lgamma2_asymptotic(cplx x, cplx w1, cplx w2) {
    cplx c[gamma2_series_order + 1];
    for (int n = 0; n <= gamma2_series_order; ++n) {
        cplx s = 0.0;
        for (int k = 0; k <= n; ++k)
            s += bern_over_fact[k] * std::pow(w1, k) * bern_over_fact[n - k] * std::pow(w2, n - k);
        c[n] = s;
    }
    const cplx L = std::log(x);
    cplx t = c[0] * x * x * (0.75 - 0.5 * L) + c[1] * x * (L - 1.0) - c[2] * L;
    double fact = 1.0;  // (n-3)!
    const cplx xi = 1.0 / x;
    cplx xp = xi;
    for (int n = 3; n <= gamma2_series_order; ++n) {
        if (n > 3) fact *= static_cast<double>(n - 3);
        t += c[n] * fact * xp;
        xp *= xi;
    }
    return t / (w1 * w2);
}

}  // namespace detail

/// log Gamma_2(x|w1,w2), zeta-regularized double Gamma. Computed by shifting
/// x with the ladder relations Gamma_2(x) = Gamma_2(x+w_i) Gamma_1(x|w_j)
/// until the asymptotic series applies. Branch of the log may differ from
/// the principal one by 2 pi i k; all consumers exponentiate balanced
/// combinations where that cancels.
inline cplx lgamma2(cplx x, cplx w1, cplx w2) {
    const double thresh = 40.0 * std::max({std::abs(w1), std::abs(w2), 1.0});
    cplx acc = 0.0;
    int guard = 0;
    while (std::abs(x) < thresh) {
        if (++guard > 4000) throw domain_error("lgamma2: shift did not terminate");
        if (std::abs(x + w1) >= std::abs(x + w2)) {
            acc += lgamma1(x, w2);
            x += w1;
        } else {
            acc += lgamma1(x, w1);
            x += w2;
        }
    }
    return acc + detail::lgamma2_asymptotic(x, w1, w2);
}

inline cplx gamma2(cplx x, cplx w1, cplx w2) { return std::exp(lgamma2(x, w1, w2)); }

/// Barnes double sine S_2(x|w1,w2) = Gamma_2(w1+w2-x) / Gamma_2(x).
inline cplx double_sine(cplx x, cplx w1, cplx w2) {
    return std::exp(lgamma2(w1 + w2 - x, w1, w2) - lgamma2(x, w1, w2));
}

// ---------------------------------------------------------------------------
// Basic hypergeometric series
// ---------------------------------------------------------------------------

/// 2phi1(a,b;c;q,z) = sum_n (a;q)_n (b;q)_n / ((c;q)_n (q;q)_n) z^n.
inline cplx qhyper_2phi1(cplx a, cplx b, cplx c, cplx q, cplx z,
                         const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    if (std::abs(q) >= 1.0) throw domain_error("2phi1: |q| >= 1");
    if (std::abs(z) >= 1.0) throw domain_error("2phi1: |z| >= 1");
    cplx sum = 1.0;
    cplx term = 1.0;
    cplx qn = 1.0;
    for (int n = 0; n < pol.max_terms; ++n) {
        const cplx den = (1.0 - c * qn) * (1.0 - q * qn);
        if (den == cplx{}) throw domain_error("2phi1: lower parameter at q^{-n}");
        term *= (1.0 - a * qn) * (1.0 - b * qn) / den * z;
        sum += term;
        qn *= q;
        if (std::abs(term) < pol.term_tolerance * std::max(1.0, std::abs(sum))) return sum;
    }
    throw truncation_error("2phi1: not converged within max_terms", sum);
}

}  // namespace ybnet
