#pragma once

// Pauli factorization of the vertex R-matrices, the structure constants
// J_ab and their spectral independence, the finite universal twists in small
// representations, and the shifted cocycle condition.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ybnet/checks.hpp"
#include "ybnet/mat.hpp"
#include "ybnet/rmatrix.hpp"
#include "ybnet/twists.hpp"

namespace ybnet {

struct PauliDecomposition {
    std::array<cplx, 4> w;  // coefficients of 1x1 and sigma_a x sigma_a
    double residual = 0.0;  // out-of-span component of the input
};

/// W_mu = Tr((sigma_mu x sigma_mu) R) / 4, with sigma_0 = 1.
inline PauliDecomposition pauli_decompose(const Mat4& R) {
    PauliDecomposition out;
    for (int a = 0; a < 4; ++a) {
        const Mat4 ss = kron(pauli(a), pauli(a));
        cplx tr = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k) tr += std::conj(ss(i, k)) * R(i, k);
        out.w[static_cast<std::size_t>(a)] = tr / 4.0;
    }
    Mat4 rec;
    for (int a = 0; a < 4; ++a) rec = rec + kron(pauli(a), pauli(a)) * out.w[static_cast<std::size_t>(a)];
    out.residual = (rec - R).max_abs();
    return out;
}

struct StructureConstants {
    cplx j12, j23, j31;
};

/// J_ab = (W_a^2 - W_b^2) / (W_c^2 - 1) after normalizing W_0 to 1.
inline StructureConstants structure_constants(const PauliDecomposition& pd) {
    if (pd.w[0] == cplx{}) throw domain_error("structure_constants: W0 = 0");
    const cplx w1 = pd.w[1] / pd.w[0];
    const cplx w2 = pd.w[2] / pd.w[0];
    const cplx w3 = pd.w[3] / pd.w[0];
    auto den = [](cplx wg) {
        const cplx d = wg * wg - 1.0;
        if (std::abs(d) < 1e-14) throw domain_error("structure_constants: W_c^2 = 1");
        return d;
    };
    return {(w1 * w1 - w2 * w2) / den(w3), (w2 * w2 - w3 * w3) / den(w1),
            (w3 * w3 - w1 * w1) / den(w2)};
}

/// Max pairwise deviation of the J constants across spectral samples.
inline CheckReport z_independence_check(AlgebraId id, const std::vector<cplx>& spectral_samples,
                                        const ParamPoint& pt, double tol,
                                        const TruncationPolicy& pol = TruncationPolicy::defaults()) {
    if (spectral_samples.size() < 3) throw domain_error("z_independence: need >= 3 samples");
    std::vector<StructureConstants> js;
    int excluded = 0;
    for (cplx x : spectral_samples) {
        try {
            js.push_back(structure_constants(
                pauli_decompose(eval_r(id, with_spectral(id, pt, x), pol, WithScalar::no).core)));
        } catch (const domain_error&) {
            ++excluded;
        }
    }
    double dev = 0.0;
    for (std::size_t i = 0; i + 1 < js.size(); ++i) {
        dev = std::max(dev, std::abs(js[i].j12 - js[i + 1].j12));
        dev = std::max(dev, std::abs(js[i].j23 - js[i + 1].j23));
        dev = std::max(dev, std::abs(js[i].j31 - js[i + 1].j31));
    }
    auto rep = CheckReport::make("j-z-independence", algebra_name(id), algebra_tag(id), dev, tol);
    if (excluded) rep.details = std::to_string(excluded) + " singular samples excluded";
    detail::record_point(rep, pt);
    return rep;
}

// ---------------------------------------------------------------------------
// finite representations and universal twists
// ---------------------------------------------------------------------------

/// Small dynamic complex matrix for mixed-dimension representation pairs.
class DynMat {
public:
    DynMat() = default;
    explicit DynMat(std::size_t n) : n_(n), a_(n * n) {}
    static DynMat identity(std::size_t n) {
        DynMat m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    std::size_t dim() const { return n_; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    DynMat operator*(const DynMat& o) const {
        DynMat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const cplx v = (*this)(i, k);
                if (v == cplx{}) continue;
                for (std::size_t j = 0; j < n_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }
    DynMat operator+(const DynMat& o) const {
        DynMat r(n_);
        for (std::size_t i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    DynMat operator-(const DynMat& o) const {
        DynMat r(n_);
        for (std::size_t i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    DynMat operator*(cplx s) const {
        DynMat r(n_);
        for (std::size_t i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] * s;
        return r;
    }
    DynMat inverse() const {
        DynMat a = *this;
        DynMat inv = identity(n_);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            double best = std::abs(a(col, col));
            for (std::size_t r = col + 1; r < n_; ++r)
                if (std::abs(a(r, col)) > best) { best = std::abs(a(r, col)); piv = r; }
            if (best == 0.0) throw domain_error("singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < n_; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            const cplx d = a(col, col);
            for (std::size_t j = 0; j < n_; ++j) { a(col, j) /= d; inv(col, j) /= d; }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col) continue;
                const cplx f = a(r, col);
                if (f == cplx{}) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }
    friend DynMat dkron(const DynMat& x, const DynMat& y) {
        DynMat r(x.n_ * y.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t j = 0; j < x.n_; ++j) {
                if (x(i, j) == cplx{}) continue;
                for (std::size_t k = 0; k < y.n_; ++k)
                    for (std::size_t l = 0; l < y.n_; ++l)
                        r(i * y.n_ + k, j * y.n_ + l) = x(i, j) * y(k, l);
            }
        return r;
    }

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

struct FiniteRep {
    std::size_t dimension = 2;
    DynMat e, f, h, t;  // t = q^h in the q-case; unused classically

    /// spin-1/2: e = E12, f = E21, h = diag(1,-1), t = diag(q, 1/q).
    static FiniteRep spin_half(cplx q = 1.0) { return spin(1, q); }

    /// spin j with 2j = two_j: h = diag(2j, 2j-2, ..., -2j), t = q^h, and in
    /// the q-case the raising/lowering entries carry q-integers.
    static FiniteRep spin(int two_j, cplx q = 1.0) {
        const std::size_t n = static_cast<std::size_t>(two_j) + 1;
        FiniteRep r;
        r.dimension = n;
        r.e = DynMat(n); r.f = DynMat(n); r.h = DynMat(n); r.t = DynMat(n);
        auto qint = [&](int m) -> cplx {
            if (q == cplx{1.0}) return static_cast<double>(m);
            return (std::pow(q, m) - std::pow(q, -m)) / (q - 1.0 / q);
        };
        for (std::size_t k = 0; k < n; ++k) {
            const int hk = two_j - 2 * static_cast<int>(k);
            r.h(k, k) = static_cast<double>(hk);
            r.t(k, k) = std::pow(q, hk);
        }
        for (std::size_t k = 0; k + 1 < n; ++k) {
            // e |k+1> = sqrt([k+1][2j-k]) |k>, f = transpose
            const cplx amp = std::sqrt(qint(static_cast<int>(k) + 1) *
                                       qint(two_j - static_cast<int>(k)));
            r.e(k, k + 1) = amp;
            r.f(k + 1, k) = amp;
        }
        return r;
    }
};

enum class UniversalKind { q_case, classical_case };

namespace detail {

inline cplx qnumber_factorial(int n, cplx base) {
    cplx f = 1.0;
    for (int k = 1; k <= n; ++k) f *= (1.0 - std::pow(base, k)) / (1.0 - base);
    return f;
}

}  // namespace detail

struct UniversalTwistResult {
    DynMat matrix;
    bool truncated = false;  // series did not terminate by nilpotency
};

/// Evaluate the universal twist series on an arbitrary pair of finite legs.
/// The series terminates by nilpotency of e (after at most dim-1 terms in an
/// irreducible leg); a non-nilpotent e leads to policy truncation with the
/// flag set. Conventions validated against the closed-form 4x4 twists:
/// t = q^h, operator coefficients act from the left, and the q-case
/// Pochhammer carries t^2 on the first leg.
inline UniversalTwistResult universal_twist_eval(UniversalKind kind, const ParamPoint& pt,
                                                 const FiniteRep& leg1, const FiniteRep& leg2,
                                                 int max_terms = 64) {
    const std::size_t d = leg1.dimension * leg2.dimension;
    UniversalTwistResult out;
    out.matrix = DynMat::identity(d);
    const DynMat id1 = DynMat::identity(leg1.dimension);
    const DynMat id2 = DynMat::identity(leg2.dimension);
    if (kind == UniversalKind::q_case) {
        const cplx q = pt.Q(), w = pt.W();
        const DynMat et = leg1.e * leg1.t;
        const DynMat tf = leg2.t * leg2.f;
        DynMat term = DynMat::identity(d);
        DynMat poch = DynMat::identity(d);
        const DynMat t2leg1 = dkron(leg1.t * leg1.t, id2);
        cplx prefactor = 1.0;
        for (int n = 1; n <= max_terms; ++n) {
            term = term * dkron(et, tf);
            if (term.max_abs() == 0.0) return out;
            poch = poch *
                   (DynMat::identity(d) - t2leg1 * (std::pow(q, -2.0) * w * std::pow(q, -2.0 * (n - 1))));
            prefactor *= (q * q * w) * (q - 1.0 / q);
            out.matrix = out.matrix +
                         poch.inverse() * term *
                             (prefactor / detail::qnumber_factorial(n, std::pow(q, -2.0)));
        }
    } else {
        const cplx s = pt.S();
        DynMat term = DynMat::identity(d);
        DynMat op = DynMat::identity(d);
        double fact = 1.0;
        for (int n = 1; n <= max_terms; ++n) {
            term = term * dkron(leg1.e, leg2.f);
            if (term.max_abs() == 0.0) return out;
            op = op * dkron(id1 * (1.0 + (n - 1.0) - s) - leg1.h, id2);
            fact *= n;
            out.matrix = out.matrix + op.inverse() * term * (1.0 / fact);
        }
    }
    out.truncated = true;
    return out;
}

/// Spin-1/2 ⊗ spin-1/2 convenience wrapper (the series has exactly two terms).
inline Mat4 universal_twist_eval(UniversalKind kind, const ParamPoint& pt) {
    const cplx q = kind == UniversalKind::q_case ? pt.Q() : cplx{1.0};
    const FiniteRep rep = FiniteRep::spin_half(q);
    const auto res = universal_twist_eval(kind, pt, rep, rep);
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = res.matrix(i, j);
    return m;
}

namespace detail {

// spin-1/2^3 helpers for the cocycle identity
inline Mat8 kron3(const Mat2& a, const Mat2& b, const Mat2& c) {
    Mat8 t;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            t(i, j) = a((i >> 2) & 1, (j >> 2) & 1) * b((i >> 1) & 1, (j >> 1) & 1) *
                      c(i & 1, j & 1);
    return t;
}

// A on legs (1,2), b on leg 3
inline Mat8 kron42(const Mat4& a, const Mat2& b) {
    Mat8 t;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) t(i, j) = a(i >> 1, j >> 1) * b(i & 1, j & 1);
    return t;
}

// a on leg 1, B on legs (2,3)
inline Mat8 kron24(const Mat2& a, const Mat4& b) {
    Mat8 t;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) t(i, j) = a((i >> 2) & 1, (j >> 2) & 1) * b(i & 3, j & 3);
    return t;
}

}  // namespace detail

namespace detail {

inline Mat2 to_mat2(const DynMat& m) {
    Mat2 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(i, j);
    return r;
}

}  // namespace detail

/// Shifted cocycle F12(lambda) (Delta x id)F = F23(lambda + h^(1)) (id x Delta)F
/// in spin-1/2^3. Classical coproduct x -> x⊗1 + 1⊗x; q-case coproduct
/// Delta(e) = e⊗1 + t⊗e, Delta(f) = f⊗t^{-1} + 1⊗f, Delta(t) = t⊗t.
/// The shift moves the dynamical parameter by delta times the leg-1 weight;
/// `omit_shift` suppresses it (negative control).
inline CheckReport shifted_cocycle_check(UniversalKind kind, const ParamPoint& pt, double tol,
                                         double delta, bool omit_shift = false) {
    const Mat2 I = pauli(0);
    Mat8 DxF, xDF;
    ParamPoint up = pt, down = pt;
    if (kind == UniversalKind::classical_case) {
        const cplx s = pt.S();
        const FiniteRep rep0 = FiniteRep::spin_half();
        const Mat2 re = detail::to_mat2(rep0.e), rf = detail::to_mat2(rep0.f),
                   rh = detail::to_mat2(rep0.h);
        const Mat8 De = detail::kron3(re, I, I) + detail::kron3(I, re, I);
        const Mat8 Dh = detail::kron3(rh, I, I) + detail::kron3(I, rh, I);
        const Mat8 f3 = detail::kron3(I, I, rf);
        const Mat8 e1 = detail::kron3(re, I, I);
        const Mat8 Df = detail::kron3(I, rf, I) + detail::kron3(I, I, rf);
        const Mat8 h1 = detail::kron3(rh, I, I);
        DxF = Mat8::identity();
        xDF = Mat8::identity();
        Mat8 opD = Mat8::identity(), opX = Mat8::identity();
        Mat8 termD = Mat8::identity(), termX = Mat8::identity();
        double fact = 1.0;
        for (int n = 1; n <= 4; ++n) {
            termD = termD * (De * f3);
            termX = termX * (e1 * Df);
            opD = opD * (Mat8::identity() * (1.0 + (n - 1.0) - s) - Dh);
            opX = opX * (Mat8::identity() * (1.0 + (n - 1.0) - s) - h1);
            fact *= n;
            if (termD.max_abs() != 0.0) DxF = DxF + opD.inverse() * termD * (1.0 / fact);
            if (termX.max_abs() != 0.0) xDF = xDF + opX.inverse() * termX * (1.0 / fact);
            if (termD.max_abs() == 0.0 && termX.max_abs() == 0.0) break;
        }
        up.s = s + delta;
        down.s = s - delta;
    } else {
        const cplx q = pt.Q(), w = pt.W();
        const FiniteRep rep0 = FiniteRep::spin_half(q);
        const Mat2 re = detail::to_mat2(rep0.e), rf = detail::to_mat2(rep0.f);
        const Mat2 K = detail::to_mat2(rep0.t), Kinv = K.inverse();
        const Mat2 et = re * K, tf = K * rf;
        // Delta(et) = Delta(e) Delta(t), legs (1,2)
        const Mat4 Dt = kron(K, K);
        const Mat4 De = kron(re, I) + kron(K, re);
        const Mat4 Df = kron(rf, Kinv) + kron(I, rf);
        const Mat4 Det = De * Dt;
        const Mat4 Dtf = Dt * Df;
        // only n = 1 survives in spin-1/2 legs
        const Mat8 X12 = detail::kron3(K * K, K * K, I) * (std::pow(q, -2.0) * w);
        DxF = Mat8::identity() +
              (Mat8::identity() - X12).inverse() *
                  detail::kron42(Det, tf) * ((q * q * w) * (q - 1.0 / q));
        const Mat8 X1 = detail::kron3(K * K, I, I) * (std::pow(q, -2.0) * w);
        xDF = Mat8::identity() +
              (Mat8::identity() - X1).inverse() * detail::kron24(et, Dtf) * ((q * q * w) * (q - 1.0 / q));
        up.w = w * std::pow(q, 2.0 * delta);
        down.w = w * std::pow(q, -2.0 * delta);
    }
    const Mat4 F12m = universal_twist_eval(kind, pt);
    Mat8 F12;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if ((i & 1) == (j & 1)) F12(i, j) = F12m(i >> 1, j >> 1);
    const Mat8 lhs = F12 * DxF;
    Mat8 F23;
    {
        const Mat4 Fu = universal_twist_eval(kind, omit_shift ? pt : up);
        const Mat4 Fd = universal_twist_eval(kind, omit_shift ? pt : down);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                if (((i >> 2) & 1) != ((j >> 2) & 1)) continue;
                const Mat4& blk = ((i >> 2) & 1) == 0 ? Fu : Fd;
                F23(i, j) = blk(i & 3, j & 3);
            }
    }
    const Mat8 rhs = F23 * xDF;
    const double resid = (lhs - rhs).max_abs();
    auto rep2 = CheckReport::make(omit_shift ? "cocycle-control" : "shifted-cocycle",
                                  kind == UniversalKind::classical_case ? "classical" : "q-case",
                                  "finite", resid, tol);
    rep2.details = "delta=" + std::to_string(delta);
    detail::record_point(rep2, pt);
    return rep2;
}

}  // namespace ybnet
