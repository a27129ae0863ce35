#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace ybnet {

using cplx = std::complex<double>;

/// Dense fixed-size complex matrix. Only N in {2,4,8} is used here.
template <std::size_t N>
class Mat {
public:
    Mat() : a_{} {}

    static Mat identity() {
        Mat m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * N + j]; }

    Mat operator*(const Mat& o) const {
        Mat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx v = (*this)(i, k);
                if (v == cplx{}) continue;
                for (std::size_t j = 0; j < N; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r;
        for (std::size_t i = 0; i < N * N; ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r;
        for (std::size_t i = 0; i < N * N; ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat operator*(cplx s) const {
        Mat r;
        for (std::size_t i = 0; i < N * N; ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    friend Mat operator*(cplx s, const Mat& m) { return m * s; }

    /// Gauss-Jordan inverse with partial pivoting.
    Mat inverse() const {
        Mat a = *this;
        Mat inv = identity();
        for (std::size_t col = 0; col < N; ++col) {
            std::size_t piv = col;
            double best = std::abs(a(col, col));
            for (std::size_t r = col + 1; r < N; ++r)
                if (std::abs(a(r, col)) > best) { best = std::abs(a(r, col)); piv = r; }
            if (best == 0.0) throw std::domain_error("singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < N; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            const cplx d = a(col, col);
            for (std::size_t j = 0; j < N; ++j) { a(col, j) /= d; inv(col, j) /= d; }
            for (std::size_t r = 0; r < N; ++r) {
                if (r == col) continue;
                const cplx f = a(r, col);
                if (f == cplx{}) continue;
                for (std::size_t j = 0; j < N; ++j) {
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

    /// index (i, j) of the entry of largest modulus
    std::pair<std::size_t, std::size_t> max_entry() const {
        std::size_t best = 0;
        double mv = -1.0;
        for (std::size_t i = 0; i < N * N; ++i)
            if (std::abs(a_[i]) > mv) { mv = std::abs(a_[i]); best = i; }
        return {best / N, best % N};
    }

private:
    std::array<cplx, N * N> a_;
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;
using Mat8 = Mat<8>;

inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

/// Leg-swap permutation P on C^2 x C^2 (P (x ⊗ y) = y ⊗ x).
inline const Mat4& leg_swap() {
    static const Mat4 p = [] {
        Mat4 m;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(2 * j + i, 2 * i + j) = 1.0;
        return m;
    }();
    return p;
}

/// M -> P M P, i.e. M21 from M12.
inline Mat4 swap_legs(const Mat4& m) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r(2 * j + i, 2 * l + k) = m(2 * i + j, 2 * k + l);
    return r;
}

/// Partial transpose on the second tensor leg.
inline Mat4 transpose_leg2(const Mat4& m) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
    return r;
}

/// Kronecker-embed a two-leg operator into legs (i,j) of C^2 ⊗ C^2 ⊗ C^2.
/// Legs are 1-based with i < j.
inline Mat8 embed(const Mat4& m, int leg_i, int leg_j) {
    if (!(leg_i >= 1 && leg_j <= 3 && leg_i < leg_j)) throw std::invalid_argument("embed legs");
    const int other = 6 - leg_i - leg_j;  // the spectating leg
    Mat8 t;
    const int li = leg_i - 1, lj = leg_j - 1, lo = other - 1;
    int idx[3], jdx[3];
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            idx[0] = (a >> 2) & 1; idx[1] = (a >> 1) & 1; idx[2] = a & 1;
            jdx[0] = (b >> 2) & 1; jdx[1] = (b >> 1) & 1; jdx[2] = b & 1;
            if (idx[lo] != jdx[lo]) continue;
            t(a, b) = m(2 * idx[li] + idx[lj], 2 * jdx[li] + jdx[lj]);
        }
    return t;
}

/// Weight projector on one leg of C^2 ⊗ C^2 ⊗ C^2: weight +1 is basis index 0.
inline Mat8 weight_projector(int weight, int leg) {
    Mat8 t;
    const int want = weight > 0 ? 0 : 1;
    for (int a = 0; a < 8; ++a) {
        const int bit = (a >> (3 - leg)) & 1;
        if (bit == want) t(a, a) = 1.0;
    }
    return t;
}

inline const Mat2& pauli(int k) {
    static const std::array<Mat2, 4> s = [] {
        std::array<Mat2, 4> m{};
        m[0](0, 0) = 1; m[0](1, 1) = 1;
        m[1](0, 1) = 1; m[1](1, 0) = 1;
        m[2](0, 1) = cplx(0, -1); m[2](1, 0) = cplx(0, 1);
        m[3](0, 0) = 1; m[3](1, 1) = -1;
        return m;
    }();
    return s[static_cast<std::size_t>(k)];
}

}  // namespace ybnet
