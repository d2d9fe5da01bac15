#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "ocl8/matrix.hpp"

namespace ocl8 {

/// Basis multiplication table for the octonions: e_i * e_j = sign[i][j] * e_{idx[i][j]}.
///
/// The table is generated by Cayley-Dickson doubling starting from the reals,
/// so O = H + H*l with the product (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
/// This fixes one of the 480 equivalent unit conventions; e_0 is the real unit.
struct OctTable {
    int sign[8][8];
    int idx[8][8];
};

namespace detail {

inline OctTable build_oct_table() {
    // sign/idx at the current doubling level; level 0 is the reals.
    int sign[8][8] = {{1}};
    int idx[8][8] = {{0}};
    for (int m = 1; m <= 4; m <<= 1) {
        int nsign[8][8];
        int nidx[8][8];
        auto conj_sign = [&](int k) { return k == 0 ? 1 : -1; };
        for (int i = 0; i < 2 * m; ++i)
            for (int j = 0; j < 2 * m; ++j) {
                int s, k;
                if (i < m && j < m) {  // (a,0)(c,0) = (ac, 0)
                    s = sign[i][j];
                    k = idx[i][j];
                } else if (i < m) {  // (a,0)(0,d) = (0, da)
                    s = sign[j - m][i];
                    k = idx[j - m][i] + m;
                } else if (j < m) {  // (0,b)(c,0) = (0, b conj(c))
                    s = conj_sign(j) * sign[i - m][j];
                    k = idx[i - m][j] + m;
                } else {  // (0,b)(0,d) = (-conj(d) b, 0)
                    s = -conj_sign(j - m) * sign[j - m][i - m];
                    k = idx[j - m][i - m];
                }
                nsign[i][j] = s;
                nidx[i][j] = k;
            }
        for (int i = 0; i < 2 * m; ++i)
            for (int j = 0; j < 2 * m; ++j) {
                sign[i][j] = nsign[i][j];
                idx[i][j] = nidx[i][j];
            }
    }
    OctTable t;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            t.sign[i][j] = sign[i][j];
            t.idx[i][j] = idx[i][j];
        }
    return t;
}

}  // namespace detail

inline const OctTable& oct_table() {
    static const OctTable t = detail::build_oct_table();
    return t;
}

/// Octonion over an exact-rational or floating scalar.
template <typename T>
class Octonion {
public:
    Octonion() { c_.fill(T(0)); }
    explicit Octonion(const std::array<T, 8>& c) : c_(c) {}
    explicit Octonion(const T& real) {
        c_.fill(T(0));
        c_[0] = real;
    }

    static Octonion unit(int i) {
        Octonion o;
        o.c_[i] = T(1);
        return o;
    }

    const T& operator[](int i) const { return c_[i]; }
    T& operator[](int i) { return c_[i]; }
    const std::array<T, 8>& coeffs() const { return c_; }

    Octonion operator+(const Octonion& o) const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    Octonion operator-(const Octonion& o) const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }

    Octonion operator-() const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = -c_[i];
        return r;
    }

    Octonion scaled(const T& s) const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    bool operator==(const Octonion& o) const { return c_ == o.c_; }
    bool operator!=(const Octonion& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const T& x : c_)
            if (!(x == T(0))) return false;
        return true;
    }

    T real() const { return c_[0]; }

private:
    std::array<T, 8> c_;
};

/// Product under an explicit table; used by negative-control fixtures that
/// corrupt a sign entry.
template <typename T>
Octonion<T> oct_mul_with(const OctTable& t, const Octonion<T>& a, const Octonion<T>& b) {
    Octonion<T> r;
    for (int i = 0; i < 8; ++i) {
        if (a[i] == T(0)) continue;
        for (int j = 0; j < 8; ++j) {
            if (b[j] == T(0)) continue;
            T term = a[i] * b[j];
            if (t.sign[i][j] < 0)
                r[t.idx[i][j]] -= term;
            else
                r[t.idx[i][j]] += term;
        }
    }
    return r;
}

template <typename T>
Octonion<T> oct_mul(const Octonion<T>& a, const Octonion<T>& b) {
    return oct_mul_with(oct_table(), a, b);
}

template <typename T>
Octonion<T> oct_conj(const Octonion<T>& a) {
    Octonion<T> r = -a;
    r[0] = a[0];
    return r;
}

/// (p,q) = Re(p conj(q)) = sum_i p_i q_i.
template <typename T>
T oct_inner(const Octonion<T>& p, const Octonion<T>& q) {
    T s(0);
    for (int i = 0; i < 8; ++i) s += p[i] * q[i];
    return s;
}

template <typename T>
T oct_norm_sq(const Octonion<T>& p) {
    return oct_inner(p, p);
}

/// [a,b,c] = (ab)c - a(bc).
template <typename T>
Octonion<T> associator(const Octonion<T>& a, const Octonion<T>& b, const Octonion<T>& c) {
    return oct_mul(oct_mul(a, b), c) - oct_mul(a, oct_mul(b, c));
}

/// 8x8 matrix of L_q, i.e. M vec(p) = vec(q p).
template <typename T>
Matrix<T> left_mul_matrix_with(const OctTable& t, const Octonion<T>& q) {
    Matrix<T> m(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            // column j is vec(q e_j)
            T v = q[i];
            if (t.sign[i][j] < 0) v = -v;
            m(t.idx[i][j], j) += v;
        }
    return m;
}

template <typename T>
Matrix<T> left_mul_matrix(const Octonion<T>& q) {
    return left_mul_matrix_with(oct_table(), q);
}

inline double oct_abs(const Octonion<double>& p) {
    return std::sqrt(oct_norm_sq(p));
}

}  // namespace ocl8
