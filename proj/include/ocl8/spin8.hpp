#pragma once

#include <array>
#include <cstdint>

#include "ocl8/matrix.hpp"
#include "ocl8/octonion.hpp"

namespace ocl8 {

/// Element of the spinor space O+O.
template <typename T>
struct SpinorPair {
    Octonion<T> plus;   // f1
    Octonion<T> minus;  // f2

    SpinorPair operator+(const SpinorPair& o) const { return {plus + o.plus, minus + o.minus}; }
    SpinorPair operator-(const SpinorPair& o) const { return {plus - o.plus, minus - o.minus}; }
    bool operator==(const SpinorPair& o) const { return plus == o.plus && minus == o.minus; }
};

/// Coefficients of the splitting O+O = H0 (1,1)^T + e0 H0 (1,-1)^T.
template <typename T>
struct Splitting {
    Octonion<T> h0_part;  // coefficient p of (1,1)^T
    Octonion<T> h1_part;  // coefficient q of (1,-1)^T
};

/// vec(SpinorPair) = (vec(plus), vec(minus)) in R^16.
template <typename T>
std::vector<T> vec(const SpinorPair<T>& s) {
    std::vector<T> v(16);
    for (int i = 0; i < 8; ++i) {
        v[i] = s.plus[i];
        v[8 + i] = s.minus[i];
    }
    return v;
}

template <typename T>
SpinorPair<T> unvec(const std::vector<T>& v) {
    SpinorPair<T> s;
    for (int i = 0; i < 8; ++i) {
        s.plus[i] = v[i];
        s.minus[i] = v[8 + i];
    }
    return s;
}

/// The Cl_8 realization A(q) = [[0, L_q], [-L_{conj q}, 0]] on O+O.
/// The vector q in R^8 is read as an octonion with e_0 the real unit.
template <typename T>
Matrix<T> rep_vector(const Octonion<T>& q) {
    Matrix<T> lq = left_mul_matrix(q);
    Matrix<T> lqc = left_mul_matrix(oct_conj(q));
    Matrix<T> m(16);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            m(i, 8 + j) = lq(i, j);
            m(8 + i, j) = -lqc(i, j);
        }
    return m;
}

/// Image of the blade e_A under the representation: the ordered product of
/// rep_vector over the generators of A, ascending, matching the Multivector
/// blade ordering. rep_blade(0) = I_16.
template <typename T>
Matrix<T> rep_blade(unsigned mask) {
    Matrix<T> m = Matrix<T>::identity(16);
    for (int j = 0; j < 8; ++j)
        if (mask & (1u << j)) m = m * rep_vector(Octonion<T>::unit(j));
    return m;
}

/// Apply A(q) directly: (f1, f2) -> (q f2, -conj(q) f1).
template <typename T>
SpinorPair<T> rep_apply(const Octonion<T>& q, const SpinorPair<T>& s) {
    return {oct_mul(q, s.minus), -oct_mul(oct_conj(q), s.plus)};
}

template <typename T>
Splitting<T> split(const SpinorPair<T>& s) {
    Splitting<T> r;
    Octonion<T> sum = s.plus + s.minus;
    Octonion<T> dif = s.plus - s.minus;
    r.h0_part = sum.scaled(T(1) / T(2));
    r.h1_part = dif.scaled(T(1) / T(2));
    return r;
}

template <typename T>
SpinorPair<T> unsplit(const Splitting<T>& sp) {
    return {sp.h0_part + sp.h1_part, sp.h0_part - sp.h1_part};
}

/// Projection of O+O onto H0 = O (1,1)^T.
template <typename T>
SpinorPair<T> tan_projection(const SpinorPair<T>& s) {
    Octonion<T> p = (s.plus + s.minus).scaled(T(1) / T(2));
    return {p, p};
}

}  // namespace ocl8
