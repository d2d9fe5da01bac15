#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ocl8 {

/// Sign of the blade product e_A e_B in Cl_n with e_i e_i = -1.
/// Basis subsets are n-bit masks; the result blade is A xor B.
/// Transpositions are counted by moving each generator of B (ascending)
/// through the generators of A above it, then contracting repeats.
inline int blade_product_sign(unsigned a, unsigned b) {
    int sign = 1;
    for (unsigned j = 0; b != 0; ++j) {
        unsigned bit = 1u << j;
        if (!(b & bit)) continue;
        b &= ~bit;
        unsigned above = a >> (j + 1);
        if (std::popcount(above) & 1) sign = -sign;
        if (a & bit) {
            sign = -sign;  // e_j e_j = -1
            a &= ~bit;
        } else {
            a |= bit;
        }
    }
    return sign;
}

/// Sign of the Clifford star conjugation on the blade e_A.
inline int star_sign(unsigned a) {
    int k = std::popcount(a);
    return (k * (k + 1) / 2) % 2 ? -1 : 1;
}

/// Element of the universal Clifford algebra Cl_n, n <= 8, with dense
/// coefficients indexed by subset bitmask.
template <typename T>
class Multivector {
public:
    explicit Multivector(int n) : n_(n), c_(std::size_t(1) << n, T(0)) {
        assert(n >= 1 && n <= 8);
    }

    static Multivector scalar(int n, const T& s) {
        Multivector m(n);
        m.c_[0] = s;
        return m;
    }

    static Multivector blade(int n, unsigned mask, const T& s = T(1)) {
        Multivector m(n);
        m.c_.at(mask) = s;
        return m;
    }

    int dim() const { return n_; }
    std::size_t size() const { return c_.size(); }

    const T& operator[](unsigned mask) const { return c_[mask]; }
    T& operator[](unsigned mask) { return c_[mask]; }

    Multivector operator+(const Multivector& o) const {
        check_dim(o);
        Multivector r(n_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    Multivector operator-(const Multivector& o) const {
        check_dim(o);
        Multivector r(n_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }

    Multivector scaled(const T& s) const {
        Multivector r(n_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    bool operator==(const Multivector& o) const { return n_ == o.n_ && c_ == o.c_; }

    bool is_zero() const {
        for (const T& x : c_)
            if (!(x == T(0))) return false;
        return true;
    }

    void check_dim(const Multivector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("multivector dimension mismatch");
    }

private:
    int n_;
    std::vector<T> c_;
};

template <typename T>
Multivector<T> geometric_product(const Multivector<T>& a, const Multivector<T>& b) {
    a.check_dim(b);
    Multivector<T> r(a.dim());
    const unsigned n = unsigned(a.size());
    for (unsigned i = 0; i < n; ++i) {
        if (a[i] == T(0)) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (b[j] == T(0)) continue;
            T term = a[i] * b[j];
            if (blade_product_sign(i, j) < 0)
                r[i ^ j] -= term;
            else
                r[i ^ j] += term;
        }
    }
    return r;
}

template <typename T>
Multivector<T> star_conj(const Multivector<T>& a) {
    Multivector<T> r(a.dim());
    for (unsigned i = 0; i < a.size(); ++i)
        r[i] = star_sign(i) < 0 ? -a[i] : a[i];
    return r;
}

/// Embed a vector of R^n as a grade-1 multivector; its square is -|v|^2.
template <typename T>
Multivector<T> embed_vector(const std::vector<T>& v) {
    const int n = int(v.size());
    if (n < 1 || n > 8) throw std::invalid_argument("vector length must be 1..8");
    Multivector<T> r(n);
    for (int i = 0; i < n; ++i) r[1u << i] = v[i];
    return r;
}

}  // namespace ocl8
