#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace ocl8 {

/// Small dense square matrix over an arbitrary commutative scalar ring.
/// Used for the 8x8 left-multiplication matrices and the 16x16 spinor
/// representation; sizes stay tiny so no effort is spent on blocking.
template <typename T>
class Matrix {
public:
    Matrix() : n_(0) {}
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    Matrix operator+(const Matrix& o) const {
        assert(n_ == o.n_);
        Matrix r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(n_ == o.n_);
        Matrix r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        assert(n_ == o.n_);
        Matrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const T& aik = a_[i * n_ + k];
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    r.a_[i * n_ + j] += aik * o.a_[k * n_ + j];
            }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(n_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    Matrix negated() const { return scaled(T(-1)); }

    std::vector<T> apply(const std::vector<T>& v) const {
        assert(v.size() == n_);
        std::vector<T> r(n_, T(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] += a_[i * n_ + j] * v[j];
        return r;
    }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const T& x : a_)
            if (!(x == T(0))) return false;
        return true;
    }

private:
    std::size_t n_;
    std::vector<T> a_;
};

}  // namespace ocl8
