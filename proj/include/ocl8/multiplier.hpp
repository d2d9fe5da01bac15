#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "ocl8/grid.hpp"

namespace ocl8 {

/// DFT coefficients per real component of a Field, same point ordering.
/// Convention: fhat(xi) = sum_x f(x) e^{-i xi.x} h^d with xi = 2 pi k / L;
/// the h^d factor is deferred so coefficients here are plain FFTW output.
class SpectralField {
public:
    SpectralField() = default;
    SpectralField(GridSpec spec, FieldKind kind);

    const GridSpec& spec() const { return spec_; }
    FieldKind kind() const { return kind_; }
    int comps() const { return comps_; }
    std::size_t points() const { return spec_.points(); }

    std::complex<double>* comp(int c) { return data_.data() + std::size_t(c) * points(); }
    const std::complex<double>* comp(int c) const {
        return data_.data() + std::size_t(c) * points();
    }

private:
    GridSpec spec_;
    FieldKind kind_ = FieldKind::Real;
    int comps_ = 1;
    std::vector<std::complex<double>> data_;
};

/// A Fourier multiplier evaluated per mode. `xi` has d entries 2 pi k / L;
/// `self_conj` marks modes equal to their own negative (k in {0, N/2}^d),
/// where the imaginary part must vanish to preserve realness.
using Symbol = std::function<std::complex<double>(const double* xi, bool self_conj)>;

SpectralField forward_fft(const Field& f);
Field inverse_fft(const SpectralField& s);

/// Apply a scalar symbol to every component in place.
void apply_symbol(SpectralField& s, const Symbol& m);

Field apply_multiplier(const Field& f, const Symbol& m);

/// j-th Riesz transform (j = 1..d, acting along grid axis j-1),
/// symbol -i xi_j / |xi|, zero on the mean mode and on self-conjugate modes.
Field riesz(int j, const Field& g);

/// Poisson semigroup e^{-t |xi|}, t > 0.
Field poisson_extend(const Field& f, double t);

/// Conjugate Poisson operator, symbol -i xi_j/|xi| e^{-t|xi|}.
Field conj_poisson(int j, const Field& f, double t);

/// Octonionic Hilbert transform H_O = -sum_j e_j R_j on an octonion field.
Field hilbert_oct(const Field& f);

/// Clifford Hilbert transform H = sum_j A(e_j) R_j on a spinor field.
Field hilbert_clifford(const Field& f);

/// Pointwise action of A(e_0): (f1, f2) -> (f2, -f1).
Field e0_apply(const Field& f);

/// Hardy projection (f + H_O f)/2.
Field hardy_project_oct(const Field& f);

/// Hardy projection (f + e_0 H f)/2.
Field hardy_project_clifford(const Field& f);

/// Subtract the mean of every component.
Field remove_mean(const Field& f);

/// All of R_1 f .. R_d f with one forward transform per component.
std::vector<Field> riesz_all(const Field& f);

}  // namespace ocl8
