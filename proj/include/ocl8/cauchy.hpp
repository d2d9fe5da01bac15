#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ocl8/grid.hpp"
#include "ocl8/octonion.hpp"
#include "ocl8/spin8.hpp"

namespace ocl8 {

/// Surface area of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double omega(int n);

/// Poisson kernel P_t(x) = (2/omega_n) t / [t^2+|x|^2]^{n/2} on R^{n-1}.
double poisson_kernel(int n, double t, const double* x, int d);

/// Conjugate Poisson kernel Q_t^{(j)}(x) = (2/omega_n) x_j / [t^2+|x|^2]^{n/2}.
double conj_poisson_kernel(int n, int j, double t, const double* x, int d);

/// The octonionic Cauchy kernel E(x) = conj(x)/|x|^8 (n = 8), or its
/// general-dimension analog conj(x)/|x|^n using units e_0..e_{n-1}.
Octonion<double> cauchy_kernel_oct(const Octonion<double>& x, int n = 8);

/// Octonionic half-space Cauchy integral of boundary data f (octonion field
/// on a d-dimensional grid, n = d+1) at the interior point z = (t, xb):
///   C_O f(z) = (1/omega_n) int conj(z-u)/|z-u|^n f(u) du,
/// with the kernel multiplied on the left. Throws if t <= 0.
Octonion<double> cauchy_halfspace_oct(const Field& f, double t, const std::vector<double>& xb);

/// Clifford half-space Cauchy integral of spinor boundary data:
///   slot 1: (1/omega_n) int (z-u)/|z-u|^n f_1 du
///   slot 2: (1/omega_n) int conj(z-u)/|z-u|^n f_2 du.
SpinorPair<double> cauchy_halfspace_clifford(const Field& f, double t,
                                             const std::vector<double>& xb);

struct SphereQuadResult {
    Octonion<double> value;
    double std_error = 0.0;  // Monte Carlo standard error (Euclidean, all components)
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Sphere Cauchy reproduction: seeded uniform Monte Carlo over the sphere
/// |x-a| = r of the integrand (1/omega_8) K(x-z) (eta(x) F(x)), with the
/// inner product eta F taken first and the kernel applied second. Setting
/// `swap_parenthesization` evaluates (K eta) F instead, which differs for
/// generic octonion data since the product is not associative.
SphereQuadResult cauchy_sphere_oct(const std::function<Octonion<double>(const Octonion<double>&)>& F,
                                   const Octonion<double>& center, double radius,
                                   const Octonion<double>& z, std::size_t budget,
                                   std::uint64_t seed, bool swap_parenthesization = false);

}  // namespace ocl8
