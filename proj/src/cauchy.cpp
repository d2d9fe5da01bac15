#include "ocl8/cauchy.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ocl8 {

double omega(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("omega defined for n in 2..8");
    return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

double poisson_kernel(int n, double t, const double* x, int d) {
    double r2 = t * t;
    for (int i = 0; i < d; ++i) r2 += x[i] * x[i];
    return 2.0 / omega(n) * t / std::pow(r2, n / 2.0);
}

double conj_poisson_kernel(int n, int j, double t, const double* x, int d) {
    if (j < 1 || j > d) throw std::invalid_argument("conj_poisson_kernel axis out of range");
    double r2 = t * t;
    for (int i = 0; i < d; ++i) r2 += x[i] * x[i];
    return 2.0 / omega(n) * x[j - 1] / std::pow(r2, n / 2.0);
}

Octonion<double> cauchy_kernel_oct(const Octonion<double>& x, int n) {
    double r2 = oct_norm_sq(x);
    if (r2 == 0.0) throw std::domain_error("Cauchy kernel evaluated at its singularity");
    return oct_conj(x).scaled(1.0 / std::pow(r2, n / 2.0));
}

namespace {

// z - u as an octonion, z = (t, xb) interior, u on the boundary grid.
inline Octonion<double> interior_diff(double t, const std::vector<double>& xb, const double* u,
                                      int d) {
    Octonion<double> w;
    w[0] = t;
    for (int j = 0; j < d; ++j) w[j + 1] = xb[j] - u[j];
    return w;
}

}  // namespace

Octonion<double> cauchy_halfspace_oct(const Field& f, double t, const std::vector<double>& xb) {
    if (f.kind() != FieldKind::Oct) throw std::invalid_argument("octonion boundary field expected");
    const int d = f.spec().d;
    if (int(xb.size()) != d) throw std::invalid_argument("interior point dimension mismatch");
    if (!(t > 0)) throw std::invalid_argument("interior point must have t > 0");
    const int n = d + 1;
    const double c = 1.0 / omega(n);
    return integrate_weighted_oct(f, [&](const double* u) {
               Octonion<double> w = interior_diff(t, xb, u, d);
               return cauchy_kernel_oct(w, n).scaled(c);
           });
}

SpinorPair<double> cauchy_halfspace_clifford(const Field& f, double t,
                                             const std::vector<double>& xb) {
    if (f.kind() != FieldKind::Spinor) throw std::invalid_argument("spinor boundary field expected");
    const int d = f.spec().d;
    if (int(xb.size()) != d) throw std::invalid_argument("interior point dimension mismatch");
    if (!(t > 0)) throw std::invalid_argument("interior point must have t > 0");
    const int n = d + 1;
    const GridSpec& spec = f.spec();
    const double c = spec.cell_volume() / omega(n);
    std::vector<double> x(d);
    const std::size_t np = spec.points();
    std::array<std::vector<double>, 16> terms;
    for (auto& v : terms) v.resize(np);
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        for (int ax = 0; ax < d; ++ax) x[ax] = spec.coord(ax, mi[ax]);
        Octonion<double> w = interior_diff(t, xb, x.data(), d);
        double r2 = oct_norm_sq(w);
        double scale = 1.0 / std::pow(r2, n / 2.0);
        SpinorPair<double> s = f.spinor_at(idx);
        Octonion<double> top = oct_mul(w, s.plus).scaled(scale);
        Octonion<double> bot = oct_mul(oct_conj(w), s.minus).scaled(scale);
        for (int cix = 0; cix < 8; ++cix) {
            terms[cix][idx] = top[cix];
            terms[8 + cix][idx] = bot[cix];
        }
    });
    SpinorPair<double> out;
    for (int cix = 0; cix < 8; ++cix) {
        out.plus[cix] = pairwise_sum(terms[cix].data(), np) * c;
        out.minus[cix] = pairwise_sum(terms[8 + cix].data(), np) * c;
    }
    return out;
}

SphereQuadResult cauchy_sphere_oct(
    const std::function<Octonion<double>(const Octonion<double>&)>& F,
    const Octonion<double>& center, double radius, const Octonion<double>& z, std::size_t budget,
    std::uint64_t seed, bool swap_parenthesization) {
    double dz = oct_abs(z - center);
    if (!(dz < radius)) throw std::invalid_argument("evaluation point must be strictly interior");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::array<double, 8> sum{}, sum_sq{};
    const double r7 = std::pow(radius, 7.0);
    for (std::size_t s = 0; s < budget; ++s) {
        Octonion<double> eta;
        double nrm = 0;
        do {
            for (int i = 0; i < 8; ++i) eta[i] = gauss(rng);
            nrm = oct_abs(eta);
        } while (nrm == 0.0);
        eta = eta.scaled(1.0 / nrm);
        Octonion<double> x = center + eta.scaled(radius);
        Octonion<double> k = cauchy_kernel_oct(x - z, 8);
        Octonion<double> v = swap_parenthesization ? oct_mul(oct_mul(k, eta), F(x))
                                                   : oct_mul(k, oct_mul(eta, F(x)));
        for (int i = 0; i < 8; ++i) {
            sum[i] += v[i];
            sum_sq[i] += v[i] * v[i];
        }
    }
    SphereQuadResult res;
    res.samples = budget;
    res.seed = seed;
    double var_total = 0;
    for (int i = 0; i < 8; ++i) {
        double mean = sum[i] / double(budget);
        res.value[i] = r7 * mean;
        double var = sum_sq[i] / double(budget) - mean * mean;
        var_total += var * r7 * r7 / double(budget);
    }
    res.std_error = std::sqrt(std::max(0.0, var_total));
    return res;
}

}  // namespace ocl8
