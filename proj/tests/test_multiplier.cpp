#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ocl8/experiments.hpp"
#include "ocl8/grid.hpp"
#include "ocl8/multiplier.hpp"
#include "ocl8/spin8.hpp"

using namespace ocl8;

namespace {
constexpr double kPi = std::numbers::pi;

double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    Field d = a - b;
    for (std::size_t i = 0; i < d.points(); ++i) m = std::max(m, d.value_norm(i));
    return m;
}
}  // namespace

TEST_CASE("fft round trip is the identity") {
    GridSpec spec(2, 16, 3.0);
    Field f = random_band_limited(spec, FieldKind::Oct, 4, 31);
    Field g = inverse_fft(forward_fft(f));
    CHECK(max_abs_diff(f, g) < 1e-12);
}

TEST_CASE("riesz transform on a single mode: R sin = -cos") {
    const double L = 2.0 * kPi;
    GridSpec spec(1, 64, L);
    const double k = 5.0;
    Field s = sample_real([&](const double* x) { return std::sin(k * x[0]); }, spec);
    Field c = sample_real([&](const double* x) { return std::cos(k * x[0]); }, spec);
    CHECK(max_abs_diff(riesz(1, s), c.scaled(-1.0)) < 1e-11);
    // mean mode is annihilated
    Field ones = sample_real([](const double*) { return 1.0; }, spec);
    double m = 0.0;
    Field r = riesz(1, ones);
    for (std::size_t i = 0; i < r.points(); ++i) m = std::max(m, std::abs(r.at(i)[0]));
    CHECK(m < 1e-12);
    CHECK_THROWS_AS(riesz(2, s), std::invalid_argument);
}

TEST_CASE("poisson and conjugate poisson semigroups on single modes") {
    const double L = 2.0 * kPi;
    GridSpec spec(1, 64, L);
    const double k = 3.0, t = 0.7;
    Field s = sample_real([&](const double* x) { return std::sin(k * x[0]); }, spec);
    Field c = sample_real([&](const double* x) { return std::cos(k * x[0]); }, spec);
    CHECK(max_abs_diff(poisson_extend(c, t), c.scaled(std::exp(-t * k))) < 1e-11);
    CHECK(max_abs_diff(conj_poisson(1, s, t), c.scaled(-std::exp(-t * k))) < 1e-11);
    CHECK_THROWS_AS(poisson_extend(c, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(conj_poisson(1, c, -1.0), std::invalid_argument);
    // semigroup property P_s P_t = P_{s+t}
    CHECK(max_abs_diff(poisson_extend(poisson_extend(c, 0.3), 0.4), poisson_extend(c, 0.7)) <
          1e-11);
}

TEST_CASE("riesz identities on a 2-d band-limited field") {
    GridSpec spec(2, 32, 2.0 * kPi);
    Field g = random_band_limited(spec, FieldKind::Real, 8, 32);
    Field acc = g;
    for (int j = 1; j <= 2; ++j) acc = acc + riesz(j, riesz(j, g));
    for (std::size_t i = 0; i < acc.points(); ++i) CHECK(std::abs(acc.at(i)[0]) < 1e-11);
    CHECK(max_abs_diff(riesz(1, riesz(2, g)), riesz(2, riesz(1, g))) < 1e-12);
    std::vector<Field> all = riesz_all(g);
    CHECK(max_abs_diff(all[0], riesz(1, g)) < 1e-13);
    CHECK(max_abs_diff(all[1], riesz(2, g)) < 1e-13);
}

TEST_CASE("octonionic hilbert transform is an involution with hardy projection idempotent") {
    GridSpec spec(2, 16, 2.0 * kPi);
    Field f = random_band_limited(spec, FieldKind::Oct, 4, 33);
    CHECK(max_abs_diff(hilbert_oct(hilbert_oct(f)), f) < 1e-11);
    Field p = hardy_project_oct(f);
    CHECK(max_abs_diff(hardy_project_oct(p), p) < 1e-11);
    CHECK_THROWS_AS(hilbert_oct(random_band_limited(spec, FieldKind::Real, 4, 1)),
                    std::invalid_argument);
}

TEST_CASE("clifford hilbert transform agrees with the A(e_j) R_j composition") {
    GridSpec spec(2, 16, 2.0 * kPi);
    Field f = random_band_limited(spec, FieldKind::Spinor, 4, 34);
    Field got = hilbert_clifford(f);
    Field want(spec, FieldKind::Spinor);
    for (int j = 1; j <= 2; ++j) {
        Field rj = riesz(j, f);
        for (std::size_t i = 0; i < spec.points(); ++i) {
            SpinorPair<double> v = rep_apply(Octonion<double>::unit(j), rj.spinor_at(i));
            double* p = want.at(i);
            for (int c = 0; c < 8; ++c) {
                p[c] += v.plus[c];
                p[8 + c] += v.minus[c];
            }
        }
    }
    CHECK(max_abs_diff(got, want) < 1e-12);

    // (e0 H)^2 = id and the Hardy projection is idempotent
    Field eh = e0_apply(hilbert_clifford(f));
    CHECK(max_abs_diff(e0_apply(hilbert_clifford(eh)), f) < 1e-11);
    Field p = hardy_project_clifford(f);
    CHECK(max_abs_diff(hardy_project_clifford(p), p) < 1e-11);
    CHECK_THROWS_AS(e0_apply(random_band_limited(spec, FieldKind::Oct, 4, 1)),
                    std::invalid_argument);
}

TEST_CASE("e0 acts as a square root of -1") {
    GridSpec spec(2, 8, 1.0);
    Field f = random_band_limited(spec, FieldKind::Spinor, 2, 35);
    CHECK(max_abs_diff(e0_apply(e0_apply(f)), f.scaled(-1.0)) < 1e-14);
}

TEST_CASE("remove_mean zeroes every component mean") {
    GridSpec spec(2, 8, 1.0);
    Field f = sample(
        [](const double* x, double* out) {
            for (int c = 0; c < 8; ++c) out[c] = 1.0 + c + std::sin(2.0 * kPi * x[0]);
        },
        spec, FieldKind::Oct);
    Field g = remove_mean(f);
    for (int c = 0; c < 8; ++c) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.points(); ++i) s += g.at(i)[c];
        CHECK(std::abs(s) / double(g.points()) < 1e-13);
    }
}

TEST_CASE("band-limited fields are unit norm, mean zero, in band, and seed deterministic") {
    GridSpec spec(2, 16, 2.0);
    Field f = random_band_limited(spec, FieldKind::Real, 3, 99);
    CHECK(lp_norm(f, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    double mean = 0.0;
    for (std::size_t i = 0; i < f.points(); ++i) mean += f.at(i)[0];
    CHECK(std::abs(mean) / double(f.points()) < 1e-13);

    SpectralField s = forward_fft(f);
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        bool in_band = true;
        for (int ax = 0; ax < 2; ++ax) {
            int k = mi[ax] <= spec.n[ax] / 2 ? mi[ax] : mi[ax] - spec.n[ax];
            if (std::abs(k) > 3) in_band = false;
        }
        if (!in_band) CHECK(std::abs(s.comp(0)[idx]) < 1e-9);
    });

    Field f2 = random_band_limited(spec, FieldKind::Real, 3, 99);
    CHECK(f.data() == f2.data());
    Field f3 = random_band_limited(spec, FieldKind::Real, 3, 100);
    CHECK(max_abs_diff(f, f3) > 1e-3);
    CHECK_THROWS_AS(random_band_limited(spec, FieldKind::Real, 8, 1), std::invalid_argument);
}
