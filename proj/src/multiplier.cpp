#include "ocl8/multiplier.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ocl8 {

SpectralField::SpectralField(GridSpec spec, FieldKind kind)
    : spec_(std::move(spec)), kind_(kind), comps_(components(kind)) {
    data_.assign(spec_.points() * std::size_t(comps_), {0.0, 0.0});
}

namespace {

void run_fft(std::complex<double>* buf, const GridSpec& spec, int direction) {
    std::vector<int> n(spec.n.begin(), spec.n.end());
    fftw_plan plan = fftw_plan_dft(spec.d, n.data(), reinterpret_cast<fftw_complex*>(buf),
                                   reinterpret_cast<fftw_complex*>(buf), direction,
                                   FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

}  // namespace

SpectralField forward_fft(const Field& f) {
    SpectralField s(f.spec(), f.kind());
    const std::size_t np = f.points();
    const int comps = f.comps();
    for (int c = 0; c < comps; ++c) {
        std::complex<double>* buf = s.comp(c);
        for (std::size_t i = 0; i < np; ++i) buf[i] = f.at(i)[c];
        run_fft(buf, f.spec(), FFTW_FORWARD);
    }
    return s;
}

Field inverse_fft(const SpectralField& s) {
    Field f(s.spec(), s.kind());
    const std::size_t np = s.points();
    const double scale = 1.0 / double(np);
    std::vector<std::complex<double>> buf(np);
    for (int c = 0; c < s.comps(); ++c) {
        std::copy(s.comp(c), s.comp(c) + np, buf.begin());
        run_fft(buf.data(), s.spec(), FFTW_BACKWARD);
        for (std::size_t i = 0; i < np; ++i) f.at(i)[c] = buf[i].real() * scale;
    }
    return f;
}

void apply_symbol(SpectralField& s, const Symbol& m) {
    const GridSpec& spec = s.spec();
    const std::size_t np = s.points();
    std::vector<double> xi(spec.d);
    std::vector<std::complex<double>> mult(np);
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        bool self_conj = true;
        for (int ax = 0; ax < spec.d; ++ax) {
            int k = mi[ax] <= spec.n[ax] / 2 ? mi[ax] : mi[ax] - spec.n[ax];
            xi[ax] = 2.0 * std::numbers::pi * double(k) / spec.len[ax];
            if (!(mi[ax] == 0 || mi[ax] == spec.n[ax] / 2)) self_conj = false;
        }
        mult[idx] = m(xi.data(), self_conj);
    });
    for (int c = 0; c < s.comps(); ++c) {
        std::complex<double>* buf = s.comp(c);
        for (std::size_t i = 0; i < np; ++i) buf[i] *= mult[i];
    }
}

Field apply_multiplier(const Field& f, const Symbol& m) {
    SpectralField s = forward_fft(f);
    apply_symbol(s, m);
    return inverse_fft(s);
}

namespace {

double xi_abs(const double* xi, int d) {
    double s = 0;
    for (int i = 0; i < d; ++i) s += xi[i] * xi[i];
    return std::sqrt(s);
}

Symbol riesz_symbol(int j, int d) {
    if (j < 1 || j > d) throw std::invalid_argument("riesz axis out of range");
    return [j, d](const double* xi, bool self_conj) -> std::complex<double> {
        double r = xi_abs(xi, d);
        if (r == 0.0 || self_conj) return {0.0, 0.0};
        return {0.0, -xi[j - 1] / r};
    };
}

}  // namespace

Field riesz(int j, const Field& g) {
    return apply_multiplier(g, riesz_symbol(j, g.spec().d));
}

Field poisson_extend(const Field& f, double t) {
    if (!(t > 0)) throw std::invalid_argument("poisson_extend requires t > 0");
    const int d = f.spec().d;
    return apply_multiplier(f, [t, d](const double* xi, bool) -> std::complex<double> {
        return {std::exp(-t * xi_abs(xi, d)), 0.0};
    });
}

Field conj_poisson(int j, const Field& f, double t) {
    if (!(t > 0)) throw std::invalid_argument("conj_poisson requires t > 0");
    const int d = f.spec().d;
    if (j < 1 || j > d) throw std::invalid_argument("conj_poisson axis out of range");
    return apply_multiplier(f, [j, d, t](const double* xi, bool self_conj) -> std::complex<double> {
        double r = xi_abs(xi, d);
        if (r == 0.0 || self_conj) return {0.0, 0.0};
        return {0.0, -xi[j - 1] / r * std::exp(-t * r)};
    });
}

std::vector<Field> riesz_all(const Field& f) {
    const int d = f.spec().d;
    SpectralField base = forward_fft(f);
    std::vector<Field> out;
    out.reserve(d);
    for (int j = 1; j <= d; ++j) {
        SpectralField s = base;
        apply_symbol(s, riesz_symbol(j, d));
        out.push_back(inverse_fft(s));
    }
    return out;
}

namespace {

// Shared skeleton for both Hilbert transforms: one forward transform per
// component, then per axis a symbol application and inverse transform whose
// result is folded into the accumulator immediately (keeps at most one
// intermediate field alive; matters for d=7 spinor grids).
template <typename Fold>
Field accumulate_riesz(const Field& f, Fold&& fold) {
    const int d = f.spec().d;
    Field out(f.spec(), f.kind());
    SpectralField base = forward_fft(f);
    for (int j = 1; j <= d; ++j) {
        SpectralField s = base;
        apply_symbol(s, riesz_symbol(j, d));
        Field rj = inverse_fft(s);
        fold(j, rj, out);
    }
    return out;
}

}  // namespace

Field hilbert_oct(const Field& f) {
    if (f.kind() != FieldKind::Oct) throw std::invalid_argument("hilbert_oct needs an octonion field");
    if (f.spec().d > 7) throw std::invalid_argument("hilbert_oct needs d <= 7");
    const std::size_t np = f.points();
    return accumulate_riesz(f, [&](int j, const Field& rj, Field& out) {
        Octonion<double> ej = Octonion<double>::unit(j);
        for (std::size_t i = 0; i < np; ++i) {
            Octonion<double> v = oct_mul(ej, rj.oct_at(i));
            double* p = out.at(i);
            for (int c = 0; c < 8; ++c) p[c] -= v[c];
        }
    });
}

Field hilbert_clifford(const Field& f) {
    if (f.kind() != FieldKind::Spinor)
        throw std::invalid_argument("hilbert_clifford needs a spinor field");
    if (f.spec().d > 7) throw std::invalid_argument("hilbert_clifford needs d <= 7");
    const std::size_t np = f.points();
    return accumulate_riesz(f, [&](int j, const Field& rj, Field& out) {
        Octonion<double> ej = Octonion<double>::unit(j);
        for (std::size_t i = 0; i < np; ++i) {
            SpinorPair<double> v = rep_apply(ej, rj.spinor_at(i));
            double* p = out.at(i);
            for (int c = 0; c < 8; ++c) {
                p[c] += v.plus[c];
                p[8 + c] += v.minus[c];
            }
        }
    });
}

Field e0_apply(const Field& f) {
    if (f.kind() != FieldKind::Spinor) throw std::invalid_argument("e0_apply needs a spinor field");
    Field out(f.spec(), FieldKind::Spinor);
    const std::size_t np = f.points();
    for (std::size_t i = 0; i < np; ++i) {
        const double* p = f.at(i);
        double* q = out.at(i);
        for (int c = 0; c < 8; ++c) {
            q[c] = p[8 + c];
            q[8 + c] = -p[c];
        }
    }
    return out;
}

Field hardy_project_oct(const Field& f) {
    return (f + hilbert_oct(f)).scaled(0.5);
}

Field hardy_project_clifford(const Field& f) {
    return (f + e0_apply(hilbert_clifford(f))).scaled(0.5);
}

Field remove_mean(const Field& f) {
    Field out = f;
    const std::size_t np = f.points();
    for (int c = 0; c < f.comps(); ++c) {
        std::vector<double> vals(np);
        for (std::size_t i = 0; i < np; ++i) vals[i] = f.at(i)[c];
        double mean = pairwise_sum(vals.data(), np) / double(np);
        for (std::size_t i = 0; i < np; ++i) out.at(i)[c] -= mean;
    }
    return out;
}

}  // namespace ocl8
