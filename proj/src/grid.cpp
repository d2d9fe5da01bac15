#include "ocl8/grid.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ocl8 {

GridSpec::GridSpec(int dim, int points_per_axis, double period, double origin_offset)
    : d(dim),
      n(dim, points_per_axis),
      len(dim, period),
      origin(dim, origin_offset) {
    validate();
}

GridSpec::GridSpec(std::vector<int> n_, std::vector<double> len_, std::vector<double> origin_)
    : d(int(n_.size())), n(std::move(n_)), len(std::move(len_)), origin(std::move(origin_)) {
    validate();
}

void GridSpec::validate() const {
    if (d < 1 || d > 8) throw std::invalid_argument("grid dimension must be 1..8");
    if (int(n.size()) != d || int(len.size()) != d || int(origin.size()) != d)
        throw std::invalid_argument("grid spec size mismatch");
    for (int i = 0; i < d; ++i) {
        if (n[i] < 4 || n[i] % 2 != 0)
            throw std::invalid_argument("grid N must be even and >= 4");
        if (!(len[i] > 0)) throw std::invalid_argument("grid period must be positive");
    }
}

std::size_t GridSpec::points() const {
    std::size_t p = 1;
    for (int i = 0; i < d; ++i) p *= std::size_t(n[i]);
    return p;
}

double GridSpec::cell_volume() const {
    double v = 1;
    for (int i = 0; i < d; ++i) v *= h(i);
    return v;
}

bool GridSpec::operator==(const GridSpec& o) const {
    return d == o.d && n == o.n && len == o.len && origin == o.origin;
}

Field::Field(GridSpec spec, FieldKind kind)
    : spec_(std::move(spec)), kind_(kind), comps_(components(kind)) {
    data_.assign(spec_.points() * std::size_t(comps_), 0.0);
}

Octonion<double> Field::oct_at(std::size_t point) const {
    Octonion<double> o;
    const double* p = at(point);
    for (int i = 0; i < 8; ++i) o[i] = p[i];
    return o;
}

void Field::set_oct(std::size_t point, const Octonion<double>& v) {
    double* p = at(point);
    for (int i = 0; i < 8; ++i) p[i] = v[i];
}

SpinorPair<double> Field::spinor_at(std::size_t point) const {
    SpinorPair<double> s;
    const double* p = at(point);
    for (int i = 0; i < 8; ++i) {
        s.plus[i] = p[i];
        s.minus[i] = p[8 + i];
    }
    return s;
}

void Field::set_spinor(std::size_t point, const SpinorPair<double>& v) {
    double* p = at(point);
    for (int i = 0; i < 8; ++i) {
        p[i] = v.plus[i];
        p[8 + i] = v.minus[i];
    }
}

double Field::value_norm(std::size_t point) const {
    const double* p = at(point);
    double s = 0;
    for (int c = 0; c < comps_; ++c) s += p[c] * p[c];
    return std::sqrt(s);
}

static void check_same_shape(const Field& a, const Field& b) {
    if (!(a.spec() == b.spec()) || a.kind() != b.kind())
        throw std::invalid_argument("field shape mismatch");
}

Field Field::operator+(const Field& o) const {
    check_same_shape(*this, o);
    Field r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Field Field::operator-(const Field& o) const {
    check_same_shape(*this, o);
    Field r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Field Field::scaled(double s) const {
    Field r = *this;
    for (double& x : r.data_) x *= s;
    return r;
}

double pairwise_sum(const double* a, std::size_t n) {
    if (n <= 8) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += a[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

Field sample(const std::function<void(const double*, double*)>& fn, const GridSpec& spec,
             FieldKind kind) {
    Field f(spec, kind);
    std::vector<double> x(spec.d);
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        for (int ax = 0; ax < spec.d; ++ax) x[ax] = spec.coord(ax, mi[ax]);
        fn(x.data(), f.at(idx));
        for (int c = 0; c < f.comps(); ++c)
            if (!std::isfinite(f.at(idx)[c]))
                throw std::domain_error("sample produced a non-finite value");
    });
    return f;
}

Field sample_real(const std::function<double(const double*)>& fn, const GridSpec& spec) {
    return sample([&](const double* x, double* out) { out[0] = fn(x); }, spec, FieldKind::Real);
}

Field sample_oct(const std::function<Octonion<double>(const double*)>& fn, const GridSpec& spec) {
    return sample(
        [&](const double* x, double* out) {
            Octonion<double> v = fn(x);
            for (int i = 0; i < 8; ++i) out[i] = v[i];
        },
        spec, FieldKind::Oct);
}

// Flat-index offset of the +-1 neighbor along an axis with periodic wrap.
namespace {
struct Strides {
    std::vector<std::size_t> s;
    explicit Strides(const GridSpec& spec) : s(spec.d) {
        std::size_t acc = 1;
        for (int ax = spec.d - 1; ax >= 0; --ax) {
            s[ax] = acc;
            acc *= std::size_t(spec.n[ax]);
        }
    }
};
}  // namespace

Field partial_fd(const Field& f, int axis) {
    const GridSpec& spec = f.spec();
    if (axis < 0 || axis >= spec.d) throw std::invalid_argument("axis out of range");
    Field r(spec, f.kind());
    Strides st(spec);
    const double inv2h = 1.0 / (2.0 * spec.h(axis));
    const int nax = spec.n[axis];
    const std::size_t stride = st.s[axis];
    const int comps = f.comps();
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        std::size_t up = mi[axis] + 1 < nax ? idx + stride : idx - std::size_t(nax - 1) * stride;
        std::size_t dn = mi[axis] > 0 ? idx - stride : idx + std::size_t(nax - 1) * stride;
        const double* pu = f.at(up);
        const double* pd = f.at(dn);
        double* out = r.at(idx);
        for (int c = 0; c < comps; ++c) out[c] = (pu[c] - pd[c]) * inv2h;
    });
    return r;
}

Field laplacian_fd(const Field& f) {
    const GridSpec& spec = f.spec();
    Field r(spec, f.kind());
    Strides st(spec);
    const int comps = f.comps();
    std::vector<double> invh2(spec.d);
    for (int ax = 0; ax < spec.d; ++ax) invh2[ax] = 1.0 / (spec.h(ax) * spec.h(ax));
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        double* out = r.at(idx);
        const double* pc = f.at(idx);
        for (int ax = 0; ax < spec.d; ++ax) {
            const int nax = spec.n[ax];
            const std::size_t stride = st.s[ax];
            std::size_t up =
                mi[ax] + 1 < nax ? idx + stride : idx - std::size_t(nax - 1) * stride;
            std::size_t dn = mi[ax] > 0 ? idx - stride : idx + std::size_t(nax - 1) * stride;
            const double* pu = f.at(up);
            const double* pd = f.at(dn);
            for (int c = 0; c < comps; ++c)
                out[c] += (pu[c] - 2.0 * pc[c] + pd[c]) * invh2[ax];
        }
    });
    return r;
}

Field oct_cauchy_op(const Field& f) {
    if (f.kind() != FieldKind::Oct) throw std::invalid_argument("oct_cauchy_op needs an octonion field");
    if (f.spec().d != 8) throw std::invalid_argument("oct_cauchy_op needs a d=8 grid");
    const GridSpec& spec = f.spec();
    Field r(spec, FieldKind::Oct);
    for (int ax = 0; ax < 8; ++ax) {
        Field df = partial_fd(f, ax);
        Octonion<double> ej = Octonion<double>::unit(ax);
        const std::size_t np = spec.points();
        for (std::size_t idx = 0; idx < np; ++idx) {
            Octonion<double> v = oct_mul(ej, df.oct_at(idx));
            double* out = r.at(idx);
            for (int c = 0; c < 8; ++c) out[c] += v[c];
        }
    }
    return r;
}

Field dirac8_fd(const Field& f) {
    if (f.kind() != FieldKind::Spinor) throw std::invalid_argument("dirac8_fd needs a spinor field");
    if (f.spec().d != 8) throw std::invalid_argument("dirac8_fd needs a d=8 grid");
    const GridSpec& spec = f.spec();
    Field r(spec, FieldKind::Spinor);
    for (int ax = 0; ax < 8; ++ax) {
        Field df = partial_fd(f, ax);
        Octonion<double> ej = Octonion<double>::unit(ax);
        Octonion<double> ejc = oct_conj(ej);
        const std::size_t np = spec.points();
        for (std::size_t idx = 0; idx < np; ++idx) {
            SpinorPair<double> s = df.spinor_at(idx);
            // (f1,f2) -> (e_j f2, -conj(e_j) f1) accumulated over axes
            Octonion<double> top = oct_mul(ej, s.minus);
            Octonion<double> bot = -oct_mul(ejc, s.plus);
            double* out = r.at(idx);
            for (int c = 0; c < 8; ++c) {
                out[c] += top[c];
                out[8 + c] += bot[c];
            }
        }
    }
    return r;
}

double lp_norm(const Field& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm requires p >= 1");
    const std::size_t np = f.points();
    std::vector<double> terms(np);
    for (std::size_t i = 0; i < np; ++i) terms[i] = std::pow(f.value_norm(i), p);
    double s = pairwise_sum(terms.data(), np) * f.spec().cell_volume();
    return std::pow(s, 1.0 / p);
}

double integrate_weighted_real(const Field& f,
                               const std::function<double(const double*)>& weight) {
    if (f.kind() != FieldKind::Real) throw std::invalid_argument("real field expected");
    const GridSpec& spec = f.spec();
    std::vector<double> x(spec.d);
    std::vector<double> terms(spec.points());
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        for (int ax = 0; ax < spec.d; ++ax) x[ax] = spec.coord(ax, mi[ax]);
        double w = weight(x.data());
        if (!std::isfinite(w)) throw std::domain_error("non-finite weight on grid");
        terms[idx] = w * f.at(idx)[0];
    });
    return pairwise_sum(terms.data(), terms.size()) * spec.cell_volume();
}

Octonion<double> integrate_weighted_oct(
    const Field& f, const std::function<Octonion<double>(const double*)>& weight) {
    if (f.kind() != FieldKind::Oct) throw std::invalid_argument("octonion field expected");
    const GridSpec& spec = f.spec();
    std::vector<double> x(spec.d);
    std::array<std::vector<double>, 8> terms;
    for (auto& t : terms) t.resize(spec.points());
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        for (int ax = 0; ax < spec.d; ++ax) x[ax] = spec.coord(ax, mi[ax]);
        Octonion<double> w = weight(x.data());
        for (int c = 0; c < 8; ++c)
            if (!std::isfinite(w[c])) throw std::domain_error("non-finite weight on grid");
        Octonion<double> v = oct_mul(w, f.oct_at(idx));  // kernel on the left
        for (int c = 0; c < 8; ++c) terms[c][idx] = v[c];
    });
    Octonion<double> out;
    const double vol = spec.cell_volume();
    for (int c = 0; c < 8; ++c) out[c] = pairwise_sum(terms[c].data(), terms[c].size()) * vol;
    return out;
}

void dump_csv(const Field& f, std::ostream& os) {
    const GridSpec& spec = f.spec();
    os.precision(17);
    for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
        for (int ax = 0; ax < spec.d; ++ax) os << spec.coord(ax, mi[ax]) << ',';
        const double* p = f.at(idx);
        for (int c = 0; c < f.comps(); ++c) {
            os << p[c];
            os << (c + 1 == f.comps() ? '\n' : ',');
        }
    });
}

namespace {
template <typename T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
template <typename T>
T get(std::istream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
}  // namespace

void dump_binary(const Field& f, std::ostream& os) {
    os.write("CDF1", 4);
    put<std::uint32_t>(os, std::uint32_t(f.spec().d));
    put<std::uint32_t>(os, std::uint32_t(f.kind()));
    for (int ax = 0; ax < f.spec().d; ++ax) put<std::uint32_t>(os, std::uint32_t(f.spec().n[ax]));
    for (int ax = 0; ax < f.spec().d; ++ax) put<double>(os, f.spec().len[ax]);
    os.write(reinterpret_cast<const char*>(f.data().data()),
             std::streamsize(f.data().size() * sizeof(double)));
}

Field load_binary(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "CDF1", 4) != 0)
        throw std::runtime_error("bad field file magic");
    int d = int(get<std::uint32_t>(is));
    int kind = int(get<std::uint32_t>(is));
    if (kind < 0 || kind > 2) throw std::runtime_error("bad field kind tag");
    std::vector<int> n(d);
    for (int ax = 0; ax < d; ++ax) n[ax] = int(get<std::uint32_t>(is));
    std::vector<double> len(d);
    for (int ax = 0; ax < d; ++ax) len[ax] = get<double>(is);
    Field f(GridSpec(n, len, std::vector<double>(d, 0.0)), FieldKind(kind));
    is.read(reinterpret_cast<char*>(f.data().data()),
            std::streamsize(f.data().size() * sizeof(double)));
    if (!is) throw std::runtime_error("truncated field file");
    return f;
}

void dump_binary_file(const Field& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    dump_binary(f, os);
}

Field load_binary_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    return load_binary(is);
}

}  // namespace ocl8
