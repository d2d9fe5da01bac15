#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ocl8/octonion.hpp"
#include "ocl8/spin8.hpp"

namespace ocl8 {

enum class FieldKind : int { Real = 0, Oct = 1, Spinor = 2 };

inline int components(FieldKind k) {
    switch (k) {
        case FieldKind::Real: return 1;
        case FieldKind::Oct: return 8;
        default: return 16;
    }
}

/// Uniform periodic grid: per-axis point count, period and origin offset.
struct GridSpec {
    int d = 0;
    std::vector<int> n;
    std::vector<double> len;
    std::vector<double> origin;

    GridSpec() = default;
    GridSpec(int dim, int points_per_axis, double period, double origin_offset = 0.0);
    GridSpec(std::vector<int> n_, std::vector<double> len_, std::vector<double> origin_);

    std::size_t points() const;
    double h(int axis) const { return len[axis] / n[axis]; }
    double cell_volume() const;
    double coord(int axis, int index) const { return origin[axis] + index * h(axis); }
    bool operator==(const GridSpec& o) const;

    void validate() const;  // throws on N < 4 or odd N or L <= 0
};

/// Values sampled on a periodic grid; row-major point order, components
/// contiguous per point.
class Field {
public:
    Field() = default;
    Field(GridSpec spec, FieldKind kind);

    const GridSpec& spec() const { return spec_; }
    FieldKind kind() const { return kind_; }
    int comps() const { return comps_; }
    std::size_t points() const { return spec_.points(); }

    double* at(std::size_t point) { return data_.data() + point * comps_; }
    const double* at(std::size_t point) const { return data_.data() + point * comps_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    Octonion<double> oct_at(std::size_t point) const;
    void set_oct(std::size_t point, const Octonion<double>& v);
    SpinorPair<double> spinor_at(std::size_t point) const;
    void set_spinor(std::size_t point, const SpinorPair<double>& v);

    /// Euclidean norm of the value at a point.
    double value_norm(std::size_t point) const;

    Field operator+(const Field& o) const;
    Field operator-(const Field& o) const;
    Field scaled(double s) const;

private:
    GridSpec spec_;
    FieldKind kind_ = FieldKind::Real;
    int comps_ = 1;
    std::vector<double> data_;
};

/// Deterministic pairwise sum, reproducible bit-for-bit.
double pairwise_sum(const double* a, std::size_t n);

/// Pointwise evaluation of fn on the grid; fn writes comps values.
Field sample(const std::function<void(const double* x, double* out)>& fn, const GridSpec& spec,
             FieldKind kind);
Field sample_real(const std::function<double(const double* x)>& fn, const GridSpec& spec);
Field sample_oct(const std::function<Octonion<double>(const double* x)>& fn, const GridSpec& spec);

/// Centered second-order difference along an axis, periodic wrap.
Field partial_fd(const Field& f, int axis);

/// Standard (2d+1)-point Laplacian stencil, periodic wrap.
Field laplacian_fd(const Field& f);

/// Octonionic Cauchy operator D = sum_j e_j d/dx_j, octonion field on a d=8 grid.
Field oct_cauchy_op(const Field& f);

/// Dirac operator D_8 on a spinor field: (f1,f2) -> (D f2, -conj(D) f1).
Field dirac8_fd(const Field& f);

/// Discrete L^p norm (h^d sum |f|^p)^{1/p}; throws for p < 1.
double lp_norm(const Field& f, double p);

/// h^d-weighted Riemann sums. The octonion version multiplies the kernel on
/// the left at every grid point.
double integrate_weighted_real(const Field& f,
                               const std::function<double(const double* x)>& weight);
Octonion<double> integrate_weighted_oct(
    const Field& f, const std::function<Octonion<double>(const double* x)>& weight);

/// Field of t-slices over a shared boundary grid, t strictly decreasing.
struct HalfSpaceField {
    GridSpec boundary;
    std::vector<double> t_levels;
    std::vector<Field> slices;
    Field boundary_field;
};

void dump_csv(const Field& f, std::ostream& os);
void dump_binary(const Field& f, std::ostream& os);
Field load_binary(std::istream& is);
void dump_binary_file(const Field& f, const std::string& path);
Field load_binary_file(const std::string& path);

/// Odometer over grid multi-indices; idx is the flat point index.
template <typename Fn>
void for_each_point(const GridSpec& spec, Fn&& fn) {
    std::vector<int> mi(spec.d, 0);
    const std::size_t np = spec.points();
    for (std::size_t idx = 0; idx < np; ++idx) {
        fn(idx, mi);
        for (int ax = spec.d - 1; ax >= 0; --ax) {
            if (++mi[ax] < spec.n[ax]) break;
            mi[ax] = 0;
        }
    }
}

}  // namespace ocl8
