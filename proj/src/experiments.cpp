#include "ocl8/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ocl8/cauchy.hpp"
#include "ocl8/clifford.hpp"
#include "ocl8/multiplier.hpp"
#include "ocl8/rational.hpp"
#include "ocl8/spin8.hpp"

namespace ocl8 {

namespace {

constexpr double kPi = std::numbers::pi;

/// Report wrapper that resolves tolerance overrides and stamps per-check
/// wall time (time since the previous check of the same scenario).
class Ctx {
public:
    Ctx(Report& rep, const ScenarioConfig& cfg) : rep_(rep), cfg_(cfg) {}

    void add(const std::string& name, double measured, double def_threshold) {
        double thr = def_threshold;
        auto it = cfg_.tol.find(name);
        if (it != cfg_.tol.end()) thr = it->second;
        rep_.add(name, measured, thr);
        stamp();
    }

    void add_exact(const std::string& name, bool ok) {
        rep_.add_exact(name, ok);
        stamp();
    }

private:
    void stamp() {
        double now = watch_.seconds();
        rep_.checks.back().seconds = now - last_;
        last_ = now;
    }

    Report& rep_;
    const ScenarioConfig& cfg_;
    Stopwatch watch_;
    double last_ = 0.0;
};

double max_norm(const Field& f) {
    double m = 0.0;
    const std::size_t np = f.points();
    for (std::size_t i = 0; i < np; ++i) m = std::max(m, f.value_norm(i));
    return m;
}

double max_diff(const Field& a, const Field& b) { return max_norm(a - b); }

/// Octonion field g(x) * w for scalar g and a constant octonion w.
Field scalar_times_const_oct(const Field& g, const Octonion<double>& w) {
    Field out(g.spec(), FieldKind::Oct);
    const std::size_t np = g.points();
    for (std::size_t i = 0; i < np; ++i) {
        double gv = g.at(i)[0];
        double* p = out.at(i);
        for (int c = 0; c < 8; ++c) p[c] = gv * w[c];
    }
    return out;
}

/// Spinor field g (1,1)^T from an octonion field g.
Field spinor_from_oct(const Field& g) {
    Field out(g.spec(), FieldKind::Spinor);
    const std::size_t np = g.points();
    for (std::size_t i = 0; i < np; ++i) {
        const double* gv = g.at(i);
        double* p = out.at(i);
        for (int c = 0; c < 8; ++c) {
            p[c] = gv[c];
            p[8 + c] = gv[c];
        }
    }
    return out;
}

/// Coefficients of the splitting: h0_part(f) and h1_part(f) as octonion fields.
Field splitting_part(const Field& f, bool h0) {
    Field out(f.spec(), FieldKind::Oct);
    const std::size_t np = f.points();
    const double s = h0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < np; ++i) {
        const double* p = f.at(i);
        double* q = out.at(i);
        for (int c = 0; c < 8; ++c) q[c] = 0.5 * (p[c] + s * p[8 + c]);
    }
    return out;
}

/// i d/dx_axis as a Fourier multiplier (zero at self-conjugate modes).
Field spectral_derivative(const Field& f, int axis) {
    return apply_multiplier(f, [axis](const double* xi, bool self_conj) -> std::complex<double> {
        if (self_conj) return {0.0, 0.0};
        return {0.0, xi[axis]};
    });
}

/// d/dt of the Poisson extension at the same t: multiplier -|xi|.
Field poisson_t_derivative(const Field& u_t, int d) {
    return apply_multiplier(u_t, [d](const double* xi, bool) -> std::complex<double> {
        double r = 0.0;
        for (int i = 0; i < d; ++i) r += xi[i] * xi[i];
        return {-std::sqrt(r), 0.0};
    });
}

int sign_of(double x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

/// Rank of an integer matrix mod 65521 (Gaussian elimination); equals the
/// rational rank whenever it reaches full size.
int rank_mod_p(std::vector<std::vector<std::int64_t>> rows, int ncols) {
    const std::int64_t p = 65521;
    for (auto& r : rows)
        for (auto& x : r) x = ((x % p) + p) % p;
    int rank = 0;
    int col = 0;
    for (std::size_t pivot_row = 0; pivot_row < rows.size() && col < ncols; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        // normalize pivot to 1 via Fermat inverse
        std::int64_t inv = 1, base = rows[pivot_row][col], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int j = col; j < ncols; ++j) rows[pivot_row][j] = rows[pivot_row][j] * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            std::int64_t f = rows[i][col];
            for (int j = col; j < ncols; ++j)
                rows[i][j] = ((rows[i][j] - f * rows[pivot_row][j]) % p + p) % p;
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

Octonion<Rational> random_rational_oct(std::mt19937_64& rng) {
    Octonion<Rational> o;
    for (int i = 0; i < 8; ++i) o[i] = random_rational(rng);
    return o;
}

GridSpec default_grid(const ScenarioConfig& cfg, int def_d, int def_n, double def_len) {
    return GridSpec(cfg.d.value_or(def_d), cfg.n.value_or(def_n), cfg.len.value_or(def_len));
}

int band_for(const GridSpec& spec) {
    int n = spec.n[0];
    return std::max(1, std::min(n / 4, n / 2 - 1));
}

}  // namespace

Field random_band_limited(const GridSpec& spec, FieldKind kind, int band, std::uint64_t seed) {
    spec.validate();
    if (band < 1) throw std::invalid_argument("band must be >= 1");
    for (int ax = 0; ax < spec.d; ++ax)
        if (band >= spec.n[ax] / 2) throw std::invalid_argument("band must stay below Nyquist");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    SpectralField s(spec, kind);
    const std::size_t np = spec.points();
    // strides for the row-major flat index (last axis fastest)
    std::vector<std::size_t> stride(spec.d, 1);
    for (int ax = spec.d - 2; ax >= 0; --ax)
        stride[ax] = stride[ax + 1] * std::size_t(spec.n[ax + 1]);

    for (int c = 0; c < s.comps(); ++c) {
        std::complex<double>* buf = s.comp(c);
        for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
            bool in_band = true;
            bool zero_mode = true;
            std::size_t partner = 0;
            for (int ax = 0; ax < spec.d; ++ax) {
                int k = mi[ax] <= spec.n[ax] / 2 ? mi[ax] : mi[ax] - spec.n[ax];
                if (std::abs(k) > band) in_band = false;
                if (k != 0) zero_mode = false;
                partner += stride[ax] * std::size_t((spec.n[ax] - mi[ax]) % spec.n[ax]);
            }
            if (!in_band || zero_mode) return;
            if (idx == partner) {
                buf[idx] = {gauss(rng), 0.0};
            } else if (idx < partner) {
                buf[idx] = {gauss(rng), gauss(rng)};
            } else {
                buf[idx] = std::conj(buf[partner]);
            }
        });
        // scale so spatial values are O(1) before the final normalization
        double amp = double(np);
        for (std::size_t i = 0; i < np; ++i) buf[i] *= amp;
    }
    Field f = inverse_fft(s);
    double norm = lp_norm(f, 2.0);
    if (norm == 0.0) throw std::runtime_error("degenerate random field");
    return f.scaled(1.0 / norm);
}

Report run_algebra_suite(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "algebra";
    rep.params["seed"] = double(cfg.seed);
    Ctx ctx(rep, cfg);
    std::mt19937_64 rng(cfg.seed);

    // Anticommutation A(e_i)A(e_j) + A(e_j)A(e_i) = -2 delta_ij I_16, exact.
    {
        int failures = 0;
        std::vector<Matrix<Rational>> a;
        for (int i = 0; i < 8; ++i) a.push_back(rep_vector(Octonion<Rational>::unit(i)));
        for (int i = 0; i < 8; ++i)
            for (int j = i; j < 8; ++j) {
                Matrix<Rational> lhs = a[i] * a[j] + a[j] * a[i];
                Matrix<Rational> rhs =
                    i == j ? Matrix<Rational>::identity(16).scaled(Rational(-2)) : Matrix<Rational>(16);
                if (lhs != rhs) ++failures;
            }
        ctx.add("anticommutation-36-pairs", double(failures), 0.0);
    }

    // Universality: the 256 blade images span End(R^16).
    {
        std::vector<std::vector<std::int64_t>> rows;
        rows.reserve(256);
        for (unsigned mask = 0; mask < 256; ++mask) {
            Matrix<double> m = rep_blade<double>(mask);
            std::vector<std::int64_t> row(256);
            for (int i = 0; i < 16; ++i)
                for (int j = 0; j < 16; ++j) row[i * 16 + j] = std::int64_t(std::lround(m(i, j)));
            rows.push_back(std::move(row));
        }
        int rank = rank_mod_p(std::move(rows), 256);
        rep.params["rank"] = double(rank);
        ctx.add("universality-rank-256", double(256 - rank), 0.0);
    }

    // L_p L_{conj q} + L_q L_{conj p} = 2 (p,q) id, 1000 random rational pairs.
    {
        int failures = 0;
        for (int t = 0; t < 1000; ++t) {
            Octonion<Rational> p = random_rational_oct(rng);
            Octonion<Rational> q = random_rational_oct(rng);
            Matrix<Rational> lhs = left_mul_matrix(p) * left_mul_matrix(oct_conj(q)) +
                                   left_mul_matrix(q) * left_mul_matrix(oct_conj(p));
            Matrix<Rational> rhs =
                Matrix<Rational>::identity(8).scaled(Rational(2) * oct_inner(p, q));
            if (lhs != rhs) ++failures;
        }
        ctx.add("lemma-LpLq-identity-1000", double(failures), 0.0);
    }

    // |pq|^2 = |p|^2 |q|^2 on 10^4 rational pairs.
    {
        int failures = 0;
        for (int t = 0; t < 10000; ++t) {
            Octonion<Rational> p = random_rational_oct(rng);
            Octonion<Rational> q = random_rational_oct(rng);
            if (oct_norm_sq(oct_mul(p, q)) != oct_norm_sq(p) * oct_norm_sq(q)) ++failures;
        }
        ctx.add("norm-multiplicativity-10000", double(failures), 0.0);
    }

    // Alternativity: [a,a,b] = [a,b,b] = [a,b,a] = 0 on 1000 rational pairs.
    {
        int failures = 0;
        for (int t = 0; t < 1000; ++t) {
            Octonion<Rational> a = random_rational_oct(rng);
            Octonion<Rational> b = random_rational_oct(rng);
            if (!associator(a, a, b).is_zero() || !associator(a, b, b).is_zero() ||
                !associator(a, b, a).is_zero())
                ++failures;
        }
        ctx.add("alternativity-1000", double(failures), 0.0);
    }

    // conj(ab) = conj(b) conj(a) on 1000 rational pairs.
    {
        int failures = 0;
        for (int t = 0; t < 1000; ++t) {
            Octonion<Rational> a = random_rational_oct(rng);
            Octonion<Rational> b = random_rational_oct(rng);
            if (oct_conj(oct_mul(a, b)) != oct_mul(oct_conj(b), oct_conj(a))) ++failures;
        }
        ctx.add("conj-antiautomorphism-1000", double(failures), 0.0);
    }

    // Star conjugation sign against the explicit reversed-and-negated product.
    {
        int failures = 0;
        for (unsigned mask = 0; mask < 256; ++mask) {
            Multivector<Rational> expect(8);
            {
                Multivector<Rational> prod = Multivector<Rational>::scalar(8, Rational(1));
                for (int i = 7; i >= 0; --i)
                    if (mask & (1u << i))
                        prod = geometric_product(
                            prod, Multivector<Rational>::blade(8, 1u << i, Rational(-1)));
                expect = prod;
            }
            if (star_conj(Multivector<Rational>::blade(8, mask)) != expect) ++failures;
        }
        ctx.add("star-sign-table", double(failures), 0.0);
    }

    // Negative control: a corrupted table must break the polarized
    // composition identity / norm
    // multiplicativity for some random pair.
    {
        OctTable bad = oct_table();
        bad.sign[1][2] = -bad.sign[1][2];
        bool detected = false;
        for (int t = 0; t < 20 && !detected; ++t) {
            Octonion<Rational> p = random_rational_oct(rng);
            Octonion<Rational> q = random_rational_oct(rng);
            Matrix<Rational> lhs =
                left_mul_matrix_with(bad, p) * left_mul_matrix_with(bad, oct_conj(q)) +
                left_mul_matrix_with(bad, q) * left_mul_matrix_with(bad, oct_conj(p));
            Matrix<Rational> rhs =
                Matrix<Rational>::identity(8).scaled(Rational(2) * oct_inner(p, q));
            if (lhs != rhs) detected = true;
            if (oct_norm_sq(oct_mul_with(bad, p, q)) != oct_norm_sq(p) * oct_norm_sq(q))
                detected = true;
        }
        ctx.add_exact("corrupted-table-control", detected);
    }

    return rep;
}

namespace {

/// Riesz/Hilbert operator identities on one grid; names get a -d{d} suffix.
void operator_identity_checks(Ctx& ctx, const GridSpec& spec, double riesz_tol, double invol_tol,
                              std::uint64_t seed) {
    const int d = spec.d;
    const std::string sfx = "-d" + std::to_string(d);
    const int band = band_for(spec);

    Field g = random_band_limited(spec, FieldKind::Real, band, seed);
    std::vector<Field> r = riesz_all(g);

    {
        Field acc = g;  // sum R_j^2 g + g should vanish
        for (int j = 1; j <= d; ++j) acc = acc + riesz(j, r[j - 1]);
        ctx.add("riesz-sum-squares" + sfx, max_norm(acc), riesz_tol);
    }
    {
        double worst = 0.0;
        for (int j = 1; j <= d; ++j)
            for (int k = j + 1; k <= d; ++k)
                worst = std::max(worst, max_diff(riesz(k, r[j - 1]), riesz(j, r[k - 1])));
        ctx.add("riesz-commutators" + sfx, worst, riesz_tol);
    }
    r.clear();

    Field fo = random_band_limited(spec, FieldKind::Oct, band, seed + 1);
    {
        Field hf = hilbert_oct(fo);
        ctx.add("hilbert-oct-involution" + sfx, max_diff(hilbert_oct(hf), fo), invol_tol);
        Field pf = (fo + hf).scaled(0.5);
        Field ppf = (pf + hilbert_oct(pf)).scaled(0.5);
        ctx.add("hardy-oct-idempotent" + sfx, max_diff(ppf, pf), invol_tol);
    }
    fo = Field();

    Field fs = random_band_limited(spec, FieldKind::Spinor, band, seed + 2);
    {
        Field hf = e0_apply(hilbert_clifford(fs));
        ctx.add("hilbert-clifford-involution" + sfx, max_diff(e0_apply(hilbert_clifford(hf)), fs),
                invol_tol);
        Field pf = (fs + hf).scaled(0.5);
        Field ppf = (pf + e0_apply(hilbert_clifford(pf))).scaled(0.5);
        ctx.add("hardy-clifford-idempotent" + sfx, max_diff(ppf, pf), invol_tol);
    }
}

}  // namespace

Report run_splitting(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "splitting";
    Ctx ctx(rep, cfg);

    GridSpec spec = default_grid(cfg, 7, 8, 2.0 * kPi);
    rep.params["d"] = spec.d;
    rep.params["n"] = spec.n[0];
    rep.params["seed"] = double(cfg.seed);
    const int band = band_for(spec);

    // f = g (1,1)^T for octonion-valued g; f + e0 H f = g (1,1)^T + h (1,-1)^T
    // with h = -H_O g, and the Tan projection recovers g.
    Field g = random_band_limited(spec, FieldKind::Oct, band, cfg.seed);
    Field hog = hilbert_oct(g);
    Field f = spinor_from_oct(g);
    Field fe = f + e0_apply(hilbert_clifford(f));
    ctx.add("h0-part-recovery", max_diff(splitting_part(fe, true), g), 1e-10);
    ctx.add("h1-part-neg-hilbert", max_norm(splitting_part(fe, false) + hog), 1e-10);
    {
        // Tan(f + e0 H f) = g (1,1)^T: the (1,-1) part is annihilated.
        Field tanfe(spec, FieldKind::Spinor);
        const std::size_t np = fe.points();
        for (std::size_t i = 0; i < np; ++i) {
            SpinorPair<double> t = tan_projection(fe.spinor_at(i));
            tanfe.set_spinor(i, t);
        }
        ctx.add("tan-projection-recovery", max_diff(tanfe, spinor_from_oct(g)), 1e-10);
    }
    g = Field();
    hog = Field();
    f = Field();
    fe = Field();

    // Round trip from arbitrary Hardy boundary data.
    {
        Field any = random_band_limited(spec, FieldKind::Spinor, band, cfg.seed + 3);
        Field hardy = hardy_project_clifford(any);
        any = Field();
        Field g2 = splitting_part(hardy, true);
        Field h2 = splitting_part(hardy, false);
        hardy = Field();
        ctx.add("roundtrip-h-from-g", max_norm(h2 + hilbert_oct(g2)), 1e-10);
        ctx.add("roundtrip-g-from-h", max_norm(g2 + hilbert_oct(h2)), 1e-10);
    }

    // Operator identities on the dense d=3 grid and the d=7 grid.
    {
        GridSpec small(3, 64, 2.0 * kPi);
        operator_identity_checks(ctx, small, 1e-10, 1e-10, cfg.seed + 10);
    }
    operator_identity_checks(ctx, spec, spec.d >= 7 ? 1e-8 : 1e-10, 1e-10, cfg.seed + 20);

    return rep;
}

Report run_counterexample(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "counterexample";
    Ctx ctx(rep, cfg);
    std::mt19937_64 rng(cfg.seed);

    GridSpec spec = default_grid(cfg, 7, 8, 2.0 * kPi);
    rep.params["d"] = spec.d;
    rep.params["n"] = spec.n[0];
    rep.params["seed"] = double(cfg.seed);
    const int band = band_for(spec);

    // (a) Exact inner-product identities for random rational p, j = 1..7:
    //     ((e_j (e_1 p)) conj(p), e_0) = -delta_1j |p|^2
    //     ((e_j (e_1 p)) conj(p), e_1) = 0
    {
        int fail0 = 0, fail1 = 0;
        for (int t = 0; t < 10; ++t) {
            Octonion<Rational> p = random_rational_oct(rng);
            Rational n2 = oct_norm_sq(p);
            Octonion<Rational> e1p = oct_mul(Octonion<Rational>::unit(1), p);
            for (int j = 1; j <= 7; ++j) {
                Octonion<Rational> w =
                    oct_mul(oct_mul(Octonion<Rational>::unit(j), e1p), oct_conj(p));
                Rational want = j == 1 ? -n2 : Rational(0);
                if (w[0] != want) ++fail0;
                if (w[1] != Rational(0)) ++fail1;
            }
        }
        ctx.add("exact-inner-product-e0", double(fail0), 0.0);
        ctx.add("exact-inner-product-e1", double(fail1), 0.0);
    }

    // (b) Spectral: F+ = g e1p + H_O(g e1p); in the orthonormal basis {e_c p}
    //     the e0p-component is R_1 g and the e1p-component is g.
    {
        Field g = random_band_limited(spec, FieldKind::Real, band, cfg.seed);
        Octonion<double> p;
        p[0] = 0.6;
        p[1] = 0.8;  // unit rational direction (3/5, 4/5, 0, ...)
        Octonion<double> e1p = oct_mul(Octonion<double>::unit(1), p);
        Field big = scalar_times_const_oct(g, e1p);
        Field fplus = big + hilbert_oct(big);
        big = Field();

        auto component_along = [&](const Octonion<double>& basis) {
            Field out(spec, FieldKind::Real);
            const std::size_t np = fplus.points();
            for (std::size_t i = 0; i < np; ++i)
                out.at(i)[0] = oct_inner(fplus.oct_at(i), basis);
            return out;
        };
        ctx.add("spectral-comp0-R1g", max_diff(component_along(p), riesz(1, g)), 1e-10);
        ctx.add("spectral-comp1-g", max_diff(component_along(e1p), g), 1e-10);
    }

    // (c) Impossibility witness: g supported on xi_1 = 0 modes satisfies
    //     ||g + R_1^2 g|| = ||g|| exactly, contradicting g = -R_1^2 g.
    {
        Field g = random_band_limited(spec, FieldKind::Real, band, cfg.seed + 5);
        g = apply_multiplier(g, [](const double* xi, bool) -> std::complex<double> {
            return xi[0] == 0.0 ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, 0.0};
        });
        double gn = lp_norm(g, 2.0);
        Field gr = g + riesz(1, riesz(1, g));
        double ratio = lp_norm(gr, 2.0) / gn;
        rep.params["impossibility-norm-ratio"] = ratio;
        ctx.add("impossibility-ratio", std::abs(ratio - 1.0), 1e-12);
    }

    return rep;
}

Report run_schwartz_riesz(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "schwartz-riesz";
    Ctx ctx(rep, cfg);
    const std::uint64_t budget = cfg.budget.value_or(10'000'000ULL);
    rep.params["budget"] = double(budget);
    rep.params["seed"] = double(cfg.seed);

    const double w8 = omega(8);
    const double w7 = omega(7);

    // Normalization c for f(x) = c x_1 e^{-|x|^2} on R^7 so that R_1 f(0) = 1.
    // Oracle 1 (radial-angular factorization):
    //   R_1 f(0) = -(2 c / w8) * [int_{S^6} w_1^2 dS] * [int_0^inf e^{-r^2} dr]
    // with the angular moment exactly w7/7 and the radial factor by 1-D
    // composite Simpson quadrature.
    double radial = 0.0;
    {
        const int nseg = 4096;
        const double upper = 12.0;
        const double hh = upper / nseg;
        auto fn = [](double r) { return std::exp(-r * r); };
        double s = fn(0.0) + fn(upper);
        for (int i = 1; i < nseg; ++i) s += (i % 2 ? 4.0 : 2.0) * fn(i * hh);
        radial = s * hh / 3.0;
    }
    const double angular = w7 / 7.0;
    const double c_quad = -w8 / (2.0 * angular * radial);
    // Oracle 2 (closed form): radial integral sqrt(pi)/2 gives c = -35 sqrt(pi)/16.
    const double c_closed = -35.0 * std::sqrt(kPi) / 16.0;
    rep.params["c-quadrature"] = c_quad;
    rep.params["c-closed-form"] = c_closed;
    ctx.add("normalization-oracles-agree", std::abs(c_quad - c_closed), 1e-6);

    // Monte Carlo of R_j f(0) = (2/w8) int (-u_j)/|u|^8 f(u) du by importance
    // sampling: direction uniform on S^6, radius half-normal with density
    // (2/sqrt(pi)) e^{-r^2}, so the estimator stays bounded near the origin.
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> sums(7, 0.0);
    for (std::uint64_t s = 0; s < budget; ++s) {
        double dir[7];
        double n2 = 0.0;
        do {
            n2 = 0.0;
            for (double& v : dir) {
                v = gauss(rng);
                n2 += v * v;
            }
        } while (n2 == 0.0);
        double inv = 1.0 / std::sqrt(n2);
        for (double& v : dir) v *= inv;
        double r = std::abs(gauss(rng)) * std::sqrt(0.5);  // |N(0, 1/2)|
        if (r == 0.0) r = 1e-300;
        double fr = c_quad * (r * dir[0]) * std::exp(-r * r);          // f(u), u = r dir
        double dens = (2.0 / std::sqrt(kPi)) * std::exp(-r * r);       // radial density
        double common = (2.0 / w8) * fr * w7 * std::pow(r, 6) / dens;  // / (r^-8 jacobian) below
        common /= std::pow(r, 8.0);
        for (int j = 0; j < 7; ++j) sums[j] += -(r * dir[j]) * common;
    }
    double worst_other = 0.0;
    for (int j = 0; j < 7; ++j) {
        double est = sums[j] / double(budget);
        rep.params["riesz-origin-j" + std::to_string(j + 1)] = est;
        if (j == 0)
            ctx.add("riesz-origin-j1", std::abs(est - 1.0), 1e-2);
        else
            worst_other = std::max(worst_other, std::abs(est));
    }
    ctx.add("riesz-origin-others-max", worst_other, 1e-2);

    return rep;
}

Report run_subharmonicity(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "subharmonicity";
    Ctx ctx(rep, cfg);

    // |f|^p = r^{-7p} has radial Laplacian factor s(s+6) with s = -7p in R^8;
    // the factor vanishes exactly at the critical index p = 6/7.
    // deduced return would be a boost expression template referencing s
    auto factor = [](const Rational& p) -> Rational {
        Rational s = Rational(-7) * p;
        return s * (s + 6);
    };
    {
        Rational crit(6, 7);
        ctx.add_exact("critical-index-zero", factor(crit) == 0);

        const std::pair<Rational, int> cases[] = {
            {Rational(1, 2), -1},   {Rational(113, 140), -1}, {Rational(6, 7), 0},
            {Rational(127, 140), 1}, {Rational(1), 1},        {Rational(3, 2), 1}};
        bool ok = true;
        for (const auto& [p, want] : cases) {
            Rational v = factor(p);
            int sgn = v == 0 ? 0 : (v > 0 ? 1 : -1);
            if (sgn != want) ok = false;
        }
        ctx.add_exact("radial-factor-signs", ok);
    }

    // Finite-difference cross-check on d=8 grids with the singularity far
    // outside the box; only interior points (no periodic wrap) are used.
    const double L = 8.0;
    const double x0 = -8.0;  // same offset in every coordinate
    const double p_values[] = {113.0 / 140.0, 127.0 / 140.0, 1.0};

    auto sample_power = [&](const GridSpec& spec, double s) {
        return sample_real(
            [&](const double* x) {
                double r2 = 0.0;
                for (int i = 0; i < 8; ++i) r2 += (x[i] - x0) * (x[i] - x0);
                return std::pow(r2, 0.5 * s);
            },
            spec);
    };

    GridSpec spec8(8, 8, L);
    GridSpec spec4(8, 4, L);
    long mismatches = 0;
    double worst_ratio_gap = 0.0;

    for (double p : p_values) {
        double s = -7.0 * p;
        double fac = s * (s + 6.0);
        Field f8 = sample_power(spec8, s);
        Field lap8 = laplacian_fd(f8);
        f8 = Field();

        // sign agreement at every interior point of the N=8 grid
        for_each_point(spec8, [&](std::size_t idx, const std::vector<int>& mi) {
            for (int ax = 0; ax < 8; ++ax)
                if (mi[ax] < 1 || mi[ax] > spec8.n[ax] - 2) return;
            if (sign_of(lap8.at(idx)[0]) != sign_of(fac)) ++mismatches;
        });

        Field f4 = sample_power(spec4, s);
        Field lap4 = laplacian_fd(f4);
        f4 = Field();

        // common interior points: N=4 indices {1,2} <-> N=8 indices {2,4}
        double sum_e4 = 0.0, sum_e8 = 0.0;
        for_each_point(spec4, [&](std::size_t idx4, const std::vector<int>& mi) {
            for (int ax = 0; ax < 8; ++ax)
                if (mi[ax] < 1 || mi[ax] > 2) return;
            std::size_t idx8 = 0;
            double r2 = 0.0;
            for (int ax = 0; ax < 8; ++ax) {
                idx8 = idx8 * 8 + std::size_t(2 * mi[ax]);
                double xc = spec4.coord(ax, mi[ax]) - x0;
                r2 += xc * xc;
            }
            double exact = fac * std::pow(r2, 0.5 * (s - 2.0));
            sum_e4 += std::abs(lap4.at(idx4)[0] - exact);
            sum_e8 += std::abs(lap8.at(idx8)[0] - exact);
        });
        double ratio = sum_e4 / sum_e8;
        rep.params["refinement-ratio-p" + std::to_string(p).substr(0, 8)] = ratio;
        worst_ratio_gap = std::max(worst_ratio_gap, std::abs(ratio - 4.0));
    }
    ctx.add("fd-sign-agreement", double(mismatches), 0.0);
    ctx.add("fd-refinement-ratio", worst_ratio_gap, 0.5);

    return rep;
}

Report run_stein_weiss(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "stein-weiss";
    Ctx ctx(rep, cfg);

    GridSpec spec = default_grid(cfg, 3, 64, 2.0 * kPi);
    const int d = spec.d;
    const int band = band_for(spec);
    const double t0 = 2.0;
    const double h = spec.h(0);
    const double dt = h;  // Delta t = h
    rep.params["d"] = d;
    rep.params["n"] = spec.n[0];
    rep.params["t0"] = t0;
    rep.params["dt"] = dt;
    rep.params["seed"] = double(cfg.seed);

    Field f0 = random_band_limited(spec, FieldKind::Real, band, cfg.seed);
    std::vector<Field> fj;
    for (int j = 1; j <= d; ++j) fj.push_back(riesz(j, f0).scaled(-1.0));

    Field u0 = poisson_extend(f0, t0);
    std::vector<Field> u;
    for (int j = 0; j < d; ++j) u.push_back(poisson_extend(fj[j], t0));

    // The conjugate system holds with x_0 = -t (see the recorded orientation
    // note): d_t u_0 - sum_j d_j u_j = 0 and -d_t u_j = d_j u_0.
    {
        Field res = poisson_t_derivative(u0, d);
        for (int j = 0; j < d; ++j) res = res - spectral_derivative(u[j], j);
        ctx.add("divergence-spectral", max_norm(res), 1e-6);
    }
    {
        double worst = 0.0;
        for (int j = 0; j < d; ++j)
            for (int k = j + 1; k < d; ++k)
                worst = std::max(worst,
                                 max_diff(spectral_derivative(u[j], k), spectral_derivative(u[k], j)));
        ctx.add("curl-spatial-spectral", worst, 1e-6);
    }
    {
        double worst = 0.0;
        for (int j = 0; j < d; ++j)
            worst = std::max(worst,
                             max_norm(poisson_t_derivative(u[j], d) + spectral_derivative(u0, j)));
        ctx.add("curl-time-spectral", worst, 1e-6);
    }

    // The orientation as displayed (x_0 = +t) does not close: its divergence
    // residual is of the same order as the terms themselves (in fact exactly
    // 2 d_t u_0), compared against that scale rather than a fixed floor.
    const double term_scale = max_norm(poisson_t_derivative(u0, d));
    rep.params["term-scale"] = term_scale;
    {
        Field res = poisson_t_derivative(u0, d);
        for (int j = 0; j < d; ++j) res = res + spectral_derivative(u[j], j);
        double v = max_norm(res);
        rep.params["as-displayed-divergence"] = v;
        ctx.add_exact("as-displayed-orientation-fails", v >= 0.5 * term_scale);
    }

    // Finite differences at Delta t = h, checked against the computed
    // O(h^2) + O(dt^2) truncation bound of the band-limited data.
    double bound_div = 0.0, bound_curl = 0.0;
    {
        SpectralField s = forward_fft(f0);
        const double np = double(spec.points());
        std::vector<double> xi(d);
        for_each_point(spec, [&](std::size_t idx, const std::vector<int>& mi) {
            double r2 = 0.0;
            for (int ax = 0; ax < d; ++ax) {
                int k = mi[ax] <= spec.n[ax] / 2 ? mi[ax] : mi[ax] - spec.n[ax];
                xi[ax] = 2.0 * kPi * k / spec.len[ax];
                r2 += xi[ax] * xi[ax];
            }
            double r = std::sqrt(r2);
            if (r == 0.0) return;
            double coef = std::abs(s.comp(0)[idx]) / np;
            double damp = std::exp(-t0 * r);
            double terr = dt * dt / 6.0 * r * r * r * std::cosh(dt * r);
            double xsum = 0.0;
            for (int ax = 0; ax < d; ++ax) xsum += std::pow(std::abs(xi[ax]), 3.0);
            bound_div += coef * damp * (terr + h * h / 6.0 * xsum);
            bound_curl += coef * damp * (terr + h * h / 6.0 * std::pow(std::abs(xi[0]), 3.0));
        });
    }
    {
        Field u0p = poisson_extend(f0, t0 + dt);
        Field u0m = poisson_extend(f0, t0 - dt);
        Field res = (u0p - u0m).scaled(1.0 / (2.0 * dt));
        for (int j = 0; j < d; ++j) res = res - partial_fd(u[j], j);
        double v = max_norm(res);
        rep.params["fd-divergence-residual"] = v;
        rep.params["fd-divergence-bound"] = bound_div;
        ctx.add("divergence-fd-within-bound", v, bound_div);
    }
    {
        Field u1p = poisson_extend(fj[0], t0 + dt);
        Field u1m = poisson_extend(fj[0], t0 - dt);
        Field res = (u1p - u1m).scaled(1.0 / (2.0 * dt)) + partial_fd(u0, 0);
        double v = max_norm(res);
        rep.params["fd-curl-time-residual"] = v;
        rep.params["fd-curl-time-bound"] = bound_curl;
        ctx.add("curl-time-fd-within-bound", v, bound_curl);
    }

    // Negative control: unrelated conjugate functions leave a large residual.
    {
        Field res = poisson_t_derivative(u0, d);
        for (int j = 0; j < d; ++j) {
            Field bogus = random_band_limited(spec, FieldKind::Real, band, cfg.seed + 100 + j);
            res = res - spectral_derivative(poisson_extend(bogus, t0), j);
        }
        double v = max_norm(res);
        rep.params["negative-control-divergence"] = v;
        ctx.add_exact("negative-control-residual", v >= 0.1 * term_scale);
    }

    return rep;
}

Report run_boundary_convergence(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "boundary-convergence";
    Ctx ctx(rep, cfg);

    GridSpec spec = default_grid(cfg, 3, 64, 256.0);
    rep.params["d"] = spec.d;
    rep.params["n"] = spec.n[0];
    rep.params["len"] = spec.len[0];
    rep.params["seed"] = double(cfg.seed);

    // Long-wavelength Hardy data: with L = 256 and modes |k| <= 1 the
    // smallest frequencies make the t = 1/64 Poisson gap clear 1e-3.
    Field f = random_band_limited(spec, FieldKind::Oct, 1, cfg.seed);
    f = hardy_project_oct(f);

    std::vector<double> ladder = cfg.t_ladder;
    if (ladder.empty())
        for (int i = 0; i <= 6; ++i) ladder.push_back(std::pow(0.5, i));

    std::vector<double> p_list;
    if (cfg.p)
        p_list.push_back(*cfg.p);
    else
        p_list = {2.0, 4.0};

    for (double p : p_list) {
        std::string sfx = "-p" + std::to_string(int(p));
        std::vector<double> gaps;
        for (double t : ladder) gaps.push_back(lp_norm(poisson_extend(f, t) - f, p));
        bool monotone = true;
        for (std::size_t i = 1; i < gaps.size(); ++i)
            if (!(gaps[i] < gaps[i - 1])) monotone = false;
        rep.params["first-gap" + sfx] = gaps.front();
        rep.params["final-gap" + sfx] = gaps.back();
        ctx.add_exact("gap-monotone" + sfx, monotone);
        ctx.add("final-gap" + sfx, gaps.back(), 1e-3);

        if (p == 2.0) {
            // Parseval cross-check of the final gap.
            double t = ladder.back();
            Field diff = poisson_extend(f, t) - f;
            SpectralField s = forward_fft(diff);
            const double np = double(spec.points());
            double sum = 0.0;
            for (int c = 0; c < s.comps(); ++c)
                for (std::size_t i = 0; i < spec.points(); ++i) sum += std::norm(s.comp(c)[i]);
            double spectral_gap = std::sqrt(spec.cell_volume() / np * sum);
            ctx.add("parseval-crosscheck-p2", std::abs(spectral_gap - gaps.back()), 1e-10);
        }
    }

    return rep;
}

Report run_cauchy_reproduction(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "cauchy-reproduction";
    Ctx ctx(rep, cfg);
    const std::uint64_t budget = cfg.budget.value_or(1'000'000ULL);
    rep.params["budget"] = double(budget);
    rep.params["seed"] = double(cfg.seed);

    // --- Sphere reproduction -------------------------------------------------
    Octonion<double> center;  // unit ball at the origin
    const double radius = 1.0;

    {
        Octonion<double> c;
        for (int i = 0; i < 8; ++i) c[i] = (i + 1) * 0.125;
        auto constf = [&](const Octonion<double>&) { return c; };
        Octonion<double> z;
        z[1] = 0.2;
        SphereQuadResult r = cauchy_sphere_oct(constf, center, radius, z, budget, cfg.seed);
        double rel = oct_abs(r.value - c) / oct_abs(c);
        rep.params["sphere-constant-stderr"] = r.std_error;
        ctx.add("sphere-constant", rel, 5e-2);
    }

    Octonion<double> b;
    b[1] = 2.0;  // kernel pole outside the ball
    auto kernelf = [&](const Octonion<double>& x) { return cauchy_kernel_oct(x - b); };
    {
        std::vector<Octonion<double>> zs(3);
        zs[1][2] = 0.25;
        zs[2][1] = -0.2;
        zs[2][3] = 0.1;
        for (int i = 0; i < 3; ++i) {
            SphereQuadResult r =
                cauchy_sphere_oct(kernelf, center, radius, zs[i], budget, cfg.seed + 1 + i);
            Octonion<double> want = kernelf(zs[i]);
            double rel = oct_abs(r.value - want) / oct_abs(want);
            rep.params["sphere-kernel-stderr-" + std::to_string(i + 1)] = r.std_error;
            ctx.add("sphere-kernel-point-" + std::to_string(i + 1), rel, 5e-2);
        }
    }
    {
        // Non-associativity witness: swapping the parenthesization of
        // kernel, surface element and data changes the value. Generic
        // quadratic data (no exact value needed, identical samples) keeps the
        // associator of kernel, normal and data away from zero; left-analytic
        // kernel data nearly associates and would make this check vacuous.
        Octonion<double> w;
        for (int i = 0; i < 8; ++i) w[i] = 0.1 * (i + 1);
        auto genf = [&](const Octonion<double>& x) {
            return oct_mul(oct_mul(x, Octonion<double>::unit(1)), x - w);
        };
        Octonion<double> z;
        z[2] = 0.25;
        SphereQuadResult a = cauchy_sphere_oct(genf, center, radius, z, budget, cfg.seed + 9);
        SphereQuadResult s =
            cauchy_sphere_oct(genf, center, radius, z, budget, cfg.seed + 9, true);
        double rel = oct_abs(a.value - s.value) / oct_abs(a.value);
        rep.params["sphere-associator-rel-diff"] = rel;
        ctx.add_exact("sphere-nonassociativity-witness", rel >= 1e-3);
    }

    // --- Half-space quadrature vs spectral route -----------------------------
    GridSpec spec(7, cfg.n.value_or(8), cfg.len.value_or(16.0), -cfg.len.value_or(16.0) / 2.0);
    rep.params["halfspace-n"] = spec.n[0];
    rep.params["halfspace-len"] = spec.len[0];
    // sigma^2 = 4 keeps the data both resolved at h = 2 and well inside the
    // box; the even part keeps the values away from the odd-symmetry zeros
    // at the test points.
    const double sigma2 = 4.0;
    Field f = sample(
        [&](const double* x, double* out) {
            double r2 = 0.0;
            for (int i = 0; i < 7; ++i) r2 += x[i] * x[i];
            double g = std::exp(-r2 / (2.0 * sigma2));
            for (int c = 0; c < 8; ++c) out[c] = g * (1.0 + 0.5 * x[c % 7]);
        },
        spec, FieldKind::Oct);

    // kernel aliasing on the h = 2 grid scales like e^{-t pi / h}; t >= 3.5
    // keeps the quadrature route resolved
    const double t_levels[] = {3.5, 4.5};
    {
        double worst = 0.0;
        for (double t : t_levels) {
            // spectral route: C f = (P_t * f)/2 - sum_j e_j (Q_t^j * f)/2
            Field spectral = poisson_extend(f, t).scaled(0.5);
            for (int j = 1; j <= 7; ++j) {
                Field qj = conj_poisson(j, f, t);
                Octonion<double> ej = Octonion<double>::unit(j);
                const std::size_t np = spectral.points();
                for (std::size_t i = 0; i < np; ++i) {
                    Octonion<double> v = oct_mul(ej, qj.oct_at(i));
                    double* p = spectral.at(i);
                    for (int c = 0; c < 8; ++c) p[c] -= 0.5 * v[c];
                }
            }
            for (int pt = 0; pt < 2; ++pt) {
                std::vector<double> xb(7, 0.0);
                std::vector<int> mi(7, spec.n[0] / 2);  // grid point at the origin
                if (pt == 1) {
                    xb[0] = spec.h(0);
                    mi[0] += 1;
                }
                std::size_t idx = 0;
                for (int ax = 0; ax < 7; ++ax) idx = idx * spec.n[ax] + std::size_t(mi[ax]);
                Octonion<double> sv = spectral.oct_at(idx);
                Octonion<double> qv = cauchy_halfspace_oct(f, t, xb);
                double rel = oct_abs(qv - sv) / std::max(oct_abs(sv), 1e-3);
                rep.params["halfspace-value-t" + std::to_string(t).substr(0, 3) + "-pt" +
                           std::to_string(pt)] = oct_abs(sv);
                worst = std::max(worst, rel);
            }
        }
        ctx.add("halfspace-quad-vs-spectral", worst, 5e-2);
    }

    // --- Interior Dirac residual of the quadrature field ---------------------
    // Real scalar boundary data makes the quadrature field an exact finite sum
    // of Cauchy kernels, hence exactly analytic; the centered-stencil residual
    // of D = sum_j e_j d/dx_j (x_0 = t) is then pure O(h^2).
    {
        Field g = sample(
            [&](const double* x, double* out) {
                double r2 = 0.0;
                for (int i = 0; i < 7; ++i) r2 += x[i] * x[i];
                out[0] = std::exp(-r2 / (2.0 * sigma2));
                for (int c = 1; c < 8; ++c) out[c] = 0.0;
            },
            spec, FieldKind::Oct);

        const double tz = 2.5;
        std::vector<double> xz(7, 0.0);
        xz[0] = 0.3;
        auto eval = [&](double t, const std::vector<double>& xb) {
            return cauchy_halfspace_oct(g, t, xb);
        };
        auto residual = [&](double hs) {
            Octonion<double> acc;
            {  // t-direction, unit e_0
                Octonion<double> dv =
                    (eval(tz + hs, xz) - eval(tz - hs, xz)).scaled(1.0 / (2.0 * hs));
                acc = acc + dv;
            }
            for (int j = 1; j <= 7; ++j) {
                std::vector<double> xp = xz, xm = xz;
                xp[j - 1] += hs;
                xm[j - 1] -= hs;
                Octonion<double> dv = (eval(tz, xp) - eval(tz, xm)).scaled(1.0 / (2.0 * hs));
                acc = acc + oct_mul(Octonion<double>::unit(j), dv);
            }
            return oct_abs(acc);
        };
        double r1 = residual(0.4);
        double r2 = residual(0.2);
        double ratio = r1 / r2;
        rep.params["dirac-residual-h0.4"] = r1;
        rep.params["dirac-residual-h0.2"] = r2;
        rep.params["dirac-residual-decay"] = ratio;
        ctx.add("dirac-residual-ratio", std::abs(ratio - 4.0), 2.0);
    }

    return rep;
}

namespace {

Report run_fixture_fail(const ScenarioConfig& cfg) {
    Report rep;
    rep.scenario = "fixture-fail";
    Ctx ctx(rep, cfg);
    ctx.add("always-fails", 1.0, 0.0);
    return rep;
}

}  // namespace

std::vector<std::string> scenario_names() {
    return {"algebra",        "splitting",   "counterexample",       "schwartz-riesz",
            "subharmonicity", "stein-weiss", "boundary-convergence", "cauchy-reproduction"};
}

Report run_scenario(const std::string& name, const ScenarioConfig& cfg) {
    if (name == "algebra") return run_algebra_suite(cfg);
    if (name == "splitting") return run_splitting(cfg);
    if (name == "counterexample") return run_counterexample(cfg);
    if (name == "schwartz-riesz") return run_schwartz_riesz(cfg);
    if (name == "subharmonicity") return run_subharmonicity(cfg);
    if (name == "stein-weiss") return run_stein_weiss(cfg);
    if (name == "boundary-convergence") return run_boundary_convergence(cfg);
    if (name == "cauchy-reproduction") return run_cauchy_reproduction(cfg);
    if (name == "fixture-fail") return run_fixture_fail(cfg);
    throw std::invalid_argument("unknown scenario: " + name);
}

Suite run_scenarios(const std::vector<std::string>& names, const ScenarioConfig& cfg) {
    Suite suite;
    std::vector<std::string> list = names;
    std::sort(list.begin(), list.end());  // deterministic merge order
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (const std::string& n : list) suite.reports.push_back(run_scenario(n, cfg));
    return suite;
}

}  // namespace ocl8
