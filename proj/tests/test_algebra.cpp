#include <array>
#include <random>

#include "doctest.h"
#include "ocl8/octonion.hpp"
#include "ocl8/rational.hpp"
#include "ocl8/spin8.hpp"

using namespace ocl8;

namespace {

// Independent oracle for the multiplication table: octonions as pairs of
// quaternions with a hand-written quaternion table, multiplied by the
// Cayley-Dickson rule (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
struct Quat {
    std::array<double, 4> c{0, 0, 0, 0};
};

Quat qmul(const Quat& a, const Quat& b) {
    // 1, i, j, k with i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
    Quat r;
    r.c[0] = a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3];
    r.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2];
    r.c[2] = a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1];
    r.c[3] = a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0];
    return r;
}

Quat qconj(const Quat& a) {
    Quat r = a;
    for (int i = 1; i < 4; ++i) r.c[i] = -r.c[i];
    return r;
}

std::array<double, 8> oracle_mul(const std::array<double, 8>& x, const std::array<double, 8>& y) {
    Quat a, b, c, d;
    for (int i = 0; i < 4; ++i) {
        a.c[i] = x[i];
        b.c[i] = x[4 + i];
        c.c[i] = y[i];
        d.c[i] = y[4 + i];
    }
    Quat lo1 = qmul(a, c), lo2 = qmul(qconj(d), b);
    Quat hi1 = qmul(d, a), hi2 = qmul(b, qconj(c));
    std::array<double, 8> r;
    for (int i = 0; i < 4; ++i) {
        r[i] = lo1.c[i] - lo2.c[i];
        r[4 + i] = hi1.c[i] + hi2.c[i];
    }
    return r;
}

Octonion<double> random_oct(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Octonion<double> o;
    for (int i = 0; i < 8; ++i) o[i] = u(rng);
    return o;
}

}  // namespace

TEST_CASE("octonion table matches the quaternion-pair oracle on all 64 basis products") {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            std::array<double, 8> x{}, y{};
            x[i] = 1.0;
            y[j] = 1.0;
            std::array<double, 8> want = oracle_mul(x, y);
            Octonion<double> got = oct_mul(Octonion<double>::unit(i), Octonion<double>::unit(j));
            for (int c = 0; c < 8; ++c) CHECK(got[c] == doctest::Approx(want[c]).epsilon(1e-15));
        }
}

TEST_CASE("table spot values in the Cayley-Dickson convention") {
    auto e = [](int i) { return Octonion<double>::unit(i); };
    CHECK(oct_mul(e(1), e(2)) == e(3));
    CHECK(oct_mul(e(1), e(4)) == e(5));
    CHECK(oct_mul(e(2), e(4)) == e(6));
    CHECK(oct_mul(e(1), e(1)) == -e(0));
    CHECK(oct_mul(e(7), e(7)) == -e(0));
    // a quaternionic triple associates, a generic one does not
    CHECK(associator(e(1), e(2), e(3)).is_zero());
    CHECK(associator(e(1), e(2), e(4)) == e(7).scaled(2.0));
}

TEST_CASE("random products match the oracle") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        std::array<double, 8> x, y;
        for (auto& v : x) v = u(rng);
        for (auto& v : y) v = u(rng);
        std::array<double, 8> want = oracle_mul(x, y);
        Octonion<double> got = oct_mul(Octonion<double>(x), Octonion<double>(y));
        for (int c = 0; c < 8; ++c) CHECK(got[c] == doctest::Approx(want[c]).epsilon(1e-12));
    }
}

TEST_CASE("norm multiplicativity and conjugation, exact rationals") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        Octonion<Rational> p, q;
        for (int i = 0; i < 8; ++i) {
            p[i] = random_rational(rng);
            q[i] = random_rational(rng);
        }
        CHECK(oct_norm_sq(oct_mul(p, q)) == oct_norm_sq(p) * oct_norm_sq(q));
        CHECK(oct_conj(oct_mul(p, q)) == oct_mul(oct_conj(q), oct_conj(p)));
        CHECK(oct_mul(p, oct_conj(p)) == Octonion<Rational>(oct_norm_sq(p)));
    }
}

TEST_CASE("left multiplication matrix implements q p") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Octonion<double> q = random_oct(rng), p = random_oct(rng);
        Matrix<double> lq = left_mul_matrix(q);
        std::vector<double> vp(p.coeffs().begin(), p.coeffs().end());
        std::vector<double> got = lq.apply(vp);
        Octonion<double> want = oct_mul(q, p);
        for (int i = 0; i < 8; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
}

TEST_CASE("L_p L_conj(q) + L_q L_conj(p) = 2 (p,q) id") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        Octonion<Rational> p, q;
        for (int i = 0; i < 8; ++i) {
            p[i] = random_rational(rng);
            q[i] = random_rational(rng);
        }
        Matrix<Rational> lhs = left_mul_matrix(p) * left_mul_matrix(oct_conj(q)) +
                               left_mul_matrix(q) * left_mul_matrix(oct_conj(p));
        CHECK(lhs == Matrix<Rational>::identity(8).scaled(Rational(2) * oct_inner(p, q)));
    }
}

TEST_CASE("A(q)^2 = -|q|^2 I on the spinor space") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Octonion<double> q = random_oct(rng);
        Matrix<double> a = rep_vector(q);
        Matrix<double> sq = a * a;
        double n2 = oct_norm_sq(q);
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j)
                CHECK(sq(i, j) == doctest::Approx(i == j ? -n2 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("rep_apply agrees with the matrix representation") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        Octonion<double> q = random_oct(rng);
        SpinorPair<double> s{random_oct(rng), random_oct(rng)};
        std::vector<double> via_matrix = rep_vector(q).apply(vec(s));
        SpinorPair<double> direct = rep_apply(q, s);
        std::vector<double> vd = vec(direct);
        for (int i = 0; i < 16; ++i) CHECK(vd[i] == doctest::Approx(via_matrix[i]).epsilon(1e-12));
    }
}

TEST_CASE("splitting decomposes and reassembles") {
    std::mt19937_64 rng(7);
    SpinorPair<double> s{random_oct(rng), random_oct(rng)};
    Splitting<double> sp = split(s);
    SpinorPair<double> back = unsplit(sp);
    for (int i = 0; i < 8; ++i) {
        CHECK(back.plus[i] == doctest::Approx(s.plus[i]).epsilon(1e-14));
        CHECK(back.minus[i] == doctest::Approx(s.minus[i]).epsilon(1e-14));
    }
    // Tan is the identity on H0 and kills the (1,-1) part
    SpinorPair<double> h0{sp.h0_part, sp.h0_part};
    SpinorPair<double> t = tan_projection(s);
    CHECK(t == tan_projection(t));
    for (int i = 0; i < 8; ++i) CHECK(t.plus[i] == doctest::Approx(h0.plus[i]).epsilon(1e-12));
}

TEST_CASE("corrupted table breaks the composition property") {
    OctTable bad = oct_table();
    bad.sign[1][2] = -bad.sign[1][2];
    Octonion<Rational> p, q;
    std::mt19937_64 rng(8);
    bool broken = false;
    for (int t = 0; t < 10 && !broken; ++t) {
        for (int i = 0; i < 8; ++i) {
            p[i] = random_rational(rng);
            q[i] = random_rational(rng);
        }
        if (oct_norm_sq(oct_mul_with(bad, p, q)) != oct_norm_sq(p) * oct_norm_sq(q)) broken = true;
    }
    CHECK(broken);
}
