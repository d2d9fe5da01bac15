#include <random>
#include <vector>

#include "doctest.h"
#include "ocl8/clifford.hpp"
#include "ocl8/rational.hpp"

using namespace ocl8;

namespace {

// Brute-force oracle: multiply generator index lists, bubble generators into
// ascending order counting transpositions, contract adjacent duplicates with
// an extra -1 (e_i e_i = -1).
int oracle_sign(unsigned a, unsigned b, unsigned& result_mask) {
    std::vector<int> gens;
    for (int i = 0; i < 8; ++i)
        if (a & (1u << i)) gens.push_back(i);
    for (int i = 0; i < 8; ++i)
        if (b & (1u << i)) gens.push_back(i);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
            if (gens[i] == gens[i + 1]) {
                sign = -sign;
                gens.erase(gens.begin() + i, gens.begin() + i + 2);
                changed = true;
                break;
            }
            if (gens[i] > gens[i + 1]) {
                std::swap(gens[i], gens[i + 1]);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    result_mask = 0;
    for (int g : gens) result_mask |= 1u << g;
    return sign;
}

}  // namespace

TEST_CASE("blade product sign matches the transposition-counting oracle") {
    for (unsigned a = 0; a < 256; ++a)
        for (unsigned b = 0; b < 256; ++b) {
            unsigned mask = 0;
            int want = oracle_sign(a, b, mask);
            CHECK(mask == (a ^ b));
            CHECK(blade_product_sign(a, b) == want);
        }
}

TEST_CASE("geometric product is associative on blades") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<unsigned> mask(0, 255);
    for (int t = 0; t < 500; ++t) {
        unsigned a = mask(rng), b = mask(rng), c = mask(rng);
        auto ea = Multivector<Rational>::blade(8, a);
        auto eb = Multivector<Rational>::blade(8, b);
        auto ec = Multivector<Rational>::blade(8, c);
        CHECK(geometric_product(geometric_product(ea, eb), ec) ==
              geometric_product(ea, geometric_product(eb, ec)));
    }
}

TEST_CASE("star conjugation sign and anti-automorphism") {
    for (unsigned a = 0; a < 256; ++a) {
        int k = std::popcount(a);
        CHECK(star_sign(a) == ((k * (k + 1) / 2) % 2 ? -1 : 1));
    }
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<unsigned> mask(0, 255);
    for (int t = 0; t < 200; ++t) {
        auto ea = Multivector<Rational>::blade(8, mask(rng));
        auto eb = Multivector<Rational>::blade(8, mask(rng));
        CHECK(star_conj(geometric_product(ea, eb)) ==
              geometric_product(star_conj(eb), star_conj(ea)));
    }
}

TEST_CASE("embedded vectors square to -|v|^2") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> v(8);
        Rational n2(0);
        for (auto& x : v) {
            x = random_rational(rng);
            n2 += x * x;
        }
        auto mv = embed_vector(v);
        CHECK(geometric_product(mv, mv) == Multivector<Rational>::scalar(8, -n2));
    }
}

TEST_CASE("generator relations e_i e_j + e_j e_i = -2 delta_ij") {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            auto ei = Multivector<Rational>::blade(8, 1u << i);
            auto ej = Multivector<Rational>::blade(8, 1u << j);
            auto anti = geometric_product(ei, ej) + geometric_product(ej, ei);
            if (i == j)
                CHECK(anti == Multivector<Rational>::scalar(8, Rational(-2)));
            else
                CHECK(anti.is_zero());
        }
}

TEST_CASE("dimension mismatch throws") {
    Multivector<Rational> a(3), b(4);
    CHECK_THROWS_AS(geometric_product(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    std::vector<Rational> too_long(9, Rational(1));
    CHECK_THROWS_AS(embed_vector(too_long), std::invalid_argument);
}
