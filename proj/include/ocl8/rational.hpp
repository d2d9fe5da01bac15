#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>

namespace ocl8 {

/// Exact rational scalar for proof-by-computation checks.
using Rational = boost::multiprecision::cpp_rational;

/// Uniform small rational with numerator in [-9,9] and denominator in [1,9].
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

}  // namespace ocl8
