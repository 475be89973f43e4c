#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ringdec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Finite stand-in for +/- infinity in clamped log-likelihood ratios.
inline constexpr double kLlrClamp = 1e30;

double to_double(const Rational& x);

// Accepts "3", "-3", "1/3", "-2/7". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::string rational_to_string(const Rational& x);

// Exponent k with x == 2^k exactly, when one exists (x > 0).
std::optional<long> exact_log2(const Rational& x);

// Per-backend numeric policy: double carries the floating tolerances,
// Rational runs with zero tolerances throughout.
template <class S>
struct NumTraits;

template <>
struct NumTraits<double> {
    static constexpr bool exact = false;
    static double pivot_tol() { return 1e-9; }
    static double int_tol() { return 1e-6; }
    static double cost_tol() { return 1e-9; }
    static double residual_tol() { return 1e-10; }
};

template <>
struct NumTraits<Rational> {
    static constexpr bool exact = true;
    static Rational pivot_tol() { return 0; }
    static Rational int_tol() { return 0; }
    static Rational cost_tol() { return 0; }
    static Rational residual_tol() { return 0; }
};

template <class S>
S abs_val(const S& x) {
    return x < 0 ? S(-x) : x;
}

}  // namespace ringdec
