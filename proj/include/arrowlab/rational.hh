#ifndef ARROWLAB_GUARD_ARROWLAB_RATIONAL_HH
#define ARROWLAB_GUARD_ARROWLAB_RATIONAL_HH 1

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace arrowlab
{
    using BigInt = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// Always "p/q" with q > 0, including integers ("2/1").
    [[nodiscard]] auto to_string(const Rational & r) -> std::string;

    /// Accepts "p/q" or an integer "p".
    [[nodiscard]] auto parse_rational(std::string_view text) -> Rational;

    [[nodiscard]] auto binomial(long long n, long long k) -> BigInt;

    [[nodiscard]] auto pow(const Rational & base, int exponent) -> Rational;

    [[nodiscard]] auto to_double(const Rational & r) -> double;
}

#endif
