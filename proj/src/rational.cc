#include <arrowlab/errors.hh>
#include <arrowlab/rational.hh>

using std::string;

namespace arrowlab
{
    auto to_string(const Rational & r) -> string
    {
        return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        auto parse_int = [&](std::string_view s) -> BigInt {
            std::size_t i = (! s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i == s.size())
                throw MalformedInput{"malformed rational '" + string{text} + "'"};
            for (std::size_t j = i; j < s.size(); ++j)
                if (s[j] < '0' || s[j] > '9')
                    throw MalformedInput{"malformed rational '" + string{text} + "'"};
            return BigInt{string{s}};
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational{parse_int(text)};
        BigInt num = parse_int(text.substr(0, slash)), den = parse_int(text.substr(slash + 1));
        if (den == 0)
            throw MalformedInput{"zero denominator in '" + string{text} + "'"};
        return Rational{num, den};
    }

    auto binomial(long long n, long long k) -> BigInt
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        k = std::min(k, n - k);
        BigInt result = 1;
        for (long long i = 1; i <= k; ++i)
            result = result * (n - k + i) / i;
        return result;
    }

    auto pow(const Rational & base, int exponent) -> Rational
    {
        if (exponent < 0)
            return Rational{1} / pow(base, -exponent);
        Rational result = 1, b = base;
        while (exponent) {
            if (exponent & 1)
                result *= b;
            b *= b;
            exponent >>= 1;
        }
        return result;
    }

    auto to_double(const Rational & r) -> double
    {
        return r.convert_to<double>();
    }
}
