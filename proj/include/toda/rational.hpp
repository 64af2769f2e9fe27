#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace toda {

/// Arbitrary precision rational. Arithmetic results are in lowest terms;
/// values built from a numerator and denominator are not, so library entry
/// points canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw RingError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    Rational c(r);
    c.canonicalize();
    return c.get_str();
}

inline Rational parse_rational(const std::string& text)
{
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0)
        throw RingError("malformed rational '" + text + "'");
    r.canonicalize();
    return r;
}

inline Rational factorial(int n)
{
    Integer out = 1;
    for (int k = 2; k <= n; ++k)
        out *= k;
    return Rational(out);
}

inline Rational power(const Rational& base, int exponent)
{
    if (exponent < 0) {
        if (is_zero(base))
            throw RingError("zero raised to a negative power");
        return power(Rational(1) / base, -exponent);
    }
    Rational out = 1;
    for (int k = 0; k < exponent; ++k)
        out *= base;
    return out;
}

}  // namespace toda
