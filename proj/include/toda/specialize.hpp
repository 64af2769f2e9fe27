#pragma once

// Ring homomorphisms from the symbolic monomials in a, b, y_i into truncated
// rational polynomials.

#include <functional>
#include <optional>
#include <stdexcept>

#include "truncated_poly.hpp"
#include "ymonomial.hpp"

namespace toda {

struct SingularSpecialization : RingError {
    using RingError::RingError;
};

struct FractionalExponent : RingError {
    using RingError::RingError;
};

/// Value assigned to y_i: a truncated series, or nullopt for the ZERO marker.
using YValue = std::optional<TruncatedPoly<Rational>>;

struct Assignment {
    SpacePtr space;
    Rational a_value{1};
    Rational b_value{1};
    /// y_i for every i, including i = 0.
    std::function<YValue(int)> y;
    /// Square root of the y_0 value, when one is known. Required to evaluate
    /// half-integral y_0 exponents.
    std::optional<TruncatedPoly<Rational>> y0_sqrt;
};

/// Image of a monomial under an assignment, truncated at the assignment's cap.
inline TruncatedPoly<Rational> specialize(const YMonomial& x, const Assignment& asg)
{
    using Poly = TruncatedPoly<Rational>;
    if (x.is_zero())
        return Poly(asg.space);
    const YSignature& sig = x.signature();
    Poly out = Poly::constant(asg.space, x.scalar() * power(asg.a_value, sig.a) * power(asg.b_value, sig.b));

    auto apply = [&](const YValue& value, int index, int exponent) {
        if (!value) {
            if (exponent < 0)
                throw SingularSpecialization("negative power of y" + std::to_string(index) + ", which is sent to 0");
            out = Poly(asg.space);
            return;
        }
        if (exponent < 0 && is_zero(value->constant_term()))
            throw SingularSpecialization("y" + std::to_string(index) + " has no inverse in the truncated ring");
        if (!out.is_zero())
            out *= value->pow(exponent);
    };

    if (sig.y0_halves != 0) {
        if (sig.y0_halves % 2 == 0) {
            apply(asg.y(0), 0, sig.y0_halves / 2);
        } else if (asg.y0_sqrt) {
            apply(asg.y0_sqrt, 0, sig.y0_halves);
        } else {
            throw FractionalExponent("half-integral power of y0 survives the specialization");
        }
    }
    for (auto [index, exponent] : sig.y) {
        apply(asg.y(index), index, exponent);
    }
    return out;
}

/// exp(c t) truncated at the cap of a one-variable space in t.
inline TruncatedPoly<Rational> truncated_exp(const SpacePtr& space, const std::string& family, const Rational& c)
{
    TruncatedPoly<Rational> out(space);
    const std::size_t slot = space->index_of(family, 1);
    Rational term = 1;
    for (int k = 0; k <= space->cap(); ++k) {
        Exponents e(space->size(), 0);
        e[slot] = k;
        out.add_term(e, term);
        term = term * c / Rational(k + 1);
    }
    return out;
}

}  // namespace toda
