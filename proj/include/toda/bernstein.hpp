#pragma once

// The Bernstein operator B(p;t), its adjoint, the scalar Gamma(q;t), and the
// combinatorial description of their action on Schur expansions.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "partition.hpp"
#include "series.hpp"

namespace toda {

struct WindowError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Finite Laurent series in t whose coefficients are truncated polynomials;
/// exponents are confined to [-window, window].
template <class C = Rational>
class LaurentSeries {
public:
    using Poly = TruncatedPoly<C>;

    LaurentSeries(SpacePtr space, int window) : space_(std::move(space)), window_(window)
    {
        if (window_ < 0)
            throw WindowError("negative t-window");
    }

    const SpacePtr& space() const noexcept { return space_; }
    int window() const noexcept { return window_; }
    const std::map<int, Poly>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of t^e (zero outside the stored support).
    Poly coeff(int e) const
    {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Poly(space_) : it->second;
    }

    void add(int e, const Poly& p)
    {
        if (p.is_zero() || e < -window_ || e > window_)
            return;
        auto [it, inserted] = coeffs_.try_emplace(e, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    LaurentSeries& operator+=(const LaurentSeries& other)
    {
        for (const auto& [e, p] : other.coeffs_)
            add(e, p);
        return *this;
    }

    LaurentSeries& operator-=(const LaurentSeries& other)
    {
        for (const auto& [e, p] : other.coeffs_)
            add(e, -p);
        return *this;
    }

    friend LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs)
    {
        LaurentSeries out(lhs.space_, std::min(lhs.window_, rhs.window_));
        for (const auto& [e1, p1] : lhs.coeffs_)
            for (const auto& [e2, p2] : rhs.coeffs_)
                out.add(e1 + e2, p1 * p2);
        return out;
    }

    /// Apply a coefficient-wise map into another space.
    template <class F>
    LaurentSeries map(const SpacePtr& target, F&& f) const
    {
        LaurentSeries out(target, window_);
        for (const auto& [e, p] : coeffs_)
            out.add(e, f(p));
        return out;
    }

    bool operator==(const LaurentSeries& other) const { return coeffs_ == other.coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

private:
    SpacePtr space_;
    int window_;
    std::map<int, Poly> coeffs_;
};

namespace detail {

/// sum_{r>=0} h_r(sign * x) t^r over the family `family` of `space`, up to
/// the degree cap.
inline LaurentSeries<Rational> exp_power_sums(const SpacePtr& space, const std::string& family, int sign, int window)
{
    LaurentSeries<Rational> out(space, window);
    // exp(sign * sum_k t^k x_k / k) built from h_r with the sign folded in as
    // x_k -> sign * x_k, i.e. degree-r part scaled termwise.
    for (int r = 0; r <= space->cap() && r <= window; ++r) {
        PSeries h = h_poly(r, space, family);
        if (sign < 0) {
            PSeries flipped(space);
            for (const auto& [e, c] : h.terms()) {
                int vars = 0;
                for (std::size_t k = 0; k < e.size(); ++k)
                    if (space->vars()[k].family == family)
                        vars += e[k];
                flipped.add_term(e, vars % 2 ? Rational(-c) : c);
            }
            h = flipped;
        }
        out.add(r, h);
    }
    return out;
}

/// exp(sign * sum_k t^{-k} d/dx_k) f as a terminating sum, since each
/// application lowers the x-degree.
template <class C>
LaurentSeries<C> exp_perp_part(const TruncatedPoly<C>& f, const std::string& family, int sign, int window)
{
    const SpacePtr& space = f.space();
    LaurentSeries<C> out(space, window);
    LaurentSeries<C> current(space, window);
    current.add(0, f);
    const int top = std::max(0, f.degree_in(family));
    Rational inv_factorial = 1;
    for (int n = 0; n <= top; ++n) {
        if (n > 0) {
            // current <- D current with D = sum_k t^{-k} d/dx_k.
            LaurentSeries<C> next(space, window);
            for (const auto& [e, p] : current.coefficients())
                for (int k = 1; k <= space->family_size(family); ++k) {
                    if (!space->find(family, k))
                        continue;
                    next.add(e - k, p.derivative(family, k));
                }
            current = next;
            inv_factorial /= n;
        }
        if (current.is_zero())
            break;
        const Rational scale = (sign < 0 && n % 2) ? Rational(-inv_factorial) : inv_factorial;
        for (const auto& [e, p] : current.coefficients())
            out.add(e, p * scale);
    }
    return out;
}

inline void check_window(int needed, int window)
{
    if (window < needed)
        throw WindowError("t-window " + std::to_string(window) + " is smaller than the required " +
                          std::to_string(needed));
}

}  // namespace detail

/// Smallest admissible window: input degree plus output cap.
template <class C>
int required_window(const TruncatedPoly<C>& f, const std::string& family = "p")
{
    const int cap = f.space() ? f.space()->cap() : 0;
    return std::max(0, f.degree_in(family)) + cap;
}

/// B(p;t) f = exp(sum t^k p_k / k) exp(-sum t^{-k} p_k^perp / k) f, evaluated
/// directly on a polynomial f.
template <class C>
LaurentSeries<C> bernstein_direct(const TruncatedPoly<C>& f, int window, const std::string& family = "p")
{
    if (!f.space())
        throw VariableMismatch("bernstein_direct needs a polynomial with a variable space");
    detail::check_window(required_window(f, family), window);
    auto perp = detail::exp_perp_part(f, family, -1, window);
    auto mult = detail::exp_power_sums(f.space(), family, +1, window);
    LaurentSeries<C> out(f.space(), window);
    for (const auto& [e1, m] : mult.coefficients())
        for (const auto& [e2, p] : perp.coefficients())
            out.add(e1 + e2, lift(m, C(1)) * p);
    return out;
}

template <class C>
LaurentSeries<C> bernstein_direct(const TruncatedPoly<C>& f, const std::string& family = "p")
{
    return bernstein_direct(f, required_window(f, family), family);
}

/// B^perp(p;t) f = exp(-sum t^k p_k / k) exp(sum t^{-k} p_k^perp / k) f.
template <class C>
LaurentSeries<C> bernstein_adjoint_direct(const TruncatedPoly<C>& f, int window, const std::string& family = "p")
{
    if (!f.space())
        throw VariableMismatch("bernstein_adjoint_direct needs a polynomial with a variable space");
    detail::check_window(required_window(f, family), window);
    auto perp = detail::exp_perp_part(f, family, +1, window);
    auto mult = detail::exp_power_sums(f.space(), family, -1, window);
    LaurentSeries<C> out(f.space(), window);
    for (const auto& [e1, m] : mult.coefficients())
        for (const auto& [e2, p] : perp.coefficients())
            out.add(e1 + e2, lift(m, C(1)) * p);
    return out;
}

template <class C>
LaurentSeries<C> bernstein_adjoint_direct(const TruncatedPoly<C>& f, const std::string& family = "p")
{
    return bernstein_adjoint_direct(f, required_window(f, family), family);
}

/// Schur coefficients a_lambda as a total function on partitions.
template <class R>
using CoeffOracle = std::function<R(const Partition&)>;

/// [s_beta t^e] of B applied to sum a_lambda s_lambda:
/// (-1)^{k-1} a(beta lowered at k) for the unique k with |beta| - |beta lowered at k| = e.
template <class R>
R bernstein_coeff(const CoeffOracle<R>& a, const Partition& beta, int e)
{
    auto k = solve_lower_size(beta, beta.size() - e);
    if (!k)
        return R{};
    R value = a(lower(beta, *k));
    return (*k - 1) % 2 ? R{} - value : value;
}

/// [s_alpha t^e] of B^perp applied to sum a_lambda s_lambda, with sign
/// (-1)^{|alpha| - |alpha raised at m| + m - 1}.
template <class R>
R bernstein_coeff_adjoint(const CoeffOracle<R>& a, const Partition& alpha, int e)
{
    auto m = solve_raise_size(alpha, alpha.size() - e);
    if (!m)
        return R{};
    R value = a(raise(alpha, *m));
    const int exponent = e + *m - 1;
    return (exponent % 2 != 0) ? R{} - value : value;
}

/// Gamma(q;t) = exp(sum_i t^i q_i / i); `inverse` gives Gamma^{-1}.
inline LaurentSeries<Rational> gamma_scalar(const SpacePtr& space, int window, bool inverse = false,
                                            const std::string& family = "q")
{
    return detail::exp_power_sums(space, family, inverse ? -1 : +1, window);
}

}  // namespace toda
