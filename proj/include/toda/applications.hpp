#pragma once

// Specializations of the content-type series and the brute-force oracles
// they are compared against: constellations, double Hurwitz numbers, Schur
// measure correlators and the HCIZ character expansion.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "content.hpp"
#include "hierarchy.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "specialize.hpp"

namespace toda {

// ---------------------------------------------------------------------------
// Constellations

/// y_j -> prod_{i=1}^{r} (1 + j u_i), a = b = 1, y_0^{1/2} -> 1.
inline Assignment constellation_assignment(int r, int cap)
{
    Assignment asg;
    asg.space = u_space(r, cap);
    auto space = asg.space;
    asg.y = [space, r](int j) -> YValue {
        TruncatedPoly<Rational> out = TruncatedPoly<Rational>::constant(space, Rational(1));
        for (int i = 1; i <= r; ++i)
            out *= TruncatedPoly<Rational>::constant(space, Rational(1)) +
                   TruncatedPoly<Rational>::variable(space, "u", i, Rational(j));
        return out;
    };
    asg.y0_sqrt = TruncatedPoly<Rational>::constant(space, Rational(1));
    return asg;
}

/// [p_alpha q_beta u_1^{a_1} u_2^{a_2} ...] of Phi_0 under the constellation
/// specialization; zero entries of `defects` are dropped. With cap < 0 the cap is
/// the total defect.
inline Rational b_series_coeff(const Partition& alpha, const Partition& beta, const std::vector<int>& defects,
                               int cap = -1)
{
    if (alpha.size() != beta.size())
        return Rational(0);
    std::vector<int> a;
    for (int x : defects) {
        if (x < 0)
            throw std::invalid_argument("negative defect");
        if (x > 0)
            a.push_back(x);
    }
    int total = 0;
    for (int x : a)
        total += x;
    if (cap < 0)
        cap = total;
    if (cap < total)
        throw CapError("u-cap " + std::to_string(cap) + " is below the total defect " + std::to_string(total));
    const Assignment asg = constellation_assignment(static_cast<int>(a.size()), cap);
    Exponents e(a.begin(), a.end());
    Rational out = 0;
    for (const auto& lambda : enumerate_partitions(alpha.size())) {
        const Rational weight = schur_power_sum_coeff(lambda, alpha) * schur_power_sum_coeff(lambda, beta);
        if (is_zero(weight))
            continue;
        out += weight * specialize(phi_coeff(0, lambda), asg).coeff(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Double Hurwitz numbers

/// r = l(alpha) + l(beta) + 2g - 2, the number of simple branch points.
inline int hurwitz_branch_points(const Partition& alpha, const Partition& beta, int g)
{
    return alpha.length() + beta.length() + 2 * g - 2;
}

/// y_j -> exp(j t) truncated at t^cap, a = b = 1, y_0^{1/2} -> 1.
inline Assignment hurwitz_assignment(int cap)
{
    Assignment asg;
    asg.space = single_variable_space("t", cap);
    auto space = asg.space;
    asg.y = [space](int j) -> YValue { return truncated_exp(space, "t", Rational(j)); };
    asg.y0_sqrt = TruncatedPoly<Rational>::constant(space, Rational(1));
    return asg;
}

namespace detail {

inline void check_hurwitz_types(const Partition& alpha, const Partition& beta)
{
    if (alpha.size() != beta.size() || alpha.size() < 1)
        throw std::invalid_argument("cycle types must be nonempty partitions of the same degree");
}

}  // namespace detail

/// H^g_{alpha,beta} = |Aut alpha| |Aut beta| r! [p_alpha q_beta t^r] of Phi_0 under
/// y_j -> e^{jt}. Zero when r < 0 (see hurwitz_branch_points).
inline Rational hurwitz_number(const Partition& alpha, const Partition& beta, int g)
{
    detail::check_hurwitz_types(alpha, beta);
    const int r = hurwitz_branch_points(alpha, beta, g);
    if (r < 0)
        return Rational(0);
    const Assignment asg = hurwitz_assignment(r);
    const Exponents e{r};
    Rational series = 0;
    for (const auto& lambda : enumerate_partitions(alpha.size())) {
        const Rational weight = schur_power_sum_coeff(lambda, alpha) * schur_power_sum_coeff(lambda, beta);
        if (is_zero(weight))
            continue;
        series += weight * specialize(phi_coeff(0, lambda), asg).coeff(e);
    }
    return series * Rational(aut_size(alpha)) * Rational(aut_size(beta)) * factorial(r);
}

/// (1/d!) |Aut alpha| |Aut beta| times the number of transposition factorizations.
inline Rational hurwitz_number_oracle(const Partition& alpha, const Partition& beta, int g, int max_degree = 6)
{
    detail::check_hurwitz_types(alpha, beta);
    const int r = hurwitz_branch_points(alpha, beta, g);
    if (r < 0)
        return Rational(0);
    const Integer count = transposition_factorization_count(alpha, beta, r, max_degree);
    return Rational(count) * Rational(aut_size(alpha)) * Rational(aut_size(beta)) / factorial(alpha.size());
}

// ---------------------------------------------------------------------------
// Schur measure

/// 1 when X - n lies in the Maya set {lambda_i - i} of lambda, else 0.
inline Rational schur_measure_g(const std::set<int>& X, int n, const Partition& lambda)
{
    if (X.empty())
        return Rational(1);
    const int depth = std::max(lambda.length(), n - *X.begin()) + 1;
    const auto prefix = maya_prefix(lambda, depth);
    const std::set<int> maya(prefix.begin(), prefix.end());
    for (int x : X)
        if (!maya.count(x - n))
            return Rational(0);
    return Rational(1);
}

inline DiagonalFamily<Rational> schur_measure_family(const std::set<int>& X)
{
    std::string tag = "schur-measure{";
    for (int x : X)
        tag += (tag.back() == '{' ? "" : ",") + std::to_string(x);
    tag += "}";
    return DiagonalFamily<Rational>{[X](int n, const Partition& lambda) { return schur_measure_g(X, n, lambda); },
                                    tag};
}

// ---------------------------------------------------------------------------
// HCIZ

/// prod over cells of 1/(n + c) when l(lambda) <= n, else 0. Zero for n < 0.
inline Rational hciz_coeff(int n, const Partition& lambda)
{
    if (n < 0)
        return Rational(0);
    if (lambda.length() > n)
        return Rational(0);
    Rational out = 1;
    for (int c : contents(lambda))
        out /= Rational(n + c);
    return out;
}

/// (prod_{i=1}^{n-1} i!)^{-1}; 1 for n <= 1.
inline Rational hciz_theta(int n)
{
    Rational out = 1;
    for (int i = 1; i <= n - 1; ++i)
        out /= factorial(i);
    return out;
}

inline Rational hciz_g(int n, const Partition& lambda)
{
    if (n < 0)
        return Rational(0);
    return hciz_theta(n) * hciz_coeff(n, lambda);
}

inline DiagonalFamily<Rational> hciz_family()
{
    return DiagonalFamily<Rational>{[](int n, const Partition& lambda) { return hciz_g(n, lambda); }, "hciz"};
}

/// a = 1, y_i -> 1/i for i > 0 and 0 otherwise; b is removed beforehand by
/// b -> y_0^{-1/2}, so no y_0 power survives.
inline Assignment hciz_assignment()
{
    Assignment asg;
    asg.space = make_space({}, 0);
    auto space = asg.space;
    asg.y = [space](int i) -> YValue {
        if (i <= 0)
            return std::nullopt;
        return TruncatedPoly<Rational>::constant(space, Rational(1, i));
    };
    return asg;
}

/// g_lambda(n) of Phi_n pushed through the HCIZ specialization.
inline Rational hciz_from_phi(int n, const Partition& lambda)
{
    static const Assignment asg = hciz_assignment();
    return specialize(substitute_b_by_inverse_sqrt_y0(phi_coeff(n, lambda)), asg).constant_term();
}

// ---------------------------------------------------------------------------
// Specialized content families

inline DiagonalFamily<TruncatedPoly<Rational>> constellation_family(int r, int cap)
{
    const Assignment asg = constellation_assignment(r, cap);
    return memoize(DiagonalFamily<TruncatedPoly<Rational>>{
        [asg](int n, const Partition& lambda) { return specialize(phi_coeff(n, lambda), asg); },
        "constellations(r=" + std::to_string(r) + ",cap=" + std::to_string(cap) + ")"});
}

inline DiagonalFamily<TruncatedPoly<Rational>> hurwitz_family(int cap)
{
    const Assignment asg = hurwitz_assignment(cap);
    return memoize(DiagonalFamily<TruncatedPoly<Rational>>{
        [asg](int n, const Partition& lambda) { return specialize(phi_coeff(n, lambda), asg); },
        "hurwitz(cap=" + std::to_string(cap) + ")"});
}

enum class Application { constellations, hurwitz, schur_measure, hciz };

inline Application parse_application(const std::string& name)
{
    if (name == "constellations")
        return Application::constellations;
    if (name == "hurwitz")
        return Application::hurwitz;
    if (name == "schur-measure")
        return Application::schur_measure;
    if (name == "hciz")
        return Application::hciz;
    throw std::invalid_argument("unknown application '" + name + "'");
}

struct ApplicationOptions {
    std::set<int> X;  // Schur measure correlator set
    int cap = 4;      // t- or u-degree cap
    int u_vars = 2;   // number of u variables for constellations
};

/// diagonal_sweep on the chosen family.
inline ConstraintReport verify_application(Application which, const SweepBounds& bounds,
                                           const ApplicationOptions& options = {})
{
    switch (which) {
    case Application::constellations:
        return diagonal_sweep(constellation_family(options.u_vars, options.cap), bounds);
    case Application::hurwitz:
        return diagonal_sweep(hurwitz_family(options.cap), bounds);
    case Application::schur_measure:
        return diagonal_sweep(schur_measure_family(options.X), bounds);
    case Application::hciz:
        return diagonal_sweep(hciz_family(), bounds);
    }
    throw std::invalid_argument("unknown application");
}

}  // namespace toda
