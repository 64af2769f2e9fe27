#pragma once

// Coefficient-level checks for the KP and 2-Toda hierarchies.
//
// A family tau_n(p, q) = sum a^lambda_mu(n) s_lambda(p) s_mu(q) is handled
// through its coefficients only. Every check is an exact identity in the
// coefficient ring; nothing is ever divided.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bernstein.hpp"
#include "partition.hpp"
#include "serialize.hpp"
#include "series.hpp"
#include "ymonomial.hpp"

namespace toda {

struct InvalidTuple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Ring in which sums of oracle values live; also the coefficient ring of
/// expanded series.
template <class R>
struct expansion_coefficient {
    using type = R;
};
template <>
struct expansion_coefficient<YMonomial> {
    using type = YPolynomial;
};
template <class R>
using expansion_coefficient_t = typename expansion_coefficient<R>::type;

/// Coefficients a^lambda_mu(n) of a sequence of bivariate series.
template <class R>
struct FamilyOracle {
    std::function<R(int, const Partition&, const Partition&)> eval;
    bool diagonal = false;
    std::string description;

    R operator()(int n, const Partition& lambda, const Partition& mu) const { return eval(n, lambda, mu); }
};

/// Diagonal coefficients g_lambda(n) of tau_n = sum g_lambda(n) s_lambda(p) s_lambda(q).
template <class R>
struct DiagonalFamily {
    std::function<R(int, const Partition&)> g;
    std::string description;

    R operator()(int n, const Partition& lambda) const { return g(n, lambda); }

    FamilyOracle<R> as_family() const
    {
        auto gg = g;
        return FamilyOracle<R>{[gg](int n, const Partition& lambda, const Partition& mu) {
                                   return lambda == mu ? gg(n, lambda) : R{};
                               },
                               true, description};
    }
};

/// Thread-safe memo in front of an expensive diagonal family.
template <class R>
DiagonalFamily<R> memoize(const DiagonalFamily<R>& g)
{
    struct Memo {
        std::mutex mutex;
        std::map<std::pair<int, Partition>, R> values;
    };
    auto memo = std::make_shared<Memo>();
    auto inner = g.g;
    return DiagonalFamily<R>{[memo, inner](int n, const Partition& lambda) {
                                 auto key = std::make_pair(n, lambda);
                                 {
                                     std::lock_guard lock(memo->mutex);
                                     if (auto it = memo->values.find(key); it != memo->values.end())
                                         return it->second;
                                 }
                                 R value = inner(n, lambda);
                                 std::lock_guard lock(memo->mutex);
                                 return memo->values.emplace(std::move(key), std::move(value)).first->second;
                             },
                             g.description};
}

/// One checked identity instance.
struct ConstraintRecord {
    std::string identity;
    Json tuple;
    Json lhs;
    Json rhs;
    bool pass = false;
};

/// Outcome of a batch of identity checks. Failing records are always kept;
/// passing ones only when keep_passes is set.
struct ConstraintReport {
    std::string identity;
    Json params = Json::object();
    std::size_t total = 0;
    std::size_t passed = 0;
    bool keep_passes = false;
    std::vector<ConstraintRecord> records;

    std::size_t failed() const noexcept { return total - passed; }
    bool ok() const noexcept { return total == passed; }

    template <class R>
    void add(const Json& tuple, const R& lhs, const R& rhs)
    {
        ++total;
        const bool pass = lhs == rhs;
        if (pass)
            ++passed;
        if (!pass || keep_passes)
            records.push_back({identity, tuple, toda::to_json(lhs), toda::to_json(rhs), pass});
    }

    void merge(const ConstraintReport& other)
    {
        total += other.total;
        passed += other.passed;
        records.insert(records.end(), other.records.begin(), other.records.end());
    }

    std::vector<ConstraintRecord> failures() const
    {
        std::vector<ConstraintRecord> out;
        for (const auto& r : records)
            if (!r.pass)
                out.push_back(r);
        return out;
    }

    Json to_json() const
    {
        Json fails = Json::array();
        Json all = Json::array();
        for (const auto& r : records) {
            Json entry{{"tuple", r.tuple}, {"lhs", r.lhs}, {"rhs", r.rhs}};
            if (!r.pass)
                fails.push_back(entry);
            else
                all.push_back(entry);
        }
        Json out{{"identity", identity}, {"params", params}, {"total", total},
                 {"passed", passed},     {"failed", failed()}, {"failures", fails}};
        if (keep_passes)
            out["passes"] = all;
        return out;
    }
};

namespace detail {

inline int parity_sign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

template <class R>
void accumulate(R& acc, int sign, const R& term)
{
    if (sign > 0)
        acc = acc + term;
    else
        acc = acc - term;
}

/// Runs body(index, report) over [0, count) on `jobs` threads and merges the
/// per-thread reports in index order.
template <class Body>
ConstraintReport parallel_sweep(std::size_t count, unsigned jobs, const ConstraintReport& prototype, Body body)
{
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<ConstraintReport> parts(count, prototype);
    if (jobs == 1) {
        for (std::size_t k = 0; k < count; ++k)
            body(k, parts[k]);
    } else {
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t k = w; k < count; k += jobs)
                        body(k, parts[k]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    ConstraintReport out = prototype;
    for (const auto& p : parts)
        out.merge(p);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// KP

/// sum_{i,j} (-1)^{|alpha| - |alpha raised i| + i + j} a(alpha raised i) a(beta lowered j)
/// over |alpha raised i| + |beta lowered j| = |alpha| + |beta| + 1. Zero iff the
/// (alpha, beta) constraint holds.
template <class R>
expansion_coefficient_t<R> kp_constraint(const CoeffOracle<R>& a, const Partition& alpha, const Partition& beta)
{
    using S = expansion_coefficient_t<R>;
    S acc{};
    const int target = alpha.size() + beta.size() + 1;
    const int min_lower = beta.size() - beta.part(1);
    for (int i = 1;; ++i) {
        const int up = raise_size(alpha, i);
        if (up > target - min_lower)
            break;
        auto j = solve_lower_size(beta, target - up);
        if (!j)
            continue;
        const int sign = detail::parity_sign(alpha.size() - up + i + *j);
        detail::accumulate(acc, sign, S(R(a(raise(alpha, i)) * a(lower(beta, *j)))));
    }
    return acc;
}

/// Every KP constraint with |alpha|, |beta| <= max_size.
template <class R>
ConstraintReport kp_sweep(const CoeffOracle<R>& a, int max_size, unsigned jobs = 1)
{
    ConstraintReport proto;
    proto.identity = "kp";
    proto.params = Json{{"L", max_size}};
    const auto parts = partitions_up_to(max_size);
    return detail::parallel_sweep(parts.size(), jobs, proto, [&](std::size_t k, ConstraintReport& rep) {
        for (const auto& beta : parts)
            rep.add(Json{{"alpha", to_json(parts[k])}, {"beta", to_json(beta)}}, kp_constraint(a, parts[k], beta),
                    expansion_coefficient_t<R>{});
    });
}

// ---------------------------------------------------------------------------
// 2-Toda, general form

/// Both sides of the (m, k, alpha, beta, lambda, mu) coefficient identity.
template <class R>
std::pair<expansion_coefficient_t<R>, expansion_coefficient_t<R>>
toda_constraint(const FamilyOracle<R>& F, int m, int k, const Partition& alpha, const Partition& beta,
                const Partition& lambda, const Partition& mu)
{
    using S = expansion_coefficient_t<R>;
    S lhs{};
    {
        const int target = lambda.size() + alpha.size() + m - k;
        const int min_raise = alpha.size() - alpha.length();
        for (int i = 1;; ++i) {
            const int down = lower_size(lambda, i);
            if (down > target - min_raise)
                break;
            auto j = solve_raise_size(alpha, target - down);
            if (!j)
                continue;
            const int sign = detail::parity_sign(alpha.size() - raise_size(alpha, *j) + i + *j);
            detail::accumulate(lhs, sign, S(R(F(m, lower(lambda, i), mu) * F(k + 1, raise(alpha, *j), beta))));
        }
    }
    S rhs{};
    {
        const int target = mu.size() + beta.size() + k - m;
        const int min_lower = beta.size() - beta.part(1);
        for (int s = 1;; ++s) {
            const int up = raise_size(mu, s);
            if (up > target - min_lower)
                break;
            auto t = solve_lower_size(beta, target - up);
            if (!t)
                continue;
            const int sign = detail::parity_sign(mu.size() - up + s + *t);
            detail::accumulate(rhs, sign, S(R(F(m + 1, lambda, raise(mu, s)) * F(k, alpha, lower(beta, *t)))));
        }
    }
    return {lhs, rhs};
}

/// toda_constraint over all partitions of size <= max_size and all
/// m, k in [level_lo, level_hi].
template <class R>
ConstraintReport toda_sweep(const FamilyOracle<R>& F, int max_size, int level_lo, int level_hi, unsigned jobs = 1)
{
    ConstraintReport proto;
    proto.identity = "toda";
    proto.params = Json{{"family", F.description}, {"L", max_size}, {"window", {level_lo, level_hi}}};
    const auto parts = partitions_up_to(max_size);
    return detail::parallel_sweep(parts.size(), jobs, proto, [&](std::size_t idx, ConstraintReport& rep) {
        const Partition& alpha = parts[idx];
        for (const auto& beta : parts)
            for (const auto& lambda : parts)
                for (const auto& mu : parts)
                    for (int m = level_lo; m <= level_hi; ++m)
                        for (int k = level_lo; k <= level_hi; ++k) {
                            auto [lhs, rhs] = toda_constraint(F, m, k, alpha, beta, lambda, mu);
                            rep.add(Json{{"m", m},
                                         {"k", k},
                                         {"alpha", to_json(alpha)},
                                         {"beta", to_json(beta)},
                                         {"lambda", to_json(lambda)},
                                         {"mu", to_json(mu)}},
                                    lhs, rhs);
                        }
    });
}

// ---------------------------------------------------------------------------
// 2-Toda, diagonal families

/// g(n, lambda raised i) g(m, mu lowered j) and g(n-1, lambda) g(m+1, mu), for a
/// tuple obeying |lambda| + |mu| = |lambda raised i| + |mu lowered j| + n - m - 1.
template <class R>
std::pair<R, R> diagonal_constraint(const DiagonalFamily<R>& g, const Partition& lambda, const Partition& mu, int n,
                                    int m, int i, int j)
{
    if (i < 1 || j < 1)
        throw InvalidTuple("raise and lower indices must be positive");
    if (lambda.size() + mu.size() != raise_size(lambda, i) + lower_size(mu, j) + n - m - 1)
        throw InvalidTuple("tuple violates the size equation");
    return {R(g(n, raise(lambda, i)) * g(m, lower(mu, j))), R(g(n - 1, lambda) * g(m + 1, mu))};
}

struct SweepBounds {
    int max_size = 5;      // |lambda|, |mu| <= max_size
    int level_lo = -3;     // n, m in [level_lo, level_hi]
    int level_hi = 3;
    int raise_bound = -1;  // |lambda raised i|, |mu lowered j| <= raise_bound; -1 picks 2L + span
    unsigned jobs = 1;
    bool keep_passes = false;

    int effective_raise_bound() const
    {
        return raise_bound >= 0 ? raise_bound : 2 * max_size + (level_hi - level_lo);
    }

    Json to_json() const
    {
        return Json{{"L", max_size}, {"window", {level_lo, level_hi}}, {"raise_bound", effective_raise_bound()}};
    }
};

/// Checks every diagonal identity within the bounds. The (i, j) pairs are
/// found by solving the size equation, so each (lambda, mu, n, m, i) has at
/// most one j.
template <class R>
ConstraintReport diagonal_sweep(const DiagonalFamily<R>& g, const SweepBounds& bounds)
{
    ConstraintReport proto;
    proto.identity = "diagonal";
    proto.keep_passes = bounds.keep_passes;
    proto.params = bounds.to_json();
    proto.params["family"] = g.description;
    if (bounds.level_hi < bounds.level_lo)
        return proto;
    const auto parts = partitions_up_to(bounds.max_size);
    const int bound = bounds.effective_raise_bound();
    return detail::parallel_sweep(parts.size(), bounds.jobs, proto, [&](std::size_t idx, ConstraintReport& rep) {
        const Partition& lambda = parts[idx];
        for (const auto& mu : parts)
            for (int n = bounds.level_lo; n <= bounds.level_hi; ++n)
                for (int m = bounds.level_lo; m <= bounds.level_hi; ++m)
                    for (int i = 1;; ++i) {
                        const int up = raise_size(lambda, i);
                        if (up > bound)
                            break;
                        const int down = lambda.size() + mu.size() - up - n + m + 1;
                        if (down < 0 || down > bound)
                            continue;
                        auto j = solve_lower_size(mu, down);
                        if (!j)
                            continue;
                        auto [lhs, rhs] = diagonal_constraint(g, lambda, mu, n, m, i, *j);
                        rep.add(Json{{"lambda", to_json(lambda)},
                                     {"mu", to_json(mu)},
                                     {"n", n},
                                     {"m", m},
                                     {"i", i},
                                     {"j", *j}},
                                lhs, rhs);
                    }
    });
}

// ---------------------------------------------------------------------------
// Expanded series

/// tau_n(p, q) truncated at joint degree `cap`.
template <class R>
TruncatedPoly<expansion_coefficient_t<R>> expand_family(const FamilyOracle<R>& F, int n, int cap)
{
    using C = expansion_coefficient_t<R>;
    const SpacePtr space = bivariate_space(cap);
    SchurCache cache(space);
    TruncatedPoly<C> out(space);
    const auto parts = partitions_up_to(cap);
    for (const auto& lambda : parts)
        for (const auto& mu : parts) {
            if (lambda.size() + mu.size() > cap)
                continue;
            if (F.diagonal && !(lambda == mu))
                continue;
            const C c = C(F(n, lambda, mu));
            if (coefficient_is_zero(c))
                continue;
            out += lift(cache.schur(lambda, "p") * cache.schur(mu, "q"), c);
        }
    return out;
}

/// tau_{m+1} tau_{m-1} + (d tau_m / dp_1)(d tau_m / dq_1) - tau_m d^2 tau_m / dp_1 dq_1,
/// exact through joint degree `cap`.
template <class R>
TruncatedPoly<expansion_coefficient_t<R>> toda_equation_check(const FamilyOracle<R>& F, int m, int cap)
{
    const int work = cap + 2;
    auto up = expand_family(F, m + 1, work);
    auto mid = expand_family(F, m, work);
    auto down = expand_family(F, m - 1, work);
    auto dp = mid.derivative("p", 1);
    auto dq = mid.derivative("q", 1);
    auto dpq = dp.derivative("q", 1);
    auto residual = up * down + dp * dq - mid * dpq;
    return residual.truncated(cap);
}

/// sum (-1)^{|alpha| + |alpha raised j| + i + j} (s^perp_{lambda lowered i} tau_m)(s^perp_{alpha raised j} tau_{m-r+1})
/// over |lambda lowered i| + |alpha raised j| = |lambda| + |alpha| + r, with the
/// perp operators acting on `family` ("p" or "q"). Series are expanded at `cap`;
/// the residual is exact through degree cap - (|lambda| + |alpha| + r).
template <class R>
TruncatedPoly<expansion_coefficient_t<R>> subhierarchy_check(const FamilyOracle<R>& F, int m, int r,
                                                              const Partition& lambda, const Partition& alpha,
                                                              int cap, const std::string& family = "p")
{
    if (r < 1)
        throw InvalidTuple("sub-hierarchy order r must be positive");
    const int target = lambda.size() + alpha.size() + r;
    if (cap < target)
        throw CapError("cap " + std::to_string(cap) + " is too small for total perp degree " +
                       std::to_string(target));
    auto tau_m = expand_family(F, m, cap);
    auto tau_shift = expand_family(F, m - r + 1, cap);
    using Poly = TruncatedPoly<expansion_coefficient_t<R>>;
    Poly acc(tau_m.space());
    const int min_raise = alpha.size() - alpha.length();
    for (int i = 1;; ++i) {
        const int down = lower_size(lambda, i);
        if (down > target - min_raise)
            break;
        auto j = solve_raise_size(alpha, target - down);
        if (!j)
            continue;
        const int up = raise_size(alpha, *j);
        Poly term = schur_perp(lower(lambda, i), tau_m, family) * schur_perp(raise(alpha, *j), tau_shift, family);
        if (detail::parity_sign(alpha.size() + up + i + *j) > 0)
            acc += term;
        else
            acc -= term;
    }
    return acc.truncated(cap - target);
}

/// Operator form of toda_constraint: the difference of the two sides as a
/// p, q polynomial, exact through `cap` minus the largest total perp degree
/// in any product. Its constant term equals lhs - rhs of toda_constraint.
template <class R>
TruncatedPoly<expansion_coefficient_t<R>> toda_operator_residual(const FamilyOracle<R>& F, int m, int k,
                                                                  const Partition& alpha, const Partition& beta,
                                                                  const Partition& lambda, const Partition& mu,
                                                                  int cap)
{
    using Poly = TruncatedPoly<expansion_coefficient_t<R>>;
    auto perp2 = [](const Partition& x, const Partition& y, const Poly& tau) {
        return schur_perp(y, schur_perp(x, tau, "p"), "q");
    };
    struct Term {
        int sign;
        Partition x1, y1, x2, y2;
        int level1, level2;
    };
    std::vector<Term> terms;
    {
        const int target = lambda.size() + alpha.size() + m - k;
        const int min_raise = alpha.size() - alpha.length();
        for (int i = 1;; ++i) {
            const int down = lower_size(lambda, i);
            if (down > target - min_raise)
                break;
            auto j = solve_raise_size(alpha, target - down);
            if (!j)
                continue;
            terms.push_back({detail::parity_sign(alpha.size() - raise_size(alpha, *j) + i + *j), lower(lambda, i), mu,
                             raise(alpha, *j), beta, m, k + 1});
        }
    }
    {
        const int target = mu.size() + beta.size() + k - m;
        const int min_lower = beta.size() - beta.part(1);
        for (int s = 1;; ++s) {
            const int up = raise_size(mu, s);
            if (up > target - min_lower)
                break;
            auto t = solve_lower_size(beta, target - up);
            if (!t)
                continue;
            // moved to the left-hand side, hence the extra sign
            terms.push_back({-detail::parity_sign(mu.size() - up + s + *t), lambda, raise(mu, s), alpha,
                             lower(beta, *t), m + 1, k});
        }
    }
    int loss = 0;
    for (const auto& t : terms)
        loss = std::max({loss, t.x1.size() + t.y1.size(), t.x2.size() + t.y2.size()});
    if (cap < loss)
        throw CapError("cap " + std::to_string(cap) + " is too small for perp degree " + std::to_string(loss));
    Poly acc(bivariate_space(cap));
    for (const auto& t : terms) {
        Poly term = perp2(t.x1, t.y1, expand_family(F, t.level1, cap)) * perp2(t.x2, t.y2, expand_family(F, t.level2, cap));
        if (t.sign > 0)
            acc += term;
        else
            acc -= term;
    }
    return acc.truncated(cap - loss);
}

}  // namespace toda
