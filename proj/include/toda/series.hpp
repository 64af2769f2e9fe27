#pragma once

// Polynomials in the power sums p_k: complete homogeneous h_i, Jacobi-Trudi
// Schur polynomials, the Schur-orthonormal inner product, perp operators and
// the translation p -> p + q.

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"
#include "truncated_poly.hpp"

namespace toda {

using PSeries = TruncatedPoly<Rational>;

/// Schur coefficients keyed by partition; absent keys are zero.
template <class C = Rational>
using SchurTable = std::map<Partition, C>;

/// z_lambda = prod_j j^{f_j} f_j!, the squared norm of p_lambda.
inline Rational z_factor(const Partition& lambda)
{
    Integer out = 1;
    for (int j = 1; j <= lambda.part(1); ++j) {
        const int f = lambda.multiplicity(j);
        for (int k = 1; k <= f; ++k)
            out *= j * k;
    }
    return Rational(out);
}

/// The p_k-exponents of `e` read as a partition (f_k copies of k).
inline Partition exponents_to_partition(const VarSpace& space, const Exponents& e, const std::string& family = "p")
{
    std::vector<int> parts;
    for (std::size_t k = 0; k < e.size(); ++k) {
        const auto& v = space.vars()[k];
        if (v.family != family)
            continue;
        for (int r = 0; r < e[k]; ++r)
            parts.push_back(v.index);
    }
    return Partition(std::move(parts));
}

inline Exponents partition_to_exponents(const VarSpace& space, const Partition& nu, const std::string& family = "p")
{
    Exponents e(space.size(), 0);
    for (int part : nu.parts())
        e[space.index_of(family, part)] += 1;
    return e;
}

/// Monomial p_nu (or q_nu) in the given space.
inline PSeries power_sum_monomial(const SpacePtr& space, const Partition& nu, const std::string& family = "p")
{
    PSeries out(space);
    out.add_term(partition_to_exponents(*space, nu, family), Rational(1));
    return out;
}

namespace detail {

/// det(h_{lambda_i - i + j}) by Laplace expansion along rows, memoised on the
/// set of columns still available.
inline PSeries jacobi_trudi(const Partition& lambda, const std::vector<PSeries>& h, const SpacePtr& space)
{
    const int n = lambda.length();
    if (n == 0)
        return PSeries::constant(space, Rational(1));
    auto h_at = [&](int index) -> const PSeries* {
        if (index < 0 || index >= static_cast<int>(h.size()))
            return nullptr;
        return &h[static_cast<std::size_t>(index)];
    };
    std::unordered_map<unsigned, PSeries> memo;
    auto minor = [&](auto&& self, int row, unsigned cols) -> PSeries {
        if (row == n)
            return PSeries::constant(space, Rational(1));
        if (auto it = memo.find(cols); it != memo.end())
            return it->second;
        PSeries acc(space);
        int position = 0;
        for (int c = 0; c < n; ++c) {
            if (!(cols & (1u << c)))
                continue;
            const PSeries* entry = h_at(lambda.part(row + 1) - (row + 1) + (c + 1));
            if (entry && !entry->is_zero()) {
                PSeries term = *entry * self(self, row + 1, cols & ~(1u << c));
                if (position % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++position;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor(minor, 0, (1u << n) - 1);
}

// i h_i = sum_{k=1}^{i} p_k h_{i-k}
inline std::vector<PSeries> h_table(int up_to, const SpacePtr& space, const std::string& family)
{
    std::vector<PSeries> h{PSeries::constant(space, Rational(1))};
    for (int n = 1; n <= up_to; ++n) {
        PSeries acc(space);
        for (int k = 1; k <= n; ++k)
            if (space->find(family, k))
                acc += PSeries::variable(space, family, k) * h[static_cast<std::size_t>(n - k)];
        h.push_back(acc * Rational(1, n));
    }
    return h;
}

}  // namespace detail

/// Coefficient of t^i in exp(sum_k p_k t^k / k); zero for i < 0.
inline PSeries h_poly(int i, const SpacePtr& space, const std::string& family = "p")
{
    if (i < 0)
        return PSeries(space);
    if (i > space->cap())
        throw CapError("h_" + std::to_string(i) + " exceeds the degree cap " + std::to_string(space->cap()));
    return detail::h_table(i, space, family).back();
}

/// Jacobi-Trudi Schur polynomial s_lambda in the given alphabet.
inline PSeries schur_poly(const Partition& lambda, const SpacePtr& space, const std::string& family = "p")
{
    if (lambda.size() > space->cap())
        throw CapError("|lambda| = " + std::to_string(lambda.size()) + " exceeds the degree cap " +
                       std::to_string(space->cap()));
    auto h = detail::h_table(lambda.part(1) + lambda.length(), space, family);
    return detail::jacobi_trudi(lambda, h, space);
}

/// Memoised Schur polynomials over a fixed space. Lookups are guarded so a
/// shared instance may be queried from several threads.
class SchurCache {
public:
    explicit SchurCache(SpacePtr space) : space_(std::move(space)) {}

    const SpacePtr& space() const noexcept { return space_; }

    const PSeries& schur(const Partition& lambda, const std::string& family = "p") const
    {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(family, lambda);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, schur_poly(lambda, space_, family)).first;
        return it->second;
    }

private:
    SpacePtr space_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::string, Partition>, PSeries> cache_;
};

/// Coefficient of p_nu in s_lambda. |nu| must equal |lambda| for a nonzero value.
inline Rational schur_power_sum_coeff(const Partition& lambda, const Partition& nu)
{
    if (lambda.size() != nu.size())
        return Rational(0);
    static std::mutex mutex;
    static std::map<Partition, PSeries> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(lambda);
    if (it == cache.end())
        it = cache.emplace(lambda, schur_poly(lambda, power_sum_space(lambda.size()))).first;
    const PSeries& s = it->second;
    return s.coeff(partition_to_exponents(*s.space(), nu));
}

/// Bilinear form with <p_lambda, p_mu> = delta z_lambda, making the Schur
/// polynomials orthonormal. Both arguments must be pure power-sum series.
template <class C>
C inner_product(const TruncatedPoly<C>& f, const TruncatedPoly<C>& g, const std::string& family = "p")
{
    C out{};
    if (f.is_zero() || g.is_zero())
        return out;
    const VarSpace& fs = *f.space();
    const VarSpace& gs = *g.space();
    auto pure = [&](const Exponents& e) {
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0 && fs.vars()[k].family != family)
                return false;
        return true;
    };
    for (const auto& [e, c] : f.terms()) {
        if (!pure(e))
            continue;
        const Partition nu = exponents_to_partition(fs, e, family);
        Exponents ge(gs.size(), 0);
        bool present = true;
        for (int part : nu.parts()) {
            auto k = gs.find(family, part);
            if (!k) {
                present = false;
                break;
            }
            ge[*k] += 1;
        }
        if (!present)
            continue;
        const C other = g.coeff(ge);
        if (!coefficient_is_zero(other))
            out += (c * other) * z_factor(nu);
    }
    return out;
}

/// Schur coefficients of a power-sum series, exact for every |lambda| <= cap.
template <class C>
SchurTable<C> to_schur_basis(const TruncatedPoly<C>& f, const std::string& family = "p")
{
    SchurTable<C> out;
    if (f.is_zero())
        return out;
    const VarSpace& space = *f.space();
    for (const auto& v : space.vars())
        if (v.family != family)
            throw VariableMismatch("to_schur_basis expects a series in the " + family + " alphabet only");
    // <f, s_lambda> = sum_nu [p_nu]f * z_nu * [p_nu]s_lambda
    for (const auto& [e, c] : f.terms()) {
        const Partition nu = exponents_to_partition(space, e, family);
        const Rational z = z_factor(nu);
        for (const auto& lambda : enumerate_partitions(nu.size())) {
            const Rational chi = schur_power_sum_coeff(lambda, nu) * z;
            if (is_zero(chi))
                continue;
            auto [it, inserted] = out.try_emplace(lambda, c * chi);
            if (!inserted)
                it->second += c * chi;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = coefficient_is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

/// sum_lambda a_lambda s_lambda in the given space.
template <class C>
TruncatedPoly<C> from_schur_basis(const SchurTable<C>& table, const SpacePtr& space, const std::string& family = "p")
{
    TruncatedPoly<C> out(space);
    SchurCache cache(space);
    for (const auto& [lambda, c] : table) {
        if (lambda.size() > space->cap())
            continue;
        out += lift(cache.schur(lambda, family), c);
    }
    return out;
}

/// f(p_1^perp, p_2^perp, ...) g with p_k^perp = k d/dp_k acting on `family`.
template <class C>
TruncatedPoly<C> perp_apply(const PSeries& f, const TruncatedPoly<C>& g, const std::string& family = "p")
{
    if (f.is_zero() || g.is_zero())
        return TruncatedPoly<C>(g.space());
    const VarSpace& fs = *f.space();
    const VarSpace& gs = *g.space();
    TruncatedPoly<C> out(g.space());
    for (const auto& [fe, fc] : f.terms()) {
        // Operator exponent per variable of g.
        std::vector<std::pair<std::size_t, std::pair<int, int>>> ops;  // (g index, (k, power))
        for (std::size_t k = 0; k < fe.size(); ++k) {
            if (fe[k] == 0)
                continue;
            const auto& v = fs.vars()[k];
            auto target = gs.find(family, v.index);
            if (!target) {
                ops.clear();
                ops.emplace_back(gs.size(), std::make_pair(0, 0));  // marks "annihilates g"
                break;
            }
            ops.emplace_back(*target, std::make_pair(v.index, fe[k]));
        }
        if (!ops.empty() && ops.front().first == gs.size())
            continue;
        for (const auto& [ge, gc] : g.terms()) {
            Rational factor = fc;
            Exponents e = ge;
            bool alive = true;
            for (const auto& [idx, kp] : ops) {
                const auto [k, power] = kp;
                if (e[idx] < power) {
                    alive = false;
                    break;
                }
                for (int r = 0; r < power; ++r) {
                    factor *= k * e[idx];
                    e[idx] -= 1;
                }
            }
            if (alive)
                out.add_term(e, gc * factor);
        }
    }
    return out;
}

/// s_lambda^perp applied to g in the given alphabet.
template <class C>
TruncatedPoly<C> schur_perp(const Partition& lambda, const TruncatedPoly<C>& g, const std::string& family = "p")
{
    if (g.is_zero())
        return g;
    if (lambda.size() > g.space()->cap())
        return TruncatedPoly<C>(g.space());
    return perp_apply(schur_poly(lambda, power_sum_space(lambda.size())), g, family);
}

/// f(p + q): every p_k becomes p_k + q_k. `target` must contain p_k and q_k
/// for each k used by f.
template <class C>
TruncatedPoly<C> translate(const TruncatedPoly<C>& f, const SpacePtr& target)
{
    TruncatedPoly<C> out(target);
    if (f.is_zero())
        return out;
    const VarSpace& fs = *f.space();
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (p index, q index) in target
    for (const auto& v : fs.vars()) {
        if (v.family != "p")
            throw VariableMismatch("translate expects a series in p");
        slots.emplace_back(target->index_of("p", v.index), target->index_of("q", v.index));
    }
    for (const auto& [e, c] : f.terms()) {
        // Expand prod_k (p_k + q_k)^{e_k} binomially.
        std::vector<std::pair<Exponents, Rational>> partial{{Exponents(target->size(), 0), Rational(1)}};
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            std::vector<std::pair<Exponents, Rational>> next;
            Integer binom = 1;
            for (int r = 0; r <= e[k]; ++r) {
                if (r > 0) {
                    binom *= e[k] - r + 1;
                    binom /= r;
                }
                for (const auto& [pe, pc] : partial) {
                    Exponents ne = pe;
                    ne[slots[k].first] += e[k] - r;
                    ne[slots[k].second] += r;
                    next.emplace_back(std::move(ne), pc * Rational(binom));
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pe, pc] : partial)
            out.add_term(pe, c * pc);
    }
    return out;
}

}  // namespace toda
