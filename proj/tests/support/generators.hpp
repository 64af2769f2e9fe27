#pragma once

// Seeded random generators for property tests.

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "support/printers.hpp"
#include "toda/toda.hpp"

namespace gen {

using namespace toda;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    /// Small nonzero-or-zero rational with numerator in [-9, 9] and denominator in [1, 6].
    Rational rational(bool nonzero = false)
    {
        int num = uniform(-9, 9);
        if (nonzero && num == 0)
            num = 1;
        Rational r(num, uniform(1, 6));
        r.canonicalize();
        return r;
    }

    Partition partition_of(int d)
    {
        const auto all = enumerate_partitions(d);
        return all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
    }

    Partition partition(int max_size) { return partition_of(uniform(0, max_size)); }

    YMonomial monomial()
    {
        YMonomial m(rational(true));
        m *= YMonomial::a(uniform(-2, 2));
        m *= YMonomial::b(uniform(-2, 2));
        m *= YMonomial::y0_half_power(uniform(-3, 3));
        for (int k = 0; k < 3; ++k) {
            int index = uniform(-4, 4);
            if (index != 0)
                m *= YMonomial::y(index, uniform(-2, 2));
        }
        return m;
    }

    YPolynomial ypolynomial()
    {
        YPolynomial out;
        const int terms = uniform(0, 3);
        for (int k = 0; k < terms; ++k)
            out += YPolynomial(monomial());
        return out;
    }

    /// Random polynomial in the variables of `space` with `terms` terms of degree <= max_degree.
    TruncatedPoly<Rational> poly(const SpacePtr& space, int max_degree, int terms)
    {
        TruncatedPoly<Rational> out(space);
        for (int k = 0; k < terms; ++k) {
            Exponents e(space->size(), 0);
            int budget = uniform(0, max_degree);
            for (int tries = 0; tries < 8 && budget > 0; ++tries) {
                const std::size_t slot = static_cast<std::size_t>(uniform(0, static_cast<int>(space->size()) - 1));
                const int w = space->vars()[slot].weight;
                if (w <= budget) {
                    ++e[slot];
                    budget -= w;
                }
            }
            out.add_term(e, rational());
        }
        return out;
    }

    /// Random coefficient table on partitions of size <= max_size.
    std::map<Partition, Rational> table(int max_size, double density = 0.7)
    {
        std::map<Partition, Rational> out;
        for (const auto& lambda : partitions_up_to(max_size))
            if (coin(density)) {
                Rational v = rational();
                if (!is_zero(v))
                    out[lambda] = v;
            }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

inline CoeffOracle<Rational> oracle_of(std::map<Partition, Rational> table)
{
    auto shared = std::make_shared<const std::map<Partition, Rational>>(std::move(table));
    return [shared](const Partition& lambda) {
        auto it = shared->find(lambda);
        return it == shared->end() ? Rational(0) : it->second;
    };
}

inline PSeries series_of(const std::map<Partition, Rational>& table, const SpacePtr& space,
                         const std::string& family = "p")
{
    SchurTable<Rational> t(table.begin(), table.end());
    return from_schur_basis(t, space, family);
}

}  // namespace gen
