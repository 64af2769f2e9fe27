#pragma once

// Brute-force counting in the symmetric group S_d. Elements are listed
// explicitly, products of whole classes are accumulated as a count vector
// over group elements.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace toda {

struct SearchLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Permutation = std::vector<int>;

inline Partition cycle_type(const Permutation& sigma)
{
    const int d = static_cast<int>(sigma.size());
    std::vector<bool> seen(d, false);
    std::vector<int> lengths;
    for (int start = 0; start < d; ++start) {
        if (seen[start])
            continue;
        int len = 0;
        for (int x = start; !seen[x]; x = sigma[x]) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

class SymmetricGroup {
public:
    explicit SymmetricGroup(int d) : d_(d)
    {
        if (d < 0)
            throw std::invalid_argument("negative degree");
        Permutation p(d);
        std::iota(p.begin(), p.end(), 0);
        do {
            index_.emplace(p, static_cast<int>(elements_.size()));
            elements_.push_back(p);
            types_.push_back(cycle_type(p));
        } while (std::next_permutation(p.begin(), p.end()));
        const std::size_t n = elements_.size();
        table_.assign(n * n, 0);
        Permutation prod(d);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                for (int x = 0; x < d; ++x)
                    prod[x] = elements_[a][elements_[b][x]];
                table_[a * n + b] = index_.at(prod);
            }
    }

    int degree() const noexcept { return d_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const Permutation& element(std::size_t k) const { return elements_[k]; }
    const Partition& type(std::size_t k) const { return types_[k]; }
    /// Index of the identity; the first permutation in lexicographic order.
    std::size_t identity() const noexcept { return 0; }
    /// Index of element(a) composed after element(b).
    std::size_t compose(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }

    std::vector<std::size_t> members(const std::function<bool(const Partition&)>& keep) const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < order(); ++k)
            if (keep(types_[k]))
                out.push_back(k);
        return out;
    }

    std::vector<std::size_t> conjugacy_class(const Partition& alpha) const
    {
        return members([&](const Partition& t) { return t == alpha; });
    }

    /// Permutations moving d - (number of cycles) = defect.
    std::vector<std::size_t> defect_class(int defect) const
    {
        return members([&](const Partition& t) { return d_ - t.length() == defect; });
    }

    /// Number of tuples (x_1, ..., x_k), x_i in factors[i], with x_1 x_2 ... x_k = id.
    Integer count_identity_products(const std::vector<std::vector<std::size_t>>& factors) const
    {
        std::vector<Integer> current(order(), 0);
        current[identity()] = 1;
        for (const auto& set : factors) {
            std::vector<Integer> next(order(), 0);
            for (std::size_t g = 0; g < order(); ++g) {
                if (current[g] == 0)
                    continue;
                for (std::size_t x : set)
                    next[compose(g, x)] += current[g];
            }
            current = std::move(next);
        }
        return current[identity()];
    }

private:
    int d_;
    std::vector<Permutation> elements_;
    std::vector<Partition> types_;
    std::map<Permutation, int> index_;
    std::vector<std::size_t> table_;
};

struct SearchLimits {
    int max_degree = 5;
    int max_nontrivial = 2;  // factors with nonzero defect beyond sigma and gamma
};

/// Number of (sigma, gamma, pi_1, ..., pi_k) with sigma gamma pi_1 ... pi_k = id,
/// sigma of type alpha, gamma of type beta and d - cycles(pi_i) = defects[i].
inline Integer constellation_count(const Partition& alpha, const Partition& beta, const std::vector<int>& defects,
                                   const SearchLimits& limits = {})
{
    if (alpha.size() != beta.size())
        throw std::invalid_argument("cycle types of different degrees");
    const int d = alpha.size();
    if (d > limits.max_degree)
        throw SearchLimitExceeded("degree " + std::to_string(d) + " exceeds the search limit " +
                                  std::to_string(limits.max_degree));
    int nontrivial = 0;
    for (int a : defects) {
        if (a < 0)
            throw std::invalid_argument("negative defect");
        nontrivial += a > 0;
    }
    if (nontrivial > limits.max_nontrivial)
        throw SearchLimitExceeded(std::to_string(nontrivial) + " nontrivial factors exceed the search limit " +
                                  std::to_string(limits.max_nontrivial));
    const SymmetricGroup group(d);
    std::vector<std::vector<std::size_t>> factors{group.conjugacy_class(alpha), group.conjugacy_class(beta)};
    for (int a : defects)
        factors.push_back(group.defect_class(a));
    return group.count_identity_products(factors);
}

/// Number of (sigma, gamma, tau_1, ..., tau_r) with sigma gamma tau_1 ... tau_r = id,
/// sigma of type alpha, gamma of type beta and every tau_i a transposition.
inline Integer transposition_factorization_count(const Partition& alpha, const Partition& beta, int r,
                                                 int max_degree = 6)
{
    if (alpha.size() != beta.size())
        throw std::invalid_argument("cycle types of different degrees");
    if (r < 0)
        return 0;
    if (alpha.size() > max_degree)
        throw SearchLimitExceeded("degree " + std::to_string(alpha.size()) + " exceeds the search limit " +
                                  std::to_string(max_degree));
    const SymmetricGroup group(alpha.size());
    std::vector<std::vector<std::size_t>> factors{group.conjugacy_class(alpha), group.conjugacy_class(beta)};
    const auto transpositions = group.defect_class(1);
    for (int k = 0; k < r; ++k)
        factors.push_back(transpositions);
    return group.count_identity_products(factors);
}

}  // namespace toda
