#pragma once

// Recovery of a diagonal 2-Toda solution from its boundary data
//   g_m(0), g_{1^m}(0) for m >= 1, g_eps(0), g_eps(1).
//
// Recursions used (each a diagonal constraint solved for one factor):
//   g_eps(-1) g_eps(1)            = g_1(0) g_eps(0)
//   g_eps(-1) g_{(r,eta)}(n)      = g_{r+n}(0) g_eta(n-1)          n > 0
//   g_eps(-1) g_{(r,eta)}(0)      = g_r(0) g_eta(-1)
//   g_eps(1)  g_{1^s + eta}(L)    = g_{1^{s-L}}(0) g_eta(L+1)      L < 0, s = length
// Level-0 hooks other than rows and columns are not special; every call
// strictly lowers |lambda| or moves the level toward 0.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hierarchy.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace toda {

struct ReconstructionError : RingError {
    using RingError::RingError;
};

template <class R>
struct BoundaryData {
    std::function<R(int)> row;     // m -> g_(m)(0), m >= 1
    std::function<R(int)> column;  // m -> g_(1^m)(0), m >= 1
    R eps0;                        // g_eps(0)
    R eps1;                        // g_eps(1)
};

/// g_lambda(n) at a level.
struct LevelTerm {
    int n = 0;
    Partition lambda;

    bool operator==(const LevelTerm&) const = default;
    std::string to_string() const
    {
        return "g_{" + (lambda.length() == 0 ? std::string("eps") : lambda.to_string()) + "}(" + std::to_string(n) +
               ")";
    }
};

/// One recursion step: divisor * target = left * right.
struct TraceStep {
    std::string rule;
    LevelTerm target;
    LevelTerm divisor;
    LevelTerm left;
    LevelTerm right;

    std::string to_string() const
    {
        return divisor.to_string() + " " + target.to_string() + " = " + left.to_string() + " " + right.to_string();
    }
};

template <class R>
class Reconstruction {
public:
    explicit Reconstruction(BoundaryData<R> data, bool record_trace = false)
        : state_(std::make_shared<State>(std::move(data), record_trace))
    {
        if (is_zero(state_->data.eps0))
            throw ReconstructionError("g_eps(0) must be nonzero");
        if (is_zero(state_->data.eps1))
            throw ReconstructionError("g_eps(1) must be nonzero");
        if (is_zero(state_->data.row(1)))
            throw ReconstructionError("g_1(0) must be nonzero");
    }

    R operator()(int n, const Partition& lambda) const
    {
        std::lock_guard lock(state_->mutex);
        return state_->eval(n, lambda);
    }

    /// Shares the memo table with this object.
    DiagonalFamily<R> family(std::string description = "reconstructed") const
    {
        auto state = state_;
        return DiagonalFamily<R>{[state](int n, const Partition& lambda) {
                                     std::lock_guard lock(state->mutex);
                                     return state->eval(n, lambda);
                                 },
                                 std::move(description)};
    }

    std::vector<TraceStep> trace() const
    {
        std::lock_guard lock(state_->mutex);
        return state_->steps;
    }

    void clear_trace() const
    {
        std::lock_guard lock(state_->mutex);
        state_->steps.clear();
    }

private:
    struct State {
        State(BoundaryData<R> d, bool record) : data(std::move(d)), record(record) {}

        BoundaryData<R> data;
        bool record;
        std::recursive_mutex mutex;
        std::map<std::pair<int, Partition>, R> memo;
        std::vector<TraceStep> steps;

        R quotient(const R& numerator, const R& divisor, const LevelTerm& target)
        {
            if (is_zero(divisor))
                throw ReconstructionError("zero divisor while computing " + target.to_string());
            return R(numerator / divisor);
        }

        R eps_minus_one()
        {
            return eval(-1, Partition{});
        }

        void note(std::string rule, LevelTerm target, LevelTerm divisor, LevelTerm left, LevelTerm right)
        {
            if (record)
                steps.push_back({std::move(rule), std::move(target), std::move(divisor), std::move(left),
                                 std::move(right)});
        }

        R eval(int n, const Partition& lambda)
        {
            auto key = std::make_pair(n, lambda);
            if (auto it = memo.find(key); it != memo.end())
                return it->second;
            R value = compute(n, lambda);
            memo.emplace(std::move(key), value);
            return value;
        }

        R compute(int n, const Partition& lambda)
        {
            const LevelTerm target{n, lambda};
            const int s = lambda.length();
            if (s == 0 && n == 0)
                return data.eps0;
            if (s == 0 && n == 1)
                return data.eps1;
            if (n == 0) {
                if (s == 1)
                    return data.row(lambda.part(1));
                if (lambda.part(1) == 1)
                    return data.column(s);
                const int r = lambda.part(1);
                const Partition eta = tail(lambda);
                note("level0", target, {-1, {}}, {0, Partition({r})}, {-1, eta});
                return quotient(R(data.row(r) * eval(-1, eta)), eps_minus_one(), target);
            }
            if (n > 0) {
                const int r = lambda.part(1);
                const Partition eta = tail(lambda);
                note("positive", target, {-1, {}}, {0, Partition({r + n})}, {n - 1, eta});
                return quotient(R(data.row(r + n) * eval(n - 1, eta)), eps_minus_one(), target);
            }
            const Partition eta = remove_column(lambda);
            note("negative", target, {1, {}}, {0, Partition(std::vector<int>(s - n, 1))}, {n + 1, eta});
            return quotient(R(data.column(s - n) * eval(n + 1, eta)), data.eps1, target);
        }
    };

    std::shared_ptr<State> state_;
};

/// Boundary data read off a diagonal family.
template <class R>
BoundaryData<R> boundary_of(const DiagonalFamily<R>& g)
{
    return BoundaryData<R>{[g](int m) { return g(0, Partition({m})); },
                           [g](int m) { return g(0, Partition(std::vector<int>(m, 1))); }, g(0, Partition{}),
                           g(1, Partition{})};
}

}  // namespace toda
