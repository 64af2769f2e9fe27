#pragma once

// Multivariate polynomials over an exact coefficient ring, truncated above a
// weighted total degree.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "ymonomial.hpp"

namespace toda {

struct VariableMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct Variable {
    std::string family;  // "p", "q", "t", "u", ...
    int index = 0;
    int weight = 1;

    std::string name() const { return family + std::to_string(index); }
    bool operator==(const Variable&) const = default;
};

/// Ordered variable list with weights plus the degree cap.
class VarSpace {
public:
    VarSpace(std::vector<Variable> vars, int cap) : vars_(std::move(vars)), cap_(cap)
    {
        if (cap_ < 0)
            throw CapError("negative degree cap");
        for (const auto& v : vars_)
            if (v.weight < 1)
                throw std::invalid_argument("variable weights must be positive");
    }

    const std::vector<Variable>& vars() const noexcept { return vars_; }
    std::size_t size() const noexcept { return vars_.size(); }
    int cap() const noexcept { return cap_; }

    std::optional<std::size_t> find(const std::string& family, int index) const
    {
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k].family == family && vars_[k].index == index)
                return k;
        return std::nullopt;
    }

    std::size_t index_of(const std::string& family, int index) const
    {
        auto k = find(family, index);
        if (!k)
            throw VariableMismatch("variable " + family + std::to_string(index) + " is not in this space");
        return *k;
    }

    /// Largest index present for a variable family (0 if absent).
    int family_size(const std::string& family) const
    {
        int n = 0;
        for (const auto& v : vars_)
            if (v.family == family)
                n = std::max(n, v.index);
        return n;
    }

    bool operator==(const VarSpace&) const = default;

private:
    std::vector<Variable> vars_;
    int cap_;
};

using SpacePtr = std::shared_ptr<const VarSpace>;

inline SpacePtr make_space(std::vector<Variable> vars, int cap)
{
    return std::make_shared<const VarSpace>(std::move(vars), cap);
}

/// p_1..p_cap with weight(p_k) = k.
inline SpacePtr power_sum_space(int cap, const std::string& family = "p")
{
    std::vector<Variable> vars;
    for (int k = 1; k <= cap; ++k)
        vars.push_back({family, k, k});
    return make_space(std::move(vars), cap);
}

/// p_1..p_cap, q_1..q_cap under the joint grading.
inline SpacePtr bivariate_space(int cap)
{
    std::vector<Variable> vars;
    for (int k = 1; k <= cap; ++k)
        vars.push_back({"p", k, k});
    for (int k = 1; k <= cap; ++k)
        vars.push_back({"q", k, k});
    return make_space(std::move(vars), cap);
}

/// A single weight-one variable, e.g. t.
inline SpacePtr single_variable_space(const std::string& family, int cap)
{
    return make_space({{family, 1, 1}}, cap);
}

/// u_1..u_r, each of weight one.
inline SpacePtr u_space(int r, int cap)
{
    std::vector<Variable> vars;
    for (int k = 1; k <= r; ++k)
        vars.push_back({"u", k, 1});
    return make_space(std::move(vars), cap);
}

inline bool same_space(const SpacePtr& a, const SpacePtr& b)
{
    return a == b || (a && b && *a == *b);
}

using Exponents = std::vector<int>;

template <class C>
bool coefficient_is_zero(const C& c)
{
    return is_zero(c);
}

/// Polynomial with coefficients in C truncated at the space's weighted cap.
/// A default-constructed value is the zero of every space.
template <class C = Rational>
class TruncatedPoly {
public:
    using coefficient_type = C;
    using term_map = std::map<Exponents, C>;

    TruncatedPoly() = default;
    explicit TruncatedPoly(SpacePtr space) : space_(std::move(space)) {}

    static TruncatedPoly constant(SpacePtr space, const C& c)
    {
        TruncatedPoly out(space);
        out.add_term(Exponents(out.space_->size(), 0), c);
        return out;
    }

    static TruncatedPoly variable(SpacePtr space, const std::string& family, int index, const C& c = C(1))
    {
        TruncatedPoly out(space);
        Exponents e(out.space_->size(), 0);
        e[out.space_->index_of(family, index)] = 1;
        out.add_term(e, c);
        return out;
    }

    const SpacePtr& space() const noexcept { return space_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    int weighted_degree(const Exponents& e) const
    {
        int d = 0;
        for (std::size_t k = 0; k < e.size(); ++k)
            d += e[k] * space_->vars()[k].weight;
        return d;
    }

    /// Maximal weighted degree of a stored term, -1 for zero.
    int degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, weighted_degree(e));
        return d;
    }

    /// Maximal weighted degree restricted to one variable family.
    int degree_in(const std::string& family) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int dd = 0;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (space_->vars()[k].family == family)
                    dd += e[k] * space_->vars()[k].weight;
            d = std::max(d, dd);
        }
        return d;
    }

    /// Adds c * x^e unless the term lies above the cap.
    void add_term(const Exponents& e, const C& c)
    {
        require_space();
        if (e.size() != space_->size())
            throw VariableMismatch("exponent vector length does not match the variable space");
        if (coefficient_is_zero(c) || weighted_degree(e) > space_->cap())
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted)
            it->second += c;
        if constexpr (std::is_same_v<C, Rational>)
            it->second.canonicalize();
        if (!inserted && coefficient_is_zero(it->second))
            terms_.erase(it);
    }

    C coeff(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    /// Coefficient of a monomial given as {(family, index) -> exponent}.
    C coeff(const std::vector<std::pair<std::pair<std::string, int>, int>>& monomial) const
    {
        if (!space_)
            return C{};
        Exponents e(space_->size(), 0);
        for (const auto& [var, power] : monomial)
            e[space_->index_of(var.first, var.second)] += power;
        return coeff(e);
    }

    C constant_term() const { return space_ ? coeff(Exponents(space_->size(), 0)) : C{}; }

    TruncatedPoly& operator+=(const TruncatedPoly& other)
    {
        adopt(other);
        for (const auto& [e, c] : other.terms_)
            add_term(e, c);
        return *this;
    }

    TruncatedPoly& operator-=(const TruncatedPoly& other)
    {
        adopt(other);
        for (const auto& [e, c] : other.terms_)
            add_term(e, -c);
        return *this;
    }

    TruncatedPoly operator-() const
    {
        TruncatedPoly out(space_);
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e, -c);
        return out;
    }

    friend TruncatedPoly operator+(TruncatedPoly lhs, const TruncatedPoly& rhs) { return lhs += rhs; }
    friend TruncatedPoly operator-(TruncatedPoly lhs, const TruncatedPoly& rhs) { return lhs -= rhs; }

    friend TruncatedPoly operator*(const TruncatedPoly& lhs, const TruncatedPoly& rhs)
    {
        if (lhs.is_zero() || rhs.is_zero()) {
            TruncatedPoly out(lhs.space_ ? lhs.space_ : rhs.space_);
            if (lhs.space_ && rhs.space_)
                lhs.check_compatible(rhs);
            return out;
        }
        lhs.check_compatible(rhs);
        TruncatedPoly out(lhs.space_);
        const int cap = lhs.space_->cap();
        Exponents e(lhs.space_->size());
        for (const auto& [e1, c1] : lhs.terms_) {
            const int d1 = lhs.weighted_degree(e1);
            for (const auto& [e2, c2] : rhs.terms_) {
                if (d1 + lhs.weighted_degree(e2) > cap)
                    continue;
                for (std::size_t k = 0; k < e.size(); ++k)
                    e[k] = e1[k] + e2[k];
                out.add_term(e, c1 * c2);
            }
        }
        return out;
    }

    TruncatedPoly& operator*=(const TruncatedPoly& other) { return *this = *this * other; }

    friend TruncatedPoly operator*(TruncatedPoly lhs, const Rational& s)
    {
        if (toda::is_zero(s)) {
            lhs.terms_.clear();
            return lhs;
        }
        Rational t = s;
        t.canonicalize();
        for (auto& [e, c] : lhs.terms_)
            c = c * t;
        return lhs;
    }

    friend TruncatedPoly operator*(const Rational& s, TruncatedPoly rhs) { return std::move(rhs) * s; }

    /// Multiply every coefficient by c (c in the coefficient ring).
    TruncatedPoly scaled(const C& c) const
    {
        TruncatedPoly out(space_);
        for (const auto& [e, v] : terms_)
            out.add_term(e, v * c);
        return out;
    }

    bool operator==(const TruncatedPoly& other) const
    {
        if (is_zero() && other.is_zero())
            return true;
        if (!same_space(space_, other.space_))
            return false;
        return terms_ == other.terms_;
    }

    /// Partial derivative with respect to one variable.
    TruncatedPoly derivative(const std::string& family, int index) const
    {
        if (!space_)
            return *this;
        const std::size_t k = space_->index_of(family, index);
        TruncatedPoly out(space_);
        for (const auto& [e, c] : terms_) {
            if (e[k] == 0)
                continue;
            Exponents d = e;
            d[k] -= 1;
            out.add_term(d, c * Rational(e[k]));
        }
        return out;
    }

    /// Same terms in a space with a smaller (or equal) cap.
    TruncatedPoly truncated(int cap) const
    {
        if (!space_)
            return *this;
        if (cap > space_->cap())
            throw CapError("cannot raise the cap of a truncated polynomial");
        TruncatedPoly out(make_space(space_->vars(), cap));
        for (const auto& [e, c] : terms_)
            out.add_term(e, c);
        return out;
    }

    /// Re-express in another space containing every variable used here.
    TruncatedPoly embedded(const SpacePtr& target) const
    {
        TruncatedPoly out(target);
        if (!space_)
            return out;
        std::vector<std::size_t> map(space_->size());
        for (std::size_t k = 0; k < space_->size(); ++k) {
            const auto& v = space_->vars()[k];
            map[k] = target->index_of(v.family, v.index);
            if (target->vars()[map[k]].weight != v.weight)
                throw VariableMismatch("weight mismatch while embedding " + v.name());
        }
        for (const auto& [e, c] : terms_) {
            Exponents f(target->size(), 0);
            for (std::size_t k = 0; k < e.size(); ++k)
                f[map[k]] += e[k];
            out.add_term(f, c);
        }
        return out;
    }

    TruncatedPoly pow(int n) const
    {
        if (n < 0)
            return inverse().pow(-n);
        require_space();
        TruncatedPoly out = constant(space_, C(1));
        for (int k = 0; k < n; ++k)
            out *= *this;
        return out;
    }

    /// Truncated multiplicative inverse; needs an invertible constant term.
    TruncatedPoly inverse() const
    {
        require_space();
        const C c0 = constant_term();
        if (coefficient_is_zero(c0))
            throw RingError("inverse of a truncated series with zero constant term");
        const C inv0 = invert_coefficient(c0);
        // f = c0 (1 + g) with g of positive degree, so 1/f = inv0 * sum (-g)^k.
        TruncatedPoly g = scaled(inv0) - constant(space_, C(1));
        TruncatedPoly neg_g = -g;
        TruncatedPoly acc = constant(space_, C(1));
        TruncatedPoly power = acc;
        for (int k = 1; k <= space_->cap(); ++k) {
            power *= neg_g;
            if (power.is_zero())
                break;
            acc += power;
        }
        return acc.scaled(inv0);
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + coefficient_string(c) + ")";
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0) {
                    out += "*" + space_->vars()[k].name();
                    if (e[k] != 1)
                        out += "^" + std::to_string(e[k]);
                }
        }
        return out;
    }

private:
    void require_space() const
    {
        if (!space_)
            throw VariableMismatch("operation needs a variable space");
    }

    void adopt(const TruncatedPoly& other)
    {
        if (!space_) {
            space_ = other.space_;
            return;
        }
        if (other.space_)
            check_compatible(other);
    }

    void check_compatible(const TruncatedPoly& other) const
    {
        if (!same_space(space_, other.space_))
            throw VariableMismatch("truncated polynomials live in different spaces");
    }

    static C invert_coefficient(const C& c)
    {
        if constexpr (std::is_same_v<C, Rational>)
            return Rational(1) / c;
        else
            throw RingError("coefficient inversion is only available over the rationals");
    }

    static std::string coefficient_string(const C& c)
    {
        if constexpr (std::is_same_v<C, Rational>)
            return toda::to_string(c);
        else
            return c.to_string();
    }

    SpacePtr space_;
    term_map terms_;
};

template <class C>
bool is_zero(const TruncatedPoly<C>& p)
{
    return p.is_zero();
}

/// Lift a rational polynomial into coefficient ring C, multiplying by c.
template <class C>
TruncatedPoly<C> lift(const TruncatedPoly<Rational>& f, const C& c)
{
    TruncatedPoly<C> out(f.space());
    if (coefficient_is_zero(c))
        return out;
    for (const auto& [e, v] : f.terms())
        out.add_term(e, c * v);
    return out;
}

}  // namespace toda
