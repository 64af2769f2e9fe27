#pragma once

// Laurent monomials in a, b and y_i (i in Z) with the y_0 exponent stored in
// half units, and finite sums of them.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace toda {

/// Exponent part of a YMonomial. `y` holds nonzero exponents of y_i, i != 0,
/// sorted by index.
struct YSignature {
    int a = 0;
    int b = 0;
    int y0_halves = 0;
    std::vector<std::pair<int, int>> y;

    auto operator<=>(const YSignature&) const = default;
    bool operator==(const YSignature&) const = default;

    bool is_one() const noexcept { return a == 0 && b == 0 && y0_halves == 0 && y.empty(); }

    /// Integral exponent of y_index; y_0 is reported in halves.
    int y_exponent(int index) const noexcept
    {
        if (index == 0)
            return y0_halves;
        for (auto [i, e] : y)
            if (i == index)
                return e;
        return 0;
    }

    YSignature& operator+=(const YSignature& other)
    {
        a += other.a;
        b += other.b;
        y0_halves += other.y0_halves;
        y = merge(y, other.y, 1);
        return *this;
    }

    YSignature& operator-=(const YSignature& other)
    {
        a -= other.a;
        b -= other.b;
        y0_halves -= other.y0_halves;
        y = merge(y, other.y, -1);
        return *this;
    }

    YSignature inverse() const
    {
        YSignature out;
        out -= *this;
        return out;
    }

private:
    static std::vector<std::pair<int, int>> merge(const std::vector<std::pair<int, int>>& lhs,
                                                  const std::vector<std::pair<int, int>>& rhs, int sign)
    {
        std::vector<std::pair<int, int>> out;
        out.reserve(lhs.size() + rhs.size());
        std::size_t i = 0, j = 0;
        while (i < lhs.size() || j < rhs.size()) {
            if (j == rhs.size() || (i < lhs.size() && lhs[i].first < rhs[j].first)) {
                out.push_back(lhs[i++]);
            } else if (i == lhs.size() || rhs[j].first < lhs[i].first) {
                out.emplace_back(rhs[j].first, sign * rhs[j].second);
                ++j;
            } else {
                const int e = lhs[i].second + sign * rhs[j].second;
                if (e != 0)
                    out.emplace_back(lhs[i].first, e);
                ++i;
                ++j;
            }
        }
        return out;
    }
};

class YMonomial {
public:
    /// The zero monomial.
    YMonomial() = default;

    explicit YMonomial(Rational scalar, YSignature sig = {}) : scalar_(std::move(scalar)), sig_(std::move(sig))
    {
        normalize();
    }

    static YMonomial one() { return YMonomial(Rational(1)); }
    static YMonomial zero() { return YMonomial(); }

    static YMonomial a(int exponent = 1)
    {
        YSignature s;
        s.a = exponent;
        return YMonomial(Rational(1), std::move(s));
    }

    static YMonomial b(int exponent = 1)
    {
        YSignature s;
        s.b = exponent;
        return YMonomial(Rational(1), std::move(s));
    }

    /// y_0^(halves/2).
    static YMonomial y0_half_power(int halves)
    {
        YSignature s;
        s.y0_halves = halves;
        return YMonomial(Rational(1), std::move(s));
    }

    /// y_index^exponent; y_0 is accepted and stored in halves.
    static YMonomial y(int index, int exponent = 1)
    {
        if (index == 0)
            return y0_half_power(2 * exponent);
        YSignature s;
        if (exponent != 0)
            s.y.emplace_back(index, exponent);
        return YMonomial(Rational(1), std::move(s));
    }

    const Rational& scalar() const noexcept { return scalar_; }
    const YSignature& signature() const noexcept { return sig_; }
    bool is_zero() const noexcept { return toda::is_zero(scalar_); }

    YMonomial& operator*=(const YMonomial& other)
    {
        if (is_zero() || other.is_zero()) {
            *this = YMonomial();
            return *this;
        }
        scalar_ *= other.scalar_;
        sig_ += other.sig_;
        return *this;
    }

    YMonomial& operator/=(const YMonomial& other)
    {
        if (other.is_zero())
            throw RingError("division by the zero monomial");
        if (is_zero())
            return *this;
        scalar_ /= other.scalar_;
        sig_ -= other.sig_;
        return *this;
    }

    friend YMonomial operator*(YMonomial lhs, const YMonomial& rhs) { return lhs *= rhs; }
    friend YMonomial operator/(YMonomial lhs, const YMonomial& rhs) { return lhs /= rhs; }
    friend YMonomial operator*(YMonomial lhs, const Rational& rhs) { return lhs *= YMonomial(rhs); }

    YMonomial inverse() const { return one() / *this; }

    YMonomial pow(int exponent) const
    {
        if (exponent < 0)
            return inverse().pow(-exponent);
        YMonomial out = one();
        for (int k = 0; k < exponent; ++k)
            out *= *this;
        return out;
    }

    bool operator==(const YMonomial& other) const { return scalar_ == other.scalar_ && sig_ == other.sig_; }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        auto factor = [&](const std::string& name, int e) {
            if (e == 0)
                return;
            if (!out.empty())
                out += '*';
            out += name;
            if (e != 1)
                out += "^" + std::to_string(e);
        };
        if (scalar_ != 1)
            out = toda::to_string(scalar_);
        factor("a", sig_.a);
        factor("b", sig_.b);
        if (sig_.y0_halves != 0) {
            if (!out.empty())
                out += '*';
            out += "y0";
            if (sig_.y0_halves % 2 != 0)
                out += "^(" + std::to_string(sig_.y0_halves) + "/2)";
            else if (sig_.y0_halves != 2)
                out += "^" + std::to_string(sig_.y0_halves / 2);
        }
        for (auto [i, e] : sig_.y)
            factor("y" + std::to_string(i), e);
        return out.empty() ? "1" : out;
    }

private:
    void normalize()
    {
        scalar_.canonicalize();
        if (toda::is_zero(scalar_))
            sig_ = YSignature{};
    }

    Rational scalar_{0};
    YSignature sig_{};
};

inline bool is_zero(const YMonomial& m) { return m.is_zero(); }

/// Finite sum of YMonomials with exact rational coefficients.
class YPolynomial {
public:
    YPolynomial() = default;
    YPolynomial(const Rational& constant)  // NOLINT(google-explicit-constructor)
    {
        add(YSignature{}, constant);
    }
    YPolynomial(const YMonomial& m)  // NOLINT(google-explicit-constructor)
    {
        add(m.signature(), m.scalar());
    }

    const std::map<YSignature, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const YSignature& sig, const Rational& coeff)
    {
        if (toda::is_zero(coeff))
            return;
        auto [it, inserted] = terms_.try_emplace(sig, coeff);
        if (!inserted)
            it->second += coeff;
        it->second.canonicalize();
        if (!inserted && toda::is_zero(it->second))
            terms_.erase(it);
    }

    YPolynomial& operator+=(const YPolynomial& other)
    {
        for (const auto& [sig, c] : other.terms_)
            add(sig, c);
        return *this;
    }

    YPolynomial& operator-=(const YPolynomial& other)
    {
        for (const auto& [sig, c] : other.terms_)
            add(sig, -c);
        return *this;
    }

    YPolynomial operator-() const
    {
        YPolynomial out;
        for (const auto& [sig, c] : terms_)
            out.terms_.emplace(sig, -c);
        return out;
    }

    friend YPolynomial operator+(YPolynomial lhs, const YPolynomial& rhs) { return lhs += rhs; }
    friend YPolynomial operator-(YPolynomial lhs, const YPolynomial& rhs) { return lhs -= rhs; }

    friend YPolynomial operator*(const YPolynomial& lhs, const YPolynomial& rhs)
    {
        YPolynomial out;
        for (const auto& [s1, c1] : lhs.terms_)
            for (const auto& [s2, c2] : rhs.terms_) {
                YSignature s = s1;
                s += s2;
                out.add(s, c1 * c2);
            }
        return out;
    }

    YPolynomial& operator*=(const YPolynomial& other) { return *this = *this * other; }

    friend YPolynomial operator*(YPolynomial lhs, const Rational& rhs)
    {
        if (toda::is_zero(rhs))
            return YPolynomial();
        Rational t = rhs;
        t.canonicalize();
        for (auto& [sig, c] : lhs.terms_)
            c *= t;
        return lhs;
    }

    bool operator==(const YPolynomial& other) const { return terms_ == other.terms_; }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [sig, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += YMonomial(c, sig).to_string();
        }
        return out;
    }

private:
    std::map<YSignature, Rational> terms_;
};

inline bool is_zero(const YPolynomial& p) { return p.is_zero(); }

/// Replace b by y_0^(-1/2). Needed before any specialization that sends y_0 to 0.
inline YMonomial substitute_b_by_inverse_sqrt_y0(const YMonomial& m)
{
    if (m.is_zero())
        return m;
    YSignature s = m.signature();
    s.y0_halves -= s.b;
    s.b = 0;
    return YMonomial(m.scalar(), std::move(s));
}

}  // namespace toda
