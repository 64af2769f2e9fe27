#pragma once

// Shifted content products and the coefficients of the content-type series
//   Phi_n = sum_lambda theta_n Y_n(lambda) s_lambda(p) s_lambda(q).

#include "partition.hpp"
#include "ymonomial.hpp"

namespace toda {

/// Y(m, k) = y_m y_{m-1} ... y_{m-k+1} for k >= 1, 1 for k = 0, and
/// Y(m - k, -k)^{-1} for k <= -1.
inline YMonomial shifted_content_product(int m, int k)
{
    if (k == 0)
        return YMonomial::one();
    if (k < 0)
        return shifted_content_product(m - k, -k).inverse();
    YMonomial out = YMonomial::one();
    for (int j = 1; j <= k; ++j)
        out *= YMonomial::y(m + 1 - j);
    return out;
}

/// Y_n(lambda) = prod_i Y(lambda_i - i + n, lambda_i), row by row.
inline YMonomial content_monomial(const Partition& lambda, int n)
{
    YMonomial out = YMonomial::one();
    for (int i = 1; i <= lambda.length(); ++i)
        out *= shifted_content_product(lambda.part(i) - i + n, lambda.part(i));
    return out;
}

/// Y_n(lambda) = prod over cells of y_{n + content}.
inline YMonomial content_monomial_cellwise(const Partition& lambda, int n)
{
    YMonomial out = YMonomial::one();
    for (int c : contents(lambda))
        out *= YMonomial::y(n + c);
    return out;
}

/// Level prefactor theta_n.
///
///   n > 0:  a b^n y_0^{n/2} prod_{i=1}^{n-1} Y(i, i)
///   n = 0:  a
///   n < 0:  a b^n y_0^{n/2} prod_{i=0}^{-n-1} Y(-i-1, -i-1)^{-1}
///
/// The negative branch is the one fixed by theta_{m+1} / theta_m =
/// b y_0^{1/2} Y(m, m) for every integer m, including m = -1.
inline YMonomial theta(int n)
{
    YMonomial out = YMonomial::a();
    if (n == 0)
        return out;
    out *= YMonomial::b(n) * YMonomial::y0_half_power(n);
    if (n > 0) {
        for (int i = 1; i <= n - 1; ++i)
            out *= shifted_content_product(i, i);
    } else {
        for (int i = 0; i <= -n - 1; ++i)
            out /= shifted_content_product(-i - 1, -i - 1);
    }
    return out;
}

/// g_lambda(n) = theta_n Y_n(lambda).
inline YMonomial phi_coeff(int n, const Partition& lambda)
{
    return theta(n) * content_monomial(lambda, n);
}

}  // namespace toda
