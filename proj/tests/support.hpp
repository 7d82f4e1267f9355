// Shared helpers for the unit suites.

#pragma once

#include "cmh/numerics.hpp"

#include <mpfr.h>

#include <string>
#include <vector>

namespace cmh::test {

inline precision_context const & ctx50()
{
    static precision_context const ctx = precision_context::with_target(50);
    return ctx;
}

inline double gap(real const & a, real const & b)
{
    return boost::multiprecision::abs(a - b).convert_to<double>();
}

inline double gap(complex_mp const & a, complex_mp const & b)
{
    return (a - b).abs().convert_to<double>();
}

/// Calls a two-argument MPFR function on a real at the current precision.
template <class F>
real mpfr_apply(F f, real const & x)
{
    real out;
    f(out.backend().data(), x.backend().data(), MPFR_RNDN);
    return out;
}

} // namespace cmh::test

namespace cmh::test {

/// Richardson-extrapolated central difference of f at x (real direction).
template <class F>
auto richardson_derivative(F f, real const & x, real h, int levels = 4)
{
    using value = decltype(f(x));
    std::vector<std::vector<value>> table(static_cast<std::size_t>(levels));
    for (int i = 0; i < levels; ++i) {
        value d = f(x + h) - f(x - h);
        d = d * (1 / (2 * h));
        table[i].push_back(d);
        real factor = 4;
        for (int j = 1; j <= i; ++j) {
            value improved = table[i][j - 1] - table[i - 1][j - 1];
            improved = table[i][j - 1] + improved * (1 / (factor - 1));
            table[i].push_back(improved);
            factor *= 4;
        }
        h /= 2;
    }
    return table.back().back();
}

} // namespace cmh::test
