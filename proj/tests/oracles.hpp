// Brute-force oracles shared by the unit suites and the acceptance run.

#pragma once

#include "cmh/characters.hpp"
#include "cmh/forms.hpp"

#include <cstdlib>
#include <numeric>
#include <set>

namespace cmh::test {

/// Smallest f | N such that chi(a) = 1 for every unit a = 1 mod f.
inline int brute_force_conductor(dirichlet_character const & chi)
{
    int const n = chi.modulus();
    for (int f = 1; f <= n; ++f) {
        if (n % f)
            continue;
        bool ok = true;
        for (int a = 1; a < n && ok; ++a)
            if (std::gcd(a, n) == 1 && (a - 1) % f == 0 && chi.exponent(a) != 0)
                ok = false;
        if (ok)
            return f;
    }
    return n;
}

/// Every primitive (a, b, c) of discriminant d with |b| <= a <= c and b >= 0
/// on the boundary, found by scanning a box much larger than needed.
inline std::set<reduced_form> exhaustive_reduced(long d)
{
    std::set<reduced_form> out;
    long const bound = -d;
    for (long a = 1; a <= bound; ++a)
        for (long b = -a; b <= a; ++b)
            for (long c = a; c <= bound; ++c) {
                if (b * b - 4 * a * c != d)
                    continue;
                if ((b < 0) && (-b == a || a == c))
                    continue;
                if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                    continue;
                out.insert({a, b, c});
            }
    return out;
}

/// h = (w / 2) L(0, chi_D) = -(w / 2|D|) sum_{a=1}^{|D|} (D/a) a.
inline long analytic_class_number(long d)
{
    long sum = 0;
    for (long a = 1; a < -d; ++a)
        sum += kronecker_symbol(d, a) * a;
    long const w = d == -3 ? 6 : d == -4 ? 4 : 2;
    return -w * sum / (2 * -d);
}

} // namespace cmh::test
