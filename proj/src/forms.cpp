#include "cmh/forms.hpp"
#include "cmh/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmh {

bool reduced_form::is_primitive() const
{
    return std::gcd(std::gcd(a, b), c) == 1;
}

bool reduced_form::is_reduced() const
{
    if (a <= 0 || discriminant() >= 0)
        return false;
    if (std::labs(b) > a || a > c)
        return false;
    if ((std::labs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

std::string reduced_form::to_string() const
{
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

reduced_form transform_form(reduced_form const & f, std::array<long, 4> const & m)
{
    auto [p, q, r, s] = m;
    reduced_form g;
    g.a = f.a * p * p + f.b * p * r + f.c * r * r;
    g.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
    g.c = f.a * q * q + f.b * q * s + f.c * s * s;
    return g;
}

reduced_form reduce_form(reduced_form f)
{
    if (f.a <= 0 || f.discriminant() >= 0)
        throw std::invalid_argument("reduce_form: form is not positive definite: " + f.to_string());
    while (true) {
        // normalize b into (-a, a]
        if (f.b <= -f.a || f.b > f.a) {
            long two_a = 2 * f.a;
            long k = (f.a - f.b) / two_a;
            if (f.a - f.b < 0 && (f.a - f.b) % two_a != 0)
                --k;
            // x -> x + k y sends b to b + 2 a k
            f = transform_form(f, {1, k, 0, 1});
        }
        if (f.a > f.c) {
            // (a, b, c) -> (c, -b, a)
            f = transform_form(f, {0, -1, 1, 0});
            continue;
        }
        if (f.a == f.c && f.b < 0)
            f.b = -f.b;
        break;
    }
    return f;
}

std::vector<reduced_form> class_group(long d)
{
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("class_group: " + std::to_string(d) + " is not a negative fundamental discriminant");
    std::vector<reduced_form> forms;
    long const abs_d = -d;
    for (long a = 1; 3 * a * a <= abs_d; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - d;
            if (num % (4 * a))
                continue;
            reduced_form f{a, b, num / (4 * a)};
            if (f.is_reduced() && f.is_primitive())
                forms.push_back(f);
        }
    }
    std::sort(forms.begin(), forms.end(), [](reduced_form const & x, reduced_form const & y) {
        if (x.a != y.a)
            return x.a < y.a;
        if (std::labs(x.b) != std::labs(y.b))
            return std::labs(x.b) < std::labs(y.b);
        return x.b > y.b;
    });
    return forms;
}

int unit_count(long d)
{
    if (d == -3)
        return 6;
    if (d == -4)
        return 4;
    return 2;
}

} // namespace cmh
