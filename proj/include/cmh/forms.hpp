// Positive definite binary quadratic forms a x^2 + b xy + c y^2 of negative
// discriminant, their reduction, and class groups of imaginary quadratic
// fields.

#pragma once

#include <array>
#include <string>
#include <vector>

namespace cmh {

struct reduced_form
{
    long a = 1;
    long b = 0;
    long c = 1;

    long discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    /// |b| <= a <= c, and b >= 0 if |b| = a or a = c.
    bool is_reduced() const;
    std::string to_string() const;

    friend bool operator==(reduced_form const & x, reduced_form const & y) = default;
    friend auto operator<=>(reduced_form const & x, reduced_form const & y) = default;
};

/// f(p x + q y, r x + s y) for an integer matrix [[p, q], [r, s]].
reduced_form transform_form(reduced_form const & f, std::array<long, 4> const & m);

/// The reduced form properly equivalent to a positive definite form.
reduced_form reduce_form(reduced_form f);

/// Reduced primitive forms of fundamental discriminant D < 0, sorted by
/// (a, |b|, -b). Throws for non-fundamental D.
std::vector<reduced_form> class_group(long d);

/// Number of roots of unity in the quadratic order of discriminant D.
int unit_count(long d);

} // namespace cmh
