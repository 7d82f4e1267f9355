// Colmez heights, the averaged Colmez identity, Chowla-Selberg and the
// Faltings height of CM elliptic curves, and the arithmetic degree of
// zero-dimensional arithmetic divisors.

#pragma once

#include "cmh/cmgalois.hpp"
#include "cmh/forms.hpp"
#include "cmh/lfun.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cmh {

struct height_report
{
    std::string label;
    real value;
    /// Signed sub-terms; they add up to value.
    std::vector<std::pair<std::string, real>> breakdown;
    /// Discarded imaginary part of sum m(chi) L'/L (should vanish).
    real imaginary_part = 0;

    real const & term(std::string const & name) const;
};

/// h^Col = -Z - mu/2 for the CM pair with the given A0 function.
height_report colmez_height_from_a0(class_function const & a0, precision_context const & ctx);
height_report colmez_height(cm_type const & phi, precision_context const & ctx);

/// -1/2 L'(0,chi)/L(0,chi) - 1/4 log|D_E/D_F| - d/2 log(2 pi).
height_report averaged_colmez_rhs(abelian_field_spec const & spec, precision_context const & ctx);
/// The same right-hand side rewritten through Lambda'(0)/Lambda(0).
real averaged_colmez_rhs_lambda(abelian_field_spec const & spec, precision_context const & ctx);
/// 2^-d sum over all CM types of h^Col.
height_report averaged_colmez_lhs(abelian_field_spec const & spec, precision_context const & ctx);
/// Orbit representatives weighted by orbit size; equals averaged_colmez_lhs.
real averaged_colmez_lhs_by_orbits(abelian_field_spec const & spec, precision_context const & ctx);
/// h^Col of the total reflex pair (E#, Phi#).
height_report sharp_colmez_height(abelian_field_spec const & spec, precision_context const & ctx, long iota0 = 1);

/// log(Delta(a) Delta(a^-1)) for the ideal class of a positive definite form:
/// -12 log a + 2 log|Delta(tau)|, tau = (-b + sqrt D) / (2a).
real delta_pair_log(reduced_form const & form, precision_context const & ctx);
/// exp(delta_pair_log).
real delta_pair_product(reduced_form const & form, precision_context const & ctx);

struct identity_check
{
    std::string name;
    real lhs;
    real rhs;
    /// |lhs - rhs| or, for relative checks on logarithms, |exp(lhs - rhs) - 1|.
    real residual;
    bool relative = false;
};

struct chowla_selberg_report
{
    long discriminant;
    int class_number;
    int unit_count;
    /// (2 pi |D|)^{12h} prod Delta Delta' vs prod Gamma(a/|D|)^{6 w chi(a)}, as logarithms.
    identity_check product_form;
    /// (1/24h) sum log|Delta Delta'| vs 1/2 L'/L - 1/2 log 2 pi.
    identity_check logarithmic_form;
    /// log|D| + L'/L vs (w/2h) sum chi(a) log Gamma(a/|D|).
    identity_check lerch;
};

chowla_selberg_report chowla_selberg_check(long d, precision_context const & ctx);

/// Faltings height of an elliptic curve with CM by the maximal order of discriminant D.
real cm_elliptic_faltings(long d, precision_context const & ctx);

/// cm_elliptic_faltings(D) + 1/2 L'/L + 1/4 log|D| + 1/2 log 2 pi.
real cm_elliptic_faltings_residual(long d, precision_context const & ctx);

struct finite_divisor_point
{
    long characteristic;
    long length;
    long automorphisms;
};

struct archimedean_divisor_point
{
    real green_value;
    long automorphisms;
};

struct arithmetic_divisor_data
{
    std::vector<finite_divisor_point> finite_points;
    std::vector<archimedean_divisor_point> archimedean_points;
};

/// sum length log p / |Aut| + 1/2 sum green / |Aut|.
real arithmetic_degree(arithmetic_divisor_data const & div, precision_context const & ctx);

} // namespace cmh
