// Dirichlet L-functions at s = 0 and the quadratic Hecke L-function of an
// abelian CM extension E/F.

#pragma once

#include "cmh/characters.hpp"
#include "cmh/numerics.hpp"

namespace cmh {

struct l_value_report
{
    complex_mp value_at_0;
    complex_mp derivative_at_0;
    complex_mp log_derivative_at_0;
};

/// L(s, chi) = f^-s sum_{a=1}^{f} chi(a) zeta_H(s, a/f) for any s != 1.
complex_mp l_function(dirichlet_character const & chi, complex_mp const & s, precision_context const & ctx);

/// L(0, chi) for primitive chi that is odd or trivial, by the finite Bernoulli sum.
complex_mp l_value_at_0(dirichlet_character const & chi, precision_context const & ctx);

/// L'(0, chi) / L(0, chi) through the log-Gamma sum (Lerch).
complex_mp l_log_derivative_at_0(dirichlet_character const & chi, precision_context const & ctx);

/// Value, derivative and log-derivative at 0 from the log-Gamma sum.
l_value_report l_report_at_0(dirichlet_character const & chi, precision_context const & ctx);

/// Value, derivative and log-derivative at 0 assembled directly from
/// zeta_H(0, a/f) and d/ds zeta_H(s, a/f) at s = 0. Shares no formula with
/// l_report_at_0 beyond the Hurwitz kernel.
l_value_report l_report_at_0_hurwitz(dirichlet_character const & chi, precision_context const & ctx);

/// Sum over the odd characters of E of L'(0,chi)/L(0,chi), i.e. the
/// log-derivative of L(s, chi_{E/F}). Imaginary part is kept for checking.
complex_mp hecke_quadratic_log_derivative_complex(abelian_field_spec const & spec, precision_context const & ctx);
real hecke_quadratic_log_derivative(abelian_field_spec const & spec, precision_context const & ctx);

/// Log of |D_E / D_F| with F the maximal totally real subfield.
real log_relative_discriminant(abelian_field_spec const & spec, precision_context const & ctx);

/// Lambda'(0)/Lambda(0) for Lambda(s) = |D_E/D_F|^(s/2) Gamma_R(s+1)^d L(s, chi_{E/F}).
real completed_lambda_log_derivative(abelian_field_spec const & spec, precision_context const & ctx);

} // namespace cmh
