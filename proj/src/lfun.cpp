#include "cmh/lfun.hpp"

#include <stdexcept>

namespace cmh {

namespace mp = boost::multiprecision;

namespace {

void require_odd_or_trivial_primitive(dirichlet_character const & chi)
{
    if (!is_primitive(chi))
        throw std::invalid_argument("L-value at 0: character must be primitive: " + chi.to_string());
    if (!chi.is_trivial() && parity(chi) == character_parity::even)
        throw std::domain_error("L-value at 0: even nontrivial character has L(0, chi) = 0: " + chi.to_string());
}

} // namespace

complex_mp l_function(dirichlet_character const & chi, complex_mp const & s, precision_context const & ctx)
{
    precision_scope guard(ctx);
    int const f = chi.modulus();
    complex_mp acc;
    for (int a = 1; a <= f; ++a) {
        int e = chi.exponent(a);
        if (e < 0)
            continue;
        acc += root_of_unity(e, chi.order()) * hurwitz_zeta(s, real(a) / f, ctx);
    }
    // f^-s
    real log_f = mp::log(real(f));
    complex_mp scale = exp(complex_mp(-s.re * log_f, -s.im * log_f));
    return acc * scale;
}

complex_mp l_value_at_0(dirichlet_character const & chi, precision_context const & ctx)
{
    require_odd_or_trivial_primitive(chi);
    precision_scope guard(ctx);
    if (chi.is_trivial())
        return complex_mp(real(-0.5));
    int const f = chi.modulus();
    // -(1/f) sum a chi(a), exact in Q(zeta_order)
    cyclotomic_number sum(chi.order());
    for (int a = 1; a < f; ++a) {
        int e = chi.exponent(a);
        if (e >= 0)
            sum.add_root(e, rational(-a, f));
    }
    return sum.to_complex(ctx);
}

l_value_report l_report_at_0(dirichlet_character const & chi, precision_context const & ctx)
{
    require_odd_or_trivial_primitive(chi);
    precision_scope guard(ctx);
    l_value_report r;
    r.value_at_0 = l_value_at_0(chi, ctx);
    if (chi.is_trivial()) {
        // zeta'(0) = -1/2 log(2 pi)
        r.derivative_at_0 = complex_mp(-log_two_pi() / 2);
        r.log_derivative_at_0 = complex_mp(log_two_pi());
        return r;
    }
    int const f = chi.modulus();
    complex_mp gamma_sum;
    for (int a = 1; a < f; ++a) {
        int e = chi.exponent(a);
        if (e < 0)
            continue;
        gamma_sum += root_of_unity(e, chi.order()) * log_gamma(real(a) / f, ctx);
    }
    r.derivative_at_0 = gamma_sum - r.value_at_0 * mp::log(real(f));
    r.log_derivative_at_0 = r.derivative_at_0 / r.value_at_0;
    return r;
}

complex_mp l_log_derivative_at_0(dirichlet_character const & chi, precision_context const & ctx)
{
    return l_report_at_0(chi, ctx).log_derivative_at_0;
}

l_value_report l_report_at_0_hurwitz(dirichlet_character const & chi, precision_context const & ctx)
{
    require_odd_or_trivial_primitive(chi);
    precision_scope guard(ctx);
    int const f = chi.modulus();
    complex_mp value;
    complex_mp deriv_sum;
    for (int a = 1; a <= f; ++a) {
        int e = chi.exponent(a);
        if (e < 0)
            continue;
        auto [z, dz] = hurwitz_zeta_with_derivative(complex_mp(0), real(a) / f, ctx);
        complex_mp w = root_of_unity(e, chi.order());
        value += w * z;
        deriv_sum += w * dz;
    }
    l_value_report r;
    r.value_at_0 = value;
    r.derivative_at_0 = deriv_sum - value * mp::log(real(f));
    r.log_derivative_at_0 = r.derivative_at_0 / r.value_at_0;
    return r;
}

complex_mp hecke_quadratic_log_derivative_complex(abelian_field_spec const & spec, precision_context const & ctx)
{
    spec.require_cm();
    precision_scope guard(ctx);
    complex_mp acc;
    for (auto const & chi : field_character_group(spec)) {
        if (parity(chi) != character_parity::odd)
            continue;
        acc += l_log_derivative_at_0(primitivize(chi), ctx);
    }
    return acc;
}

real hecke_quadratic_log_derivative(abelian_field_spec const & spec, precision_context const & ctx)
{
    precision_scope guard(ctx);
    complex_mp z = hecke_quadratic_log_derivative_complex(spec, ctx);
    if (mp::abs(z.im) > ctx.tolerance())
        throw std::logic_error("hecke_quadratic_log_derivative: odd characters did not pair into conjugates");
    return z.re;
}

real log_relative_discriminant(abelian_field_spec const & spec, precision_context const & ctx)
{
    spec.require_cm();
    precision_scope guard(ctx);
    bigint de = abs_discriminant(spec);
    bigint df = abs_discriminant(totally_real_subfield(spec));
    return mp::log(real(de.str())) - mp::log(real(df.str()));
}

real completed_lambda_log_derivative(abelian_field_spec const & spec, precision_context const & ctx)
{
    spec.require_cm();
    precision_scope guard(ctx);
    int const d = spec.degree() / 2;
    real const log_4pi_e_gamma = mp::log(4 * pi()) + euler_gamma(ctx);
    return hecke_quadratic_log_derivative(spec, ctx) + log_relative_discriminant(spec, ctx) / 2 -
           real(d) * log_4pi_e_gamma / 2;
}

} // namespace cmh
