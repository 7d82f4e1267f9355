#include "cmh/heights.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace cmh {

namespace mp = boost::multiprecision;

real const & height_report::term(std::string const & name) const
{
    for (auto const & [key, v] : breakdown)
        if (key == name)
            return v;
    throw std::out_of_range("height_report: no term named " + name);
}

namespace {

// L'(0,chi)/L(0,chi) per primitive character, computed once per height batch.
class log_derivative_memo
{
  public:
    explicit log_derivative_memo(precision_context const & ctx) : ctx_(ctx) {}

    complex_mp const & operator()(dirichlet_character const & primitive)
    {
        auto it = cache_.find(primitive);
        if (it == cache_.end())
            it = cache_.emplace(primitive, l_report_at_0_hurwitz(primitive, ctx_).log_derivative_at_0).first;
        return it->second;
    }

  private:
    precision_context ctx_;
    std::map<dirichlet_character, complex_mp> cache_;
};

height_report colmez_from_a0(class_function const & a0, precision_context const & ctx, log_derivative_memo & memo)
{
    precision_scope guard(ctx);
    artin_decomposition const decomposition = artin_decompose(a0);
    complex_mp z;
    complex_mp mu;
    for (auto const & term : decomposition.terms) {
        dirichlet_character const primitive = primitivize(term.character);
        if (!primitive.is_trivial() && parity(primitive) != character_parity::odd)
            throw std::logic_error("colmez_height: even nontrivial character with nonzero multiplicity");
        complex_mp const m = term.multiplicity.to_complex(ctx);
        z += m * memo(primitive);
        mu += m * mp::log(real(primitive.modulus()));
    }
    height_report r;
    r.label = "colmez";
    real const z_term = -z.re;
    real const mu_term = -mu.re / 2;
    r.value = z_term + mu_term;
    r.breakdown = {{"Z-term", z_term}, {"mu-term", mu_term}};
    r.imaginary_part = mp::abs(z.im + mu.im / 2);
    return r;
}

int half_degree(abelian_field_spec const & spec)
{
    spec.require_cm();
    return spec.degree() / 2;
}

} // namespace

height_report colmez_height_from_a0(class_function const & a0, precision_context const & ctx)
{
    log_derivative_memo memo(ctx);
    return colmez_from_a0(a0, ctx, memo);
}

height_report colmez_height(cm_type const & phi, precision_context const & ctx)
{
    return colmez_height_from_a0(a0_function(phi), ctx);
}

height_report averaged_colmez_rhs(abelian_field_spec const & spec, precision_context const & ctx)
{
    int const d = half_degree(spec);
    precision_scope guard(ctx);
    real const l_term = -hecke_quadratic_log_derivative(spec, ctx) / 2;
    real const disc_term = -log_relative_discriminant(spec, ctx) / 4;
    real const log2pi_term = -real(d) * log_two_pi() / 2;
    height_report r;
    r.label = "averaged-colmez-rhs";
    r.value = l_term + disc_term + log2pi_term;
    r.breakdown = {{"L-term", l_term}, {"disc-term", disc_term}, {"log2pi-term", log2pi_term}};
    return r;
}

real averaged_colmez_rhs_lambda(abelian_field_spec const & spec, precision_context const & ctx)
{
    int const d = half_degree(spec);
    precision_scope guard(ctx);
    real const log_4pi_e_gamma = mp::log(4 * pi()) + euler_gamma(ctx);
    return -completed_lambda_log_derivative(spec, ctx) / 2 - real(d) * log_4pi_e_gamma / 4 -
           real(d) * log_two_pi() / 2;
}

height_report averaged_colmez_lhs(abelian_field_spec const & spec, precision_context const & ctx)
{
    half_degree(spec);
    precision_scope guard(ctx);
    log_derivative_memo memo(ctx);
    auto const types = enumerate_cm_types(spec);
    real z_sum = 0;
    real mu_sum = 0;
    real imag = 0;
    for (auto const & phi : types) {
        height_report h = colmez_from_a0(a0_function(phi), ctx, memo);
        z_sum += h.term("Z-term");
        mu_sum += h.term("mu-term");
        if (h.imaginary_part > imag)
            imag = h.imaginary_part;
    }
    real const count = static_cast<long>(types.size());
    height_report r;
    r.label = "averaged-colmez-lhs";
    r.breakdown = {{"Z-term", z_sum / count}, {"mu-term", mu_sum / count}};
    r.value = r.breakdown[0].second + r.breakdown[1].second;
    r.imaginary_part = imag;
    return r;
}

real averaged_colmez_lhs_by_orbits(abelian_field_spec const & spec, precision_context const & ctx)
{
    half_degree(spec);
    precision_scope guard(ctx);
    log_derivative_memo memo(ctx);
    auto const types = enumerate_cm_types(spec);
    std::set<boost::dynamic_bitset<>> seen;
    real acc = 0;
    for (auto const & phi : types) {
        if (seen.count(phi.members()))
            continue;
        auto orbit = galois_orbit(phi);
        for (auto const & psi : orbit)
            seen.insert(psi.members());
        acc += colmez_from_a0(a0_function(phi), ctx, memo).value * static_cast<long>(orbit.size());
    }
    return acc / static_cast<long>(types.size());
}

height_report sharp_colmez_height(abelian_field_spec const & spec, precision_context const & ctx, long iota0)
{
    half_degree(spec);
    height_report r = colmez_height_from_a0(a0_of_sharp(total_reflex_pair(spec, iota0)), ctx);
    r.label = "sharp-colmez";
    return r;
}

// ---------------------------------------------------------------------------
// Chowla-Selberg

real delta_pair_log(reduced_form const & form, precision_context const & ctx)
{
    long const d = form.discriminant();
    if (form.a <= 0 || d >= 0)
        throw std::invalid_argument("delta_pair_log: form must be positive definite: " + form.to_string());
    precision_scope guard(ctx);
    real const two_a = real(2 * form.a);
    complex_mp const tau(real(-form.b) / two_a, mp::sqrt(real(-d)) / two_a);
    complex_mp const log_eta = log_dedekind_eta(tau, ctx);
    return -12 * mp::log(real(form.a)) + 48 * log_eta.re;
}

real delta_pair_product(reduced_form const & form, precision_context const & ctx)
{
    precision_scope guard(ctx);
    return mp::exp(delta_pair_log(form, ctx));
}

namespace {

real gamma_character_sum(dirichlet_character const & chi, precision_context const & ctx)
{
    int const n = chi.modulus();
    real acc = 0;
    for (int a = 1; a < n; ++a) {
        int e = chi.exponent(a);
        if (e < 0)
            continue;
        real lg = log_gamma(real(a) / n, ctx);
        if (e == 0)
            acc += lg;
        else
            acc -= lg;
    }
    return acc;
}

real absolute_residual(real const & a, real const & b)
{
    return mp::abs(a - b);
}

} // namespace

chowla_selberg_report chowla_selberg_check(long d, precision_context const & ctx)
{
    auto const forms = class_group(d);
    dirichlet_character const chi = kronecker_character(d);
    precision_scope guard(ctx);

    chowla_selberg_report r;
    r.discriminant = d;
    r.class_number = static_cast<int>(forms.size());
    r.unit_count = unit_count(d);
    real const h = r.class_number;
    real const w = r.unit_count;
    real const abs_d = real(-d);

    real delta_sum = 0;
    for (auto const & f : forms)
        delta_sum += delta_pair_log(f, ctx);
    real const gamma_sum = gamma_character_sum(chi, ctx);

    {
        identity_check & c = r.product_form;
        c.name = "chowla-selberg-product";
        c.lhs = 12 * h * mp::log(2 * pi() * abs_d) + delta_sum;
        c.rhs = 6 * w * gamma_sum;
        c.residual = mp::abs(mp::expm1(c.lhs - c.rhs));
        c.relative = true;
    }
    {
        identity_check & c = r.logarithmic_form;
        c.name = "chowla-selberg-log";
        c.lhs = delta_sum / (24 * h);
        real const ll = l_log_derivative_at_0(chi, ctx).re;
        c.rhs = ll / 2 - log_two_pi() / 2;
        c.residual = absolute_residual(c.lhs, c.rhs);
    }
    {
        identity_check & c = r.lerch;
        c.name = "lerch";
        c.lhs = mp::log(abs_d) + l_report_at_0_hurwitz(chi, ctx).log_derivative_at_0.re;
        c.rhs = w / (2 * h) * gamma_sum;
        c.residual = absolute_residual(c.lhs, c.rhs);
    }
    return r;
}

real cm_elliptic_faltings(long d, precision_context const & ctx)
{
    auto const forms = class_group(d);
    precision_scope guard(ctx);
    real const log_4pi2 = mp::log(4 * pi() * pi());
    real const half_log_d = mp::log(real(-d)) / 2;
    real acc = 0;
    for (auto const & f : forms)
        acc += log_4pi2 + half_log_d + delta_pair_log(f, ctx) / 12;
    return -acc / (2 * static_cast<long>(forms.size()));
}

real cm_elliptic_faltings_residual(long d, precision_context const & ctx)
{
    real const h = cm_elliptic_faltings(d, ctx);
    precision_scope guard(ctx);
    real const ll = l_log_derivative_at_0(kronecker_character(d), ctx).re;
    return h + ll / 2 + mp::log(real(-d)) / 4 + log_two_pi() / 2;
}

// ---------------------------------------------------------------------------
// arithmetic degree

real arithmetic_degree(arithmetic_divisor_data const & div, precision_context const & ctx)
{
    precision_scope guard(ctx);
    real acc = 0;
    for (auto const & pt : div.finite_points) {
        auto const primes = pt.characteristic >= 2 ? factorize(pt.characteristic) : decltype(factorize(2)){};
        if (primes.size() != 1 || primes[0].second != 1)
            throw std::invalid_argument("arithmetic_degree: residue characteristic must be a prime");
        if (pt.length <= 0 || pt.automorphisms <= 0)
            throw std::invalid_argument("arithmetic_degree: lengths and automorphism orders must be positive");
        acc += real(pt.length) * mp::log(real(pt.characteristic)) / pt.automorphisms;
    }
    for (auto const & pt : div.archimedean_points) {
        if (pt.automorphisms <= 0)
            throw std::invalid_argument("arithmetic_degree: automorphism orders must be positive");
        acc += pt.green_value / (2 * pt.automorphisms);
    }
    return acc;
}

} // namespace cmh
