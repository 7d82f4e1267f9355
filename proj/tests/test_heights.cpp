#include "support.hpp"

#include <doctest.h>

#include "cmh/heights.hpp"

#include <stdexcept>

using namespace cmh;
using namespace cmh::test;
namespace mp = boost::multiprecision;

namespace {

std::vector<long> const discriminants = {-3, -4, -7, -8, -11, -15, -20, -23, -24, -31};

std::vector<abelian_field_spec> test_fields()
{
    return {abelian_field_spec::from_generators(4, {1}),  abelian_field_spec::from_generators(8, {1, 3}),
            abelian_field_spec::from_generators(5, {1}),  abelian_field_spec::from_generators(8, {1}),
            abelian_field_spec::from_generators(12, {1}), abelian_field_spec::from_generators(7, {1}),
            abelian_field_spec::from_generators(9, {1})};
}

} // namespace

TEST_CASE("Chowla-Selberg in all three forms")
{
    auto const & ctx = ctx50();
    for (long d : discriminants) {
        auto const r = chowla_selberg_check(d, ctx);
        CHECK(r.class_number == static_cast<int>(class_group(d).size()));
        CHECK_MESSAGE(r.product_form.residual < 1e-40, "D = " << d);
        CHECK(r.product_form.relative);
        CHECK_MESSAGE(r.logarithmic_form.residual < 1e-40, "D = " << d);
        CHECK_MESSAGE(r.lerch.residual < 1e-40, "D = " << d);
    }
    CHECK_THROWS(chowla_selberg_check(-5, ctx));
}

TEST_CASE("Faltings height of CM elliptic curves")
{
    auto const & ctx = ctx50();
    for (long d : discriminants)
        CHECK_MESSAGE(mp::abs(cm_elliptic_faltings_residual(d, ctx)) < 1e-40, "D = " << d);
}

TEST_CASE("Delta(a) Delta(a^-1) from lattices matches the form expression")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    for (long d : {-15L, -23L, -84L}) {
        for (auto const & f : class_group(d)) {
            real const sq = mp::sqrt(real(-d));
            // a = [a, (-b + sqrt D)/2], a^-1 = [1, (-b - sqrt D)/(2a)]
            lattice_basis const ideal{complex_mp(real(-f.b) / 2, sq / 2), complex_mp(real(f.a))};
            lattice_basis const inverse{complex_mp(real(-f.b) / (2 * f.a), -sq / (2 * f.a)), complex_mp(1)};
            complex_mp const product = delta_on_lattice(ideal, ctx) * delta_on_lattice(inverse, ctx);
            real const expected = delta_pair_product(f, ctx);
            CHECK(gap(product.re / expected, real(1)) < 1e-45);
            CHECK(mp::abs(product.im / expected) < 1e-45);
        }
    }
    CHECK_THROWS(delta_pair_log({-1, 1, 6}, ctx));
}

TEST_CASE("Colmez height of Q(i) from its explicit decomposition")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    auto const spec = abelian_field_spec::from_generators(4, {1});
    auto const h = colmez_height(enumerate_cm_types(spec).front(), ctx);
    real const ll = l_log_derivative_at_0(kronecker_character(-4), ctx).re;
    real const z = (log_two_pi() + ll) / 2;
    real const mu = mp::log(real(4)) / 2;
    CHECK(gap(h.value, -z - mu / 2) < 1e-45);
    CHECK(gap(h.term("Z-term") + h.term("mu-term"), h.value) < 1e-55);
    CHECK_THROWS(h.term("nope"));
    // same as the Faltings height of y^2 = x^3 - x
    CHECK(gap(h.value, cm_elliptic_faltings(-4, ctx)) < 1e-40);
}

TEST_CASE("even nontrivial characters are rejected by the height")
{
    auto const & ctx = ctx50();
    class_function delta(5);
    delta.set(1, 1);
    CHECK_THROWS_AS(colmez_height_from_a0(delta, ctx), std::logic_error);
}

TEST_CASE("averaged Colmez identity on the test fields")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    for (auto const & spec : test_fields()) {
        auto const lhs = averaged_colmez_lhs(spec, ctx);
        auto const rhs = averaged_colmez_rhs(spec, ctx);
        CHECK_MESSAGE(gap(lhs.value, rhs.value) < 1e-40, spec.to_string());
        CHECK(lhs.imaginary_part < 1e-45);
        CHECK(gap(averaged_colmez_lhs_by_orbits(spec, ctx), lhs.value) < 1e-45);
        CHECK(gap(averaged_colmez_rhs_lambda(spec, ctx), rhs.value) < 1e-45);
        real sum = 0;
        for (auto const & [name, v] : rhs.breakdown)
            sum += v;
        CHECK(gap(sum, rhs.value) < 1e-55);
        CHECK(rhs.breakdown.size() == 3);
        CHECK(gap(rhs.term("log2pi-term"), -real(spec.degree() / 2) * log_two_pi() / 2) < 1e-55);
    }
}

TEST_CASE("quadratic fields reduce to the elliptic Faltings height")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    CHECK(gap(averaged_colmez_lhs(abelian_field_spec::from_generators(8, {1, 3}), ctx).value,
              cm_elliptic_faltings(-8, ctx)) < 1e-40);
    CHECK(gap(averaged_colmez_lhs(abelian_field_spec::from_generators(3, {1}), ctx).value,
              cm_elliptic_faltings(-3, ctx)) < 1e-40);
}

TEST_CASE("reflex height equals the average of Colmez heights")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    for (auto const & spec : test_fields()) {
        real sum = 0;
        for (auto const & phi : enumerate_cm_types(spec))
            sum += colmez_height(phi, ctx).value;
        real const average = sum / spec.degree();
        CHECK_MESSAGE(gap(sharp_colmez_height(spec, ctx).value, average) < 1e-40, spec.to_string());
    }
}

TEST_CASE("arithmetic degree")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    arithmetic_divisor_data div;
    div.finite_points = {{2, 3, 2}, {5, 1, 1}};
    div.archimedean_points = {{real("1.5"), 3}};
    real const expected = 3 * mp::log(real(2)) / 2 + mp::log(real(5)) + real("1.5") / 6;
    CHECK(gap(arithmetic_degree(div, ctx), expected) < 1e-55);
    CHECK(arithmetic_degree({}, ctx) == 0);
    arithmetic_divisor_data bad;
    bad.finite_points = {{4, 1, 1}};
    CHECK_THROWS(arithmetic_degree(bad, ctx));
    bad.finite_points = {{3, 0, 1}};
    CHECK_THROWS(arithmetic_degree(bad, ctx));
    bad.finite_points = {};
    bad.archimedean_points = {{real(1), 0}};
    CHECK_THROWS(arithmetic_degree(bad, ctx));
}
