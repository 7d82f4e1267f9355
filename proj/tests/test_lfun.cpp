#include "support.hpp"

#include <doctest.h>

#include "cmh/lfun.hpp"

#include <stdexcept>

using namespace cmh;
using namespace cmh::test;
namespace mp = boost::multiprecision;

namespace {

std::vector<dirichlet_character> odd_primitive_characters(int max_conductor)
{
    std::vector<dirichlet_character> out;
    for (int f = 3; f <= max_conductor; ++f)
        for (auto const & chi : all_characters(f))
            if (is_primitive(chi) && parity(chi) == character_parity::odd)
                out.push_back(chi);
    return out;
}

} // namespace

TEST_CASE("L(0, chi) for quadratic characters equals 2h/w")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    // (D, h, w) from tables of imaginary quadratic fields
    struct row
    {
        long d;
        int h;
        int w;
    };
    for (auto const & [d, h, w] : {row{-3, 1, 6}, row{-4, 1, 4}, row{-7, 1, 2}, row{-23, 3, 2}, row{-47, 5, 2},
                                   row{-71, 7, 2}, row{-84, 4, 2}}) {
        real const expected = real(2 * h) / w;
        auto const chi = kronecker_character(d);
        CHECK(gap(l_value_at_0(chi, ctx), complex_mp(expected)) < 1e-55);
        CHECK(gap(l_report_at_0_hurwitz(chi, ctx).value_at_0, complex_mp(expected)) < 1e-45);
    }
}

TEST_CASE("L(s, chi) at s > 1 against closed forms")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    auto const chi4 = kronecker_character(-4);
    real catalan;
    mpfr_const_catalan(catalan.backend().data(), MPFR_RNDN);
    CHECK(gap(l_function(chi4, complex_mp(real(2)), ctx), complex_mp(catalan)) < 1e-45);
    CHECK(gap(l_function(chi4, complex_mp(real(3)), ctx), complex_mp(mp::pow(pi(), 3) / 32)) < 1e-45);
    // L(3, chi_-3) = 4 pi^3 / (81 sqrt 3)
    CHECK(gap(l_function(kronecker_character(-3), complex_mp(real(3)), ctx),
              complex_mp(4 * mp::pow(pi(), 3) / (81 * mp::sqrt(real(3))))) < 1e-45);
    CHECK_THROWS(l_function(chi4, complex_mp(real(1)), ctx));
}

TEST_CASE("Gamma-sum L'(0, chi) matches Richardson finite differences (conductor <= 40)")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    auto const chars = odd_primitive_characters(40);
    CHECK(chars.size() > 100);
    double worst = 0;
    for (auto const & chi : chars) {
        auto const r = l_report_at_0(chi, ctx);
        auto f = [&](real const & s) { return l_function(chi, complex_mp(s), ctx); };
        complex_mp const fd = richardson_derivative(f, real(0), real("0.01"), 5);
        double const g = gap(r.derivative_at_0, fd);
        worst = std::max(worst, g);
        CHECK_MESSAGE(g < 1e-8, chi.to_string());
    }
    MESSAGE("worst L'(0) deviation: " << worst);
}

TEST_CASE("log-Gamma and Hurwitz routes agree on value, derivative and log-derivative")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    for (auto const & chi : odd_primitive_characters(25)) {
        auto const a = l_report_at_0(chi, ctx);
        auto const b = l_report_at_0_hurwitz(chi, ctx);
        CHECK(gap(a.value_at_0, b.value_at_0) < 1e-45);
        CHECK(gap(a.derivative_at_0, b.derivative_at_0) < 1e-45);
        CHECK(gap(a.log_derivative_at_0, b.log_derivative_at_0) < 1e-45);
        CHECK(gap(a.value_at_0, l_value_at_0(chi, ctx)) < 1e-45);
        auto const c = l_report_at_0(chi.conj(), ctx);
        CHECK(gap(c.log_derivative_at_0, a.log_derivative_at_0.conj()) < 1e-45);
    }
}

TEST_CASE("trivial character: zeta'(0)/zeta(0) = log 2 pi")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    auto const one = dirichlet_character::trivial(1);
    CHECK(gap(l_value_at_0(one, ctx), complex_mp(real("-0.5"))) < 1e-55);
    CHECK(gap(l_log_derivative_at_0(one, ctx), complex_mp(log_two_pi())) < 1e-50);
    CHECK(gap(l_report_at_0_hurwitz(one, ctx).log_derivative_at_0, complex_mp(log_two_pi())) < 1e-45);
}

TEST_CASE("L-values at 0 reject even and imprimitive characters")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    for (auto const & chi : all_characters(5))
        if (!chi.is_trivial() && parity(chi) == character_parity::even)
            CHECK_THROWS_AS(l_report_at_0(chi, ctx), std::domain_error);
    auto const imprimitive = all_characters(8);
    for (auto const & chi : imprimitive)
        if (!is_primitive(chi))
            CHECK_THROWS_AS(l_value_at_0(chi, ctx), std::invalid_argument);
}

TEST_CASE("quadratic Hecke L-function of E/F")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    auto const qi = abelian_field_spec::from_generators(4, {1});
    CHECK(gap(hecke_quadratic_log_derivative(qi, ctx), l_log_derivative_at_0(kronecker_character(-4), ctx).re) <
          1e-50);
    CHECK(gap(log_relative_discriminant(abelian_field_spec::from_generators(5, {1}), ctx), mp::log(real(25))) <
          1e-55);
    CHECK(gap(log_relative_discriminant(abelian_field_spec::from_generators(7, {1}), ctx), mp::log(real(343))) <
          1e-55);
}

TEST_CASE("completed Lambda'(0)/Lambda(0) from finite differences of log Lambda")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    for (auto const & spec : {abelian_field_spec::from_generators(5, {1}), abelian_field_spec::from_generators(12, {1}),
                              abelian_field_spec::from_generators(7, {1})}) {
        int const d = spec.degree() / 2;
        std::vector<dirichlet_character> odd;
        for (auto const & chi : field_character_group(spec)) {
            auto const p = primitivize(chi);
            if (!p.is_trivial() && parity(p) == character_parity::odd)
                odd.push_back(p);
        }
        real const log_rel = log_relative_discriminant(spec, ctx);
        auto log_lambda = [&](real const & s) {
            real const half = (s + 1) / 2;
            real acc = s * log_rel / 2 + d * (-half * mp::log(pi()) + mpfr_apply(mpfr_lngamma, half));
            complex_mp prod(1);
            for (auto const & chi : odd)
                prod = prod * l_function(chi, complex_mp(s), ctx);
            return acc + mp::log(prod.abs());
        };
        real const fd = richardson_derivative(log_lambda, real(0), real("0.01"), 5);
        CHECK(gap(completed_lambda_log_derivative(spec, ctx), fd) < 1e-15);
    }
}
