#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include "cmh/characters.hpp"
#include "cmh/cyclotomic.hpp"

#include <numeric>
#include <set>

using namespace cmh;
using namespace cmh::test;

namespace {

// Euler's criterion for the Legendre symbol.
int legendre(long a, long p)
{
    a = mod_floor(a, p);
    if (a == 0)
        return 0;
    long r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

} // namespace

TEST_CASE("unit groups have phi(N) elements and consistent discrete logs")
{
    for (int n = 1; n <= 60; ++n) {
        unit_group const g(n);
        CHECK(g.order() == euler_phi(n));
        long prod = 1;
        for (int o : g.generator_orders())
            prod *= o;
        CHECK(prod == g.order());
        for (int u : g.units()) {
            auto const & logs = g.discrete_log(u);
            long v = 1 % n;
            for (std::size_t i = 0; i < logs.size(); ++i)
                for (int k = 0; k < logs[i]; ++k)
                    v = v * g.generators()[i] % n;
            CHECK(v == u % n);
        }
    }
}

TEST_CASE("character tables: count, orthogonality and distinctness")
{
    for (int n = 1; n <= 40; ++n) {
        auto const chars = all_characters(n);
        CHECK(static_cast<long>(chars.size()) == euler_phi(n));
        std::set<std::vector<int>> tables;
        for (auto const & chi : chars) {
            tables.insert(chi.exponents());
            if (chi.is_trivial())
                continue;
            // sum_a chi(a) = 0: every exponent class occurs equally often
            std::vector<int> counts(static_cast<std::size_t>(chi.order()), 0);
            for (int a = 0; a < n; ++a)
                if (chi.exponent(a) >= 0)
                    ++counts[static_cast<std::size_t>(chi.exponent(a))];
            CHECK(std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end());
        }
        CHECK(tables.size() == chars.size());
    }
}

TEST_CASE("conductors match brute-force minimal modulus search for N <= 60")
{
    int checked = 0;
    for (int n = 1; n <= 60; ++n)
        for (auto const & chi : all_characters(n)) {
            int const f = brute_force_conductor(chi);
            CHECK(conductor(chi) == f);
            auto const p = primitivize(chi);
            CHECK(p.modulus() == f);
            CHECK(is_primitive(p));
            for (int a = 1; a < n; ++a)
                if (std::gcd(a, n) == 1)
                    CHECK(p.exponent_in(a % f, 120 * chi.order()) == chi.exponent_in(a, 120 * chi.order()));
            CHECK(parity(p) == parity(chi));
            ++checked;
        }
    CHECK(checked > 1000);
}

TEST_CASE("parity and conjugation")
{
    for (int n = 3; n <= 30; ++n)
        for (auto const & chi : all_characters(n)) {
            int const e = chi.exponent(n - 1);
            bool const odd = 2 * e == chi.order();
            CHECK((parity(chi) == character_parity::odd) == odd);
            auto const c = chi.conj();
            for (int a = 0; a < n; ++a)
                if (chi.exponent(a) >= 0)
                    CHECK((chi.exponent(a) + c.exponent(a)) % chi.order() == 0);
        }
}

TEST_CASE("character construction validates its table")
{
    CHECK_THROWS(dirichlet_character(5, 4, {-1, 0, 1, 3}));          // wrong size
    CHECK_THROWS(dirichlet_character(5, 4, {-1, 1, 1, 3, 2}));       // chi(1) != 1
    CHECK_THROWS(dirichlet_character(5, 2, {-1, 0, 1, 0, 1}));       // not multiplicative
    CHECK_THROWS(dirichlet_character(5, 4, {-1, 0, 2, 2, 0}));       // order not exact
    CHECK_NOTHROW(dirichlet_character(5, 4, {-1, 0, 1, 3, 2}));
}

TEST_CASE("Kronecker symbols and fundamental discriminants")
{
    for (long p : {3L, 5L, 7L, 11L, 13L, 101L})
        for (long d : {-3L, -4L, -7L, -8L, -15L, -23L, -84L})
            if (d % p != 0)
                CHECK(kronecker_symbol(d, p) == legendre(d, p));
    std::vector<long> fundamental;
    for (long d = -1; d >= -40; --d)
        if (is_fundamental_discriminant(d))
            fundamental.push_back(d);
    CHECK(fundamental == std::vector<long>{-3, -4, -7, -8, -11, -15, -19, -20, -23, -24, -31, -35, -39, -40});
    for (long d : fundamental) {
        auto const chi = kronecker_character(d);
        CHECK(chi.modulus() == -d);
        CHECK(chi.order() == 2);
        CHECK(is_primitive(chi));
        CHECK(parity(chi) == character_parity::odd);
        for (long n = 1; n < -d; ++n)
            if (std::gcd(n, -d) == 1)
                CHECK((chi.exponent(n) == 0 ? 1 : -1) == kronecker_symbol(d, n));
    }
    CHECK_THROWS(kronecker_character(-5));
}

TEST_CASE("abelian field specs")
{
    auto const qi = abelian_field_spec::from_generators(4, {1});
    CHECK(qi.degree() == 2);
    CHECK(qi.is_cm());
    CHECK(abs_discriminant(qi) == 4);

    auto const q2 = abelian_field_spec::from_generators(8, {3});
    CHECK(q2.subgroup() == std::vector<int>{1, 3});
    CHECK(q2.degree() == 2);
    CHECK(abs_discriminant(q2) == 8);

    CHECK(abs_discriminant(abelian_field_spec::from_generators(5, {1})) == 125);
    CHECK(abs_discriminant(abelian_field_spec::from_generators(8, {1})) == 256);
    CHECK(abs_discriminant(abelian_field_spec::from_generators(12, {1})) == 144);
    CHECK(abs_discriminant(abelian_field_spec::from_generators(7, {1})) == 16807);
    CHECK(abs_discriminant(abelian_field_spec::from_generators(9, {1})) == 19683);
    // real quadratic Q(sqrt 5) inside Q(zeta_5)
    CHECK(abs_discriminant(abelian_field_spec::from_generators(5, {4})) == 5);

    auto const real5 = abelian_field_spec::from_generators(5, {4});
    CHECK_FALSE(real5.is_cm());
    CHECK_THROWS_AS(real5.require_cm(), std::invalid_argument);
    CHECK(totally_real_subfield(abelian_field_spec::from_generators(5, {1})) == real5);

    CHECK_THROWS(abelian_field_spec::from_subgroup(7, {1, 2}));
    CHECK_NOTHROW(abelian_field_spec::from_subgroup(7, {1, 2, 4}));
    CHECK_THROWS(abelian_field_spec::from_generators(8, {2}));

    for (auto const & spec : {qi, q2, abelian_field_spec::from_generators(7, {1}),
                              abelian_field_spec::from_generators(13, {3})}) {
        auto const group = field_character_group(spec);
        CHECK(static_cast<int>(group.size()) == spec.degree());
        for (auto const & chi : group)
            for (int h : spec.subgroup())
                CHECK(chi.exponent(h) == 0);
    }
}

TEST_CASE("cyclotomic arithmetic")
{
    auto const & ctx = ctx50();
    precision_scope guard(ctx);
    for (int m : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16}) {
        cyclotomic_number s(m);
        for (int k = 0; k < m; ++k)
            s.add_root(k, 1);
        if (m == 1)
            CHECK(s.rational_value() == 1);
        else
            CHECK(s.is_zero());
        cyclotomic_number z(m);
        z.add_root(1, 1);
        auto const w = z.times_root(m - 1);
        CHECK(w == cyclotomic_number::from_rational(m, 1));
        CHECK(z * z.conj() == cyclotomic_number::from_rational(m, 1));
    }
    cyclotomic_number a(12);
    a.add_root(1, rational(1, 2));
    a.add_root(5, rational(-3, 4));
    cyclotomic_number b(12);
    b.add_root(2, rational(2));
    b.add_root(7, rational(1, 3));
    complex_mp const product = (a * b).to_complex(ctx);
    CHECK(gap(product, a.to_complex(ctx) * b.to_complex(ctx)) < 1e-55);
    // zeta_8 + zeta_8^7 = sqrt 2 is irrational
    cyclotomic_number r(8);
    r.add_root(1, 1);
    r.add_root(7, 1);
    CHECK_FALSE(r.is_rational());
    CHECK_THROWS(r.rational_value());
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(9) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
}
