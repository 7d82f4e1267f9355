// Acceptance run: one pass/fail line per criterion.

#include "oracles.hpp"
#include "support.hpp"

#include "cmh/heights.hpp"
#include "cmh/lfun.hpp"
#include "cmh/weilrep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace cmh;
using namespace cmh::test;
namespace mp = boost::multiprecision;

namespace {

std::vector<long> const discriminants = {-3, -4, -7, -8, -11, -15, -20, -23, -24, -31};

std::vector<abelian_field_spec> fields()
{
    return {abelian_field_spec::from_generators(4, {1}),  abelian_field_spec::from_generators(8, {1, 3}),
            abelian_field_spec::from_generators(5, {1}),  abelian_field_spec::from_generators(8, {1}),
            abelian_field_spec::from_generators(12, {1}), abelian_field_spec::from_generators(7, {1}),
            abelian_field_spec::from_generators(9, {1})};
}

struct outcome
{
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

double to_double(real const & x)
{
    return x.convert_to<double>();
}

outcome criterion_1(precision_context const & ctx)
{
    auto const t0 = std::chrono::steady_clock::now();
    double worst = 0;
    for (long d : discriminants)
        worst = std::max(worst, to_double(chowla_selberg_check(d, ctx).logarithmic_form.residual));
    double const t = seconds_since(t0);
    return {worst < 1e-10 && t < 60, "Chowla-Selberg log form, max |lhs - rhs| " + sci(worst) + " over " +
                                         std::to_string(discriminants.size()) + " discriminants in " + sci(t) + " s"};
}

outcome criterion_2(precision_context const & ctx)
{
    double product = 0, lerch = 0;
    for (long d : discriminants) {
        auto const r = chowla_selberg_check(d, ctx);
        product = std::max(product, to_double(r.product_form.residual));
        lerch = std::max(lerch, to_double(r.lerch.residual));
    }
    return {product < 1e-10 && lerch < 1e-10,
            "Chowla-Selberg product form relative residual " + sci(product) + ", Lerch residual " + sci(lerch)};
}

outcome criterion_3(precision_context const & ctx)
{
    double worst = 0;
    for (long d : discriminants)
        worst = std::max(worst, to_double(mp::abs(cm_elliptic_faltings_residual(d, ctx))));
    return {worst < 1e-10, "CM elliptic Faltings height identity, max residual " + sci(worst)};
}

outcome criterion_4(precision_context const & ctx)
{
    auto const t0 = std::chrono::steady_clock::now();
    double worst = 0;
    for (auto const & spec : fields()) {
        precision_scope guard(ctx);
        real const lhs = averaged_colmez_lhs(spec, ctx).value;
        real const rhs = averaged_colmez_rhs(spec, ctx).value;
        worst = std::max(worst, to_double(mp::abs(lhs - rhs)));
    }
    double const t = seconds_since(t0);
    return {worst < 1e-9 && t < 120,
            "averaged Colmez identity, max residual " + sci(worst) + " over 7 fields in " + sci(t) + " s"};
}

outcome criterion_5()
{
    int ok = 0;
    for (auto const & spec : fields())
        if (a0_of_sharp(total_reflex_pair(spec)) == reflex_average_a0(spec))
            ++ok;
    return {ok == 7, "exact average-reflex A0 identity on " + std::to_string(ok) + "/7 fields"};
}

outcome criterion_6(precision_context const & ctx)
{
    double worst = 0;
    for (auto const & spec : fields()) {
        precision_scope guard(ctx);
        real sum = 0;
        for (auto const & phi : enumerate_cm_types(spec))
            sum += colmez_height(phi, ctx).value;
        real const average = sum / spec.degree();
        worst = std::max(worst, to_double(mp::abs(sharp_colmez_height(spec, ctx).value - average)));
    }
    return {worst < 1e-9, "reflex Colmez height vs type average, max residual " + sci(worst)};
}

outcome criterion_7()
{
    long types = 0, terms = 0, bad = 0;
    for (auto const & spec : fields())
        for (auto const & phi : enumerate_cm_types(spec)) {
            ++types;
            for (auto const & t : artin_decompose(a0_function(phi)).terms) {
                if (t.character.is_trivial())
                    continue;
                ++terms;
                if (parity(t.character) != character_parity::odd)
                    ++bad;
            }
        }
    return {bad == 0 && terms > 0, std::to_string(terms) + " nontrivial characters over " + std::to_string(types) +
                                       " CM types, " + std::to_string(bad) + " not odd"};
}

outcome criterion_8()
{
    std::vector<integer_matrix> const grams = {
        {{0, 1}, {1, 0}},
        {{2}},
        {{2, 0}, {0, 2}},
        {{2, 1}, {1, 2}},
        {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
    };
    double unitarity = 0, braid = 0, s2 = 0;
    bool orders = true;
    for (auto const & g : grams) {
        auto const r = verify_weil_relations(discriminant_module(g));
        unitarity = std::max({unitarity, r.unitarity_s, r.unitarity_t});
        braid = std::max(braid, r.braid);
        s2 = std::max(s2, r.s_squared);
        orders = orders && r.t_order_matches_level;
    }
    return {unitarity < 1e-12 && braid < 1e-12 && s2 < 1e-12 && orders,
            "Weil relations on 5 Gram matrices: unitarity " + sci(unitarity) + ", (ST)^3 - S^2 " + sci(braid) +
                ", S^2 - phase*negation " + sci(s2) + (orders ? "" : ", T order mismatch")};
}

outcome criterion_9(precision_context const & ctx)
{
    long class_fields = 0, class_bad = 0;
    for (long d = -3; d >= -200; --d) {
        if (!is_fundamental_discriminant(d))
            continue;
        ++class_fields;
        if (class_group(d).size() != exhaustive_reduced(d).size())
            ++class_bad;
    }
    long chars = 0, conductor_bad = 0;
    for (int n = 1; n <= 60; ++n)
        for (auto const & chi : all_characters(n)) {
            ++chars;
            if (conductor(chi) != brute_force_conductor(chi))
                ++conductor_bad;
        }
    precision_scope guard(ctx);
    long lchars = 0;
    double worst = 0;
    for (int f = 3; f <= 40; ++f)
        for (auto const & chi : all_characters(f)) {
            if (!is_primitive(chi) || parity(chi) != character_parity::odd)
                continue;
            ++lchars;
            auto g = [&](real const & s) { return l_function(chi, complex_mp(s), ctx); };
            complex_mp const fd = richardson_derivative(g, real(0), real("0.01"), 5);
            worst = std::max(worst, to_double((l_report_at_0(chi, ctx).derivative_at_0 - fd).abs()));
        }
    bool const pass = class_bad == 0 && conductor_bad == 0 && worst < 1e-8;
    std::ostringstream os;
    os << "oracles: class numbers " << class_fields - class_bad << "/" << class_fields << ", conductors "
       << chars - conductor_bad << "/" << chars << ", L'(0) max deviation " << sci(worst) << " over " << lchars
       << " characters";
    return {pass, os.str()};
}

} // namespace

int main()
{
    precision_context const ctx = precision_context::with_target(50);
    std::vector<std::function<outcome()>> const criteria = {
        [&] { return criterion_1(ctx); }, [&] { return criterion_2(ctx); }, [&] { return criterion_3(ctx); },
        [&] { return criterion_4(ctx); }, [] { return criterion_5(); },     [&] { return criterion_6(ctx); },
        [] { return criterion_7(); },     [] { return criterion_8(); },     [&] { return criterion_9(ctx); },
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        outcome o;
        try {
            o = criteria[i]();
        } catch (std::exception const & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass)
            ++failures;
        std::printf("criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
