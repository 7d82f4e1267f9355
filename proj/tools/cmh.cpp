// cmh: batch verification of CM height identities.

#include "cmh/heights.hpp"
#include "cmh/io.hpp"
#include "cmh/report.hpp"
#include "cmh/weilrep.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cmh;

struct run_state
{
    precision_context ctx;
    double tolerance = 1e-9;
    std::string format = "json";
    std::string command;
    std::vector<identity_record> records;
    json errors = json::array();
    json details = json::object();
    bool failed = false;
    /// Emission order: (is_error, index into records or errors).
    std::vector<std::pair<bool, std::size_t>> order;

    void add(identity_record r)
    {
        if (!r.passed(tolerance))
            failed = true;
        order.emplace_back(false, records.size());
        records.push_back(std::move(r));
    }

    void error(json item, std::string const & message)
    {
        failed = true;
        order.emplace_back(true, errors.size());
        errors.push_back({{"item", std::move(item)}, {"error", message}});
    }

    /// An exact check that is not a numeric residual.
    void flag(std::string const & name, bool ok, json item)
    {
        if (!ok)
            error(std::move(item), name + " failed");
    }
};

json record_array(std::vector<identity_record> const & rs)
{
    json a = json::array();
    for (auto const & r : rs)
        a.push_back(to_json(r));
    return a;
}

std::string render(run_state const & st)
{
    std::ostringstream os;
    if (st.format == "json") {
        json j;
        j["command"] = st.command;
        j["precision"] = st.ctx.target_digits;
        j["working_digits"] = st.ctx.working_digits;
        j["tolerance"] = st.tolerance;
        j["passed"] = !st.failed;
        j["records"] = record_array(st.records);
        j["errors"] = st.errors;
        if (!st.details.empty())
            j["details"] = st.details;
        os << j.dump(2) << '\n';
    } else if (st.format == "csv") {
        os << csv_header() << '\n';
        for (auto const & [is_error, i] : st.order) {
            if (!is_error) {
                os << to_csv_row(st.records[i], st.tolerance) << '\n';
                continue;
            }
            auto const & e = st.errors[i];
            std::string item = e.at("item").dump();
            std::string::size_type pos = 0;
            while ((pos = item.find('"', pos)) != std::string::npos) {
                item.insert(pos, 1, '"');
                pos += 2;
            }
            os << "error,\"" << item << "\",,,,,\"" << e.at("error").get<std::string>() << "\"\n";
        }
    } else {
        for (auto const & [is_error, i] : st.order) {
            if (!is_error) {
                os << to_text(st.records[i], st.tolerance);
                continue;
            }
            auto const & e = st.errors[i];
            os << "[ERROR] " << e.at("item").dump() << ": " << e.at("error").get<std::string>() << '\n';
        }
        if (!st.details.empty())
            os << st.details.dump(2) << '\n';
        os << (st.failed ? "FAILED" : "OK") << ": " << st.records.size() << " identities, " << st.errors.size()
           << " errors\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

void run_chowla_selberg(run_state & st, std::vector<long> const & discs)
{
    for (long d : discs) {
        json const param = {{"D", d}};
        try {
            if (d >= 0 || !is_fundamental_discriminant(d))
                throw std::invalid_argument("non-fundamental or non-negative discriminant " + std::to_string(d));
            auto const cs = chowla_selberg_check(d, st.ctx);
            for (auto const * c : {&cs.product_form, &cs.logarithmic_form, &cs.lerch}) {
                identity_record r = make_record(*c, st.ctx);
                r.parameters = param;
                r.parameters["h"] = cs.class_number;
                r.parameters["w"] = cs.unit_count;
                st.add(std::move(r));
            }
            real const h = cm_elliptic_faltings(d, st.ctx);
            real const residual = cm_elliptic_faltings_residual(d, st.ctx);
            precision_scope guard(st.ctx);
            identity_record r = make_record("cm-elliptic-faltings", h, h - residual, residual_kind::absolute, st.ctx);
            r.parameters = param;
            st.add(std::move(r));
        } catch (std::exception const & e) {
            st.error(param, e.what());
        }
    }
}

json height_terms(height_report const & h, int digits)
{
    json t = json::object();
    for (auto const & [k, v] : h.breakdown)
        t[k] = to_string(v, digits);
    return t;
}

void run_averaged_colmez(run_state & st, abelian_field_spec const & spec, long iota0)
{
    json const param = to_json(spec);
    spec.require_cm();
    int const digits = st.ctx.working_digits;

    height_report const lhs = averaged_colmez_lhs(spec, st.ctx);
    height_report const rhs = averaged_colmez_rhs(spec, st.ctx);
    {
        identity_record r = make_record("averaged-colmez", lhs.value, rhs.value, residual_kind::absolute, st.ctx);
        r.parameters = param;
        for (auto const & [k, v] : lhs.breakdown)
            add_term(r, "lhs." + k, v);
        for (auto const & [k, v] : rhs.breakdown)
            add_term(r, "rhs." + k, v);
        add_term(r, "lhs.imaginary-part", lhs.imaginary_part);
        st.add(std::move(r));
    }
    {
        identity_record r = make_record("averaged-colmez-completed", rhs.value,
                                        averaged_colmez_rhs_lambda(spec, st.ctx), residual_kind::absolute, st.ctx);
        r.parameters = param;
        st.add(std::move(r));
    }

    // per-type heights and decompositions; the reflex average reuses them
    json per_type = json::array();
    bool parity_ok = true;
    real sum = 0;
    auto const types = enumerate_cm_types(spec);
    for (auto const & phi : types) {
        height_report const h = colmez_height(phi, st.ctx);
        auto const decomposition = artin_decompose(a0_function(phi));
        for (auto const & t : decomposition.terms)
            if (!t.character.is_trivial() && parity(primitivize(t.character)) != character_parity::odd)
                parity_ok = false;
        {
            precision_scope guard(st.ctx);
            sum += h.value;
        }
        per_type.push_back({{"type", to_json(phi)},
                            {"height", to_string(h.value, digits)},
                            {"terms", height_terms(h, digits)},
                            {"a0_decomposition", to_json(decomposition)}});
    }
    st.flag("odd-character parity", parity_ok, param);

    bool const a0_ok = a0_of_sharp(total_reflex_pair(spec, iota0)) == reflex_average_a0(spec);
    st.flag("exact reflex A0 average", a0_ok, param);

    height_report const sharp = sharp_colmez_height(spec, st.ctx, iota0);
    real average;
    {
        precision_scope guard(st.ctx);
        average = sum / spec.degree();
    }
    identity_record r = make_record("reflex-height", sharp.value, average, residual_kind::absolute, st.ctx);
    r.parameters = param;
    r.parameters["iota0"] = iota0;
    st.add(std::move(r));

    json d;
    d["field"] = param;
    d["degree"] = spec.degree();
    d["sharp_height"] = to_string(sharp.value, digits);
    d["reflex_a0_exact"] = a0_ok;
    d["parity_ok"] = parity_ok;
    d["per_type"] = per_type;
    st.details["fields"].push_back(d);
}

void run_cm_types(run_state & st, abelian_field_spec const & spec)
{
    spec.require_cm();
    json out = json::array();
    bool parity_ok = true;
    for (auto const & phi : enumerate_cm_types(spec)) {
        class_function const a0 = a0_function(phi);
        auto const decomposition = artin_decompose(a0);
        for (auto const & t : decomposition.terms)
            if (!t.character.is_trivial() && parity(primitivize(t.character)) != character_parity::odd)
                parity_ok = false;
        auto [reflex_field, reflex_type] = reflex_pair(phi);
        out.push_back({{"type", to_json(phi)},
                       {"orbit_size", galois_orbit(phi).size()},
                       {"a0", to_json(a0)},
                       {"a0_decomposition", to_json(decomposition)},
                       {"reflex_field", to_json(reflex_field)},
                       {"reflex_type", to_json(reflex_type)}});
    }
    st.flag("odd-character parity", parity_ok, to_json(spec));
    st.details["field"] = to_json(spec);
    st.details["cm_types"] = out;
}

void run_weilrep(run_state & st, std::string const & gram_path, std::string const & form_path)
{
    integer_matrix const gram = parse_gram(read_json_file(gram_path));
    finite_quadratic_module const fqm = discriminant_module(gram);
    weil_relation_report const rel = verify_weil_relations(fqm);
    st.details["module"] = to_json(fqm);
    st.details["relations"] = to_json(rel);
    // Weil relations are double precision by construction; they use a fixed 1e-12 bound.
    if (!rel.passed(1e-12))
        st.error({{"gram", gram_path}}, "Weil representation relations fail (max deviation " +
                                            std::to_string(rel.max_deviation()) + ")");
    if (form_path.empty())
        return;
    form_coefficients const coeffs =
        parse_form_coefficients(read_json_file(form_path), rational(1) - rational(fqm.b_plus(), 2));
    form_validation_report const v = validate_form_support(fqm, coeffs);
    st.details["form_validation"] = to_json(v);
    if (!v.valid()) {
        for (auto const & x : v.violations)
            st.error({{"form", form_path}, {"entry", x.entry}}, x.reason);
        if (!v.weight_ok)
            st.error({{"form", form_path}}, "weight " + coeffs.weight.str() + " differs from 1 - b+/2 = " +
                                                v.expected_weight.str());
        return;
    }
    st.details["special_divisor"] = to_json(fqm, borcherds_divisor(fqm, coeffs));
}

void run_verify_report(run_state & st, std::string const & path)
{
    json const j = read_json_file(path);
    std::size_t index = 0;
    for (auto const & item : j.at("records")) {
        identity_record const r = record_from_json(item);
        if (!reverify(r))
            st.error({{"record", index}, {"identity", r.identity}},
                     "recomputed residual " + compute_residual(r.lhs, r.rhs, r.kind, r.digits) +
                         " differs from recorded " + r.residual);
        st.add(r);
        ++index;
    }
}

int default_precision()
{
    if (char const * env = std::getenv("CMH_PRECISION"))
        return std::stoi(env);
    return 50;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Numerical verification of CM height identities"};
    app.require_subcommand(1, 1);

    int precision = 50;
    double tolerance = 1e-9;
    std::string format = "json";
    std::string out_path;
    try {
        precision = default_precision();
    } catch (std::exception const &) {
        std::cerr << "error: CMH_PRECISION must be an integer\n";
        return 2;
    }
    app.add_option("--precision", precision, "Target decimal digits (>= 30; env CMH_PRECISION)")
        ->check(CLI::Range(30, 100000));
    app.add_option("--tolerance", tolerance, "Residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "Output file (default stdout)");

    std::string discs;
    auto * cs = app.add_subcommand("chowla-selberg", "Chowla-Selberg, Lerch and CM elliptic Faltings heights");
    cs->add_option("--disc", discs, "Comma separated fundamental discriminants D < 0")->required();

    int modulus = 0;
    std::string subgroup;
    long iota0 = 1;
    auto * ac = app.add_subcommand("averaged-colmez", "Averaged Colmez identity and reflex checks");
    ac->add_option("--modulus", modulus, "Conductor N of Q(zeta_N)")->required();
    ac->add_option("--subgroup", subgroup, "Generators of H in (Z/N)^x")->required();
    ac->add_option("--iota0", iota0, "Unit representing the distinguished embedding");

    auto * ct = app.add_subcommand("cm-types", "List CM types with A0 decompositions");
    ct->add_option("--modulus", modulus, "Conductor N of Q(zeta_N)")->required();
    ct->add_option("--subgroup", subgroup, "Generators of H in (Z/N)^x")->required();

    std::string gram_path;
    std::string form_path;
    auto * wr = app.add_subcommand("weilrep", "Discriminant form and Weil representation checks");
    wr->add_option("--gram", gram_path, "JSON Gram matrix")->required()->check(CLI::ExistingFile);
    wr->add_option("--form", form_path, "JSON form coefficients")->check(CLI::ExistingFile);

    std::string report_path;
    auto * vr = app.add_subcommand("verify-report", "Recompute residuals of a JSON report");
    vr->add_option("--in", report_path, "JSON report")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    run_state st;
    st.tolerance = tolerance;
    st.format = format;
    try {
        if (precision < 30)
            throw std::invalid_argument("precision must be at least 30 digits");
        st.ctx = precision_context::with_target(precision);
        precision_scope guard(st.ctx);
        if (*cs) {
            st.command = "chowla-selberg";
            run_chowla_selberg(st, parse_long_list(discs));
        } else if (*ac) {
            st.command = "averaged-colmez";
            run_averaged_colmez(st, abelian_field_spec::from_generators(modulus, parse_long_list(subgroup)), iota0);
        } else if (*ct) {
            st.command = "cm-types";
            run_cm_types(st, abelian_field_spec::from_generators(modulus, parse_long_list(subgroup)));
        } else if (*wr) {
            st.command = "weilrep";
            run_weilrep(st, gram_path, form_path);
        } else if (*vr) {
            st.command = "verify-report";
            run_verify_report(st, report_path);
        }
    } catch (std::exception const & e) {
        st.error(json::object(), e.what());
    }

    std::string const text = render(st);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return 2;
        }
        out << text;
    }
    return st.failed ? 1 : 0;
}
