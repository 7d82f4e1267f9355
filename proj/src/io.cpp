#include "cmh/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmh {

namespace mp = boost::multiprecision;

rational parse_rational(std::string const & s)
{
    auto const slash = s.find('/');
    auto parse_int = [&](std::string const & t) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t, &used);
        } catch (std::exception const &) {
            throw std::invalid_argument("not a rational number: \"" + s + "\"");
        }
        if (used != t.size())
            throw std::invalid_argument("not a rational number: \"" + s + "\"");
        return v;
    };
    if (slash == std::string::npos)
        return rational(parse_int(s));
    long const den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in \"" + s + "\"");
    // mpq does not canonicalize a negative denominator
    return rational(parse_int(s.substr(0, slash))) / den;
}

rational parse_json_rational(json const & j)
{
    if (j.is_number_integer())
        return rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

std::vector<long> parse_long_list(std::string const & s)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto const b = item.find_first_not_of(" \t");
        if (b == std::string::npos)
            continue;
        auto const e = item.find_last_not_of(" \t");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (std::exception const &) {
            throw std::invalid_argument("not an integer: \"" + item + "\"");
        }
        if (used != item.size())
            throw std::invalid_argument("not an integer: \"" + item + "\"");
        out.push_back(v);
    }
    return out;
}

json read_json_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (json::parse_error const & e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

abelian_field_spec parse_field_spec(json const & j)
{
    return abelian_field_spec::from_generators(j.at("modulus").get<int>(),
                                               j.at("subgroup_generators").get<std::vector<long>>());
}

json to_json(abelian_field_spec const & spec)
{
    json j;
    j["modulus"] = spec.modulus();
    j["subgroup_generators"] = spec.generators();
    return j;
}

cm_type parse_cm_type(json const & j)
{
    return cm_type::from_units(parse_field_spec(j), j.at("members").get<std::vector<long>>());
}

json to_json(cm_type const & phi)
{
    json j = to_json(phi.field());
    j["members"] = phi.member_representatives();
    return j;
}

integer_matrix parse_gram(json const & j)
{
    if (!j.is_array())
        throw std::invalid_argument("Gram matrix must be an array of arrays of integers");
    integer_matrix g;
    for (auto const & row : j) {
        if (!row.is_array())
            throw std::invalid_argument("Gram matrix must be an array of arrays of integers");
        std::vector<long> r;
        for (auto const & x : row) {
            if (!x.is_number_integer())
                throw std::invalid_argument("Gram matrix entries must be integers, got " + x.dump());
            r.push_back(x.get<long>());
        }
        g.push_back(std::move(r));
    }
    return g;
}

form_coefficients parse_form_coefficients(json const & j, rational const & default_weight)
{
    form_coefficients f;
    json const * entries = &j;
    f.weight = default_weight;
    if (j.is_object()) {
        if (j.contains("weight"))
            f.weight = parse_json_rational(j.at("weight"));
        entries = &j.at("entries");
    }
    if (!entries->is_array())
        throw std::invalid_argument("form coefficients must be a list of {\"m\", \"mu\", \"c\"}");
    for (auto const & e : *entries) {
        form_entry fe;
        fe.m = parse_json_rational(e.at("m"));
        fe.mu = e.at("mu").get<std::vector<long>>();
        if (!e.at("c").is_number_integer())
            throw std::invalid_argument("coefficient c must be an integer, got " + e.at("c").dump());
        fe.c = e.at("c").get<long>();
        f.entries.push_back(std::move(fe));
    }
    return f;
}

json to_json(class_function const & cf)
{
    json j = json::object();
    unit_group const g(cf.modulus());
    for (int u : g.units())
        j[std::to_string(u)] = cf(u).str();
    return j;
}

json to_json(artin_decomposition const & d)
{
    json j = json::array();
    for (auto const & t : d.terms) {
        json e;
        e["character"] = t.character.to_string();
        e["conductor"] = conductor(t.character);
        e["parity"] = t.character.is_trivial() ? "trivial"
                      : parity(t.character) == character_parity::odd ? "odd"
                                                                     : "even";
        e["multiplicity"] = t.multiplicity.to_string();
        j.push_back(e);
    }
    return j;
}

json to_json(finite_quadratic_module const & fqm)
{
    json j;
    j["generator_orders"] = fqm.generator_orders();
    j["order"] = fqm.size();
    j["level"] = fqm.level();
    j["signature"] = {fqm.b_plus(), fqm.b_minus()};
    json elements = json::array();
    for (std::size_t i = 0; i < fqm.size(); ++i) {
        json e;
        e["mu"] = fqm.elements()[i];
        e["Q"] = fqm.q(i).str();
        elements.push_back(e);
    }
    j["elements"] = elements;
    return j;
}

json to_json(weil_relation_report const & r)
{
    json j;
    j["unitarity_S"] = r.unitarity_s;
    j["unitarity_T"] = r.unitarity_t;
    j["ST_cubed_minus_S2"] = r.braid;
    j["S2_minus_phase_negation"] = r.s_squared;
    j["S4_minus_phase"] = r.s_fourth;
    j["T_order"] = r.t_order;
    j["level"] = r.level;
    j["T_order_matches_level"] = r.t_order_matches_level;
    j["even_signature"] = r.even_signature;
    j["max_deviation"] = r.max_deviation();
    return j;
}

json to_json(form_validation_report const & r)
{
    json j;
    j["valid"] = r.valid();
    j["expected_weight"] = r.expected_weight.str();
    j["weight_ok"] = r.weight_ok;
    json v = json::array();
    for (auto const & x : r.violations)
        v.push_back({{"entry", x.entry}, {"reason", x.reason}});
    j["violations"] = v;
    return j;
}

json to_json(finite_quadratic_module const & fqm, formal_special_divisor const & z)
{
    json j;
    json terms = json::array();
    for (auto const & [key, c] : z.terms)
        terms.push_back({{"m", key.first.str()}, {"mu", fqm.elements()[key.second]}, {"multiplicity", c}});
    j["terms"] = terms;
    j["bundle_power"] = z.bundle_power;
    return j;
}

} // namespace cmh
