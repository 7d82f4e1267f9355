// JSON and command-line parsing of field specs, CM types, Gram matrices and
// weakly holomorphic form coefficients.

#pragma once

#include "cmh/cmgalois.hpp"
#include "cmh/report.hpp"
#include "cmh/weilrep.hpp"

#include <string>
#include <vector>

namespace cmh {

/// "p/q", "p" or a JSON integer.
rational parse_rational(std::string const & s);
rational parse_json_rational(json const & j);

/// Comma separated integers; empty string gives an empty list.
std::vector<long> parse_long_list(std::string const & s);

json read_json_file(std::string const & path);

/// {"modulus": N, "subgroup_generators": [..]}
abelian_field_spec parse_field_spec(json const & j);
json to_json(abelian_field_spec const & spec);

/// {"modulus": N, "subgroup_generators": [..], "members": [unit representatives]}
cm_type parse_cm_type(json const & j);
json to_json(cm_type const & phi);

/// Array of arrays of integers.
integer_matrix parse_gram(json const & j);

/// Either a bare list of {"m", "mu", "c"} or {"weight": .., "entries": [..]}.
/// A bare list takes `default_weight`.
form_coefficients parse_form_coefficients(json const & j, rational const & default_weight);

json to_json(class_function const & cf);
json to_json(artin_decomposition const & d);
json to_json(finite_quadratic_module const & fqm);
json to_json(weil_relation_report const & r);
json to_json(form_validation_report const & r);
json to_json(finite_quadratic_module const & fqm, formal_special_divisor const & z);

} // namespace cmh
