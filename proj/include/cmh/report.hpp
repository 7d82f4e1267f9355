// Machine-readable verification records.
//
// A record stores lhs, rhs and residual as decimal strings. The residual is
// always computed from the printed lhs/rhs strings, so re-reading a record and
// recomputing the residual reproduces the stored string exactly.

#pragma once

#include "cmh/heights.hpp"
#include "cmh/numerics.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cmh {

using json = nlohmann::ordered_json;

enum class residual_kind
{
    absolute, ///< |lhs - rhs|
    relative  ///< |exp(lhs - rhs) - 1|, for identities compared through logarithms
};

std::string to_string(residual_kind kind);
residual_kind parse_residual_kind(std::string const & s);

struct identity_record
{
    std::string identity;
    std::string lhs;
    std::string rhs;
    std::string residual;
    residual_kind kind = residual_kind::absolute;
    /// Working digits used to print lhs/rhs and to recompute the residual.
    int digits = 60;
    std::vector<std::pair<std::string, std::string>> terms;
    json parameters = json::object();

    bool passed(double tolerance) const;
};

/// Residual of two printed values, recomputed at `digits` working digits.
std::string compute_residual(std::string const & lhs, std::string const & rhs, residual_kind kind, int digits);

identity_record make_record(std::string identity, real const & lhs, real const & rhs, residual_kind kind,
                            precision_context const & ctx);
identity_record make_record(identity_check const & check, precision_context const & ctx);

/// Adds a named term, printed at the record's precision.
void add_term(identity_record & r, std::string name, real const & value);

/// True iff the stored residual equals the one recomputed from lhs and rhs.
bool reverify(identity_record const & r);

json to_json(identity_record const & r);
identity_record record_from_json(json const & j);

std::string csv_header();
std::string to_csv_row(identity_record const & r, double tolerance);
std::string to_text(identity_record const & r, double tolerance);

} // namespace cmh
