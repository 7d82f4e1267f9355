#include "cmh/report.hpp"

#include <sstream>
#include <stdexcept>

namespace cmh {

namespace mp = boost::multiprecision;

namespace {

constexpr int residual_digits = 20;

std::string csv_escape(std::string const & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_string(residual_kind kind)
{
    return kind == residual_kind::absolute ? "absolute" : "relative";
}

residual_kind parse_residual_kind(std::string const & s)
{
    if (s == "absolute")
        return residual_kind::absolute;
    if (s == "relative")
        return residual_kind::relative;
    throw std::invalid_argument("unknown residual kind: " + s);
}

std::string compute_residual(std::string const & lhs, std::string const & rhs, residual_kind kind, int digits)
{
    precision_context ctx;
    ctx.working_digits = digits;
    ctx.target_digits = std::max(1, digits - 10);
    precision_scope guard(ctx);
    real const a(lhs);
    real const b(rhs);
    real const r = kind == residual_kind::absolute ? mp::abs(a - b) : mp::abs(mp::expm1(a - b));
    return to_string(r, residual_digits);
}

bool identity_record::passed(double tolerance) const
{
    precision_context ctx;
    ctx.working_digits = digits;
    ctx.target_digits = std::max(1, digits - 10);
    precision_scope guard(ctx);
    real const r(residual);
    return !mp::isnan(r) && r < tolerance;
}

identity_record make_record(std::string identity, real const & lhs, real const & rhs, residual_kind kind,
                            precision_context const & ctx)
{
    identity_record r;
    r.identity = std::move(identity);
    r.kind = kind;
    r.digits = ctx.working_digits;
    {
        precision_scope guard(ctx);
        r.lhs = to_string(lhs, r.digits);
        r.rhs = to_string(rhs, r.digits);
    }
    r.residual = compute_residual(r.lhs, r.rhs, kind, r.digits);
    return r;
}

identity_record make_record(identity_check const & check, precision_context const & ctx)
{
    return make_record(check.name, check.lhs, check.rhs,
                       check.relative ? residual_kind::relative : residual_kind::absolute, ctx);
}

void add_term(identity_record & r, std::string name, real const & value)
{
    r.terms.emplace_back(std::move(name), to_string(value, r.digits));
}

bool reverify(identity_record const & r)
{
    return compute_residual(r.lhs, r.rhs, r.kind, r.digits) == r.residual;
}

json to_json(identity_record const & r)
{
    json j;
    j["identity"] = r.identity;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual"] = r.residual;
    j["residual_kind"] = to_string(r.kind);
    j["digits"] = r.digits;
    json terms = json::object();
    for (auto const & [k, v] : r.terms)
        terms[k] = v;
    j["terms"] = terms;
    j["parameters"] = r.parameters;
    return j;
}

identity_record record_from_json(json const & j)
{
    identity_record r;
    r.identity = j.at("identity").get<std::string>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.residual = j.at("residual").get<std::string>();
    r.kind = parse_residual_kind(j.at("residual_kind").get<std::string>());
    r.digits = j.at("digits").get<int>();
    if (j.contains("terms"))
        for (auto const & [k, v] : j.at("terms").items())
            r.terms.emplace_back(k, v.get<std::string>());
    if (j.contains("parameters"))
        r.parameters = j.at("parameters");
    return r;
}

std::string csv_header()
{
    return "identity,parameters,lhs,rhs,residual,residual_kind,status";
}

std::string to_csv_row(identity_record const & r, double tolerance)
{
    std::ostringstream os;
    os << csv_escape(r.identity) << ',' << csv_escape(r.parameters.dump()) << ',' << r.lhs << ',' << r.rhs << ','
       << r.residual << ',' << to_string(r.kind) << ',' << (r.passed(tolerance) ? "pass" : "FAIL");
    return os.str();
}

std::string to_text(identity_record const & r, double tolerance)
{
    std::ostringstream os;
    os << (r.passed(tolerance) ? "[pass] " : "[FAIL] ") << r.identity;
    if (!r.parameters.empty())
        os << ' ' << r.parameters.dump();
    os << "\n  lhs      " << r.lhs << "\n  rhs      " << r.rhs << "\n  residual " << r.residual << " ("
       << to_string(r.kind) << ")\n";
    for (auto const & [k, v] : r.terms)
        os << "  " << k << " = " << v << '\n';
    return os.str();
}

} // namespace cmh
