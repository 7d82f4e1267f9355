// Finite quadratic modules L^v/L of even lattices, the Weil representation
// omega_L on C[L^v/L], and the special-divisor combination of a weakly
// holomorphic form's principal part.
//
// Conventions: phi_mu is the indicator of mu, e(x) = exp(2 pi i x) and
//   omega(T) phi_mu = e(-Q(mu)) phi_mu,
//   omega(S) phi_mu = e((b+ - b-)/8) / sqrt|D| * sum_nu e((mu, nu)) phi_nu,
// which is the complex conjugate of Borcherds' rho_L.

#pragma once

#include "cmh/numerics.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace cmh {

using integer_matrix = std::vector<std::vector<long>>;
using weil_matrix = Eigen::MatrixXcd;

/// Smith normal form U * A * V = diag(d_1 | d_2 | ...) with unimodular U, V.
struct smith_form
{
    integer_matrix u;
    integer_matrix v;
    std::vector<long> diagonal;
};

smith_form smith_normal_form(integer_matrix const & a);

/// x mod 1 in [0, 1).
rational frac(rational const & x);

class finite_quadratic_module
{
  public:
    /// Explicit construction from invariant factors and the Gram data of
    /// the generators: q_gen[i] = Q(g_i) mod 1, b_gen[i][j] = (g_i, g_j) mod 1.
    finite_quadratic_module(std::vector<long> orders, std::vector<rational> q_gen,
                            std::vector<std::vector<rational>> b_gen, int b_plus, int b_minus);

    std::vector<long> const & generator_orders() const { return orders_; }
    std::size_t size() const { return elements_.size(); }
    /// Elements in lexicographic order of their invariant-factor coordinates.
    std::vector<std::vector<long>> const & elements() const { return elements_; }
    std::size_t index_of(std::vector<long> const & coords) const;
    std::size_t negation(std::size_t index) const { return negation_[index]; }

    /// Q(x) mod 1.
    rational const & q(std::size_t index) const { return q_[index]; }
    /// (x, y) = Q(x+y) - Q(x) - Q(y) mod 1.
    rational bilinear(std::size_t x, std::size_t y) const;

    int b_plus() const { return b_plus_; }
    int b_minus() const { return b_minus_; }
    int signature() const { return b_plus_ - b_minus_; }
    /// Smallest N with N Q(x) in Z for every x.
    long level() const;
    /// Exponent of the group (lcm of invariant factors).
    long exponent() const;

  private:
    std::vector<long> orders_;
    std::vector<rational> q_gen_;
    std::vector<std::vector<rational>> b_gen_;
    int b_plus_;
    int b_minus_;
    std::vector<std::vector<long>> elements_;
    std::vector<rational> q_;
    std::vector<std::size_t> negation_;
};

/// Discriminant form of an even nondegenerate symmetric Gram matrix.
finite_quadratic_module discriminant_module(integer_matrix const & gram);

struct weil_generators
{
    weil_matrix t;
    weil_matrix s;
};

weil_generators weil_representation(finite_quadratic_module const & fqm);

/// e((b+ - b-)/8).
std::complex<double> weil_phase(finite_quadratic_module const & fqm);

struct weil_relation_report
{
    double unitarity_s = 0;  ///< |S S^* - I|
    double unitarity_t = 0;  ///< |T T^* - I|
    double braid = 0;        ///< |(ST)^3 - S^2|
    double s_squared = 0;    ///< |S^2 - e((b+ - b-)/4) P_neg|
    double s_fourth = 0;     ///< |(S^2)^2 - e((b+ - b-)/2) I|
    long t_order = 0;        ///< smallest k with T^k = I
    long level = 0;
    bool t_order_matches_level = false;
    bool even_signature = true;

    double max_deviation() const;
    bool passed(double tolerance) const;
};

weil_relation_report verify_weil_relations(finite_quadratic_module const & fqm);

/// Operator max-abs-entry norm used by the relation checks.
double matrix_deviation(weil_matrix const & a, weil_matrix const & b);

struct form_entry
{
    rational m;
    std::vector<long> mu;
    long c;
};

struct form_coefficients
{
    rational weight;
    std::vector<form_entry> entries;
};

struct support_violation
{
    std::size_t entry;
    std::string reason;
};

struct form_validation_report
{
    std::vector<support_violation> violations;
    rational expected_weight;
    bool weight_ok = true;

    bool valid() const { return violations.empty() && weight_ok; }
};

/// Checks m + Q(mu) in Z, m in (1/level) Z and weight = 1 - b+/2 for every entry.
form_validation_report validate_form_support(finite_quadratic_module const & fqm, form_coefficients const & coeffs);

struct formal_special_divisor
{
    /// (m > 0, mu index) -> c(-m, mu)
    std::map<std::pair<rational, std::size_t>, long> terms;
    /// c(0, 0), the power of the line bundle the Borcherds product is a section of.
    long bundle_power = 0;
};

/// Reindexes the principal part: Z(f) = sum_{m>0} c(-m, mu) Z(m, mu).
/// Throws std::invalid_argument if the coefficients fail validation or repeat a key.
formal_special_divisor borcherds_divisor(finite_quadratic_module const & fqm, form_coefficients const & coeffs);

} // namespace cmh
