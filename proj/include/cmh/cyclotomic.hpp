// Exact arithmetic in the cyclotomic field Q(zeta_M).

#pragma once

#include "cmh/numerics.hpp"

#include <string>
#include <vector>

namespace cmh {

/// An element sum_k c_k zeta_M^k with rational c_k, k = 0..M-1.
///
/// The power basis representation is redundant; comparisons reduce modulo
/// the M-th cyclotomic polynomial first.
class cyclotomic_number
{
  public:
    explicit cyclotomic_number(int order = 1);
    static cyclotomic_number from_rational(int order, rational const & q);

    int order() const { return order_; }
    std::vector<rational> const & coefficients() const { return coeffs_; }

    /// this += q * zeta^k
    void add_root(long k, rational const & q);

    cyclotomic_number & operator+=(cyclotomic_number const & o);
    cyclotomic_number & operator-=(cyclotomic_number const & o);
    cyclotomic_number & operator*=(rational const & q);

    /// Multiplication by zeta^k.
    cyclotomic_number times_root(long k) const;
    cyclotomic_number operator*(cyclotomic_number const & o) const;
    /// Complex conjugation zeta -> zeta^-1.
    cyclotomic_number conj() const;

    /// Coefficients in the basis 1, zeta, .., zeta^(phi(M)-1).
    std::vector<rational> reduced() const;
    bool is_zero() const;
    bool is_rational() const;
    /// Rational value; throws if not rational.
    rational rational_value() const;

    complex_mp to_complex(precision_context const & ctx) const;
    std::string to_string() const;

    friend bool operator==(cyclotomic_number const & a, cyclotomic_number const & b);

  private:
    int order_;
    std::vector<rational> coeffs_;
};

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<long long> const & cyclotomic_polynomial(int m);

} // namespace cmh
