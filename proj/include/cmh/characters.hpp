// Dirichlet characters with exact root-of-unity values, and abelian number
// fields presented as (modulus N, subgroup H of (Z/N)^x).

#pragma once

#include "cmh/cyclotomic.hpp"
#include "cmh/numerics.hpp"

#include <string>
#include <vector>

namespace cmh {

long gcd_long(long a, long b);
long mod_floor(long a, long m);
long euler_phi(long n);
/// Inverse of a modulo m; throws if a is not a unit.
long mod_inverse(long a, long m);
std::vector<std::pair<long, int>> factorize(long n);

/// Structure of (Z/N)^x as a product of cyclic groups.
class unit_group
{
  public:
    explicit unit_group(int modulus);

    int modulus() const { return modulus_; }
    /// Units in increasing order (for N = 1 the single unit is 0).
    std::vector<int> const & units() const { return units_; }
    bool is_unit(long a) const;
    int order() const { return static_cast<int>(units_.size()); }
    /// Exponent of the group (lcm of the cyclic factor orders).
    int exponent() const { return exponent_; }
    std::vector<int> const & generators() const { return generators_; }
    std::vector<int> const & generator_orders() const { return generator_orders_; }
    /// Exponent vector of a unit with respect to the generators.
    std::vector<int> const & discrete_log(long a) const;

  private:
    int modulus_;
    int exponent_ = 1;
    std::vector<int> units_;
    std::vector<int> generators_;
    std::vector<int> generator_orders_;
    std::vector<std::vector<int>> dlog_;
};

enum class character_parity { even, odd };

/// A Dirichlet character mod N stored as exponents: chi(a) = e(exponent(a)/order).
class dirichlet_character
{
  public:
    /// Table indexed by residue mod N; -1 marks non-units. Validated.
    dirichlet_character(int modulus, int order, std::vector<int> exponents);

    static dirichlet_character trivial(int modulus);

    int modulus() const { return modulus_; }
    int order() const { return order_; }
    bool is_unit(long a) const;
    /// Exponent of chi(a) mod order; -1 when a is not a unit.
    int exponent(long a) const;
    /// Exponent scaled to e(k/m) for a multiple m of the order.
    long exponent_in(long a, int m) const;
    bool is_trivial() const { return order_ == 1; }
    std::vector<int> const & exponents() const { return exponents_; }

    complex_mp value(long a, precision_context const & ctx) const;
    dirichlet_character conj() const;
    std::string to_string() const;

    friend bool operator==(dirichlet_character const & a, dirichlet_character const & b);
    friend bool operator<(dirichlet_character const & a, dirichlet_character const & b);

  private:
    int modulus_;
    int order_;
    std::vector<int> exponents_;
};

/// All characters mod N, ordered lexicographically by generator images.
std::vector<dirichlet_character> all_characters(int modulus);

int conductor(dirichlet_character const & chi);
dirichlet_character primitivize(dirichlet_character const & chi);
bool is_primitive(dirichlet_character const & chi);
character_parity parity(dirichlet_character const & chi);

/// Kronecker symbol (D / n) for n > 0.
int kronecker_symbol(long d, long n);
bool is_fundamental_discriminant(long d);
/// Odd primitive quadratic character mod |D| of Q(sqrt D), D < 0 fundamental.
dirichlet_character kronecker_character(long d);

/// An abelian number field as the fixed field of H inside Q(zeta_N).
class abelian_field_spec
{
  public:
    /// Normalizes the generators to the subgroup they generate.
    static abelian_field_spec from_generators(int modulus, std::vector<long> const & generators);
    /// Accepts an explicit element list; throws unless it is a subgroup.
    static abelian_field_spec from_subgroup(int modulus, std::vector<long> const & elements);

    int modulus() const { return modulus_; }
    std::vector<int> const & subgroup() const { return subgroup_; }
    std::vector<int> const & generators() const { return generators_; }
    bool contains(long a) const;
    int degree() const;
    /// -1 mod N is not in H.
    bool is_cm() const;
    /// Throws std::invalid_argument unless is_cm().
    void require_cm() const;
    std::string to_string() const;

    friend bool operator==(abelian_field_spec const & a, abelian_field_spec const & b)
    {
        return a.modulus_ == b.modulus_ && a.subgroup_ == b.subgroup_;
    }

  private:
    abelian_field_spec(int modulus, std::vector<int> subgroup, std::vector<int> generators);

    int modulus_;
    std::vector<int> subgroup_;
    std::vector<int> generators_;
    std::vector<char> member_;
};

/// Characters mod N trivial on H; there are exactly [E:Q] of them.
std::vector<dirichlet_character> field_character_group(abelian_field_spec const & spec);

/// |D_E| by the conductor-discriminant formula.
bigint abs_discriminant(abelian_field_spec const & spec);

/// Fixed field of complex conjugation: subgroup H * <-1>.
abelian_field_spec totally_real_subfield(abelian_field_spec const & spec);

} // namespace cmh
