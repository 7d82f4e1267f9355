// CM types of abelian CM fields and their Galois combinatorics.
//
// For E = Q(zeta_N)^H the embeddings Hom(E, C) are the cosets G = (Z/N)^x / H,
// with complex conjugation acting as the coset of -1. The Galois group acts
// through (Z/N)^x by multiplication, so A-functions, reflex fields and the
// total reflex pair are all finite computations with exact rationals.

#pragma once

#include "cmh/characters.hpp"
#include "cmh/cyclotomic.hpp"

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <vector>

namespace cmh {

/// Cosets of H in (Z/N)^x, indexed by increasing smallest representative.
class coset_space
{
  public:
    explicit coset_space(abelian_field_spec spec);

    abelian_field_spec const & field() const { return field_; }
    int size() const { return static_cast<int>(representatives_.size()); }
    int representative(int index) const { return representatives_[index]; }
    int index_of(long unit) const;
    /// Index of t * (coset index).
    int act(long t, int index) const;
    /// Index of the conjugate coset -x.
    int conjugate(int index) const { return act(-1, index); }

  private:
    abelian_field_spec field_;
    std::vector<int> representatives_;
    std::vector<int> index_of_;
};

class cm_type
{
  public:
    /// Validates that members contains exactly one of {x, cx} for every pair.
    cm_type(std::shared_ptr<coset_space const> space, boost::dynamic_bitset<> members);
    /// Members given as unit representatives mod N.
    static cm_type from_units(abelian_field_spec const & field, std::vector<long> const & units);

    abelian_field_spec const & field() const { return space_->field(); }
    std::shared_ptr<coset_space const> const & space() const { return space_; }
    boost::dynamic_bitset<> const & members() const { return members_; }
    bool contains_coset(int index) const { return members_.test(static_cast<std::size_t>(index)); }
    bool contains_unit(long unit) const { return contains_coset(space_->index_of(unit)); }
    int size() const { return static_cast<int>(members_.count()); }
    /// Smallest representative of each member coset, increasing.
    std::vector<int> member_representatives() const;
    std::string to_string() const;

    friend bool operator==(cm_type const & a, cm_type const & b);
    friend bool operator<(cm_type const & a, cm_type const & b);

  private:
    std::shared_ptr<coset_space const> space_;
    boost::dynamic_bitset<> members_;
};

/// Exact rational-valued function on (Z/N)^x (zero on non-units).
class class_function
{
  public:
    explicit class_function(int modulus);

    int modulus() const { return modulus_; }
    rational const & operator()(long unit) const;
    void set(long unit, rational value);
    std::vector<rational> const & values() const { return values_; }

    class_function & operator+=(class_function const & o);
    class_function & operator*=(rational const & q);
    friend bool operator==(class_function const & a, class_function const & b);

  private:
    int modulus_;
    std::vector<rational> values_;
};

struct artin_term
{
    dirichlet_character character;
    cyclotomic_number multiplicity;
};

struct artin_decomposition
{
    int modulus = 1;
    /// All multiplicities live in Q(zeta_m) with m the exponent of (Z/N)^x.
    int field_order = 1;
    std::vector<artin_term> terms;

    /// sum m(chi) chi(g) at every unit, exactly; throws if a value is irrational.
    class_function reconstruct() const;
};

std::vector<cm_type> enumerate_cm_types(abelian_field_spec const & spec);
cm_type galois_act(long t, cm_type const & phi);
/// Distinct types g * phi, in order of first appearance over increasing units g.
std::vector<cm_type> galois_orbit(cm_type const & phi);

/// A(t) = |phi cap t phi|.
class_function a_function(cm_type const & phi);
/// Orbit average of a_function.
class_function a0_function(cm_type const & phi);

/// m(chi) = (1/phi(N)) sum_g cf(g) conj(chi(g)); only nonzero terms are kept.
artin_decomposition artin_decompose(class_function const & cf);

/// Classical reflex pair: field (N, Stab(phi)), type {t^-1 : t iota0 in phi}.
std::pair<abelian_field_spec, cm_type> reflex_pair(cm_type const & phi, long iota0 = 1);

struct reflex_component
{
    cm_type orbit_representative;
    int orbit_size;
    abelian_field_spec reflex_field;
    cm_type reflex_type;
};

struct cm_pair_sharp
{
    abelian_field_spec source;
    long iota0 = 1;
    std::vector<reflex_component> components;

    int total_degree() const;
    int total_type_size() const;
};

cm_pair_sharp total_reflex_pair(abelian_field_spec const & spec, long iota0 = 1);

/// A0 of (E#, Phi#) computed on the disjoint union of the component
/// embedding sets with the diagonal (Z/N)^x action.
class_function a0_of_sharp(cm_pair_sharp const & pair);

/// (1/2d) sum over all CM types of A0.
class_function reflex_average_a0(abelian_field_spec const & spec);

} // namespace cmh
