#include "cmh/cmgalois.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cmh {

// ---------------------------------------------------------------------------
// coset_space

coset_space::coset_space(abelian_field_spec spec) : field_(std::move(spec))
{
    int const n = field_.modulus();
    index_of_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        if (gcd_long(a, n) != 1 || index_of_[a] >= 0)
            continue;
        int const idx = static_cast<int>(representatives_.size());
        representatives_.push_back(a);
        for (int h : field_.subgroup())
            index_of_[static_cast<std::size_t>(static_cast<long>(a) * h % n)] = idx;
    }
}

int coset_space::index_of(long unit) const
{
    long r = mod_floor(unit, field_.modulus());
    int idx = index_of_[static_cast<std::size_t>(r)];
    if (idx < 0)
        throw std::invalid_argument("coset_space: " + std::to_string(unit) + " is not a unit");
    return idx;
}

int coset_space::act(long t, int index) const
{
    long const n = field_.modulus();
    return index_of(mod_floor(t, n) * representatives_[index] % n);
}

// ---------------------------------------------------------------------------
// cm_type

cm_type::cm_type(std::shared_ptr<coset_space const> space, boost::dynamic_bitset<> members)
    : space_(std::move(space)), members_(std::move(members))
{
    if (!space_)
        throw std::invalid_argument("cm_type: missing coset space");
    space_->field().require_cm();
    if (static_cast<int>(members_.size()) != space_->size())
        throw std::invalid_argument("cm_type: member set has the wrong size");
    for (int i = 0; i < space_->size(); ++i) {
        if (contains_coset(i) == contains_coset(space_->conjugate(i)))
            throw std::invalid_argument("cm_type: must contain exactly one of each conjugate pair");
    }
}

cm_type cm_type::from_units(abelian_field_spec const & field, std::vector<long> const & units)
{
    auto space = std::make_shared<coset_space const>(field);
    boost::dynamic_bitset<> bits(static_cast<std::size_t>(space->size()));
    for (long u : units)
        bits.set(static_cast<std::size_t>(space->index_of(u)));
    return cm_type(space, bits);
}

std::vector<int> cm_type::member_representatives() const
{
    std::vector<int> out;
    for (int i = 0; i < space_->size(); ++i)
        if (contains_coset(i))
            out.push_back(space_->representative(i));
    return out;
}

std::string cm_type::to_string() const
{
    std::ostringstream os;
    os << "{";
    auto reps = member_representatives();
    for (std::size_t i = 0; i < reps.size(); ++i)
        os << (i ? "," : "") << reps[i];
    os << "} in " << field().to_string();
    return os.str();
}

bool operator==(cm_type const & a, cm_type const & b)
{
    return a.field() == b.field() && a.members_ == b.members_;
}

bool operator<(cm_type const & a, cm_type const & b)
{
    return a.members_ < b.members_;
}

// ---------------------------------------------------------------------------
// class_function

class_function::class_function(int modulus) : modulus_(modulus), values_(static_cast<std::size_t>(modulus))
{
    if (modulus <= 0)
        throw std::invalid_argument("class_function: modulus must be positive");
}

rational const & class_function::operator()(long unit) const
{
    return values_[static_cast<std::size_t>(mod_floor(unit, modulus_))];
}

void class_function::set(long unit, rational value)
{
    values_[static_cast<std::size_t>(mod_floor(unit, modulus_))] = std::move(value);
}

class_function & class_function::operator+=(class_function const & o)
{
    if (o.modulus_ != modulus_)
        throw std::invalid_argument("class_function: modulus mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += o.values_[i];
    return *this;
}

class_function & class_function::operator*=(rational const & q)
{
    for (auto & v : values_)
        v *= q;
    return *this;
}

bool operator==(class_function const & a, class_function const & b)
{
    return a.modulus_ == b.modulus_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------
// CM types and A-functions

std::vector<cm_type> enumerate_cm_types(abelian_field_spec const & spec)
{
    spec.require_cm();
    auto space = std::make_shared<coset_space const>(spec);
    // conjugate pairs keyed by the member with the smaller representative
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < space->size(); ++i) {
        int j = space->conjugate(i);
        if (i < j)
            pairs.emplace_back(i, j);
    }
    std::size_t const d = pairs.size();
    if (d >= 8 * sizeof(unsigned long) - 1)
        throw std::invalid_argument("enumerate_cm_types: field degree too large to enumerate");
    std::vector<cm_type> out;
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
        boost::dynamic_bitset<> bits(static_cast<std::size_t>(space->size()));
        for (std::size_t k = 0; k < d; ++k)
            bits.set(static_cast<std::size_t>((mask >> k) & 1ul ? pairs[k].second : pairs[k].first));
        out.emplace_back(space, bits);
    }
    return out;
}

cm_type galois_act(long t, cm_type const & phi)
{
    auto const & space = phi.space();
    long const n = space->field().modulus();
    if (gcd_long(mod_floor(t, n), n) != 1)
        throw std::invalid_argument("galois_act: " + std::to_string(t) + " is not a unit mod " + std::to_string(n));
    boost::dynamic_bitset<> bits(static_cast<std::size_t>(space->size()));
    for (int i = 0; i < space->size(); ++i)
        if (phi.contains_coset(i))
            bits.set(static_cast<std::size_t>(space->act(t, i)));
    return cm_type(space, bits);
}

std::vector<cm_type> galois_orbit(cm_type const & phi)
{
    std::vector<cm_type> orbit;
    std::set<boost::dynamic_bitset<>> seen;
    unit_group const units(phi.field().modulus());
    for (int t : units.units()) {
        cm_type image = galois_act(t, phi);
        if (seen.insert(image.members()).second)
            orbit.push_back(std::move(image));
    }
    return orbit;
}

class_function a_function(cm_type const & phi)
{
    int const n = phi.field().modulus();
    class_function a(n);
    unit_group const units(n);
    for (int t : units.units()) {
        cm_type moved = galois_act(t, phi);
        a.set(t, rational((phi.members() & moved.members()).count()));
    }
    return a;
}

class_function a0_function(cm_type const & phi)
{
    auto orbit = galois_orbit(phi);
    class_function acc(phi.field().modulus());
    for (auto const & psi : orbit)
        acc += a_function(psi);
    acc *= rational(1, static_cast<long>(orbit.size()));
    return acc;
}

// ---------------------------------------------------------------------------
// Artin decomposition

class_function artin_decomposition::reconstruct() const
{
    class_function cf(modulus);
    unit_group const units(modulus);
    for (int g : units.units()) {
        cyclotomic_number acc(field_order);
        for (auto const & term : terms)
            acc += term.multiplicity.times_root(term.character.exponent_in(g, field_order));
        cf.set(g, acc.rational_value());
    }
    return cf;
}

artin_decomposition artin_decompose(class_function const & cf)
{
    int const n = cf.modulus();
    unit_group const units(n);
    artin_decomposition out;
    out.modulus = n;
    out.field_order = units.exponent();
    rational const scale(1, units.order());
    for (auto & chi : all_characters(n)) {
        cyclotomic_number m(out.field_order);
        for (int g : units.units()) {
            rational const & v = cf(g);
            if (v != 0)
                m.add_root(-chi.exponent_in(g, out.field_order), v);
        }
        m *= scale;
        if (!m.is_zero())
            out.terms.push_back({std::move(chi), std::move(m)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// reflex constructions

std::pair<abelian_field_spec, cm_type> reflex_pair(cm_type const & phi, long iota0)
{
    long const n = phi.field().modulus();
    auto const & space = phi.space();
    int const iota_index = space->index_of(iota0);
    unit_group const units(static_cast<int>(n));

    std::vector<long> stabilizer;
    for (int t : units.units())
        if (galois_act(t, phi).members() == phi.members())
            stabilizer.push_back(t);
    abelian_field_spec reflex_field = abelian_field_spec::from_subgroup(static_cast<int>(n), stabilizer);

    std::vector<long> members;
    for (int t : units.units())
        if (phi.contains_coset(space->act(t, iota_index)))
            members.push_back(mod_inverse(t, n));
    return {reflex_field, cm_type::from_units(reflex_field, members)};
}

int cm_pair_sharp::total_degree() const
{
    int s = 0;
    for (auto const & c : components)
        s += c.reflex_field.degree();
    return s;
}

int cm_pair_sharp::total_type_size() const
{
    int s = 0;
    for (auto const & c : components)
        s += c.reflex_type.size();
    return s;
}

cm_pair_sharp total_reflex_pair(abelian_field_spec const & spec, long iota0)
{
    spec.require_cm();
    cm_pair_sharp pair{spec, iota0, {}};
    auto types = enumerate_cm_types(spec);
    std::set<boost::dynamic_bitset<>> seen;
    for (auto const & phi : types) {
        if (seen.count(phi.members()))
            continue;
        auto orbit = galois_orbit(phi);
        for (auto const & psi : orbit)
            seen.insert(psi.members());
        auto [field, type] = reflex_pair(phi, iota0);
        pair.components.push_back({phi, static_cast<int>(orbit.size()), std::move(field), std::move(type)});
    }
    int const d = spec.degree() / 2;
    if (pair.total_degree() != (1 << d) || pair.total_type_size() != (1 << (d - 1)))
        throw std::logic_error("total_reflex_pair: component sizes do not account for all CM types");
    return pair;
}

class_function a0_of_sharp(cm_pair_sharp const & pair)
{
    using state = std::vector<boost::dynamic_bitset<>>;
    int const n = pair.source.modulus();
    unit_group const units(n);

    auto act = [&](long t, state const & s) {
        state out;
        out.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto const & space = *pair.components[i].reflex_type.space();
            boost::dynamic_bitset<> bits(s[i].size());
            for (int k = 0; k < space.size(); ++k)
                if (s[i].test(static_cast<std::size_t>(k)))
                    bits.set(static_cast<std::size_t>(space.act(t, k)));
            out.push_back(std::move(bits));
        }
        return out;
    };
    auto overlap = [](state const & a, state const & b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            c += (a[i] & b[i]).count();
        return c;
    };

    state sharp;
    for (auto const & c : pair.components)
        sharp.push_back(c.reflex_type.members());

    std::vector<state> orbit;
    std::set<state> seen;
    for (int t : units.units()) {
        state moved = act(t, sharp);
        if (seen.insert(moved).second)
            orbit.push_back(std::move(moved));
    }

    class_function a0(n);
    for (int g : units.units()) {
        std::size_t total = 0;
        for (auto const & psi : orbit)
            total += overlap(psi, act(g, psi));
        a0.set(g, rational(static_cast<long>(total), static_cast<long>(orbit.size())));
    }
    return a0;
}

class_function reflex_average_a0(abelian_field_spec const & spec)
{
    spec.require_cm();
    class_function acc(spec.modulus());
    for (auto const & phi : enumerate_cm_types(spec))
        acc += a0_function(phi);
    acc *= rational(1, spec.degree());
    return acc;
}

} // namespace cmh
