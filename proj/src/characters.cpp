#include "cmh/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cmh {

long gcd_long(long a, long b)
{
    return std::gcd(a, b);
}

long mod_floor(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::pair<long, int>> factorize(long n)
{
    if (n <= 0)
        throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n)
{
    long result = n;
    for (auto [p, k] : factorize(n))
        result = result / p * (p - 1);
    return result;
}

long mod_inverse(long a, long m)
{
    if (m == 1)
        return 0;
    long t = 0, new_t = 1;
    long r = m, new_r = mod_floor(a, m);
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw std::invalid_argument("mod_inverse: not a unit");
    return mod_floor(t, m);
}

namespace {

long power_mod(long base, long e, long m)
{
    long r = 1 % m;
    base = mod_floor(base, m);
    while (e > 0) {
        if (e & 1)
            r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

long multiplicative_order(long a, long m)
{
    long x = mod_floor(a, m);
    long k = 1;
    while (x != 1 % m) {
        x = x * a % m;
        ++k;
    }
    return k;
}

// x = a mod m1, x = 1 mod m2, gcd(m1, m2) = 1
long crt_lift(long a, long m1, long m2)
{
    long n = m1 * m2;
    long inv = mod_inverse(m2, m1);
    // x = 1 + m2 * t with m2 t = a - 1 mod m1
    long t = mod_floor((a - 1) % m1 * inv, m1);
    return mod_floor(1 + m2 * t, n);
}

std::shared_ptr<unit_group const> cached_unit_group(int modulus)
{
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<unit_group const>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto & slot = cache[modulus];
    if (!slot)
        slot = std::make_shared<unit_group const>(modulus);
    return slot;
}

} // namespace

// ---------------------------------------------------------------------------
// unit_group

unit_group::unit_group(int modulus) : modulus_(modulus)
{
    if (modulus <= 0)
        throw std::invalid_argument("unit_group: modulus must be positive");
    for (int a = 0; a < modulus; ++a)
        if (std::gcd(a, modulus) == 1)
            units_.push_back(a);

    for (auto [p, k] : factorize(modulus)) {
        long pk = 1;
        for (int i = 0; i < k; ++i)
            pk *= p;
        long rest = modulus / pk;
        std::vector<std::pair<long, int>> local; // generator mod p^k, order
        if (p == 2) {
            if (k == 2)
                local.emplace_back(3, 2);
            else if (k >= 3) {
                local.emplace_back(pk - 1, 2);
                local.emplace_back(5, static_cast<int>(pk / 4));
            }
        } else {
            long phi = pk / p * (p - 1);
            long g = 2;
            while (std::gcd(g, pk) != 1 || multiplicative_order(g, pk) != phi)
                ++g;
            local.emplace_back(g, static_cast<int>(phi));
        }
        for (auto [g, ord] : local) {
            generators_.push_back(static_cast<int>(crt_lift(g, pk, rest)));
            generator_orders_.push_back(ord);
        }
    }
    for (int o : generator_orders_)
        exponent_ = std::lcm(exponent_, o);

    dlog_.assign(static_cast<std::size_t>(modulus), {});
    std::size_t const t = generators_.size();
    std::vector<int> e(t, 0);
    std::size_t count = 0;
    while (true) {
        long x = 1 % modulus;
        for (std::size_t i = 0; i < t; ++i)
            x = x * power_mod(generators_[i], e[i], modulus) % modulus;
        if (!dlog_[x].empty() || (t == 0 && count > 0))
            throw std::logic_error("unit_group: generators are not independent");
        dlog_[x] = e;
        ++count;
        std::size_t i = 0;
        while (i < t && ++e[i] == generator_orders_[i])
            e[i++] = 0;
        if (i == t)
            break;
    }
    if (count != units_.size())
        throw std::logic_error("unit_group: generator orders do not match the group order");
}

bool unit_group::is_unit(long a) const
{
    return std::gcd(mod_floor(a, modulus_), static_cast<long>(modulus_)) == 1;
}

std::vector<int> const & unit_group::discrete_log(long a) const
{
    long r = mod_floor(a, modulus_);
    if (!is_unit(r))
        throw std::invalid_argument("unit_group::discrete_log: not a unit");
    return dlog_[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------
// dirichlet_character

dirichlet_character::dirichlet_character(int modulus, int order, std::vector<int> exponents)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents))
{
    if (modulus <= 0 || order <= 0)
        throw std::invalid_argument("dirichlet_character: modulus and order must be positive");
    if (static_cast<int>(exponents_.size()) != modulus)
        throw std::invalid_argument("dirichlet_character: table size must equal the modulus");
    auto group = cached_unit_group(modulus);
    int g = order;
    for (int a = 0; a < modulus; ++a) {
        bool unit = group->is_unit(a);
        int e = exponents_[a];
        if (unit != (e >= 0) || e >= order)
            throw std::invalid_argument("dirichlet_character: malformed exponent table");
        if (unit)
            g = std::gcd(g, e);
    }
    if (g != 1)
        throw std::invalid_argument("dirichlet_character: order is not exact");
    if (exponents_[1 % modulus] != 0)
        throw std::invalid_argument("dirichlet_character: chi(1) must be 1");
    // multiplicativity, checked against each generator
    for (int gen : group->generators()) {
        for (int a : group->units()) {
            long b = static_cast<long>(a) * gen % modulus;
            if (exponents_[b] != (exponents_[a] + exponents_[gen]) % order)
                throw std::invalid_argument("dirichlet_character: table is not multiplicative");
        }
    }
}

dirichlet_character dirichlet_character::trivial(int modulus)
{
    auto group = cached_unit_group(modulus);
    std::vector<int> e(static_cast<std::size_t>(modulus), -1);
    for (int a : group->units())
        e[a] = 0;
    return dirichlet_character(modulus, 1, std::move(e));
}

bool dirichlet_character::is_unit(long a) const
{
    return exponents_[static_cast<std::size_t>(mod_floor(a, modulus_))] >= 0;
}

int dirichlet_character::exponent(long a) const
{
    return exponents_[static_cast<std::size_t>(mod_floor(a, modulus_))];
}

long dirichlet_character::exponent_in(long a, int m) const
{
    if (m % order_)
        throw std::invalid_argument("dirichlet_character::exponent_in: not a multiple of the order");
    int e = exponent(a);
    if (e < 0)
        throw std::invalid_argument("dirichlet_character::exponent_in: not a unit");
    return static_cast<long>(e) * (m / order_);
}

complex_mp dirichlet_character::value(long a, precision_context const & ctx) const
{
    precision_scope guard(ctx);
    int e = exponent(a);
    if (e < 0)
        return {};
    return root_of_unity(e, order_);
}

dirichlet_character dirichlet_character::conj() const
{
    std::vector<int> e = exponents_;
    for (auto & x : e)
        if (x > 0)
            x = order_ - x;
    return dirichlet_character(modulus_, order_, std::move(e));
}

std::string dirichlet_character::to_string() const
{
    std::ostringstream os;
    os << "chi mod " << modulus_ << " order " << order_ << " [";
    bool first = true;
    for (int a = 0; a < modulus_; ++a) {
        if (exponents_[a] < 0)
            continue;
        if (!first)
            os << ", ";
        first = false;
        os << a << ":" << exponents_[a];
    }
    os << "]";
    return os.str();
}

bool operator==(dirichlet_character const & a, dirichlet_character const & b)
{
    return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exponents_ == b.exponents_;
}

bool operator<(dirichlet_character const & a, dirichlet_character const & b)
{
    if (a.modulus_ != b.modulus_)
        return a.modulus_ < b.modulus_;
    if (a.order_ != b.order_)
        return a.order_ < b.order_;
    return a.exponents_ < b.exponents_;
}

std::vector<dirichlet_character> all_characters(int modulus)
{
    auto group = cached_unit_group(modulus);
    auto const & orders = group->generator_orders();
    int const m = group->exponent();
    std::size_t const t = orders.size();
    std::vector<dirichlet_character> out;
    std::vector<int> images(t, 0);
    while (true) {
        std::vector<int> e(static_cast<std::size_t>(modulus), -1);
        int g = m;
        for (int a : group->units()) {
            auto const & dl = group->discrete_log(a);
            long acc = 0;
            for (std::size_t i = 0; i < t; ++i)
                acc += static_cast<long>(dl[i]) * images[i] * (m / orders[i]);
            e[a] = static_cast<int>(acc % m);
            g = std::gcd(g, e[a]);
        }
        for (int a : group->units())
            e[a] /= g;
        out.emplace_back(modulus, m / g, std::move(e));
        // lexicographic with the first generator most significant
        std::size_t i = t;
        while (i > 0 && ++images[i - 1] == orders[i - 1])
            images[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

int conductor(dirichlet_character const & chi)
{
    int const n = chi.modulus();
    long f = 1;
    for (auto [p, k] : factorize(n)) {
        long pk = 1;
        for (int i = 0; i < k; ++i)
            pk *= p;
        long const rest = n / pk;
        // smallest p^e such that chi is trivial on units = 1 mod p^e rest
        long pe = 1;
        for (int e = 0; e <= k; ++e, pe *= p) {
            long step = pe * rest;
            bool trivial = true;
            for (long a = 1; a < n; a += step) {
                if (chi.is_unit(a) && chi.exponent(a) != 0) {
                    trivial = false;
                    break;
                }
            }
            if (trivial)
                break;
        }
        f *= pe;
    }
    return static_cast<int>(f);
}

dirichlet_character primitivize(dirichlet_character const & chi)
{
    int const f = conductor(chi);
    int const n = chi.modulus();
    std::vector<int> e(static_cast<std::size_t>(f), -1);
    int g = chi.order();
    for (int b = 0; b < f; ++b) {
        if (std::gcd(b, f) != 1)
            continue;
        long a = b;
        while (std::gcd(a, static_cast<long>(n)) != 1)
            a += f;
        e[b] = chi.exponent(a);
        g = std::gcd(g, e[b]);
    }
    for (auto & x : e)
        if (x >= 0)
            x /= g;
    return dirichlet_character(f, chi.order() / g, std::move(e));
}

bool is_primitive(dirichlet_character const & chi)
{
    return conductor(chi) == chi.modulus();
}

character_parity parity(dirichlet_character const & chi)
{
    int const n = chi.modulus();
    if (n <= 2)
        return character_parity::even;
    return chi.exponent(n - 1) == 0 ? character_parity::even : character_parity::odd;
}

int kronecker_symbol(long d, long n)
{
    if (n <= 0)
        throw std::invalid_argument("kronecker_symbol: n must be positive");
    int result = 1;
    // factor 2 out of n
    while (n % 2 == 0) {
        n /= 2;
        long r = mod_floor(d, 8);
        if (r % 2 == 0)
            return 0;
        if (r == 3 || r == 5)
            result = -result;
    }
    // Jacobi symbol (d / n), n odd
    long a = mod_floor(d, n);
    long m = n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = m % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3)
            result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

namespace {

bool squarefree(long n)
{
    n = n < 0 ? -n : n;
    for (auto [p, k] : factorize(n))
        if (k > 1)
            return false;
    return true;
}

} // namespace

bool is_fundamental_discriminant(long d)
{
    if (d == 0 || d == 1)
        return false;
    long r = mod_floor(d, 4);
    if (r == 1)
        return squarefree(d);
    if (r == 0) {
        long m = d / 4;
        long s = mod_floor(m, 4);
        return (s == 2 || s == 3) && squarefree(m);
    }
    return false;
}

dirichlet_character kronecker_character(long d)
{
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("kronecker_character: " + std::to_string(d) +
                                    " is not a negative fundamental discriminant");
    int const n = static_cast<int>(-d);
    std::vector<int> e(static_cast<std::size_t>(n), -1);
    for (int a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1)
            continue;
        e[a] = kronecker_symbol(d, a) == 1 ? 0 : 1;
    }
    return dirichlet_character(n, 2, std::move(e));
}

// ---------------------------------------------------------------------------
// abelian_field_spec

abelian_field_spec::abelian_field_spec(int modulus, std::vector<int> subgroup, std::vector<int> generators)
    : modulus_(modulus), subgroup_(std::move(subgroup)), generators_(std::move(generators)),
      member_(static_cast<std::size_t>(modulus), 0)
{
    for (int h : subgroup_)
        member_[h] = 1;
}

abelian_field_spec abelian_field_spec::from_generators(int modulus, std::vector<long> const & generators)
{
    if (modulus <= 0)
        throw std::invalid_argument("abelian_field_spec: modulus must be positive");
    std::vector<int> gens;
    for (long g : generators) {
        long r = mod_floor(g, modulus);
        if (std::gcd(r, static_cast<long>(modulus)) != 1)
            throw std::invalid_argument("abelian_field_spec: generator " + std::to_string(g) + " is not a unit mod " +
                                        std::to_string(modulus));
        gens.push_back(static_cast<int>(r));
    }
    std::set<int> closure{1 % modulus};
    std::vector<int> frontier{1 % modulus};
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int g : gens) {
            int y = static_cast<int>(static_cast<long>(x) * g % modulus);
            if (closure.insert(y).second)
                frontier.push_back(y);
        }
    }
    return abelian_field_spec(modulus, std::vector<int>(closure.begin(), closure.end()), gens);
}

abelian_field_spec abelian_field_spec::from_subgroup(int modulus, std::vector<long> const & elements)
{
    if (modulus <= 0)
        throw std::invalid_argument("abelian_field_spec: modulus must be positive");
    std::set<int> h;
    for (long e : elements) {
        long r = mod_floor(e, modulus);
        if (std::gcd(r, static_cast<long>(modulus)) != 1)
            throw std::invalid_argument("abelian_field_spec: element is not a unit");
        h.insert(static_cast<int>(r));
    }
    if (!h.count(1 % modulus))
        throw std::invalid_argument("abelian_field_spec: subgroup must contain 1");
    for (int a : h)
        for (int b : h)
            if (!h.count(static_cast<int>(static_cast<long>(a) * b % modulus)))
                throw std::invalid_argument("abelian_field_spec: H is not a subgroup");
    std::vector<int> sub(h.begin(), h.end());
    return abelian_field_spec(modulus, sub, sub);
}

bool abelian_field_spec::contains(long a) const
{
    return member_[static_cast<std::size_t>(mod_floor(a, modulus_))] != 0;
}

int abelian_field_spec::degree() const
{
    return static_cast<int>(euler_phi(modulus_) / static_cast<long>(subgroup_.size()));
}

bool abelian_field_spec::is_cm() const
{
    return !contains(-1);
}

void abelian_field_spec::require_cm() const
{
    if (!is_cm())
        throw std::invalid_argument("field " + to_string() + " is not CM: -1 lies in H");
}

std::string abelian_field_spec::to_string() const
{
    std::ostringstream os;
    os << "(N=" << modulus_ << ", H={";
    for (std::size_t i = 0; i < subgroup_.size(); ++i)
        os << (i ? "," : "") << subgroup_[i];
    os << "})";
    return os.str();
}

std::vector<dirichlet_character> field_character_group(abelian_field_spec const & spec)
{
    std::vector<dirichlet_character> out;
    for (auto & chi : all_characters(spec.modulus())) {
        bool trivial_on_h = std::all_of(spec.subgroup().begin(), spec.subgroup().end(),
                                        [&](int h) { return chi.exponent(h) == 0; });
        if (trivial_on_h)
            out.push_back(std::move(chi));
    }
    if (static_cast<int>(out.size()) != spec.degree())
        throw std::logic_error("field_character_group: dual group has the wrong size");
    return out;
}

bigint abs_discriminant(abelian_field_spec const & spec)
{
    bigint d = 1;
    for (auto const & chi : field_character_group(spec))
        d *= conductor(chi);
    return d;
}

abelian_field_spec totally_real_subfield(abelian_field_spec const & spec)
{
    spec.require_cm();
    std::vector<long> gens(spec.subgroup().begin(), spec.subgroup().end());
    gens.push_back(spec.modulus() - 1);
    return abelian_field_spec::from_generators(spec.modulus(), gens);
}

} // namespace cmh
