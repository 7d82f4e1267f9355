#include "cmh/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cmh {

namespace {

using poly_cache = std::map<int, std::vector<long long>>;

std::vector<long long> const & build_cyclotomic(int m, poly_cache & cache)
{
    if (auto it = cache.find(m); it != cache.end())
        return it->second;
    // x^m - 1 divided by Phi_d for every proper divisor d of m
    std::vector<long long> poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d)
            continue;
        std::vector<long long> const & divisor = build_cyclotomic(d, cache);
        int const deg_d = static_cast<int>(divisor.size()) - 1;
        int const deg_p = static_cast<int>(poly.size()) - 1;
        std::vector<long long> quot(static_cast<std::size_t>(deg_p - deg_d + 1), 0);
        for (int i = deg_p; i >= deg_d; --i) {
            long long c = poly[i];
            quot[i - deg_d] = c;
            if (c == 0)
                continue;
            for (int j = 0; j <= deg_d; ++j)
                poly[i - deg_d + j] -= c * divisor[j];
        }
        poly = std::move(quot);
    }
    return cache.emplace(m, std::move(poly)).first->second;
}

} // namespace

std::vector<long long> const & cyclotomic_polynomial(int m)
{
    if (m <= 0)
        throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    static std::mutex mutex;
    static poly_cache cache;
    std::lock_guard<std::mutex> lock(mutex);
    return build_cyclotomic(m, cache);
}

namespace {

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

cyclotomic_number::cyclotomic_number(int order) : order_(order), coeffs_(static_cast<std::size_t>(order))
{
    if (order <= 0)
        throw std::invalid_argument("cyclotomic_number: order must be positive");
}

cyclotomic_number cyclotomic_number::from_rational(int order, rational const & q)
{
    cyclotomic_number z(order);
    z.coeffs_[0] = q;
    return z;
}

void cyclotomic_number::add_root(long k, rational const & q)
{
    coeffs_[static_cast<std::size_t>(mod(k, order_))] += q;
}

cyclotomic_number & cyclotomic_number::operator+=(cyclotomic_number const & o)
{
    if (o.order_ != order_)
        throw std::invalid_argument("cyclotomic_number: order mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

cyclotomic_number & cyclotomic_number::operator-=(cyclotomic_number const & o)
{
    if (o.order_ != order_)
        throw std::invalid_argument("cyclotomic_number: order mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

cyclotomic_number & cyclotomic_number::operator*=(rational const & q)
{
    for (auto & c : coeffs_)
        c *= q;
    return *this;
}

cyclotomic_number cyclotomic_number::times_root(long k) const
{
    cyclotomic_number r(order_);
    for (long i = 0; i < order_; ++i)
        r.coeffs_[static_cast<std::size_t>(mod(i + k, order_))] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

cyclotomic_number cyclotomic_number::operator*(cyclotomic_number const & o) const
{
    if (o.order_ != order_)
        throw std::invalid_argument("cyclotomic_number: order mismatch");
    cyclotomic_number r(order_);
    for (long i = 0; i < order_; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (long j = 0; j < order_; ++j)
            if (o.coeffs_[j] != 0)
                r.coeffs_[static_cast<std::size_t>(mod(i + j, order_))] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
}

cyclotomic_number cyclotomic_number::conj() const
{
    cyclotomic_number r(order_);
    for (long i = 0; i < order_; ++i)
        r.coeffs_[static_cast<std::size_t>(mod(-i, order_))] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

std::vector<rational> cyclotomic_number::reduced() const
{
    auto const & phi = cyclotomic_polynomial(order_);
    int const deg = static_cast<int>(phi.size()) - 1;
    std::vector<rational> work = coeffs_;
    for (int i = order_ - 1; i >= deg; --i) {
        rational c = work[i];
        if (c == 0)
            continue;
        for (int j = 0; j <= deg; ++j)
            work[i - deg + j] -= c * phi[j];
    }
    work.resize(static_cast<std::size_t>(deg));
    return work;
}

bool cyclotomic_number::is_zero() const
{
    for (auto const & c : reduced())
        if (c != 0)
            return false;
    return true;
}

bool cyclotomic_number::is_rational() const
{
    auto r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0)
            return false;
    return true;
}

rational cyclotomic_number::rational_value() const
{
    auto r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0)
            throw std::domain_error("cyclotomic_number: value is not rational");
    return r.empty() ? rational(0) : r[0];
}

complex_mp cyclotomic_number::to_complex(precision_context const & ctx) const
{
    precision_scope guard(ctx);
    complex_mp acc;
    for (long k = 0; k < order_; ++k) {
        rational const & c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        real cr = real(boost::multiprecision::numerator(c)) / real(boost::multiprecision::denominator(c));
        acc += root_of_unity(k, order_) * cr;
    }
    return acc;
}

std::string cyclotomic_number::to_string() const
{
    auto r = reduced();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0)
            os << r[i];
        else
            os << "(" << r[i] << ")*z" << order_ << "^" << i;
    }
    if (first)
        os << "0";
    return os.str();
}

bool operator==(cyclotomic_number const & a, cyclotomic_number const & b)
{
    if (a.order_ != b.order_)
        return false;
    cyclotomic_number d = a;
    d -= b;
    return d.is_zero();
}

} // namespace cmh
