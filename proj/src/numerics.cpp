#include "cmh/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace cmh {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// precision handling

precision_context precision_context::with_target(int digits)
{
    precision_context ctx;
    ctx.target_digits = digits;
    ctx.working_digits = digits + 10;
    ctx.validate();
    return ctx;
}

void precision_context::validate() const
{
    if (target_digits <= 0)
        throw std::invalid_argument("precision_context: target digits must be positive");
    if (working_digits < target_digits + 10)
        throw std::invalid_argument("precision_context: working digits must exceed target by 10 guard digits");
}

real precision_context::tolerance() const
{
    precision_scope guard(*this);
    return mp::pow(real(10), -target_digits);
}

precision_scope::precision_scope(precision_context const & ctx) : saved_(real::default_precision())
{
    ctx.validate();
    real::default_precision(static_cast<unsigned>(ctx.working_digits));
}

precision_scope::~precision_scope()
{
    real::default_precision(saved_);
}

// ---------------------------------------------------------------------------
// complex arithmetic

real complex_mp::abs() const
{
    return mp::hypot(re, im);
}

real complex_mp::arg() const
{
    return mp::atan2(im, re);
}

complex_mp & complex_mp::operator+=(complex_mp const & o)
{
    re += o.re;
    im += o.im;
    return *this;
}

complex_mp & complex_mp::operator-=(complex_mp const & o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

complex_mp & complex_mp::operator*=(complex_mp const & o)
{
    real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

complex_mp & complex_mp::operator/=(complex_mp const & o)
{
    real n = o.norm();
    if (n == 0)
        throw std::domain_error("complex division by zero");
    real r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
}

complex_mp & complex_mp::operator*=(real const & o)
{
    re *= o;
    im *= o;
    return *this;
}

complex_mp operator+(complex_mp a, complex_mp const & b) { return a += b; }
complex_mp operator-(complex_mp a, complex_mp const & b) { return a -= b; }
complex_mp operator*(complex_mp a, complex_mp const & b) { return a *= b; }
complex_mp operator/(complex_mp a, complex_mp const & b) { return a /= b; }
complex_mp operator*(complex_mp a, real const & b) { return a *= b; }
complex_mp operator*(real const & b, complex_mp a) { return a *= b; }
complex_mp operator-(complex_mp const & a) { return {-a.re, -a.im}; }

complex_mp exp(complex_mp const & z)
{
    real m = mp::exp(z.re);
    if (z.im == 0)
        return {m, real(0)};
    return {m * mp::cos(z.im), m * mp::sin(z.im)};
}

complex_mp log(complex_mp const & z)
{
    if (z.re == 0 && z.im == 0)
        throw std::domain_error("log of zero");
    return {mp::log(z.abs()), z.arg()};
}

complex_mp sqrt(complex_mp const & z)
{
    if (z.re == 0 && z.im == 0)
        return {};
    complex_mp l = log(z);
    return exp(complex_mp(l.re / 2, l.im / 2));
}

complex_mp powi(complex_mp const & z, long n)
{
    complex_mp base = n < 0 ? complex_mp(1) / z : z;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    complex_mp acc(1);
    while (e) {
        if (e & 1u)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

complex_mp root_of_unity(long num, long den)
{
    if (den <= 0)
        throw std::invalid_argument("root_of_unity: denominator must be positive");
    long k = ((num % den) + den) % den;
    if (k == 0)
        return {real(1), real(0)};
    if (2 * k == den)
        return {real(-1), real(0)};
    if (4 * k == den)
        return {real(0), real(1)};
    if (4 * k == 3 * den)
        return {real(0), real(-1)};
    real theta = 2 * pi() * k / den;
    return {mp::cos(theta), mp::sin(theta)};
}

// ---------------------------------------------------------------------------
// constants

real pi()
{
    real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

real log_two_pi()
{
    return mp::log(2 * pi());
}

rational const & bernoulli(int n)
{
    static std::vector<rational> const table = [] {
        constexpr int max_index = 60;
        std::vector<rational> b(max_index + 1);
        // sum_{k=0}^{m} binom(m+1, k) B_k = 0
        std::vector<std::vector<bigint>> binom(max_index + 2, std::vector<bigint>(max_index + 2));
        for (int i = 0; i <= max_index + 1; ++i) {
            binom[i][0] = binom[i][i] = 1;
            for (int j = 1; j < i; ++j)
                binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
        }
        b[0] = 1;
        for (int m = 1; m <= max_index; ++m) {
            rational acc = 0;
            for (int k = 0; k < m; ++k)
                acc += rational(binom[m + 1][k]) * b[k];
            b[m] = -acc / rational(binom[m + 1][m]);
        }
        return b;
    }();
    if (n < 0 || n >= static_cast<int>(table.size()))
        throw std::out_of_range("bernoulli: index outside precomputed range");
    return table[n];
}

namespace {

constexpr int bernoulli_terms = 30; // uses B_2 .. B_60

real to_real(rational const & q)
{
    return real(mp::numerator(q)) / real(mp::denominator(q));
}

std::vector<rational> const & bernoulli_over_factorial()
{
    // B_{2j} / (2j)!, j = 0..bernoulli_terms
    static std::vector<rational> const table = [] {
        std::vector<rational> t(bernoulli_terms + 1);
        bigint fact = 1;
        for (int j = 0; j <= bernoulli_terms; ++j) {
            if (j > 0)
                fact *= bigint(2 * j - 1) * bigint(2 * j);
            t[j] = bernoulli(2 * j) / rational(fact);
        }
        return t;
    }();
    return table;
}

// b^(-s) for real b > 0 given log b.
complex_mp real_base_pow_neg(real const & log_b, complex_mp const & s)
{
    real mag = mp::exp(-s.re * log_b);
    if (s.im == 0)
        return {mag, real(0)};
    real ang = -s.im * log_b;
    return {mag * mp::cos(ang), mag * mp::sin(ang)};
}

// Shift N so the Euler-Maclaurin remainder with `bernoulli_terms` correction
// terms is below 10^-(digits).
long euler_maclaurin_shift(double sigma, double abs_s, double x, int digits)
{
    int const two_j = 2 * bernoulli_terms;
    double const expo = sigma + two_j - 1;
    if (expo <= 0)
        throw std::domain_error("hurwitz_zeta: real part of s too negative for the configured expansion");
    // |R| <= 4 |(s)_{2J}| / (2 pi)^{2J} * y^{-(sigma + 2J - 1)} / (sigma + 2J - 1)
    double log10_rising = 0;
    for (int k = 0; k < two_j; ++k)
        log10_rising += std::log10(abs_s + k + 1);
    double log10_const = std::log10(4.0) + log10_rising - two_j * std::log10(2 * M_PI) - std::log10(expo);
    double log10_y = (log10_const + digits) / expo;
    double y_needed = std::pow(10.0, log10_y);
    long shift = static_cast<long>(std::ceil(y_needed - x));
    return std::max(shift, 1L);
}

} // namespace

std::string to_string(real const & x, int digits)
{
    return x.str(digits, std::ios_base::scientific);
}

real euler_gamma(precision_context const & ctx)
{
    static std::mutex mutex;
    static std::map<int, std::string> cache;
    precision_scope guard(ctx);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(ctx.working_digits);
        if (it != cache.end())
            return real(it->second);
    }
    // gamma = H_{N-1} - log N + 1/(2N) + sum_j B_{2j} / (2j N^{2j})
    int const terms = bernoulli_terms - 1;
    double log10_b = std::log10(std::fabs(bernoulli(2 * terms + 2).convert_to<double>()));
    long n = static_cast<long>(std::ceil(std::pow(10.0, (log10_b + ctx.working_digits + 5) / (2 * terms + 2))));
    n = std::max(n, 10L);
    real acc = 0;
    for (long k = 1; k < n; ++k)
        acc += real(1) / k;
    real big_n = n;
    acc -= mp::log(big_n);
    acc += real(1) / (2 * big_n);
    real inv_sq = real(1) / (big_n * big_n);
    real p = inv_sq;
    for (int j = 1; j <= terms; ++j) {
        acc += to_real(bernoulli(2 * j)) * p / (2 * j);
        p *= inv_sq;
    }
    {
        std::lock_guard<std::mutex> lock(mutex);
        cache.emplace(ctx.working_digits, acc.str(ctx.working_digits + 5, std::ios_base::scientific));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Hurwitz zeta

namespace {

std::pair<complex_mp, complex_mp> hurwitz_impl(complex_mp const & s, real const & x, precision_context const & ctx,
                                               bool want_derivative)
{
    if (x <= 0)
        throw std::domain_error("hurwitz_zeta: x must be positive");
    if (s.re == 1 && s.im == 0)
        throw std::domain_error("hurwitz_zeta: pole at s = 1");

    double const sigma = s.re.convert_to<double>();
    double const abs_s = s.abs().convert_to<double>();
    long const shift = euler_maclaurin_shift(sigma, abs_s, x.convert_to<double>(), ctx.working_digits + 8);

    complex_mp value;
    complex_mp deriv;
    for (long n = 0; n < shift; ++n) {
        real lb = mp::log(x + n);
        complex_mp term = real_base_pow_neg(lb, s);
        value += term;
        if (want_derivative)
            deriv -= term * lb;
    }

    real const y = x + shift;
    real const log_y = mp::log(y);
    complex_mp const y_neg_s = real_base_pow_neg(log_y, s); // y^-s
    complex_mp const s_minus_1 = s - complex_mp(1);

    // y^(1-s) / (s-1)
    complex_mp const y_one_minus_s = y_neg_s * y;
    complex_mp const integral = y_one_minus_s / s_minus_1;
    value += integral;
    if (want_derivative) {
        // d/ds: y^(1-s) * (-log y / (s-1) - 1/(s-1)^2)
        complex_mp f = complex_mp(-log_y) / s_minus_1 - complex_mp(1) / (s_minus_1 * s_minus_1);
        deriv += y_one_minus_s * f;
    }

    value += y_neg_s * real(0.5);
    if (want_derivative)
        deriv -= y_neg_s * (log_y / 2);

    // sum_{j=1}^{J} B_{2j}/(2j)! (s)_{2j-1} y^{-s-2j+1}
    auto const & coeffs = bernoulli_over_factorial();
    complex_mp rising = s;          // (s)_{1}
    complex_mp rising_d(1);         // d/ds (s)_{1}
    real y_pow = 1 / y;             // y^{1-2j} for j = 1
    real const inv_y_sq = 1 / (y * y);
    for (int j = 1; j <= bernoulli_terms; ++j) {
        real c = to_real(coeffs[j]) * y_pow;
        complex_mp base = y_neg_s * c;
        value += rising * base;
        if (want_derivative)
            deriv += (rising_d - rising * log_y) * base;
        // (s)_{2j+1} = (s)_{2j-1} (s+2j-1) (s+2j)
        complex_mp f1 = s + complex_mp(2 * j - 1);
        complex_mp f2 = s + complex_mp(2 * j);
        complex_mp f = f1 * f2;
        complex_mp fd = f1 + f2;
        rising_d = rising_d * f + rising * fd;
        rising = rising * f;
        y_pow *= inv_y_sq;
    }
    return {value, deriv};
}

} // namespace

complex_mp hurwitz_zeta(complex_mp const & s, real const & x, precision_context const & ctx)
{
    precision_scope guard(ctx);
    return hurwitz_impl(s, x, ctx, false).first;
}

std::pair<complex_mp, complex_mp> hurwitz_zeta_with_derivative(complex_mp const & s, real const & x,
                                                               precision_context const & ctx)
{
    precision_scope guard(ctx);
    return hurwitz_impl(s, x, ctx, true);
}

real log_gamma(real const & x, precision_context const & ctx)
{
    precision_scope guard(ctx);
    if (x <= 0)
        throw std::domain_error("log_gamma: argument must be positive");
    // log Gamma(x+1) = log Gamma(x) + log x
    real y = x;
    real shift_sum = 0;
    if (y > 1) {
        real k = mp::ceil(y) - 1;
        if (k > 100000)
            throw std::domain_error("log_gamma: argument too large for recurrence reduction");
        long steps = k.convert_to<long>();
        y -= steps;
        for (long i = 0; i < steps; ++i)
            shift_sum += mp::log(y + i);
    }
    // zeta_H'(0, y) = log Gamma(y) - 1/2 log(2 pi)
    auto zd = hurwitz_impl(complex_mp(0), y, ctx, true);
    return zd.second.re + log_two_pi() / 2 + shift_sum;
}

// ---------------------------------------------------------------------------
// eta and Delta

complex_mp log_dedekind_eta(complex_mp const & tau, precision_context const & ctx)
{
    precision_scope guard(ctx);
    if (tau.im <= 0)
        throw std::domain_error("dedekind_eta: tau must lie in the upper half plane");

    real const two_pi = 2 * pi();
    complex_mp t = tau;
    complex_mp factor; // log eta(tau) = factor + log eta(t)
    for (int iter = 0;; ++iter) {
        if (iter > 10000)
            throw std::runtime_error("dedekind_eta: reduction did not terminate");
        real n = mp::round(t.re);
        if (n != 0) {
            // eta(t) = e(n/24) eta(t - n)
            t.re -= n;
            factor.im += two_pi * n / 24;
        }
        if (t.norm() < 1) {
            // eta(-1/t) = sqrt(-i t) eta(t)
            complex_mp minus_i_t(t.im, -t.re);
            complex_mp l = log(minus_i_t);
            factor.re -= l.re / 2;
            factor.im -= l.im / 2;
            t = complex_mp(-1) / t;
        } else {
            break;
        }
    }

    // log eta(t) = 2 pi i t / 24 + sum_n log(1 - q^n)
    complex_mp const two_pi_i_t(-two_pi * t.im, two_pi * t.re);
    complex_mp const q = exp(two_pi_i_t);
    double const log10_q = -(two_pi * t.im).convert_to<double>() / std::log(10.0);
    long const terms = static_cast<long>(std::ceil((ctx.working_digits + 10) / -log10_q)) + 1;

    complex_mp result = factor + two_pi_i_t * (real(1) / 24);
    complex_mp qn = q;
    for (long n = 1; n <= terms; ++n) {
        result += log(complex_mp(1) - qn);
        qn *= q;
    }
    return result;
}

complex_mp dedekind_eta(complex_mp const & tau, precision_context const & ctx)
{
    precision_scope guard(ctx);
    return exp(log_dedekind_eta(tau, ctx));
}

complex_mp modular_discriminant(complex_mp const & tau, precision_context const & ctx)
{
    precision_scope guard(ctx);
    return exp(log_dedekind_eta(tau, ctx) * real(24));
}

lattice_basis lattice_basis::oriented() const
{
    if (omega2.norm() == 0 || omega1.norm() == 0)
        throw std::domain_error("lattice_basis: zero period");
    complex_mp ratio = omega1 / omega2;
    if (ratio.im < 0)
        return {omega2, omega1};
    return *this;
}

complex_mp delta_on_lattice(lattice_basis const & basis, precision_context const & ctx)
{
    precision_scope guard(ctx);
    lattice_basis b = basis.oriented();
    complex_mp tau = b.omega1 / b.omega2;
    if (mp::abs(tau.im) <= tau.abs() * mp::pow(real(10), -(ctx.working_digits - 5)))
        throw std::domain_error("delta_on_lattice: periods are linearly dependent over R");
    complex_mp l = log_dedekind_eta(tau, ctx) * real(24) - log(b.omega2) * real(12);
    return exp(l);
}

} // namespace cmh
