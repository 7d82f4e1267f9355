// High-precision special functions: Hurwitz zeta, log-Gamma, Dedekind eta
// and the modular discriminant on lattices.
//
// All real arithmetic is MPFR-backed with a runtime precision. Every public
// entry point installs the working precision of the supplied context for the
// duration of the call, so concurrent callers must agree on working_digits.

#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <utility>

namespace cmh {

using real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using rational = boost::multiprecision::mpq_rational;
using bigint = boost::multiprecision::mpz_int;

struct precision_context
{
    int working_digits = 60;
    int target_digits = 50;

    /// Context for `digits` correct decimal digits plus 10 guard digits.
    static precision_context with_target(int digits);

    real tolerance() const;
    void validate() const;
};

/// Installs the working precision of a context for the lifetime of the guard.
class precision_scope
{
  public:
    explicit precision_scope(precision_context const & ctx);
    ~precision_scope();
    precision_scope(precision_scope const &) = delete;
    precision_scope & operator=(precision_scope const &) = delete;

  private:
    unsigned saved_;
};

struct complex_mp
{
    real re;
    real im;

    complex_mp() : re(0), im(0) {}
    complex_mp(real r) : re(std::move(r)), im(0) {}
    complex_mp(real r, real i) : re(std::move(r)), im(std::move(i)) {}
    complex_mp(int r) : re(r), im(0) {}

    complex_mp conj() const { return {re, -im}; }
    real norm() const { return re * re + im * im; }
    real abs() const;
    real arg() const;

    complex_mp & operator+=(complex_mp const & o);
    complex_mp & operator-=(complex_mp const & o);
    complex_mp & operator*=(complex_mp const & o);
    complex_mp & operator/=(complex_mp const & o);
    complex_mp & operator*=(real const & o);
};

complex_mp operator+(complex_mp a, complex_mp const & b);
complex_mp operator-(complex_mp a, complex_mp const & b);
complex_mp operator*(complex_mp a, complex_mp const & b);
complex_mp operator/(complex_mp a, complex_mp const & b);
complex_mp operator*(complex_mp a, real const & b);
complex_mp operator*(real const & b, complex_mp a);
complex_mp operator-(complex_mp const & a);

complex_mp exp(complex_mp const & z);
/// Principal branch.
complex_mp log(complex_mp const & z);
complex_mp sqrt(complex_mp const & z);
complex_mp powi(complex_mp const & z, long n);
/// e^(2 pi i * num/den).
complex_mp root_of_unity(long num, long den);

real pi();
real log_two_pi();
/// Euler-Mascheroni constant at the current working precision (cached).
real euler_gamma(precision_context const & ctx);

/// Exact Bernoulli number B_n for 0 <= n <= 60 (B_1 = -1/2).
rational const & bernoulli(int n);

std::string to_string(real const & x, int digits);

/// Hurwitz zeta zeta_H(s, x) = sum_{n>=0} (n+x)^(-s), analytically continued.
complex_mp hurwitz_zeta(complex_mp const & s, real const & x, precision_context const & ctx);

/// zeta_H(s, x) together with its derivative in s.
std::pair<complex_mp, complex_mp> hurwitz_zeta_with_derivative(complex_mp const & s, real const & x,
                                                               precision_context const & ctx);

real log_gamma(real const & x, precision_context const & ctx);

/// log eta(tau), defined modulo 2 pi i.
complex_mp log_dedekind_eta(complex_mp const & tau, precision_context const & ctx);
complex_mp dedekind_eta(complex_mp const & tau, precision_context const & ctx);

/// Delta(tau) = eta(tau)^24.
complex_mp modular_discriminant(complex_mp const & tau, precision_context const & ctx);

struct lattice_basis
{
    complex_mp omega1;
    complex_mp omega2;

    /// Swaps the periods if needed so that Im(omega1/omega2) > 0.
    lattice_basis oriented() const;
};

/// Delta(L) = omega2^(-12) Delta(omega1/omega2); independent of the basis.
complex_mp delta_on_lattice(lattice_basis const & basis, precision_context const & ctx);

} // namespace cmh
