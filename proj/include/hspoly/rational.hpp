#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hspoly {

namespace mp = boost::multiprecision;

/* Exact substrate: arbitrary-precision integers and reduced rationals
 * (GMP), plus a variable-precision real type (MPFR) for everything that
 * genuinely needs floating point (Gamma_h, Noerlund sums, BAE residuals
 * at irrational zeros). Expression templates are switched off so the
 * types behave as plain values inside templated polynomial code. */
using Int      = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Real     = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// num/den reduced to lowest terms with positive denominator.
Rational make_rational(Int num, Int den);

/// Accepts "p", "-p", "p/q" and non-reduced input such as "2/4".
Rational parse_rational(std::string_view s);

/// Canonical form: "p" or "p/q", q > 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Largest integer <= q.
Int floor_int(const Rational& q);
/// Smallest integer >= q.
Int ceil_int(const Rational& q);

/// a/b when the quotient is an exact integer, otherwise nullopt. b != 0.
std::optional<Int> integer_ratio(const Rational& a, const Rational& b);

/// Round to Real at the current default precision.
Real to_real(const Rational& q);

/// Default decimal digits for Real: HSPOLY_DIGITS if set, else 64.
int default_digits();
void set_default_digits(int digits);

/// Scoped override of the Real working precision (decimal digits).
class PrecisionGuard {
  public:
    explicit PrecisionGuard(int digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

/// Euler-Mascheroni constant at the current precision.
Real euler_gamma();
Real pi_value();

/// Decimal rendering; digits = 0 uses the current default precision.
std::string real_to_string(const Real& v, int digits = 0);

}  // namespace hspoly
