#pragma once

#include "hspoly/rational.hpp"
#include "hspoly/roots.hpp"

#include <optional>
#include <vector>

namespace hspoly {

/* Generalized gamma function for a lattice of step h > 0:
 *   Gamma_h(x + h) = x Gamma_h(x),   Gamma_h(h) = 1,
 * reduced to the ordinary gamma via
 *   Gamma_h(x) = Gamma(x/h) * exp(((x - h)/h) ln h).
 * Meromorphic with simple poles at 0, -h, -2h, ... and no zeros. */

struct GammaHValue {
    Real value;
    bool is_pole = false;
    std::optional<unsigned> pole_index;  // x = -pole_index * h
};

/// Exact pole test: x = -k h for an integer k >= 0.
bool gamma_h_pole(const Rational& x, const Rational& h);

GammaHValue gamma_h(const Rational& x, const Rational& h);
GammaHValue gamma_h(const Real& x, const Rational& h);

/// Gamma_h(n h + h) = h^n n!, exact.
Rational gamma_h_factorial(unsigned n, const Rational& h);

/// ln Gamma_h(x) for x > 0.
Real log_gamma_h(const Real& x, const Rational& h);

struct GammaRatioValue {
    Real value;
    /* true when an uncancelled pole sits in the denominator; the ratio's
     * limiting value is exactly zero then. */
    bool zero_from_denominator_pole = false;
};

/* prod_j Gamma_h(x - a_j) / prod_l Gamma_h(x - b_l), with pole/zero
 * cancellation performed symbolically first: roots paired across the
 * numerator and denominator whenever they differ by an integer multiple
 * of h telescope into finite products through the recurrence. An
 * uncancelled numerator pole throws a pole_error naming the factor. */
GammaRatioValue gamma_h_ratio(const Rational& x, const std::vector<Rational>& a_roots,
                              const std::vector<Rational>& b_roots, const Rational& h);

/// Purely numeric variant for irrational root approximations.
Real gamma_h_ratio_numeric(const Real& x, const std::vector<Real>& a_roots,
                           const std::vector<Real>& b_roots, const Rational& h);

/* Validation-only route: the reciprocal as the truncated infinite product
 *   1/Gamma_h(x) = e^{(gamma - ln h) x / h} x prod_{s=1..terms} (1 + x/(s h)) e^{-x/(s h)};
 * truncation error in ln is about x^2/(2 h^2 terms), documented so tests
 * can bound it. Production code uses the Gamma(x/h) reduction instead. */
Real gamma_h_reciprocal_product(const Real& x, const Rational& h, int terms);

}  // namespace hspoly
