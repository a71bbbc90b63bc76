#pragma once

#include "hspoly/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hspoly {

/* Principal solution of the first-order equation D u = phi on the step-h
 * lattice: F(x) = int_c^inf phi(t) dt - h sum_{s>=0} phi(x + s h),
 * regularized when either piece diverges by damping with e^{-mu lambda(t)},
 * lambda(t) = t^p (ln t)^q, and extrapolating mu -> 0. */

enum class ClosedKind { constant, exponential, logarithm };

/* Closed references:
 *   constant a      ->  a (x - c - h/2)
 *   exponential e^-z -> e^-c - h e^-x / (1 - e^-h)
 *   logarithm ln z  ->  h ln Gamma_h(x) - h ln sqrt(2 pi / h)   (c fixed at 0)
 */
Real principal_sum_closed(ClosedKind kind, const Rational& param, const Rational& c,
                          const Rational& x, const Rational& h);

struct PhiSpec {
    enum class Kind { constant, exponential, logarithm, poly_times_exp } kind;
    Rational constant_value = Rational(1);  // for Kind::constant
    Poly poly;                              // for Kind::poly_times_exp: P(t) e^{-t}

    bool decays() const { return kind == Kind::exponential || kind == Kind::poly_times_exp; }
    Real operator()(const Real& t) const;

    static PhiSpec constant(const Rational& a) { return {Kind::constant, a, {}}; }
    static PhiSpec exponential() { return {Kind::exponential, Rational(1), {}}; }
    static PhiSpec logarithm() { return {Kind::logarithm, Rational(1), {}}; }
    static PhiSpec poly_times_exp(Poly p) { return {Kind::poly_times_exp, Rational(1), std::move(p)}; }
};

struct RegularizationConfig {
    int p = 1;
    int q = 0;
    std::vector<Real> mu_schedule;  // strictly decreasing toward zero
    Real series_tail_tol;
    Real quadrature_tol;

    /// mu = 0.1 * 2^-i for i = 0..7; both tolerances 1e-14.
    static RegularizationConfig defaults();
};

struct NorlundResult {
    Real value;
    Real error_estimate;
    std::vector<Real> f_mu;  // per-level raw values (empty on the direct path)
    int levels = 0;
    bool converged = false;
    std::string diagnostic;
};

/* Direct evaluation when integral and series both converge (the decaying
 * families); otherwise the damped two-sided evaluation per mu level with
 * Richardson extrapolation in mu. Throws numeric_error when the
 * extrapolation diagnostics do not shrink. */
NorlundResult principal_sum_numeric(const PhiSpec& phi, const Rational& c, const Rational& x,
                                    const Rational& h, const RegularizationConfig& cfg);

/* Adaptive Gauss-Legendre quadrature (nodes computed at working
 * precision); error controlled by panel bisection. */
Real integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
               const Real& tol);

/* int_a^inf for integrands decaying to zero: doubling panels until two
 * consecutive contributions drop below the tolerance. */
Real integrate_to_infinity(const std::function<Real(const Real&)>& f, const Real& a, const Real& tol);

}  // namespace hspoly
