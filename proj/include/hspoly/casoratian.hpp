#pragma once

#include "hspoly/fdeq.hpp"
#include "hspoly/gammah.hpp"
#include "hspoly/roots.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hspoly {

/* Discrete Wronskian (Casoratian) W_h{y1,y2} = y1 Dy2 - Dy1 y2. For two
 * solutions of the same equation it obeys the exact first-order recurrence
 *   W_h(x+h) g(x) = (g - h r)(x) W_h(x)
 * and, off poles, the Abel-type closed form
 *   W_h(x) = const * kappa^{(x - h/2)/h} * prod Gamma_h(x - a_j) / prod Gamma_h(x - b_l)
 * where a/b are the roots of g - h r and g, and kappa the ratio of their
 * leading coefficients. (The exponent is (x - h/2)/h, not x - h/2: only
 * then does the factor advance by kappa per lattice step; both agree at
 * h = 1.) */

/// y1 Dy2 - Dy1 y2, with the determinant form cross-checked exactly.
Poly casoratian(const Poly& y1, const Poly& y2, const Rational& h);

/// Pointwise Casoratian values W(x_k) from lattice samples of two solutions.
std::vector<Rational> casoratian_values(std::span<const Rational> y1, std::span<const Rational> y2,
                                        const Rational& h);

/* R(x) = (g - h r)/g split into leading ratio kappa and the two root
 * lists. Repeated roots are reported as-is here (multiplicity carried);
 * only the uniqueness certificates reject them. */
struct AbelClosedForm {
    Rational kappa;
    RootList a_roots;  // roots of monic(g - h r)
    RootList b_roots;  // roots of monic(g)
    Rational h;
};

AbelClosedForm R_of(const DifferenceEquation& eq);

/* Closed-form magnitude at a point. For kappa < 0 the power uses |kappa|;
 * the sign pattern is the recurrence's business and is checked exactly
 * there. Throws pole_error on an uncancelled numerator pole. */
Real abel_closed_form_at(const AbelClosedForm& cf, const Rational& x);

struct AbelReport {
    bool recurrence_exact = false;   // W(x+h) g(x) == (g-hr)(x) W(x) at every point
    bool identically_zero = false;   // all sampled W values vanish
    int points = 0;
    Real ratio_mean;                 // mean of direct W / closed form
    Real ratio_rel_stddev;           // relative std deviation across points
    bool kappa_negative = false;
    bool shifted = false;            // sampling moved off a Gamma_h pole
    Rational x0;                     // lattice start actually used
};

/* Verify both halves of the closed form against exact Cauchy-iterated
 * lattice values: (i) the first-order recurrence, exactly; (ii) the
 * ratio direct/closed-form, which must be constant across the lattice. */
AbelReport verify_abel(const DifferenceEquation& eq, const Rational& x0,
                       std::span<const Rational> y1, std::span<const Rational> y2, int points);

/* Convenience driver: seeds two independent Cauchy solutions at x0 with
 * (1,0) and (0,1), shifting the start by h/2 (with a note in the report)
 * while the lattice hits a Gamma_h pole or a zero of g. */
AbelReport run_abel_verification(const DifferenceEquation& eq, Rational x0, int points,
                                 std::optional<std::pair<Rational, Rational>> seed1 = std::nullopt,
                                 std::optional<std::pair<Rational, Rational>> seed2 = std::nullopt);

}  // namespace hspoly
