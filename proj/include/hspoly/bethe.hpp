#pragma once

#include "hspoly/fdeq.hpp"
#include "hspoly/roots.hpp"

#include <string>
#include <vector>

namespace hspoly {

/* Evaluating the recurrence form of the equation at the zeros x_k of a
 * presumed polynomial solution y = prod (x - x_j) yields one algebraic
 * relation per zero:
 *   prod_j (x_k - x_j + h) / prod_j (x_k - x_j - h)
 *     = [h r(x_k - h) - g(x_k - h)] / g(x_k - h),
 * products over all j including k (that factor contributes h/(-h) = -1).
 * bae_residual returns LHS - RHS; exact over the rationals. */

/// Pairwise-distinct zeros, canonically sorted. Multiplicities are rejected.
struct RootSet {
    std::vector<Real> roots;

    static RootSet of(std::vector<Real> roots, const Real& min_gap);
    size_t size() const { return roots.size(); }
};

template <class S>
S bae_residual(const DifferenceEquation& eq, const std::vector<S>& roots, size_t k) {
    if (k >= roots.size())
        throw error("bae_residual: index out of range");
    const S h{eq.h};
    const S xk = roots[k];
    const S gv = eval_at(eq.g, S(xk - h));
    if (gv == 0)
        throw pole_error("bae_residual: g vanishes at x_k - h");
    S lhs_num(1), lhs_den(1);
    for (const S& xj : roots) {
        lhs_num *= xk - xj + h;
        const S den = xk - xj - h;
        if (den == 0)
            throw pole_error("bae_residual: factor x_k - x_j - h vanishes");
        lhs_den *= den;
    }
    const S rhs = (h * eval_at(eq.r, S(xk - h)) - gv) / gv;
    return lhs_num / lhs_den - rhs;
}

/* True when the degree-n coefficient of residual(x^n + lower) vanishes
 * identically in the lower coefficients; in the hypergeometric case this
 * is exactly theta(n) = 0. With it, the residual of a monic degree-n
 * candidate drops to degree n-1, so vanishing at n distinct zeros forces
 * it to vanish identically: satisfied Bethe-Ansatz relations and a zero
 * equation residual become equivalent. */
struct LeadingCondition {
    bool holds = false;
    std::string diagnostic;
};

LeadingCondition leading_degree_condition(const DifferenceEquation& eq, int n);

struct BaeReport {
    bool pass = false;           // both checks below
    bool bae_pass = false;       // every |bae_residual| < tol
    bool equation_pass = false;  // residual polynomial coefficients < tol
    bool equivalent = false;     // the two checks agreed
    Real max_bae_residual;
    Real max_equation_coeff;
    Real tolerance;
    std::vector<Real> residuals;
};

/* Builds y = prod (x - x_k), checks all root relations and the full
 * equation residual, and cross-asserts that the two agree. Requires the
 * leading-degree condition for n = |roots|. Default tolerance 1e-8,
 * sized for zeros refined to ~50 digits. */
BaeReport verify_solution_via_bae(const DifferenceEquation& eq, const RootSet& roots,
                                  const Real& tol = Real("1e-8"));

/* Zeros of a computed polynomial solution, refined to the requested
 * digits. Solutions with complex or repeated zeros cannot enter the
 * root-relation form and are reported as skips. */
struct SolutionZeros {
    enum class Status { ok, repeated_zeros, complex_zeros } status = Status::ok;
    std::vector<Real> zeros;
};

SolutionZeros polynomial_real_zeros(const Poly& y, int digits);

}  // namespace hspoly
