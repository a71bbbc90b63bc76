#pragma once

#include "hspoly/poly.hpp"

#include <utility>
#include <vector>

namespace hspoly {

/* A certified real root: either an exact rational (lo == hi, the
 * polynomial vanishes there exactly) or an open isolating interval
 * (lo, hi) carrying a squarefree certificate factor with a sign change
 * across the interval. Intervals of distinct roots are pairwise disjoint. */
struct Root {
    Rational lo, hi;
    int multiplicity = 1;
    Poly factor;  // squarefree witness; empty for exact roots

    bool exact() const { return lo == hi; }
    const Rational& value() const;
    Rational mid() const;
};

struct RootList {
    std::vector<Root> roots;  // ascending
    int degree = -1;          // degree of the isolated polynomial

    int total_multiplicity() const;
    bool all_real() const { return total_multiplicity() == degree; }
    bool all_simple() const;
    bool empty() const { return roots.empty(); }
    size_t size() const { return roots.size(); }
};

/* Root pipeline: squarefree decomposition, rational-root extraction,
 * Sturm isolation of the irrational remainder, bisection refinement
 * down to the requested interval width (2^-precision_bits). */
RootList real_roots(const Poly& p, int precision_bits = 128);

/// Shrink an interval root to width <= 2^-precision_bits (exact roots: no-op).
void refine_root(Root& r, int precision_bits);

/// Numeric value accurate to roughly the requested decimal digits.
Real root_to_real(const Root& r, int digits);

/// (monic factor, multiplicity) pairs with pairwise-coprime factors.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Number of distinct real roots (Sturm count on the squarefree part).
int count_real_roots(const Poly& p);

/// Sign of p at a rational point: -1, 0, +1. Exact.
int sign_at(const Poly& p, const Rational& x);

/// Interval Horner: bounds on { p(x) : x in [lo, hi] }.
std::pair<Rational, Rational> interval_eval(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace hspoly
