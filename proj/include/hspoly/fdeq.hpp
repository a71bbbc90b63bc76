#pragma once

#include "hspoly/poly.hpp"

#include <utility>
#include <vector>

namespace hspoly {

/* g(x) D2 y(x) + r(x) D y(x) + u(x) y(x+h) = 0 on the uniform lattice of
 * step h > 0, where D is the forward difference quotient. Stored in this
 * one canonical form; the recurrence and u-absorbed views are derived. */
struct DifferenceEquation {
    Poly g, r, u;
    Rational h;

    DifferenceEquation(Poly g_, Poly r_, Poly u_, Rational h_)
        : g(std::move(g_)), r(std::move(r_)), u(std::move(u_)), h(std::move(h_)) {
        if (h <= 0)
            throw hypothesis_error("difference equation requires lattice step h > 0");
        if (g.is_zero())
            throw hypothesis_error("difference equation requires nonzero g");
    }
};

/* c2(x) y(x+2h) + c1(x) y(x+h) + c0(x) y(x) = 0, with
 * c2 = g, c1 = h r + h^2 u - 2 g, c0 = g - h r. */
struct RecurrenceForm {
    Poly c2, c1, c0;
};

/* g D2 y + (r + h u) D y + u y(x) = 0; follows from a y(x+h) = h a Dy + a y. */
struct AbsorbedForm {
    Poly g, r_plus_hu, u;
};

RecurrenceForm to_recurrence_form(const DifferenceEquation& eq);
AbsorbedForm absorbed_form(const DifferenceEquation& eq);

/* Exact Cauchy propagation of initial values (y0, y1) at (x0, x0+h):
 * returns y(x0 + k h) for k = 0..steps+1. Refuses lattice points where g
 * vanishes; uniqueness of the propagated solution needs g != 0 there. */
std::vector<Rational> cauchy_iterate(const DifferenceEquation& eq, const Rational& x0,
                                     const Rational& y0, const Rational& y1, int steps);

/// g D2 y + r D y + u y(.+h) as an exact polynomial; zero iff y solves the equation.
template <class S>
BasicPoly<S> residual(const DifferenceEquation& eq, const BasicPoly<S>& y) {
    const S h{eq.h};
    const BasicPoly<S> dy  = delta(y, h);
    const BasicPoly<S> d2y = delta(dy, h);
    return to_basic(eq.g, S(0)) * d2y + to_basic(eq.r, S(0)) * dy + to_basic(eq.u, S(0)) * shift(y, h);
}

/* Hypergeometric data: g = a x^2 + b x + c, r = d x + f, u = lambda,
 * the eigenvalue supplied per query. */
struct HypergeometricData {
    Rational a, b, c, d, f;
    Rational h;

    Poly g() const { return Poly{c, b, a}; }
    Poly r() const { return Poly{f, d}; }
    DifferenceEquation equation(const Rational& lambda) const {
        return DifferenceEquation(g(), r(), Poly::constant(lambda), h);
    }
};

/// theta(z) = a z (z-1) + d z + lambda; a degree-n solution forces theta(n) = 0.
Rational theta(const HypergeometricData& hyp, const Rational& lambda, const Rational& z);

/// The eigenvalue with theta(n) = 0: lambda_n = -n(n-1)a - n d.
Rational lambda_n(const HypergeometricData& hyp, unsigned n);

/* All pairs n < l <= n_max with lambda_n = lambda_l. Empty means the
 * eigenvalue-distinctness (regularity) condition holds up to n_max. */
std::vector<std::pair<int, int>> regularity_check(const HypergeometricData& hyp, int n_max);

}  // namespace hspoly
