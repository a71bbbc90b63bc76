#include "hspoly/fdeq.hpp"

namespace hspoly {

RecurrenceForm to_recurrence_form(const DifferenceEquation& eq) {
    RecurrenceForm rf;
    rf.c2 = eq.g;
    rf.c1 = eq.h * eq.r + (eq.h * eq.h) * eq.u - Rational(2) * eq.g;
    rf.c0 = eq.g - eq.h * eq.r;
    return rf;
}

AbsorbedForm absorbed_form(const DifferenceEquation& eq) {
    return {eq.g, eq.r + eq.h * eq.u, eq.u};
}

std::vector<Rational> cauchy_iterate(const DifferenceEquation& eq, const Rational& x0,
                                     const Rational& y0, const Rational& y1, int steps) {
    if (steps < 1)
        throw error("cauchy_iterate: need at least one step");
    const RecurrenceForm rf = to_recurrence_form(eq);
    std::vector<Rational> y{y0, y1};
    y.reserve(static_cast<size_t>(steps) + 2);
    Rational x = x0;
    for (int k = 0; k < steps; ++k) {
        const Rational c2 = eval(rf.c2, x);
        if (c2 == 0)
            throw pole_error("cauchy_iterate: g vanishes at lattice point x = " + to_string(x));
        const Rational c1 = eval(rf.c1, x);
        const Rational c0 = eval(rf.c0, x);
        y.push_back(-(c1 * y[y.size() - 1] + c0 * y[y.size() - 2]) / c2);
        x += eq.h;
    }
    return y;
}

Rational theta(const HypergeometricData& hyp, const Rational& lambda, const Rational& z) {
    return hyp.a * z * (z - 1) + hyp.d * z + lambda;
}

Rational lambda_n(const HypergeometricData& hyp, unsigned n) {
    const Rational nn(n);
    return -nn * (nn - 1) * hyp.a - nn * hyp.d;
}

std::vector<std::pair<int, int>> regularity_check(const HypergeometricData& hyp, int n_max) {
    std::vector<std::pair<int, int>> collisions;
    std::vector<Rational> lam;
    lam.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        lam.push_back(lambda_n(hyp, static_cast<unsigned>(n)));
    for (int n = 0; n <= n_max; ++n)
        for (int l = n + 1; l <= n_max; ++l)
            if (lam[static_cast<size_t>(n)] == lam[static_cast<size_t>(l)])
                collisions.emplace_back(n, l);
    return collisions;
}

}  // namespace hspoly
