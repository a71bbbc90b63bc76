#include "hspoly/bethe.hpp"

#include <algorithm>

namespace hspoly {

RootSet RootSet::of(std::vector<Real> roots, const Real& min_gap) {
    std::sort(roots.begin(), roots.end());
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        if (abs(roots[i + 1] - roots[i]) <= min_gap)
            throw hypothesis_error("RootSet: zeros must be pairwise distinct");
    RootSet rs;
    rs.roots = std::move(roots);
    return rs;
}

LeadingCondition leading_degree_condition(const DifferenceEquation& eq, int n) {
    if (n < 0)
        throw error("leading_degree_condition: negative degree");
    LeadingCondition out;
    // lower coefficients must not feed the degree-n coefficient
    for (int j = 0; j < n; ++j) {
        const Poly res = residual(eq, Poly::monomial(Rational(1), j));
        if (res.coeff(n) != 0) {
            out.holds = false;
            out.diagnostic = "coefficient degree too high: the x^" + std::to_string(j) +
                             " monomial feeds the degree-" + std::to_string(n) + " residual term";
            return out;
        }
    }
    const Poly top = residual(eq, Poly::monomial(Rational(1), n));
    out.holds = top.coeff(n) == 0;
    if (!out.holds)
        out.diagnostic = "leading coefficient combination is " + to_string(top.coeff(n));
    return out;
}

BaeReport verify_solution_via_bae(const DifferenceEquation& eq, const RootSet& roots, const Real& tol) {
    const int n = static_cast<int>(roots.size());
    const LeadingCondition lead = leading_degree_condition(eq, n);
    if (!lead.holds)
        throw hypothesis_error("verify_solution_via_bae: leading-degree condition fails: " +
                               lead.diagnostic);

    BaeReport rep;
    rep.tolerance = tol;
    rep.max_bae_residual = Real(0);
    rep.max_equation_coeff = Real(0);

    for (size_t k = 0; k < roots.roots.size(); ++k) {
        const Real r = abs(bae_residual(eq, roots.roots, k));
        rep.residuals.push_back(r);
        rep.max_bae_residual = std::max(rep.max_bae_residual, r);
    }
    rep.bae_pass = rep.max_bae_residual < tol;

    const RealPoly y = RealPoly::from_roots(roots.roots);
    const RealPoly res = residual(eq, y);
    for (const Real& c : res.coeffs())
        rep.max_equation_coeff = std::max(rep.max_equation_coeff, Real(abs(c)));
    rep.equation_pass = rep.max_equation_coeff < tol;

    rep.equivalent = rep.bae_pass == rep.equation_pass;
    rep.pass = rep.bae_pass && rep.equation_pass;
    return rep;
}

SolutionZeros polynomial_real_zeros(const Poly& y, int digits) {
    SolutionZeros out;
    if (y.is_zero())
        throw error("polynomial_real_zeros: zero polynomial");
    const RootList rl = real_roots(y);
    if (!rl.all_real()) {
        out.status = SolutionZeros::Status::complex_zeros;
        return out;
    }
    if (!rl.all_simple()) {
        out.status = SolutionZeros::Status::repeated_zeros;
        return out;
    }
    for (const Root& r : rl.roots)
        out.zeros.push_back(root_to_real(r, digits));
    return out;
}

}  // namespace hspoly
