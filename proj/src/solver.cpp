#include "hspoly/solver.hpp"

#include <algorithm>

namespace hspoly {

KernelBasis polynomial_kernel(const DifferenceEquation& eq, int degree_bound) {
    if (degree_bound < 0)
        throw error("polynomial_kernel: negative degree bound");
    // row bound n + max(deg g - 2, deg r - 1, deg u) + 2; excess rows stay zero
    const int growth = std::max({eq.g.degree() - 2, eq.r.degree() - 1, eq.u.degree(), 0});
    const int rows = degree_bound + growth + 2;
    KernelBasis kb = detail::monomial_kernel(degree_bound, rows, [&](int j) {
        return residual(eq, Poly::monomial(Rational(1), j));
    });
    for (const Poly& p : kb.basis)
        if (!residual(eq, p).is_zero())
            throw error("polynomial_kernel: basis element fails the residual check");
    return kb;
}

std::vector<EigenScanEntry> eigen_scan(const HypergeometricData& hyp, int n_max) {
    if (n_max < 0)
        throw error("eigen_scan: negative n_max");
    std::vector<EigenScanEntry> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        EigenScanEntry e;
        e.n = n;
        e.lambda = lambda_n(hyp, static_cast<unsigned>(n));
        e.kernel = polynomial_kernel(hyp.equation(e.lambda), n_max);
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<std::pair<Rational, Rational>> linear_dependence(const Poly& y1, const Poly& y2) {
    if (y1.is_zero() && y2.is_zero())
        throw error("linear_dependence: both polynomials are zero");
    if (y1.is_zero() || y2.is_zero())
        return std::nullopt;  // no combination with both constants nonzero
    if (y1.degree() != y2.degree())
        return std::nullopt;
    if (y1 * y2.lc() != y2 * y1.lc())
        return std::nullopt;
    return std::make_pair(y2.lc(), -y1.lc());
}

}  // namespace hspoly
