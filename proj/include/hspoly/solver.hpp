#pragma once

#include "hspoly/fdeq.hpp"
#include "hspoly/linalg.hpp"

#include <optional>

namespace hspoly {

/* All polynomial solutions of degree <= degree_bound, as an exact
 * nullspace basis of the linear residual map. dimension is the number of
 * linearly independent polynomial solutions within the bound; a value
 * above one at a fixed u is a direct counterexample to nondegeneracy. */
struct KernelBasis {
    int degree_bound = -1;
    std::vector<Poly> basis;
    int dimension = 0;
};

KernelBasis polynomial_kernel(const DifferenceEquation& eq, int degree_bound);

struct EigenScanEntry {
    int n = 0;
    Rational lambda;
    KernelBasis kernel;
};

/* For each n <= n_max set u = lambda_n and report the kernel at degree
 * bound n_max, so eigenvalue collisions surface as enlarged kernels or
 * as missing degrees. */
std::vector<EigenScanEntry> eigen_scan(const HypergeometricData& hyp, int n_max);

/* Constants (C1, C2), both nonzero, with C1 y1 + C2 y2 = 0 when the
 * polynomials are proportional; nullopt otherwise. */
std::optional<std::pair<Rational, Rational>> linear_dependence(const Poly& y1, const Poly& y2);

namespace detail {
/* Shared residual-matrix builder: column j holds the coefficients of
 * residual(x^j); res_fn supplies the residual of a monomial. */
template <class ResFn>
KernelBasis monomial_kernel(int degree_bound, int row_count, ResFn&& res_fn) {
    RationalMatrix m(row_count, degree_bound + 1);
    for (int j = 0; j <= degree_bound; ++j) {
        const Poly res = res_fn(j);
        if (res.degree() >= row_count)
            throw error("monomial_kernel: residual degree exceeds the row bound");
        for (int i = 0; i <= res.degree(); ++i)
            m.at(i, j) = res.coeff(i);
    }
    KernelBasis out;
    out.degree_bound = degree_bound;
    for (auto& v : nullspace(m))
        out.basis.emplace_back(std::move(v));
    out.dimension = static_cast<int>(out.basis.size());
    // independence double-checked by exact rank
    if (out.dimension > 0) {
        RationalMatrix bm(out.dimension, degree_bound + 1);
        for (int i = 0; i < out.dimension; ++i)
            for (int j = 0; j <= degree_bound; ++j)
                bm.at(i, j) = out.basis[static_cast<size_t>(i)].coeff(j);
        if (exact_rank(bm) != out.dimension)
            throw error("monomial_kernel: basis is not linearly independent");
    }
    return out;
}
}  // namespace detail

}  // namespace hspoly
