#pragma once

#include "hspoly/roots.hpp"
#include "hspoly/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hspoly {

/* Continuous counterpart A(x) y'' + B2(x) y' + V(x) y = 0; B2 is the full
 * first-order coefficient ("2B(x)" in the Stieltjes normalization, or
 * d x + f in the hypergeometric case); a constant V plays the eigenvalue. */
struct ContinuousEquation {
    Poly A, B2, V;

    ContinuousEquation(Poly a, Poly b2, Poly v) : A(std::move(a)), B2(std::move(b2)), V(std::move(v)) {
        if (A.is_zero())
            throw hypothesis_error("continuous equation requires nonzero A");
    }
};

/// Exact formal derivative (the only module where derivatives occur).
Poly derivative(const Poly& p);

/* Partial-fraction residues of B/A at the simple poles of A:
 * rho_nu = B(a_nu) / A'(a_nu). Exact at rational poles, certified-interval
 * bounds otherwise. stieltjes = all residues positive; alternating = the
 * zeros of A strictly interlace those of B (with deg B = deg A - 1). */
struct ResidueEntry {
    Root pole;
    bool exact = false;
    Rational rho;            // exact value when exact
    Rational rho_lo, rho_hi; // certified bounds otherwise
    int sign = 0;            // certified sign of rho
};

struct ResidueTable {
    std::vector<ResidueEntry> poles;
    bool stieltjes = false;
    bool alternating = false;
};

/// Requires A squarefree with all roots real.
ResidueTable residues(const Poly& A, const Poly& B);

/* Downward three-term recurrence for the monic degree-n solution of
 * (a x^2 + b x + c) y'' + (d x + f) y' + lambda y = 0 at lambda_n:
 *   (n-k)[(n+k-1)a + d] a_{n,k} = (k+1)[(k+2) c a_{n,k+2} + (k b + f) a_{n,k+1}]
 * run for k = n-1 .. 0 from a_{n,n} = 1, a_{n,n+1} = 0. A step 0 = nonzero
 * means no solution; a step 0 = 0 leaves the coefficient free (recorded,
 * set to zero in the returned polynomial). */
struct TtrrStep {
    int k = 0;
    Rational lhs_factor;  // (n-k)[(n+k-1)a + d]
    Rational rhs;         // fully resolved right-hand side
    enum class Status { determined, free_coefficient, contradiction } status = Status::determined;
};

struct TtrrOutcome {
    std::optional<Poly> solution;   // nullopt = NoSolution
    std::vector<int> free_indices;  // degenerate 0 = 0 steps
    int failed_k = -1;              // step of the 0 = nonzero contradiction
    std::vector<TtrrStep> steps;    // full downward log
};

TtrrOutcome downward_ttrr(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& f, int n);

/// Exact nullspace of y -> A y'' + B2 y' + V y up to the degree bound.
KernelBasis continuous_kernel(const ContinuousEquation& ceq, int degree_bound);

/* Collision / degeneracy classifier for the continuous hypergeometric
 * family, keyed on k = -d/a:
 *   regular                 k is not a positive integer;
 *   even_derivative_multiple k = 2t and f = -t b, i.e. B2 = -t A'
 *                           (all residues of B/A is then negative);
 *   odd_residue_ladder      k = 2t-1 and the residues of B/A are exactly
 *                           {-t at the smaller root, -(t-1) at the larger};
 *   collision_only          k collides but neither structure holds;
 *   structure_unverified    k = 2t-1 but A is not a rational-splitting
 *                           quadratic, so the residue pattern cannot be
 *                           checked exactly.
 * The two structured cases are where a second polynomial solution can
 * appear; collision_only keeps one-dimensional kernels. */
enum class DegeneracyKind {
    regular,
    even_derivative_multiple,
    odd_residue_ladder,
    collision_only,
    structure_unverified,
};

struct DegeneracyReport {
    DegeneracyKind kind = DegeneracyKind::regular;
    Int k = 0;  // -d/a when integral
    Int t = 0;
    std::string note;
};

DegeneracyReport classify_collision_case(const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& d, const Rational& f);

}  // namespace hspoly
