#include "hspoly/contode.hpp"

#include <algorithm>

namespace hspoly {

Poly derivative(const Poly& p) {
    if (p.degree() <= 0)
        return {};
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        c.push_back(p.coeff(i) * Rational(i));
    return Poly(std::move(c));
}

namespace {

/* Certified sign of B(pole)/A'(pole) for an interval pole. The pole is a
 * simple root of A, so A' is bounded away from zero there after enough
 * refinement; rho = 0 exactly when the pole is also a root of B, which is
 * decided by the gcd factor beforehand. */
void interval_residue(ResidueEntry& e, const Poly& B, const Poly& Ad, bool known_zero) {
    if (known_zero) {
        e.exact = true;
        e.rho = 0;
        e.sign = 0;
        return;
    }
    Root pole = e.pole;
    for (int bits = 64; bits <= 8192; bits *= 2) {
        const auto [nlo, nhi] = interval_eval(B, pole.lo, pole.hi);
        const auto [dlo, dhi] = interval_eval(Ad, pole.lo, pole.hi);
        const bool den_definite = dlo > 0 || dhi < 0;
        const bool num_definite = nlo > 0 || nhi < 0;
        if (den_definite && num_definite) {
            const Rational c1 = nlo / dlo, c2 = nlo / dhi, c3 = nhi / dlo, c4 = nhi / dhi;
            e.rho_lo = std::min(std::min(c1, c2), std::min(c3, c4));
            e.rho_hi = std::max(std::max(c1, c2), std::max(c3, c4));
            e.sign = e.rho_lo > 0 ? 1 : -1;
            e.pole = pole;
            return;
        }
        refine_root(pole, bits);
        if (pole.exact()) {
            e.exact = true;
            e.rho = eval(B, pole.value()) / eval(Ad, pole.value());
            e.sign = e.rho == 0 ? 0 : (e.rho > 0 ? 1 : -1);
            e.pole = pole;
            return;
        }
    }
    throw numeric_error("residues: could not certify the sign of a residue");
}

/* Strict interleaving a_0 < b_0 < a_1 < ... < b_{m-1} < a_m, decided on
 * certified orderings (refining any overlapping pair of intervals). */
bool strictly_interlaced(RootList a, RootList b) {
    if (a.size() != b.size() + 1)
        return false;
    auto before = [](Root& x, Root& y) {
        for (int bits = 64; bits <= 8192; bits *= 2) {
            if (x.hi < y.lo)
                return true;
            if (y.hi < x.lo)
                return false;
            if (x.exact() && y.exact())
                return x.value() < y.value();  // equality -> not strictly before
            refine_root(x, bits);
            refine_root(y, bits);
        }
        throw numeric_error("residues: could not order two roots");
    };
    for (size_t i = 0; i < b.size(); ++i) {
        if (!before(a.roots[i], b.roots[i]))
            return false;
        if (!before(b.roots[i], a.roots[i + 1]))
            return false;
    }
    return true;
}

}  // namespace

ResidueTable residues(const Poly& A, const Poly& B) {
    if (A.is_zero() || A.degree() < 1)
        throw hypothesis_error("residues: A must be nonconstant");
    const RootList ar = real_roots(monic(A));
    if (!ar.all_simple())
        throw hypothesis_error("residues: A must be squarefree");
    if (!ar.all_real())
        throw hypothesis_error("residues: A must have only real roots");

    const Poly Ad = derivative(A);
    // poles shared with B have residue exactly zero
    const Poly common = B.is_zero() ? Poly{} : poly_gcd(A, B);

    ResidueTable out;
    for (const Root& pole : ar.roots) {
        ResidueEntry e;
        e.pole = pole;
        if (pole.exact()) {
            e.exact = true;
            e.rho = (B.is_zero() ? Rational(0) : eval(B, pole.value())) / eval(Ad, pole.value());
            e.sign = e.rho == 0 ? 0 : (e.rho > 0 ? 1 : -1);
        } else {
            const bool zero = B.is_zero() ||
                              (common.degree() >= 1 &&
                               sign_at(common, pole.lo) * sign_at(common, pole.hi) < 0);
            interval_residue(e, B, Ad, zero);
        }
        out.poles.push_back(std::move(e));
    }
    out.stieltjes = std::all_of(out.poles.begin(), out.poles.end(),
                                [](const ResidueEntry& e) { return e.sign > 0; });
    out.alternating = false;
    if (!B.is_zero() && B.degree() == A.degree() - 1) {
        const RootList br = real_roots(monic(B));
        if (br.all_real() && br.all_simple())
            out.alternating = strictly_interlaced(ar, br);
    }
    return out;
}

TtrrOutcome downward_ttrr(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& f, int n) {
    if (n < 0)
        throw error("downward_ttrr: negative degree");
    TtrrOutcome out;
    std::vector<Rational> coef(static_cast<size_t>(n) + 2, Rational(0));
    coef[static_cast<size_t>(n)] = 1;  // monic; a_{n,n+1} = 0
    for (int k = n - 1; k >= 0; --k) {
        TtrrStep step;
        step.k = k;
        step.lhs_factor = Rational(n - k) * (Rational(n + k - 1) * a + d);
        step.rhs = Rational(k + 1) * (Rational(k + 2) * c * coef[static_cast<size_t>(k) + 2] +
                                      (Rational(k) * b + f) * coef[static_cast<size_t>(k) + 1]);
        if (step.lhs_factor != 0) {
            coef[static_cast<size_t>(k)] = step.rhs / step.lhs_factor;
            step.status = TtrrStep::Status::determined;
        } else if (step.rhs == 0) {
            step.status = TtrrStep::Status::free_coefficient;
            out.free_indices.push_back(k);
            coef[static_cast<size_t>(k)] = 0;  // canonical representative
        } else {
            step.status = TtrrStep::Status::contradiction;
            out.failed_k = k;
            out.steps.push_back(step);
            return out;  // NoSolution
        }
        out.steps.push_back(step);
    }
    coef.pop_back();
    out.solution = Poly(std::move(coef));
    return out;
}

KernelBasis continuous_kernel(const ContinuousEquation& ceq, int degree_bound) {
    if (degree_bound < 0)
        throw error("continuous_kernel: negative degree bound");
    const int growth =
        std::max({ceq.A.degree() - 2, ceq.B2.degree() - 1, ceq.V.degree(), 0});
    const int rows = degree_bound + growth + 2;
    auto res_fn = [&](int j) {
        const Poly y = Poly::monomial(Rational(1), j);
        const Poly dy = derivative(y);
        return ceq.A * derivative(dy) + ceq.B2 * dy + ceq.V * y;
    };
    KernelBasis kb = detail::monomial_kernel(degree_bound, rows, res_fn);
    for (const Poly& p : kb.basis) {
        const Poly dp = derivative(p);
        if (!(ceq.A * derivative(dp) + ceq.B2 * dp + ceq.V * p).is_zero())
            throw error("continuous_kernel: basis element fails the residual check");
    }
    return kb;
}

DegeneracyReport classify_collision_case(const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& d, const Rational& f) {
    if (a == 0)
        throw hypothesis_error("classify_collision_case: requires a != 0");
    DegeneracyReport rep;
    const Rational kq = -d / a;
    if (!is_integer(kq) || kq <= 0) {
        rep.kind = DegeneracyKind::regular;
        return rep;
    }
    rep.k = numerator(kq);
    if (rep.k % 2 == 0) {
        rep.t = rep.k / 2;
        const Rational t(rep.t);
        if (f == -t * b) {
            rep.kind = DegeneracyKind::even_derivative_multiple;
            rep.note = "B2 = -t A' with t = " + rep.t.str();
        } else {
            rep.kind = DegeneracyKind::collision_only;
        }
        return rep;
    }
    rep.t = (rep.k + 1) / 2;
    const Rational t(rep.t);
    // residue pattern check needs the quadratic to split over the rationals
    const Int disc_num = numerator(b * b - 4 * a * c) * denominator(b * b - 4 * a * c);
    const Rational disc = b * b - 4 * a * c;
    if (disc <= 0) {
        rep.kind = DegeneracyKind::structure_unverified;
        rep.note = "A does not split into two distinct real rational roots";
        return rep;
    }
    (void)disc_num;
    // sqrt of the discriminant must be rational: check numerator and denominator
    const Int num = numerator(disc), den = denominator(disc);
    const Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) {
        rep.kind = DegeneracyKind::structure_unverified;
        rep.note = "A does not split over the rationals";
        return rep;
    }
    const Rational root_disc = make_rational(sn, sd);
    const Rational r1 = (-b - root_disc) / (2 * a);
    const Rational r2 = (-b + root_disc) / (2 * a);
    const Rational lo = std::min(r1, r2), hi = std::max(r1, r2);
    // rho at a simple pole p of B2/A is B2(p)/A'(p); the full first-order
    // coefficient enters here (its residues sum to d/a = -k, matching the
    // ladder -t - (t-1))
    const Poly B2{f, d};
    const Poly Ad{b, 2 * a};
    const Rational rho_lo = eval(B2, lo) / eval(Ad, lo);
    const Rational rho_hi = eval(B2, hi) / eval(Ad, hi);
    // either assignment of {-t, -(t-1)} to the two roots: the reflected
    // instance x -> a0 + a1 - x swaps them and is just as degenerate
    const bool ladder = (rho_lo == -t && rho_hi == -(t - 1)) || (rho_hi == -t && rho_lo == -(t - 1));
    if (ladder) {
        rep.kind = DegeneracyKind::odd_residue_ladder;
        rep.note = "residues of B2/A are {-t, -(t-1)} with t = " + rep.t.str();
    } else {
        rep.kind = DegeneracyKind::collision_only;
    }
    return rep;
}

}  // namespace hspoly
