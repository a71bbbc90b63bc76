/* Acceptance suite for the difference-equation polynomial toolkit.
 * Each criterion prints exactly one PASS/FAIL line; the process exits
 * nonzero if any criterion fails. Tolerances are pinned here, in code. */

#include "hspoly/bethe.hpp"
#include "hspoly/casoratian.hpp"
#include "hspoly/contode.hpp"
#include "hspoly/corpus.hpp"
#include "hspoly/gammah.hpp"
#include "hspoly/norlund.hpp"
#include "hspoly/solver.hpp"
#include "hspoly/uniqueness.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

using namespace hspoly;

namespace {

const Poly X{Rational(0), Rational(1)};
int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << index << ". " << name;
    if (!detail.empty())
        std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass)
        ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    Rational rational(int mag = 9, int den = 9) { return make_rational(pick(-mag, mag), pick(1, den)); }
    Rational nonzero(int mag = 9, int den = 9) {
        while (true) {
            Rational q = rational(mag, den);
            if (q != 0)
                return q;
        }
    }
    Rational positive(int mag = 9, int den = 9) {
        Rational q = nonzero(mag, den);
        return q > 0 ? q : -q;
    }
    Poly poly(int deg_max, int mag = 6, int den = 4) {
        std::vector<Rational> c;
        const int deg = pick(0, deg_max);
        for (int i = 0; i <= deg; ++i)
            c.push_back(rational(mag, den));
        return Poly(std::move(c));
    }
};

/* 1. Hypergeometric nondegeneracy: exact kernel dimension <= 1 at every
 * lambda_n, n <= 10, across 100 seeded random instances with a != 0.
 * The fully degenerate subfamily r = 0 (d = f = 0) is redrawn: at
 * lambda_0 = 0 its kernel is {1, x} by inspection, and it sits outside
 * the certificates' hypotheses (g - hr = g collides everywhere). */
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240601);
    bool ok = true;
    std::string detail;
    for (int inst = 0; inst < 100 && ok; ++inst) {
        HypergeometricData hyp;
        hyp.a = rng.nonzero(6, 4);
        hyp.b = rng.rational(6, 4);
        hyp.c = rng.rational(6, 4);
        do {
            hyp.d = rng.rational(6, 4);
            hyp.f = rng.rational(6, 4);
        } while (hyp.d == 0 && hyp.f == 0);
        hyp.h = rng.positive(4, 3);
        for (unsigned n = 0; n <= 10 && ok; ++n) {
            const KernelBasis kb = polynomial_kernel(hyp.equation(lambda_n(hyp, n)), 12);
            if (kb.dimension > 1) {
                ok = false;
                detail = "instance " + std::to_string(inst) + ", n = " + std::to_string(n) +
                         ", dimension " + std::to_string(kb.dimension);
            }
        }
    }
    const double el = seconds_since(t0);
    if (el >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(el) + " s exceeds 60 s";
    }
    report(1, "hypergeometric nondegeneracy (100 instances, n <= 10, exact)", ok,
           detail.empty() ? std::to_string(el).substr(0, 5) + " s" : detail);
}

/* 2. Certificate soundness: instances built to satisfy the upward-lattice
 * or root-count hypotheses must certify, and their kernels stay at most
 * one-dimensional for every degree bound <= 15 (subspace argument: the
 * bound-15 kernel contains all smaller-bound kernels). */
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(20240602);
    bool ok = true;
    std::string detail;
    for (int inst = 0; inst < 100 && ok; ++inst) {
        const Rational h = rng.positive(3, 2);
        Poly A, g;
        if (inst % 2 == 0) {
            // top a-root strictly above every b-root: clean upward lattice
            Rational b1 = rng.rational(5, 3), b2;
            do {
                b2 = rng.rational(5, 3);
            } while (b2 == b1);
            const Rational top = std::max(b1, b2) + h + make_rational(1, 7);
            g = Poly::from_roots(std::vector<Rational>{b1, b2});
            A = Poly::from_roots(std::vector<Rational>{top, top - 3 * h - make_rational(1, 5)});
        } else {
            // three a-roots against one b-root on one lattice
            const Rational anchor = rng.rational(5, 3);
            A = Poly::from_roots(
                std::vector<Rational>{anchor, anchor + h, anchor + 2 * h});
            g = Poly::from_roots(std::vector<Rational>{anchor + 5 * h,
                                                       anchor + h / 2 + make_rational(1, 11)});
        }
        const DifferenceEquation eq(g, (g - A) / h, rng.poly(2, 4, 3), h);
        const UniquenessCertificate cert = certify(eq);
        if (cert.verdict == Verdict::INCONCLUSIVE) {
            ok = false;
            detail = "instance " + std::to_string(inst) + " not certified";
            break;
        }
        const KernelBasis kb = polynomial_kernel(eq, 15);
        if (kb.dimension > 1) {
            ok = false;
            detail = "instance " + std::to_string(inst) + ": dimension " +
                     std::to_string(kb.dimension);
        }
    }
    const double el = seconds_since(t0);
    if (el >= 120.0) {
        ok = false;
        detail = "runtime " + std::to_string(el) + " s exceeds 120 s";
    }
    report(2, "certificate soundness (100 constructed instances, bounds <= 15, exact)", ok,
           detail.empty() ? std::to_string(el).substr(0, 5) + " s" : detail);
}

/* 3. Exact Casoratian recurrence W(x+h) g(x) = (g - h r)(x) W(x) at 30
 * lattice points for 20 instances with independently seeded solutions. */
void criterion_3() {
    Rng rng(20240603);
    int checked = 0;
    bool ok = true;
    std::string detail;
    while (checked < 20 && ok) {
        Poly g = rng.poly(3, 5, 3);
        if (g.is_zero())
            continue;
        const Rational h = rng.positive(3, 2);
        const DifferenceEquation eq(g, rng.poly(2, 5, 3), rng.poly(1, 5, 3), h);
        // start past the Cauchy root bound of g so no lattice pole appears
        Rational m(0);
        for (int i = 0; i <= g.degree(); ++i)
            m = std::max(m, abs(g.coeff(i)));
        const Rational x0 = Rational(1) + m / abs(g.lc()) + make_rational(1, 7);
        const auto y1 = cauchy_iterate(eq, x0, Rational(1), Rational(0), 31);
        const auto y2 = cauchy_iterate(eq, x0, Rational(0), Rational(1), 31);
        const auto w = casoratian_values(y1, y2, h);
        const Poly gmhr = eq.g - h * eq.r;
        Rational x = x0;
        for (int k = 0; k < 30; ++k) {
            if (w[static_cast<size_t>(k) + 1] * eval(eq.g, x) != eval(gmhr, x) * w[static_cast<size_t>(k)]) {
                ok = false;
                detail = "instance " + std::to_string(checked) + ", point " + std::to_string(k);
                break;
            }
            x += h;
        }
        ++checked;
    }
    report(3, "Casoratian recurrence exact at 30 points x 20 instances", ok, detail);
}

/* 4. Abel closed form: W / (kappa^{(x-h/2)/h} prod Gamma_h / prod Gamma_h)
 * constant across 20 points, relative stddev < 1e-9 at 64-digit precision;
 * 10 instances with kappa = 1 and 5 with kappa != 1. */
void criterion_4() {
    PrecisionGuard guard(64);
    Rng rng(20240604);
    bool ok = true;
    std::string detail;
    const Real tol("1e-9");
    const std::vector<Rational> steps{Rational(1), make_rational(1, 2), Rational(2)};
    const std::vector<Rational> kappas{Rational(2), Rational(3), make_rational(1, 3), Rational(5),
                                       make_rational(2, 7)};
    for (int inst = 0; inst < 15 && ok; ++inst) {
        const Rational h = steps[static_cast<size_t>(inst) % steps.size()];
        const bool unit_kappa = inst < 10;
        std::vector<Rational> a_roots, b_roots;
        a_roots.push_back(rng.rational(4, 3));
        if (rng.pick(0, 1))
            a_roots.push_back(a_roots[0] - h - make_rational(1, 5));
        b_roots.push_back(rng.rational(4, 3));
        if (rng.pick(0, 1))
            b_roots.push_back(b_roots[0] - 2 * h - make_rational(1, 11));
        Poly A = Poly::from_roots(a_roots);
        if (!unit_kappa)
            A = kappas[static_cast<size_t>(inst - 10)] * A;
        const Poly g = Poly::from_roots(b_roots);
        const DifferenceEquation eq(g, (g - A) / h, rng.poly(1, 3, 2), h);
        Rational top(0);
        for (const Rational& r : a_roots)
            top = std::max(top, r);
        for (const Rational& r : b_roots)
            top = std::max(top, r);
        const AbelReport rep = run_abel_verification(eq, top + h + make_rational(1, 7), 20);
        if (!rep.recurrence_exact || rep.identically_zero || !(rep.ratio_rel_stddev < tol)) {
            ok = false;
            detail = "instance " + std::to_string(inst) + ", rel stddev " +
                     real_to_string(rep.ratio_rel_stddev, 6);
        }
    }
    report(4, "Abel closed form constant (10 kappa = 1, 5 kappa != 1, rel stddev < 1e-9)", ok,
           detail);
}

/* 5. Root-relation verification on the classical families: degrees up to
 * 12 with distinct zeros give max residual < 1e-8 at 50-digit roots, and
 * perturbing any single root by 1e-3 flips the verdict. */
void criterion_5() {
    bool ok = true;
    std::string detail;
    const Real tol("1e-8");
    int verified = 0;
    const auto fixtures = load_corpus_fixtures(std::string(HSPOLY_SOURCE_DIR) + "/fixtures/corpus.json");
    for (const auto& [fam, entry] : fixtures) {
        for (unsigned n = 1; n <= 12 && ok; ++n) {
            const DifferenceEquation eq = entry.equation_for_degree(n);
            const KernelBasis kb = polynomial_kernel(eq, static_cast<int>(n));
            if (kb.dimension != 1) {
                ok = false;
                detail = family_name(fam) + " n=" + std::to_string(n) + ": dimension " +
                         std::to_string(kb.dimension);
                break;
            }
            const SolutionZeros sz = polynomial_real_zeros(kb.basis[0], 50);
            if (sz.status != SolutionZeros::Status::ok)
                continue;  // only distinct-zero solutions enter the check
            const RootSet rs = RootSet::of(sz.zeros, Real("1e-30"));
            BaeReport rep;
            try {
                rep = verify_solution_via_bae(eq, rs, tol);
            } catch (const error& ex) {
                ok = false;
                detail = family_name(fam) + " n=" + std::to_string(n) + ": " + ex.what();
                break;
            }
            if (!rep.pass || !rep.equivalent) {
                ok = false;
                detail = family_name(fam) + " n=" + std::to_string(n) + ": max residual " +
                         real_to_string(rep.max_bae_residual, 6);
                break;
            }
            ++verified;
            for (size_t k = 0; k < rs.roots.size() && ok; ++k) {
                RootSet perturbed = rs;
                perturbed.roots[k] += Real("1e-3");
                bool flipped;
                try {
                    flipped = !verify_solution_via_bae(eq, perturbed, tol).pass;
                } catch (const error&) {
                    flipped = true;  // degenerate geometry counts as a rejection
                }
                if (!flipped) {
                    ok = false;
                    detail = family_name(fam) + " n=" + std::to_string(n) + ": perturbed root " +
                             std::to_string(k) + " still passes";
                }
            }
        }
    }
    if (ok && verified < 40) {
        ok = false;
        detail = "only " + std::to_string(verified) + " of 48 solutions had distinct zeros";
    }
    report(5, "Bethe-Ansatz residuals on the corpus (n <= 12, tol 1e-8, perturbation flips)", ok,
           detail.empty() ? std::to_string(verified) + "/48 verified" : detail);
}

/* 6. Continuous degenerate cases. */
void criterion_6() {
    bool ok = true;
    std::string detail;

    const ContinuousEquation deg2(X * X + Poly::constant(Rational(5)), Rational(-2) * X,
                                  Poly::constant(Rational(2)));
    const KernelBasis kb = continuous_kernel(deg2, 4);
    const Poly target = X * X - Poly::constant(Rational(5));
    bool span_ok = kb.dimension == 2;
    for (const Poly& p : kb.basis) {
        const Poly expect = p.coeff(1) * X + p.coeff(2) * target;
        span_ok = span_ok && p == expect;
    }
    if (!span_ok) {
        ok = false;
        detail = "degenerate kernel is not span{x, x^2 - 5} (dimension " +
                 std::to_string(kb.dimension) + ")";
    }

    const ContinuousEquation coll(X * X + Poly::constant(Rational(5)),
                                  Rational(-2) * X + Poly::constant(Rational(1)),
                                  Poly::constant(Rational(2)));
    if (continuous_kernel(coll, 4).dimension > 1) {
        ok = false;
        detail = "collision-only variant exceeded dimension 1";
    }

    const TtrrOutcome ttrr = downward_ttrr(Rational(1), Rational(0), Rational(1), Rational(-1),
                                           Rational(0), 2);
    if (ttrr.solution.has_value()) {
        ok = false;
        detail = "TTRR unexpectedly produced a degree-2 solution";
    }
    // lambda_2 = -2a - 2d = 0; no degree-2 element may appear in the kernel
    const ContinuousEquation none(X * X + Poly::constant(Rational(1)), -X, Poly{});
    for (const Poly& p : continuous_kernel(none, 2).basis)
        if (p.degree() == 2) {
            ok = false;
            detail = "nonexistence instance produced a degree-2 element";
        }

    report(6, "continuous degeneracy: {x, x^2-5} kernel, collision-only <= 1, TTRR nonexistence",
           ok, detail);
}

/* 7. Noerlund principal sums. */
void criterion_7() {
    bool ok = true;
    std::string detail;
    const RegularizationConfig cfg = RegularizationConfig::defaults();

    struct Tuple {
        Rational a, c, h, x;
    };
    const std::vector<Tuple> tuples{
        {Rational(1), Rational(0), Rational(1), Rational(3)},
        {Rational(2), Rational(1), Rational(1), Rational(5)},
        {make_rational(1, 2), Rational(0), make_rational(1, 2), Rational(2)},
        {Rational(-3), Rational(2), Rational(1), Rational(6)},
        {Rational(5), Rational(0), Rational(2), Rational(7)},
    };
    for (size_t i = 0; i < tuples.size() && ok; ++i) {
        const auto& t = tuples[i];
        const NorlundResult res = principal_sum_numeric(PhiSpec::constant(t.a), t.c, t.x, t.h, cfg);
        const Real closed = principal_sum_closed(ClosedKind::constant, t.a, t.c, t.x, t.h);
        if (!(abs(res.value - closed) < Real("1e-6"))) {
            ok = false;
            detail = "constant tuple " + std::to_string(i) + " off by " +
                     real_to_string(abs(res.value - closed), 6);
        }
    }

    if (ok) {
        const NorlundResult res =
            principal_sum_numeric(PhiSpec::exponential(), Rational(0), Rational(0), Rational(1), cfg);
        const Real closed =
            principal_sum_closed(ClosedKind::exponential, Rational(1), Rational(0), Rational(0), Rational(1));
        if (!(abs(res.value - closed) < Real("1e-10"))) {
            ok = false;
            detail = "exponential case off by " + real_to_string(abs(res.value - closed), 6);
        }
    }

    if (ok) {
        RegularizationConfig cfg2 = cfg;
        cfg2.p = 2;
        const NorlundResult r1 =
            principal_sum_numeric(PhiSpec::constant(Rational(1)), Rational(0), Rational(3), Rational(1), cfg);
        const NorlundResult r2 =
            principal_sum_numeric(PhiSpec::constant(Rational(1)), Rational(0), Rational(3), Rational(1), cfg2);
        if (!(abs(r1.value - r2.value) < Real("1e-6"))) {
            ok = false;
            detail = "p = 1 vs p = 2 differ by " + real_to_string(abs(r1.value - r2.value), 6);
        }
    }

    report(7, "Noerlund sums: constant 1e-6 (5 tuples), exponential 1e-10, p-independence 1e-6",
           ok, detail);
}

/* 8. Generalized gamma identities. */
void criterion_8() {
    bool ok = true;
    std::string detail;
    const Real tol("1e-12");
    const std::vector<Rational> hs{make_rational(1, 2), Rational(1), Rational(2), make_rational(7, 3)};

    for (const Rational& h : hs) {
        for (unsigned n = 0; n <= 20 && ok; ++n) {
            const Rational exact = gamma_h_factorial(n, h);
            const Real via = gamma_h(Rational(Rational(n) * h + h), h).value;
            if (!(abs(via - to_real(exact)) / to_real(exact) < tol)) {
                ok = false;
                detail = "factorial identity at n=" + std::to_string(n) + ", h=" + to_string(h);
            }
        }
        Rational x = h / 2;
        for (int i = 0; i < 30 && ok; ++i) {
            const Real lhs = gamma_h(Rational(x + h), h).value;
            const Real rhs = to_real(x) * gamma_h(x, h).value;
            if (!(abs(lhs - rhs) / abs(lhs) < tol)) {
                ok = false;
                detail = "recurrence at x=" + to_string(x) + ", h=" + to_string(h);
            }
            x += h * make_rational(2, 3);
        }
        for (int k = 0; k <= 10 && ok; ++k) {
            if (!gamma_h_pole(Rational(-Rational(k) * h), h)) {
                ok = false;
                detail = "missed pole at -" + std::to_string(k) + "h";
            }
            if (gamma_h_pole(Rational(-Rational(k) * h + h / 2), h)) {
                ok = false;
                detail = "false pole at -" + std::to_string(k) + "h + h/2";
            }
        }
    }
    report(8, "Gamma_h identities: h^n n! and recurrence to 1e-12, exact pole predicate", ok, detail);
}

}  // namespace

int main() {
    set_default_digits(64);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
