#include "doctest.h"
#include "test_helpers.hpp"

#include "hspoly/bethe.hpp"
#include "hspoly/solver.hpp"

#include <algorithm>

using namespace hspoly;

namespace {
const Poly X{Rational(0), Rational(1)};

DifferenceEquation sample_eq() {
    return DifferenceEquation(X * X, X + Poly::constant(Rational(2)),
                              Poly::constant(Rational(-1)), Rational(1));
}
}  // namespace

TEST_CASE("bae_residual") {
    const DifferenceEquation eq = sample_eq();
    SUBCASE("single root: the left side is always -1") {
        // exact rational route
        const std::vector<Rational> roots{Rational(-1)};
        CHECK(bae_residual(eq, roots, 0) == 0);
        // RHS = [r(-2) - g(-2)]/g(-2) = (0 - 4)/4 = -1 cancels the -1
        const std::vector<Rational> other{Rational(4)};
        // for x1 = 4: RHS = [r(3) - g(3)]/g(3) = (5 - 9)/9; residual = -1 + 4/9
        CHECK(bae_residual(eq, other, 0) == make_rational(-5, 9));
    }
    SUBCASE("perturbed root leaves a visible residual") {
        const std::vector<Rational> perturbed{make_rational(-9, 10)};
        const Rational res = bae_residual(eq, perturbed, 0);
        CHECK(abs(res) > make_rational(1, 100));
    }
    SUBCASE("denominator-zero inputs are named") {
        // x1 - x2 = h makes a left denominator vanish
        const std::vector<Rational> bad{Rational(0), Rational(1)};
        CHECK_THROWS_AS(bae_residual(eq, bad, 1), pole_error);
        // g(x1 - h) = 0
        const std::vector<Rational> pole{Rational(1)};
        CHECK_THROWS_AS(bae_residual(eq, pole, 0), pole_error);
    }
    SUBCASE("permutation invariance of the residual multiset") {
        testing::Rng rng(101);
        const DifferenceEquation req(X * X + Poly::constant(Rational(7)), X, Poly::constant(Rational(1)),
                                     Rational(1));
        std::vector<Real> roots;
        for (int i = 0; i < 5; ++i)
            roots.push_back(Real(i) + Real("0.25") + Real(i) / 100);  // gaps never equal h
        std::vector<Real> res1, res2;
        for (size_t k = 0; k < roots.size(); ++k)
            res1.push_back(bae_residual(req, roots, k));
        std::vector<Real> shuffled = roots;
        std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
        for (size_t k = 0; k < shuffled.size(); ++k)
            res2.push_back(bae_residual(req, shuffled, k));
        // same multiset: sort both
        std::sort(res1.begin(), res1.end());
        std::sort(res2.begin(), res2.end());
        for (size_t k = 0; k < res1.size(); ++k)
            CHECK(abs(res1[k] - res2[k]) < Real("1e-50"));
    }
}

TEST_CASE("leading_degree_condition") {
    HypergeometricData hyp{Rational(1), Rational(0), Rational(0), Rational(2), Rational(0), Rational(1)};
    SUBCASE("holds exactly at lambda_n") {
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(leading_degree_condition(hyp.equation(lambda_n(hyp, n)), static_cast<int>(n)).holds);
            // equals the characteristic-root condition
            CHECK(theta(hyp, lambda_n(hyp, n), Rational(n)) == 0);
        }
    }
    SUBCASE("fails off the ladder") {
        const auto lc = leading_degree_condition(hyp.equation(Rational(5)), 3);
        CHECK(!lc.holds);
        CHECK(!lc.diagnostic.empty());
    }
    SUBCASE("oversized u degree is diagnosed") {
        const DifferenceEquation eq(X * X, X, X, Rational(1));  // deg u = 1
        const auto lc = leading_degree_condition(eq, 3);
        CHECK(!lc.holds);
        CHECK(lc.diagnostic.find("degree") != std::string::npos);
    }
}

TEST_CASE("verify_solution_via_bae") {
    SUBCASE("the known linear solution passes, a perturbation fails") {
        const DifferenceEquation eq = sample_eq();
        RootSet rs;
        rs.roots = {Real(-1)};
        const BaeReport rep = verify_solution_via_bae(eq, rs, Real("1e-8"));
        CHECK(rep.pass);
        CHECK(rep.equivalent);

        RootSet bad;
        bad.roots = {Real(-1) + Real("1e-3")};
        const BaeReport rep2 = verify_solution_via_bae(eq, bad, Real("1e-8"));
        CHECK(!rep2.pass);
        CHECK(rep2.equivalent);
    }
    SUBCASE("empty root set with u = 0: constants solve, vacuous pass") {
        const DifferenceEquation eq(X * X, X + Poly::constant(Rational(2)), Poly{}, Rational(1));
        RootSet rs;
        const BaeReport rep = verify_solution_via_bae(eq, rs, Real("1e-8"));
        CHECK(rep.pass);
    }
    SUBCASE("computed solution roots verify end to end") {
        // degree-3 Charlier-type instance (mean 2): zeros are real and distinct
        const DifferenceEquation eq(Poly::constant(Rational(2)), Poly{Rational(1), Rational(-1)},
                                    Poly::constant(Rational(3)), Rational(1));
        const KernelBasis kb = polynomial_kernel(eq, 3);
        REQUIRE(kb.dimension == 1);
        const SolutionZeros sz = polynomial_real_zeros(kb.basis[0], 50);
        REQUIRE(sz.status == SolutionZeros::Status::ok);
        REQUIRE(sz.zeros.size() == 3);
        RootSet rs = RootSet::of(sz.zeros, Real("1e-30"));
        const BaeReport rep = verify_solution_via_bae(eq, rs, Real("1e-8"));
        CHECK(rep.pass);
        CHECK(rep.max_bae_residual < Real("1e-40"));
    }
    SUBCASE("repeated roots are rejected") {
        std::vector<Real> dup{Real(1), Real(1)};
        CHECK_THROWS_AS(RootSet::of(dup, Real("1e-30")), hypothesis_error);
    }
}

TEST_CASE("polynomial_real_zeros status reporting") {
    CHECK(polynomial_real_zeros(X * X + Poly::constant(Rational(1)), 30).status ==
          SolutionZeros::Status::complex_zeros);
    CHECK(polynomial_real_zeros(X * X, 30).status == SolutionZeros::Status::repeated_zeros);
    const auto ok = polynomial_real_zeros(X * X - Poly::constant(Rational(2)), 30);
    REQUIRE(ok.status == SolutionZeros::Status::ok);
    CHECK(ok.zeros.size() == 2);
}
