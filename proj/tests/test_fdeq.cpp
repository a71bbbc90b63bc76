#include "doctest.h"
#include "test_helpers.hpp"

#include "hspoly/solver.hpp"

using namespace hspoly;

namespace {
const Poly X{Rational(0), Rational(1)};

DifferenceEquation sample_eq() {
    // h=1, g=x^2, r=x+2, u=-1; x+1 solves it: D2=0, (x+2)*1 - (x+2) = 0
    return DifferenceEquation(X * X, X + Poly::constant(Rational(2)),
                              Poly::constant(Rational(-1)), Rational(1));
}
}  // namespace

TEST_CASE("recurrence form coefficients") {
    SUBCASE("g=x^2, r=1, u=0, h=1") {
        const DifferenceEquation eq(X * X, Poly::constant(Rational(1)), Poly{}, Rational(1));
        const RecurrenceForm rf = to_recurrence_form(eq);
        CHECK(rf.c2 == X * X);
        CHECK(rf.c1 == Poly::constant(Rational(1)) - Rational(2) * (X * X));
        CHECK(rf.c0 == X * X - Poly::constant(Rational(1)));
    }
    SUBCASE("u = 0, r = 0 degenerates to c1 = -2g, c0 = g") {
        const Poly g = X * X * X + Poly::constant(Rational(5));
        const DifferenceEquation eq(g, Poly{}, Poly{}, make_rational(1, 2));
        const RecurrenceForm rf = to_recurrence_form(eq);
        CHECK(rf.c1 == Rational(-2) * g);
        CHECK(rf.c0 == g);
    }
    SUBCASE("recurrence form equals h^2 times the residual at random points") {
        testing::Rng rng(31);
        for (int i = 0; i < 10; ++i) {
            const DifferenceEquation eq(rng.nonzero_poly(3), rng.poly(2), rng.poly(1),
                                        rng.positive_rational());
            const Poly y = rng.poly(4);
            const RecurrenceForm rf = to_recurrence_form(eq);
            const Poly res = residual(eq, y);
            for (int pt = 0; pt < 10; ++pt) {
                const Rational x = rng.rational();
                const Rational lhs = eval(rf.c2, x) * eval(y, Rational(x + 2 * eq.h)) +
                                     eval(rf.c1, x) * eval(y, Rational(x + eq.h)) +
                                     eval(rf.c0, x) * eval(y, x);
                CHECK(lhs == eq.h * eq.h * eval(res, x));
            }
        }
    }
    SUBCASE("u-absorbed first-line form agrees with the residual") {
        testing::Rng rng(37);
        for (int i = 0; i < 10; ++i) {
            const DifferenceEquation eq(rng.nonzero_poly(3), rng.poly(2), rng.poly(1),
                                        rng.positive_rational());
            const AbsorbedForm af = absorbed_form(eq);
            const Poly y = rng.poly(4);
            const Poly via_absorbed =
                af.g * delta(delta(y, eq.h), eq.h) + af.r_plus_hu * delta(y, eq.h) + af.u * y;
            CHECK(via_absorbed == residual(eq, y));
        }
    }
}

TEST_CASE("residual") {
    const DifferenceEquation eq = sample_eq();
    CHECK(residual(eq, Poly{}).is_zero());
    CHECK(residual(eq, X + Poly::constant(Rational(1))).is_zero());
    CHECK(residual(eq, X) == Poly::constant(Rational(1)));

    SUBCASE("vanishing at deg+1 lattice points forces the zero polynomial") {
        testing::Rng rng(41);
        for (int i = 0; i < 20; ++i) {
            const DifferenceEquation req(rng.nonzero_poly(3), rng.poly(2), rng.poly(1),
                                         rng.positive_rational());
            const Poly y = rng.poly(4);
            const Poly res = residual(req, y);
            if (res.is_zero())
                continue;
            const Rational x0 = rng.rational();
            int zeros = 0;
            for (int k = 0; k <= res.degree() + 1; ++k)
                if (eval(res, Rational(x0 + Rational(k) * req.h)) == 0)
                    ++zeros;
            CHECK(zeros <= res.degree());
        }
    }
}

TEST_CASE("cauchy_iterate") {
    const DifferenceEquation eq = sample_eq();
    SUBCASE("zero seeds stay zero") {
        const auto v = cauchy_iterate(eq, Rational(1), Rational(0), Rational(0), 10);
        REQUIRE(v.size() == 12);
        for (const Rational& y : v)
            CHECK(y == 0);
    }
    SUBCASE("seeding with a known solution reproduces it on the lattice") {
        const Poly sol = X + Poly::constant(Rational(1));
        const Rational x0(2);
        const auto v = cauchy_iterate(eq, x0, eval(sol, x0), eval(sol, Rational(x0 + 1)), 12);
        for (size_t k = 0; k < v.size(); ++k)
            CHECK(v[k] == eval(sol, Rational(x0 + Rational(static_cast<int>(k)))));
    }
    SUBCASE("pole at a lattice zero of g is refused by name") {
        CHECK_THROWS_AS(cauchy_iterate(eq, Rational(0), Rational(1), Rational(1), 3), pole_error);
        // g(x0 + 2h) = 0 further down the lattice
        CHECK_THROWS_AS(cauchy_iterate(eq, Rational(-2), Rational(1), Rational(1), 5), pole_error);
    }
}

TEST_CASE("hypergeometric characteristic data") {
    HypergeometricData hyp{Rational(1), Rational(0), Rational(0), Rational(2), Rational(0), Rational(1)};

    SUBCASE("theta") {
        CHECK(theta(hyp, Rational(-6), Rational(2)) == 0);
        CHECK(theta(hyp, Rational(5), Rational(0)) == 5);
        HypergeometricData lin{Rational(0), Rational(0), Rational(0), Rational(1), Rational(0), Rational(1)};
        CHECK(theta(lin, Rational(-3), Rational(3)) == 0);
    }
    SUBCASE("lambda_n") {
        CHECK(lambda_n(hyp, 2) == Rational(-6));
        CHECK(theta(hyp, lambda_n(hyp, 2), Rational(2)) == 0);
        CHECK(lambda_n(hyp, 0) == 0);
        HypergeometricData coll{Rational(1), Rational(0), Rational(0), Rational(-3), Rational(0), Rational(1)};
        CHECK(lambda_n(coll, 1) == Rational(3));
        CHECK(lambda_n(coll, 3) == Rational(3));
    }
    SUBCASE("theta vanishes at lambda_n for random data") {
        testing::Rng rng(43);
        for (int i = 0; i < 10; ++i) {
            HypergeometricData rh{rng.rational(), rng.rational(), rng.rational(),
                                  rng.rational(), rng.rational(), Rational(1)};
            for (unsigned n = 0; n <= 50; ++n)
                CHECK(theta(rh, lambda_n(rh, n), Rational(n)) == 0);
        }
    }
    SUBCASE("regularity scan") {
        CHECK(regularity_check(hyp, 20).empty());
        HypergeometricData coll{Rational(1), Rational(0), Rational(0), Rational(-3), Rational(0), Rational(1)};
        const auto pairs = regularity_check(coll, 20);
        CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(1, 3)) != pairs.end());
        HypergeometricData lin{Rational(0), Rational(0), Rational(0), Rational(1), Rational(0), Rational(1)};
        CHECK(regularity_check(lin, 20).empty());
    }
}
