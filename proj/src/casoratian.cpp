#include "hspoly/casoratian.hpp"

#include <algorithm>

namespace hspoly {

Poly casoratian(const Poly& y1, const Poly& y2, const Rational& h) {
    if (h == 0)
        throw hypothesis_error("casoratian: zero lattice step");
    const Poly w = y1 * delta(y2, h) - delta(y1, h) * y2;
    // determinant form (1/h) |y1 y2; y1(x+h) y2(x+h)|
    const Poly det = (y1 * shift(y2, h) - y2 * shift(y1, h)) / h;
    if (w != det)
        throw error("casoratian: the two determinant forms disagree");
    return w;
}

std::vector<Rational> casoratian_values(std::span<const Rational> y1, std::span<const Rational> y2,
                                        const Rational& h) {
    if (h == 0)
        throw hypothesis_error("casoratian_values: zero lattice step");
    if (y1.size() != y2.size() || y1.size() < 2)
        throw error("casoratian_values: need two equal-length series with at least 2 samples");
    std::vector<Rational> w;
    w.reserve(y1.size() - 1);
    for (size_t k = 0; k + 1 < y1.size(); ++k)
        w.push_back((y1[k] * y2[k + 1] - y2[k] * y1[k + 1]) / h);
    return w;
}

AbelClosedForm R_of(const DifferenceEquation& eq) {
    const Poly a = eq.g - eq.h * eq.r;
    if (a.is_zero())
        throw hypothesis_error("R_of: g - h r is identically zero");
    AbelClosedForm cf;
    cf.kappa = a.lc() / eq.g.lc();
    cf.a_roots = real_roots(monic(a));
    cf.b_roots = real_roots(monic(eq.g));
    cf.h = eq.h;
    return cf;
}

Real abel_closed_form_at(const AbelClosedForm& cf, const Rational& x) {
    std::vector<Rational> exact_a, exact_b;
    std::vector<Real> num_a, num_b;
    const int digits = static_cast<int>(Real::default_precision());
    auto split = [&](const RootList& rl, std::vector<Rational>& ex, std::vector<Real>& nu) {
        for (const Root& r : rl.roots)
            for (int m = 0; m < r.multiplicity; ++m) {
                if (r.exact())
                    ex.push_back(r.value());
                else
                    nu.push_back(root_to_real(r, digits));
            }
    };
    split(cf.a_roots, exact_a, num_a);
    split(cf.b_roots, exact_b, num_b);

    const GammaRatioValue exact_part = gamma_h_ratio(x, exact_a, exact_b, cf.h);
    Real v = exact_part.value;
    if (!exact_part.zero_from_denominator_pole && (!num_a.empty() || !num_b.empty()))
        v *= gamma_h_ratio_numeric(to_real(x), num_a, num_b, cf.h);

    const Rational ak = abs(cf.kappa);
    const Real power = exp((to_real(x) - to_real(cf.h) / 2) / to_real(cf.h) * log(to_real(ak)));
    return v * power;
}

namespace {

bool lattice_hits_gamma_pole(const AbelClosedForm& cf, const Rational& x0, int points) {
    // x_k - root = -m h for some k in [0, points], m >= 0  <=>  (root - x0)/h
    // is a nonnegative integer (interval roots are irrational: never hit)
    auto on_lattice_above = [&](const Root& r) {
        if (!r.exact())
            return false;
        const auto t = integer_ratio(r.value() - x0, cf.h);
        return t.has_value() && *t >= 0;
    };
    (void)points;
    for (const Root& r : cf.a_roots.roots)
        if (on_lattice_above(r))
            return true;
    for (const Root& r : cf.b_roots.roots)
        if (on_lattice_above(r))
            return true;
    return false;
}

}  // namespace

AbelReport verify_abel(const DifferenceEquation& eq, const Rational& x0,
                       std::span<const Rational> y1, std::span<const Rational> y2, int points) {
    if (points < 2)
        throw error("verify_abel: need at least two sample points");
    if (y1.size() != y2.size() || static_cast<int>(y1.size()) < points + 2)
        throw hypothesis_error("verify_abel: series must carry at least points+2 samples");

    AbelReport rep;
    rep.points = points;
    rep.x0 = x0;

    const std::vector<Rational> w = casoratian_values(y1, y2, eq.h);
    const Poly gmhr = eq.g - eq.h * eq.r;

    rep.recurrence_exact = true;
    Rational x = x0;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k + 1] * eval(eq.g, x) != eval(gmhr, x) * w[k])
            rep.recurrence_exact = false;
        x += eq.h;
    }

    rep.identically_zero = std::all_of(w.begin(), w.end(), [](const Rational& v) { return v == 0; });
    if (rep.identically_zero)
        return rep;

    const AbelClosedForm cf = R_of(eq);
    rep.kappa_negative = cf.kappa < 0;

    std::vector<Real> ratios;
    x = x0;
    for (int k = 0; k < points; ++k) {
        const Real closed = abel_closed_form_at(cf, x);
        if (closed == 0)
            throw numeric_error("verify_abel: closed form vanished at a sample point");
        const Real direct = rep.kappa_negative ? abs(to_real(w[static_cast<size_t>(k)]))
                                               : to_real(w[static_cast<size_t>(k)]);
        ratios.push_back(direct / closed);
        x += eq.h;
    }
    Real mean(0);
    for (const Real& r : ratios)
        mean += r;
    mean /= ratios.size();
    Real var(0);
    for (const Real& r : ratios)
        var += (r - mean) * (r - mean);
    var /= ratios.size();
    rep.ratio_mean = mean;
    rep.ratio_rel_stddev = mean == 0 ? sqrt(var) : Real(sqrt(var) / abs(mean));
    return rep;
}

AbelReport run_abel_verification(const DifferenceEquation& eq, Rational x0, int points,
                                 std::optional<std::pair<Rational, Rational>> seed1,
                                 std::optional<std::pair<Rational, Rational>> seed2) {
    const AbelClosedForm cf = R_of(eq);
    bool shifted = false;
    // vary the shift denominator so distinct fractional offsets are tried;
    // finitely many roots cannot block every one of them
    const int denominators[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    for (int tries = 0; tries <= 10; ++tries) {
        bool clean = !lattice_hits_gamma_pole(cf, x0, points + 1);
        if (clean) {
            Rational x = x0;
            for (int k = 0; k <= points + 1 && clean; ++k) {
                if (eval(eq.g, x) == 0)
                    clean = false;
                x += eq.h;
            }
        }
        if (clean)
            break;
        if (tries == 10)
            throw numeric_error("run_abel_verification: could not move the lattice off the poles");
        x0 += eq.h / denominators[tries];
        shifted = true;
    }
    const auto s1 = seed1.value_or(std::make_pair(Rational(1), Rational(0)));
    const auto s2 = seed2.value_or(std::make_pair(Rational(0), Rational(1)));
    const auto v1 = cauchy_iterate(eq, x0, s1.first, s1.second, points + 1);
    const auto v2 = cauchy_iterate(eq, x0, s2.first, s2.second, points + 1);
    AbelReport rep = verify_abel(eq, x0, v1, v2, points);
    rep.shifted = shifted;
    return rep;
}

}  // namespace hspoly
