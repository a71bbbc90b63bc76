#include "hspoly/gammah.hpp"

#include "hspoly/errors.hpp"

#include <algorithm>

namespace hspoly {

namespace {

void require_positive_step(const Rational& h) {
    if (h <= 0)
        throw hypothesis_error("gamma_h: lattice step h must be positive");
}

}  // namespace

bool gamma_h_pole(const Rational& x, const Rational& h) {
    require_positive_step(h);
    if (x > 0)
        return false;
    const Rational q = x / h;
    return is_integer(q);
}

GammaHValue gamma_h(const Rational& x, const Rational& h) {
    require_positive_step(h);
    if (gamma_h_pole(x, h)) {
        GammaHValue v;
        v.is_pole = true;
        v.pole_index = static_cast<unsigned>((-numerator(x / h)).convert_to<unsigned long>());
        v.value = Real(0);
        return v;
    }
    return gamma_h(to_real(x), h);
}

GammaHValue gamma_h(const Real& x, const Rational& h) {
    require_positive_step(h);
    GammaHValue v;
    const Real hr = to_real(h);
    const Real z = x / hr;
    if (z <= 0 && floor(z) == z) {
        v.is_pole = true;
        v.value = Real(0);
        return v;
    }
    v.value = tgamma(z) * exp((x - hr) / hr * log(hr));
    return v;
}

Rational gamma_h_factorial(unsigned n, const Rational& h) {
    require_positive_step(h);
    Rational v(1);
    for (unsigned k = 1; k <= n; ++k)
        v *= Rational(k) * h;
    return v;
}

Real log_gamma_h(const Real& x, const Rational& h) {
    require_positive_step(h);
    if (x <= 0)
        throw hypothesis_error("log_gamma_h: needs x > 0");
    const Real hr = to_real(h);
    return lgamma(x / hr) + (x - hr) / hr * log(hr);
}

GammaRatioValue gamma_h_ratio(const Rational& x, const std::vector<Rational>& a_roots,
                              const std::vector<Rational>& b_roots, const Rational& h) {
    require_positive_step(h);
    std::vector<Rational> bs = b_roots;
    std::vector<bool> b_used(bs.size(), false);
    GammaRatioValue out;
    out.value = Real(1);
    Rational exact_part(1);
    std::vector<Rational> unmatched_a;

    for (const Rational& a : a_roots) {
        bool matched = false;
        for (size_t j = 0; j < bs.size(); ++j) {
            if (b_used[j])
                continue;
            const auto k = integer_ratio(bs[j] - a, h);
            if (!k)
                continue;
            b_used[j] = true;
            matched = true;
            // Gamma_h(x-a) / Gamma_h(x-b) with b = a + k h telescopes
            if (*k >= 0) {
                const Rational y = x - bs[j];
                for (Int m = 0; m < *k; ++m)
                    exact_part *= y + Rational(m) * h;
            } else {
                const Rational w = x - a;
                for (Int m = 0; m < -*k; ++m) {
                    const Rational f = w + Rational(m) * h;
                    if (f == 0)
                        throw pole_error("gamma_h_ratio: pole from factor x - (" + to_string(a) +
                                         ") + " + to_string(Rational(m) * h));
                    exact_part /= f;
                }
            }
            break;
        }
        if (!matched)
            unmatched_a.push_back(a);
    }

    for (const Rational& a : unmatched_a) {
        const GammaHValue g = gamma_h(x - a, h);
        if (g.is_pole)
            throw pole_error("gamma_h_ratio: uncancelled numerator pole at x - (" + to_string(a) +
                             ") = " + to_string(x - a));
        out.value *= g.value;
    }
    for (size_t j = 0; j < bs.size(); ++j) {
        if (b_used[j])
            continue;
        const GammaHValue g = gamma_h(x - bs[j], h);
        if (g.is_pole) {
            out.zero_from_denominator_pole = true;
            out.value = Real(0);
            return out;
        }
        out.value /= g.value;
    }
    out.value *= to_real(exact_part);
    return out;
}

Real gamma_h_ratio_numeric(const Real& x, const std::vector<Real>& a_roots,
                           const std::vector<Real>& b_roots, const Rational& h) {
    require_positive_step(h);
    Real v(1);
    for (const Real& a : a_roots) {
        const GammaHValue g = gamma_h(Real(x - a), h);
        if (g.is_pole || isnan(g.value))
            throw pole_error("gamma_h_ratio_numeric: numerator pole");
        v *= g.value;
    }
    for (const Real& b : b_roots) {
        const GammaHValue g = gamma_h(Real(x - b), h);
        if (g.is_pole || isnan(g.value))
            throw pole_error("gamma_h_ratio_numeric: denominator pole");
        v /= g.value;
    }
    return v;
}

Real gamma_h_reciprocal_product(const Real& x, const Rational& h, int terms) {
    require_positive_step(h);
    if (terms < 1)
        throw error("gamma_h_reciprocal_product: need at least one factor");
    const Real hr = to_real(h);
    Real log_acc = (euler_gamma() - log(hr)) / hr * x;
    for (int s = 1; s <= terms; ++s) {
        const Real t = x / (Real(s) * hr);
        log_acc += log(1 + t) - t;
    }
    return exp(log_acc) * x;
}

}  // namespace hspoly
