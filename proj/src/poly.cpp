#include "hspoly/poly.hpp"

#include <sstream>

namespace hspoly {

RealPoly to_real_poly(const Poly& p) {
    std::vector<Real> c;
    c.reserve(p.coeffs().size());
    for (const Rational& q : p.coeffs())
        c.emplace_back(to_real(q));
    return RealPoly(std::move(c));
}

Poly monic(const Poly& p) {
    if (p.is_zero())
        throw error("monic: zero polynomial");
    return p / p.lc();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw error("divrem: division by the zero polynomial");
    Poly r = a;
    std::vector<Rational> q(static_cast<size_t>(std::max(0, a.degree() - b.degree() + 1)), Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int k = r.degree() - b.degree();
        const Rational c = r.lc() / b.lc();
        q[static_cast<size_t>(k)] = c;
        r = r - Poly::monomial(c, k) * b;
    }
    return {Poly(std::move(q)), r};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw error("poly_gcd: both polynomials are zero");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = divrem(u, v).second;
        // keep coefficients small: gcd is only defined up to a unit
        if (!r.is_zero())
            r = monic(r);
        u = std::move(v);
        v = std::move(r);
    }
    return monic(u);
}

std::pair<Rational, std::vector<Int>> integer_normal_form(const Poly& p) {
    if (p.is_zero())
        throw error("integer_normal_form: zero polynomial");
    Int den_lcm = 1;
    for (const Rational& c : p.coeffs())
        den_lcm = lcm(den_lcm, denominator(c));
    std::vector<Int> ic;
    ic.reserve(p.coeffs().size());
    Int content = 0;
    for (const Rational& c : p.coeffs()) {
        Int v = numerator(c) * (den_lcm / denominator(c));
        content = gcd(content, v);
        ic.push_back(std::move(v));
    }
    if (ic.back() < 0)
        content = -content;
    for (Int& v : ic)
        v /= content;
    return {make_rational(content, den_lcm), std::move(ic)};
}

std::string to_display_string(const Poly& p, const std::string& var) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0)
            continue;
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        const Rational ac = abs(c);
        if (ac != 1 || i == 0)
            os << to_string(ac);
        if (i > 0) {
            if (ac != 1)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << to_display_string(p);
}

}  // namespace hspoly
