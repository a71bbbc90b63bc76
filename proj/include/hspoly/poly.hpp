#pragma once

#include "hspoly/errors.hpp"
#include "hspoly/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace hspoly {

/* Dense univariate polynomial over a scalar S, coefficients stored in
 * ascending degree. The coefficient vector is kept trimmed: it is either
 * empty (the zero polynomial) or ends with a nonzero leading coefficient.
 * Degrees in this project stay small (<= ~30), so dense wins. */
template <class S>
class BasicPoly {
  public:
    BasicPoly() = default;
    BasicPoly(std::initializer_list<S> ascending) : c_(ascending) { trim(); }
    explicit BasicPoly(std::vector<S> ascending) : c_(std::move(ascending)) { trim(); }

    static BasicPoly monomial(const S& coeff, int deg) {
        if (coeff == 0)
            return {};
        std::vector<S> c(static_cast<size_t>(deg) + 1, S(0));
        c.back() = coeff;
        return BasicPoly(std::move(c));
    }
    static BasicPoly constant(const S& v) { return monomial(v, 0); }

    /// prod (x - r) over the given roots.
    template <class R>
    static BasicPoly from_roots(const std::vector<R>& roots) {
        BasicPoly p = constant(S(1));
        for (const R& r : roots) {
            const S v(r);
            p = p * BasicPoly{-v, S(1)};
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const S& lc() const {
        if (c_.empty())
            throw error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    /// Coefficient of x^i; zero beyond the stored degree.
    S coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return S(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<S>& coeffs() const { return c_; }

    BasicPoly operator-() const {
        std::vector<S> c(c_);
        for (S& v : c)
            v = -v;
        return BasicPoly(std::move(c));
    }

    friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i)
            c[i] = c[i] + b.c_[i];
        return BasicPoly(std::move(c));
    }

    friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) { return a + (-b); }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return BasicPoly(std::move(c));
    }

    friend BasicPoly operator*(const BasicPoly& a, const S& s) {
        if (s == 0)
            return {};
        std::vector<S> c(a.c_);
        for (S& v : c)
            v = v * s;
        return BasicPoly(std::move(c));
    }
    friend BasicPoly operator*(const S& s, const BasicPoly& a) { return a * s; }

    friend BasicPoly operator/(const BasicPoly& a, const S& s) {
        if (s == 0)
            throw error("polynomial division by zero scalar");
        std::vector<S> c(a.c_);
        for (S& v : c)
            v = v / s;
        return BasicPoly(std::move(c));
    }

    BasicPoly& operator+=(const BasicPoly& b) { return *this = *this + b; }
    BasicPoly& operator-=(const BasicPoly& b) { return *this = *this - b; }
    BasicPoly& operator*=(const BasicPoly& b) { return *this = *this * b; }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  private:
    std::vector<S> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
};

using Poly     = BasicPoly<Rational>;
using RealPoly = BasicPoly<Real>;

/// Horner evaluation; exact for exact scalars.
template <class S>
S eval(const BasicPoly<S>& p, const S& x) {
    S acc(0);
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

/// Evaluation in a wider scalar X (e.g. a Rational polynomial at a Real point).
template <class X, class S>
X eval_at(const BasicPoly<S>& p, const X& x) {
    X acc(0);
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;)
        acc = acc * x + X(c[i]);
    return acc;
}

/// q(x) = p(x + s), exact binomial shift via Horner composition.
template <class S>
BasicPoly<S> shift(const BasicPoly<S>& p, const S& s) {
    BasicPoly<S> acc;
    const BasicPoly<S> lin{s, S(1)};  // x + s
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;)
        acc = acc * lin + BasicPoly<S>::constant(c[i]);
    return acc;
}

/// Noerlund forward difference (p(x+h) - p(x)) / h; drops degree by one.
template <class S>
BasicPoly<S> delta(const BasicPoly<S>& p, const S& h) {
    if (h == 0)
        throw hypothesis_error("delta: zero lattice step h");
    return (shift(p, h) - p) / h;
}

template <class S>
BasicPoly<S> to_basic(const Poly& p, const S&) {
    std::vector<S> c;
    c.reserve(p.coeffs().size());
    for (const Rational& q : p.coeffs())
        c.emplace_back(S(q));
    return BasicPoly<S>(std::move(c));
}

RealPoly to_real_poly(const Poly& p);

/// Scale so the leading coefficient is one.
Poly monic(const Poly& p);

/// Euclidean quotient/remainder over the rationals. b != 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Monic gcd; errors when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// p as common_scale * (integer-coefficient polynomial with content 1,
/// positive leading coefficient). p must be nonzero.
std::pair<Rational, std::vector<Int>> integer_normal_form(const Poly& p);

/// Human-oriented rendering such as "x^2 - 1/3".
std::string to_display_string(const Poly& p, const std::string& var = "x");

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hspoly
