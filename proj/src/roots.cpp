#include "hspoly/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hspoly {

namespace {

Poly derivative_local(const Poly& p) {
    if (p.degree() <= 0)
        return {};
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        c.push_back(p.coeff(i) * Rational(i));
    return Poly(std::move(c));
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw error("exact_quotient: division is not exact");
    return q;
}

/* Sturm chain with each entry scaled to a primitive integer polynomial
 * by a positive factor (positive scaling preserves sign variations). */
std::vector<Poly> sturm_chain(const Poly& p) {
    auto normalize = [](const Poly& f) {
        if (f.is_zero())
            return f;
        auto [scale, ic] = integer_normal_form(f);
        std::vector<Rational> c;
        c.reserve(ic.size());
        for (const Int& v : ic)
            c.emplace_back(Rational(v));
        Poly g{std::move(c)};
        return scale > 0 ? g : -g;
    };
    std::vector<Poly> chain;
    chain.push_back(normalize(p));
    Poly d = derivative_local(p);
    if (d.is_zero())
        return chain;
    chain.push_back(normalize(d));
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = divrem(a, b).second;
        if (r.is_zero())
            break;
        chain.push_back(normalize(-r));
        if (chain.back().degree() == 0)
            break;
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const Poly& f : chain) {
        const int s = sign_at(f, x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

/// 1 + max |c_i| / |lc|, a bound containing every real root strictly.
Rational cauchy_bound(const Poly& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i)
        m = std::max(m, abs(p.coeff(i)));
    return Rational(1) + m / abs(p.lc());
}

constexpr long kTrialDivisionBound = 1000000;

struct Factored {
    bool complete = false;
    std::map<Int, int> factors;
};

/* Trial-division factoring. When an unfactorable cofactor remains the
 * result is marked incomplete; callers then skip the rational-root sieve
 * and fall back to isolating intervals, which keeps everything downstream
 * honest. */
Factored factor_small(Int n) {
    Factored f;
    n = abs(n);
    if (n == 0)
        return f;
    for (Int d = 2; d <= kTrialDivisionBound && d * d <= n; ++d)
        while (n % d == 0) {
            ++f.factors[d];
            n /= d;
        }
    if (n > 1) {
        if (n > Int(kTrialDivisionBound) * Int(kTrialDivisionBound)) {
            // could still be composite with large factors; give up
            if (mpz_probab_prime_p(n.backend().data(), 25) == 0)
                return f;
        }
        ++f.factors[n];
    }
    f.complete = true;
    return f;
}

std::vector<Int> divisors(const std::map<Int, int>& f, size_t cap) {
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : f) {
        const size_t base = divs.size();
        Int pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * pe);
                if (divs.size() > cap)
                    return {};
            }
        }
    }
    return divs;
}

/* Extract the rational roots of a squarefree polynomial; f is deflated
 * by every root found. Large unfactorable boundary coefficients make the
 * sieve bail out (those roots are still isolated, just not recognized as
 * rational). Degrees one and two are always resolved exactly. */
std::vector<Rational> extract_rational_roots(Poly& f) {
    std::vector<Rational> found;
    while (f.degree() >= 1 && f.coeff(0) == 0) {
        found.emplace_back(0);
        f = exact_quotient(f, Poly{Rational(0), Rational(1)});
    }
    if (f.degree() == 1) {
        found.push_back(-f.coeff(0) / f.coeff(1));
        f = Poly::constant(f.lc());
        return found;
    }
    if (f.degree() == 2) {
        const auto [scale, ic] = integer_normal_form(f);
        (void)scale;
        const Int a = ic[2], b = ic[1], c = ic[0];
        const Int disc = b * b - 4 * a * c;
        if (disc >= 0) {
            Int s = sqrt(disc);
            if (s * s == disc) {
                found.push_back(make_rational(-b - s, 2 * a));
                found.push_back(make_rational(-b + s, 2 * a));
                f = Poly::constant(f.lc());
            }
        }
        std::sort(found.begin(), found.end());
        return found;
    }
    if (f.degree() >= 3) {
        auto [scale, ic] = integer_normal_form(f);
        (void)scale;
        const auto f0 = factor_small(ic.front());
        const auto fl = factor_small(ic.back());
        if (!f0.complete || !fl.complete)
            return found;
        const auto nums = divisors(f0.factors, 4096);
        const auto dens = divisors(fl.factors, 4096);
        if (nums.empty() || dens.empty() || nums.size() * dens.size() > 20000)
            return found;
        bool low_degree = false;
        for (const Int& v : dens) {
            for (const Int& u : nums) {
                if (gcd(u, v) != 1)
                    continue;
                for (int sgn : {1, -1}) {
                    const Rational cand = make_rational(sgn * u, v);
                    while (f.degree() >= 3 && sign_at(f, cand) == 0) {
                        found.push_back(cand);
                        f = exact_quotient(f, Poly{-cand, Rational(1)});
                    }
                    low_degree = f.degree() < 3;
                    if (low_degree)
                        break;
                }
                if (low_degree)
                    break;
            }
            if (low_degree)
                break;
        }
        // whatever remains of low degree is handled exactly
        if (f.degree() >= 1 && f.degree() <= 2) {
            auto rest = extract_rational_roots(f);
            found.insert(found.end(), rest.begin(), rest.end());
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

struct Isolated {
    Rational lo, hi;  // open interval, sign change across
    bool exact = false;
    Rational point;
};

/* Sturm bisection on a squarefree polynomial. Midpoints that happen to
 * be roots (possible when the sieve bailed out) are reported exactly. */
std::vector<Isolated> isolate(const Poly& f) {
    std::vector<Isolated> out;
    if (f.degree() < 1)
        return out;
    Poly work = f;
    bool restart = true;
    while (restart) {
        restart = false;
        out.clear();
        if (work.degree() < 1)
            return out;
        const auto chain = sturm_chain(work);
        const Rational bound = cauchy_bound(work);
        struct Seg {
            Rational lo, hi;
            int vlo, vhi;
        };
        std::deque<Seg> queue;
        queue.push_back({-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)});
        while (!queue.empty()) {
            Seg s = queue.front();
            queue.pop_front();
            const int n = s.vlo - s.vhi;
            if (n <= 0)
                continue;
            if (n == 1 && sign_at(work, s.lo) * sign_at(work, s.hi) < 0) {
                out.push_back({s.lo, s.hi, false, Rational(0)});
                continue;
            }
            Rational mid = (s.lo + s.hi) / 2;
            if (sign_at(work, mid) == 0) {
                // exact root discovered mid-bisection: deflate and restart
                out.push_back({mid, mid, true, mid});
                work = exact_quotient(work, Poly{-mid, Rational(1)});
                restart = true;
                break;
            }
            const int vm = sign_variations(chain, mid);
            queue.push_back({s.lo, mid, s.vlo, vm});
            queue.push_back({mid, s.hi, vm, s.vhi});
        }
        if (restart) {
            // keep the exact roots found so far; re-isolate the rest
            std::vector<Isolated> exacts;
            for (auto& i : out)
                if (i.exact)
                    exacts.push_back(i);
            out = std::move(exacts);
            auto sub = isolate(work);
            out.insert(out.end(), sub.begin(), sub.end());
            return out;
        }
    }
    return out;
}

void bisect_to_width(const Poly& f, Rational& lo, Rational& hi, const Rational& width) {
    int slo = sign_at(f, lo);
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        const int sm = sign_at(f, mid);
        if (sm == 0) {
            // exact hit; collapse
            lo = hi = mid;
            return;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
}

Rational pow2_inv(int bits) {
    Int d = 1;
    d <<= bits;
    return make_rational(1, d);
}

}  // namespace

const Rational& Root::value() const {
    if (!exact())
        throw error("Root::value: interval root has no exact value");
    return lo;
}

Rational Root::mid() const {
    return (lo + hi) / 2;
}

int RootList::total_multiplicity() const {
    int s = 0;
    for (const Root& r : roots)
        s += r.multiplicity;
    return s;
}

bool RootList::all_simple() const {
    return std::all_of(roots.begin(), roots.end(), [](const Root& r) { return r.multiplicity == 1; });
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero())
        throw error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0)
        return out;
    // g_k = gcd of p with its first k derivatives; c_k = g_{k-1}/g_k
    std::vector<Poly> g{monic(p)};
    while (g.back().degree() > 0) {
        const Poly d = derivative_local(g.back());
        g.push_back(poly_gcd(g.back(), d));
    }
    std::vector<Poly> c;
    for (size_t i = 0; i + 1 < g.size(); ++i)
        c.push_back(exact_quotient(g[i], g[i + 1]));
    for (size_t k = 0; k < c.size(); ++k) {
        const Poly f = (k + 1 < c.size()) ? exact_quotient(c[k], c[k + 1]) : c[k];
        if (f.degree() > 0)
            out.emplace_back(monic(f), static_cast<int>(k) + 1);
    }
    return out;
}

int sign_at(const Poly& p, const Rational& x) {
    const Rational v = eval(p, x);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

std::pair<Rational, Rational> interval_eval(const Poly& p, const Rational& lo, const Rational& hi) {
    if (lo > hi)
        throw error("interval_eval: empty interval");
    Rational a(0), b(0);
    for (int i = p.degree(); i >= 0; --i) {
        const Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
        Rational na = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational nb = std::max(std::max(p1, p2), std::max(p3, p4));
        a = na + p.coeff(i);
        b = nb + p.coeff(i);
    }
    return {a, b};
}

int count_real_roots(const Poly& p) {
    if (p.is_zero())
        throw error("count_real_roots: zero polynomial");
    if (p.degree() == 0)
        return 0;
    Poly sf = exact_quotient(monic(p), poly_gcd(p, derivative_local(p)));
    if (sf.degree() == 0)
        return 0;
    const auto chain = sturm_chain(sf);
    const Rational b = cauchy_bound(sf);
    return sign_variations(chain, -b) - sign_variations(chain, b);
}

RootList real_roots(const Poly& p, int precision_bits) {
    if (p.is_zero())
        throw error("real_roots: zero polynomial");
    if (precision_bits < 4)
        precision_bits = 4;
    RootList out;
    out.degree = p.degree();
    const Rational width = pow2_inv(precision_bits);

    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        Poly rem = factor;
        for (const Rational& r : extract_rational_roots(rem)) {
            Root root;
            root.lo = root.hi = r;
            root.multiplicity = mult;
            out.roots.push_back(std::move(root));
        }
        if (rem.degree() >= 1) {
            for (const Isolated& iso : isolate(rem)) {
                Root root;
                root.multiplicity = mult;
                if (iso.exact) {
                    root.lo = root.hi = iso.point;
                } else {
                    root.lo = iso.lo;
                    root.hi = iso.hi;
                    bisect_to_width(rem, root.lo, root.hi, width);
                    root.factor = rem;
                }
                out.roots.push_back(std::move(root));
            }
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const Root& a, const Root& b) { return a.mid() < b.mid(); });

    // Distinct roots of coprime factors: shrink until certificates are disjoint.
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i + 1 < out.roots.size(); ++i) {
            Root& a = out.roots[i];
            Root& b = out.roots[i + 1];
            if (a.hi < b.lo || (a.exact() && b.exact() && a.lo != b.lo))
                continue;
            if (a.exact() && b.exact())
                throw error("real_roots: duplicate exact roots across factors");
            if (!a.exact())
                bisect_to_width(a.factor, a.lo, a.hi, (a.hi - a.lo) / 4);
            if (!b.exact())
                bisect_to_width(b.factor, b.lo, b.hi, (b.hi - b.lo) / 4);
            again = true;
        }
        if (again)
            std::sort(out.roots.begin(), out.roots.end(),
                      [](const Root& a, const Root& b) { return a.mid() < b.mid(); });
    }
    return out;
}

void refine_root(Root& r, int precision_bits) {
    if (r.exact())
        return;
    bisect_to_width(r.factor, r.lo, r.hi, pow2_inv(precision_bits));
    if (r.lo == r.hi)
        r.factor = Poly{};
}

Real root_to_real(const Root& r, int digits) {
    if (r.exact())
        return to_real(r.value());
    Root tmp = r;
    const int bits = static_cast<int>(digits * 3.33) + 16;
    refine_root(tmp, bits);
    return to_real(tmp.mid());
}

}  // namespace hspoly
