#include "hspoly/norlund.hpp"

#include "hspoly/gammah.hpp"

#include <map>
#include <mutex>

namespace hspoly {

namespace {

/* Gauss-Legendre nodes/weights on [-1, 1] at the current working
 * precision, via Newton on the Legendre recurrence. Cached per
 * (order, precision); map nodes are stable, so returned references
 * outlive later insertions. */
struct GaussRule {
    std::vector<Real> nodes, weights;
};

const GaussRule& gauss_rule(int npts) {
    static std::mutex mtx;
    static std::map<std::pair<int, unsigned>, GaussRule> cache;
    const std::lock_guard<std::mutex> lock(mtx);
    const auto key = std::make_pair(npts, Real::default_precision());
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    GaussRule rule;
    const Real pi = pi_value();
    const Real eps = pow(Real(10), -static_cast<int>(Real::default_precision()) + 2);
    for (int i = 1; i <= npts; ++i) {
        Real x = cos(pi * (Real(i) - Real("0.25")) / (Real(npts) + Real("0.5")));
        Real dp(0);
        for (int iter = 0; iter < 200; ++iter) {
            Real p0(1), p1 = x;
            for (int n = 2; n <= npts; ++n) {
                const Real p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = npts * (x * p1 - p0) / (x * x - 1);
            const Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < eps)
                break;
        }
        rule.nodes.push_back(x);
        rule.weights.push_back(2 / ((1 - x * x) * dp * dp));
    }
    return cache.emplace(key, std::move(rule)).first->second;
}

Real gauss_panel(const std::function<Real(const Real&)>& f, const Real& a, const Real& b) {
    const GaussRule& r = gauss_rule(24);
    const Real mid = (a + b) / 2, half = (b - a) / 2;
    Real acc(0);
    for (size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * f(Real(mid + half * r.nodes[i]));
    return acc * half;
}

Real adaptive(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
              const Real& whole, const Real& tol, int depth) {
    const Real mid = (a + b) / 2;
    const Real left = gauss_panel(f, a, mid);
    const Real right = gauss_panel(f, mid, b);
    const Real err = abs(left + right - whole);
    if (err < tol || depth > 60)
        return left + right;
    return adaptive(f, a, mid, left, tol / 2, depth + 1) +
           adaptive(f, mid, b, right, tol / 2, depth + 1);
}

}  // namespace

Real integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
               const Real& tol) {
    if (a == b)
        return Real(0);
    return adaptive(f, a, b, gauss_panel(f, a, b), tol, 0);
}

Real integrate_to_infinity(const std::function<Real(const Real&)>& f, const Real& a, const Real& tol) {
    Real acc(0);
    Real lo = a;
    Real width(1);
    int quiet = 0;
    for (int panel = 0; panel < 400; ++panel) {
        const Real hi = lo + width;
        const Real part = integrate(f, lo, hi, Real(tol / 8));
        acc += part;
        if (abs(part) < tol / 8)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 2)
            return acc;
        lo = hi;
        width *= 2;
    }
    throw numeric_error("integrate_to_infinity: integrand did not decay within the panel budget");
}

Real PhiSpec::operator()(const Real& t) const {
    switch (kind) {
        case Kind::constant:
            return to_real(constant_value);
        case Kind::exponential:
            return exp(-t);
        case Kind::logarithm:
            return log(t);
        case Kind::poly_times_exp:
            return eval_at(poly, t) * exp(-t);
    }
    throw error("PhiSpec: bad kind");
}

RegularizationConfig RegularizationConfig::defaults() {
    RegularizationConfig cfg;
    cfg.p = 1;
    cfg.q = 0;
    Real mu = Real("0.1");
    for (int i = 0; i < 8; ++i) {
        cfg.mu_schedule.push_back(mu);
        mu /= 2;
    }
    cfg.series_tail_tol = Real("1e-14");
    cfg.quadrature_tol = Real("1e-14");
    return cfg;
}

Real principal_sum_closed(ClosedKind kind, const Rational& param, const Rational& c,
                          const Rational& x, const Rational& h) {
    if (h <= 0)
        throw hypothesis_error("principal_sum_closed: lattice step h must be positive");
    switch (kind) {
        case ClosedKind::constant:
            return to_real(param * (x - c - h / 2));
        case ClosedKind::exponential: {
            const Real xr = to_real(x), cr = to_real(c), hr = to_real(h);
            return exp(-cr) - hr * exp(-xr) / (1 - exp(-hr));
        }
        case ClosedKind::logarithm: {
            if (c != 0)
                throw hypothesis_error("principal_sum_closed: the logarithm reference fixes c = 0");
            if (x <= 0)
                throw hypothesis_error("principal_sum_closed: logarithm needs x > 0");
            const Real hr = to_real(h);
            const Real two_pi_over_h = 2 * pi_value() / hr;
            return hr * log_gamma_h(to_real(x), h) - hr * log(two_pi_over_h) / 2;
        }
    }
    throw error("principal_sum_closed: bad kind");
}

namespace {

Real damped_series(const PhiSpec& phi, const Real& mu, int p, int q, const Real& x, const Real& h,
                   const Real& tail_tol) {
    Real acc(0);
    Real t = x;
    Real prev_mag(0);
    int decreasing = 0;
    for (long s = 0; s < 40000000; ++s) {
        Real term = phi(t);
        if (mu != 0) {
            Real lam = t;
            for (int i = 1; i < p; ++i)
                lam *= t;
            if (q > 0) {
                const Real lg = log(t);
                for (int i = 0; i < q; ++i)
                    lam *= lg;
            }
            term *= exp(-mu * lam);
        }
        acc += term;
        const Real mag = abs(term);
        if (s > 0 && mag < prev_mag)
            ++decreasing;
        else
            decreasing = 0;
        if (decreasing >= 3 && mag < tail_tol) {
            // conservative geometric tail bound from the observed ratio
            const Real ratio = prev_mag == 0 ? Real(0) : Real(mag / prev_mag);
            if (ratio < 1 && mag * ratio / (1 - ratio) < tail_tol)
                return acc;
        }
        prev_mag = mag;
        t += h;
    }
    throw numeric_error("damped_series: no convergence within the term budget");
}

Real damped_integral(const PhiSpec& phi, const Real& mu, int p, int q, const Real& c,
                     const Real& quad_tol) {
    auto f = [&](const Real& t) {
        Real v = phi(t);
        if (mu != 0) {
            Real lam = t;
            for (int i = 1; i < p; ++i)
                lam *= t;
            if (q > 0) {
                const Real lg = log(t);
                for (int i = 0; i < q; ++i)
                    lam *= lg;
            }
            v *= exp(-mu * lam);
        }
        return v;
    };
    return integrate_to_infinity(f, c, quad_tol);
}

/* Richardson tableau for F(mu) = F + c1 mu + c2 mu^2 + ... on a ratio-2
 * schedule; returns the diagonal with an error estimate from its last
 * increment. */
std::pair<Real, Real> richardson(const std::vector<Real>& f) {
    std::vector<std::vector<Real>> t(f.size());
    t[0] = {f[0]};
    for (size_t i = 1; i < f.size(); ++i) {
        t[i].resize(i + 1);
        t[i][0] = f[i];
        Real pow2(1);
        for (size_t j = 1; j <= i; ++j) {
            pow2 *= 2;
            t[i][j] = t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / (pow2 - 1);
        }
    }
    const size_t n = f.size() - 1;
    const Real est = abs(t[n][n] - t[n - 1][n - 1]);
    return {t[n][n], est};
}

}  // namespace

NorlundResult principal_sum_numeric(const PhiSpec& phi, const Rational& c, const Rational& x,
                                    const Rational& h, const RegularizationConfig& cfg) {
    if (h <= 0)
        throw hypothesis_error("principal_sum_numeric: lattice step h must be positive");
    if (cfg.p < 1 || cfg.q < 0)
        throw hypothesis_error("principal_sum_numeric: need p >= 1, q >= 0");
    if (cfg.q > 0 && (c <= 1 || x <= 1))
        throw hypothesis_error("principal_sum_numeric: ln-damped regularization needs c, x > 1");
    if (phi.kind == PhiSpec::Kind::logarithm && (c < 0 || x <= 0))
        throw hypothesis_error("principal_sum_numeric: logarithm needs c >= 0 and x > 0");

    const Real xr = to_real(x), cr = to_real(c), hr = to_real(h);
    NorlundResult out;

    if (phi.decays()) {
        // both pieces converge outright; no damping needed
        const Real integral = integrate_to_infinity([&](const Real& t) { return phi(t); }, cr,
                                                    cfg.quadrature_tol);
        const Real series = damped_series(phi, Real(0), cfg.p, cfg.q, xr, hr, cfg.series_tail_tol);
        out.value = integral - hr * series;
        out.error_estimate = cfg.quadrature_tol + cfg.series_tail_tol * hr;
        out.levels = 0;
        out.converged = true;
        out.diagnostic = "direct (integral and series both converge)";
        return out;
    }

    if (cfg.mu_schedule.size() < 3)
        throw hypothesis_error("principal_sum_numeric: need at least 3 mu levels");
    for (size_t i = 0; i + 1 < cfg.mu_schedule.size(); ++i)
        if (!(cfg.mu_schedule[i] > cfg.mu_schedule[i + 1] && cfg.mu_schedule[i + 1] > 0))
            throw hypothesis_error("principal_sum_numeric: mu schedule must decrease toward 0");

    for (const Real& mu : cfg.mu_schedule) {
        const Real integral = damped_integral(phi, mu, cfg.p, cfg.q, cr, cfg.quadrature_tol);
        const Real series = damped_series(phi, mu, cfg.p, cfg.q, xr, hr, cfg.series_tail_tol);
        out.f_mu.push_back(integral - hr * series);
    }
    out.levels = static_cast<int>(out.f_mu.size());

    auto [value, est] = richardson(out.f_mu);
    // the shorter tableau must not be better; otherwise the schedule failed
    std::vector<Real> head(out.f_mu.begin(), out.f_mu.end() - 1);
    auto [value_head, est_head] = richardson(head);
    out.value = value;
    out.error_estimate = est + abs(value - value_head);
    out.converged = est <= est_head * 4 + cfg.quadrature_tol * 16;
    if (!out.converged)
        throw numeric_error("principal_sum_numeric: extrapolation error estimates are not shrinking");
    out.diagnostic = "mu-regularized, Richardson-extrapolated";
    return out;
}

}  // namespace hspoly
