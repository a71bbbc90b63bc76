#include "hspoly/corpus.hpp"

#include "hspoly/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace hspoly {

Family family_from_name(const std::string& name) {
    if (name == "charlier")
        return Family::charlier;
    if (name == "meixner")
        return Family::meixner;
    if (name == "kravchuk")
        return Family::kravchuk;
    if (name == "hahn")
        return Family::hahn;
    throw parse_error("unknown corpus family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::charlier: return "charlier";
        case Family::meixner: return "meixner";
        case Family::kravchuk: return "kravchuk";
        case Family::hahn: return "hahn";
    }
    throw error("family_name: bad enum");
}

namespace {

Rational need(const std::map<std::string, Rational>& p, const std::string& key) {
    const auto it = p.find(key);
    if (it == p.end())
        throw hypothesis_error("corpus parameter missing: " + key);
    return it->second;
}

}  // namespace

Rational CorpusEntry::lambda_n(unsigned n) const {
    // -n tau' - n(n-1) sigma''/2, the eigenvalue ladder of the family
    const Rational nn(n);
    const Rational tau1 = tau.coeff(1);
    const Rational sigma2 = sigma.coeff(2);
    return -nn * tau1 - nn * (nn - 1) * sigma2;
}

DifferenceEquation CorpusEntry::equation(const Rational& lambda) const {
    const Poly sig1 = shift(sigma, Rational(1));
    const Poly tau1 = shift(tau, Rational(1));
    return DifferenceEquation(sig1 + tau1, tau1, Poly::constant(lambda), Rational(1));
}

CorpusEntry corpus_build(Family family, const std::map<std::string, Rational>& params) {
    CorpusEntry e;
    e.family = family;
    e.params = params;
    const Poly X{Rational(0), Rational(1)};
    switch (family) {
        case Family::charlier: {
            const Rational a = need(params, "a");
            if (a <= 0)
                throw hypothesis_error("charlier: needs a > 0");
            e.sigma = X;
            e.tau = Poly{a, Rational(-1)};  // a - x
            break;
        }
        case Family::meixner: {
            const Rational beta = need(params, "beta");
            const Rational c = need(params, "c");
            if (beta <= 0 || c <= 0 || c >= 1)
                throw hypothesis_error("meixner: needs beta > 0 and 0 < c < 1");
            e.sigma = X;
            e.tau = Poly{beta * c, c - 1};  // beta c - (1-c) x
            break;
        }
        case Family::kravchuk: {
            const Rational p = need(params, "p");
            const Rational N = need(params, "N");
            if (p <= 0 || p >= 1)
                throw hypothesis_error("kravchuk: needs 0 < p < 1");
            if (!is_integer(N) || N < 1)
                throw hypothesis_error("kravchuk: needs integer N >= 1");
            const Rational q = 1 - p;
            e.sigma = X;
            e.tau = Poly{N * p / q, -1 / q};  // (N p - x)/(1 - p)
            break;
        }
        case Family::hahn: {
            const Rational alpha = need(params, "alpha");
            const Rational beta = need(params, "beta");
            const Rational N = need(params, "N");
            if (alpha <= -1 || beta <= -1)
                throw hypothesis_error("hahn: needs alpha, beta > -1");
            if (!is_integer(N) || N < 1)
                throw hypothesis_error("hahn: needs integer N >= 1");
            // sigma = x (N + alpha - x), tau = (beta+1)(N-1) - (alpha+beta+2) x
            e.sigma = X * Poly{N + alpha, Rational(-1)};
            e.tau = Poly{(beta + 1) * (N - 1), -(alpha + beta + 2)};
            break;
        }
    }
    return e;
}

std::map<Family, CorpusEntry> load_corpus_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open corpus fixture file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error("corpus fixture file " + path + ": " + ex.what());
    }
    std::map<Family, CorpusEntry> out;
    for (const auto& [name, body] : j.items()) {
        const Family fam = family_from_name(name);
        std::map<std::string, Rational> params;
        for (const auto& [key, val] : body.items())
            params[key] = parse_rational(val.get<std::string>());
        out.emplace(fam, corpus_build(fam, params));
    }
    return out;
}

}  // namespace hspoly
