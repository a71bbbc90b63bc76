#pragma once

#include "hspoly/fdeq.hpp"

#include <map>
#include <string>

namespace hspoly {

/* Classical discrete families in self-adjoint form
 *   sigma(x) Dn y + tau(x) D y + lambda y = 0   (Dn = forward-backward
 * second difference, h = 1), carried over to the canonical equation via
 *   Dn y(x) = D^2 y(x-1), the shift x -> x+1, and
 *   D y(x+1) = D y(x) + h D^2 y(x),
 * giving g = sigma(x+1) + tau(x+1), r = tau(x+1), u = lambda. */

enum class Family { charlier, meixner, kravchuk, hahn };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

struct CorpusEntry {
    Family family;
    std::map<std::string, Rational> params;
    Poly sigma, tau;

    /// Eigenvalue admitting a degree-n solution.
    Rational lambda_n(unsigned n) const;

    /// Canonical equation with u = lambda.
    DifferenceEquation equation(const Rational& lambda) const;
    DifferenceEquation equation_for_degree(unsigned n) const { return equation(lambda_n(n)); }
};

/// Validates the parameter domain; throws hypothesis_error outside it.
CorpusEntry corpus_build(Family family, const std::map<std::string, Rational>& params);

/// Parameter sets from the versioned fixture file (JSON, family -> params).
std::map<Family, CorpusEntry> load_corpus_fixtures(const std::string& path);

}  // namespace hspoly
