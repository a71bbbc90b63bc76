#pragma once

#include "hspoly/bethe.hpp"
#include "hspoly/casoratian.hpp"
#include "hspoly/contode.hpp"
#include "hspoly/corpus.hpp"
#include "hspoly/norlund.hpp"
#include "hspoly/solver.hpp"
#include "hspoly/uniqueness.hpp"

#include <json.hpp>

namespace hspoly {

using json = nlohmann::json;

/* Wire formats. Rationals are strings "p" or "p/q"; polynomials are
 * ascending arrays of rational strings (["-1/3","0","1"] is x^2 - 1/3);
 * reals are decimal strings with an explicit "digits" companion field. */

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& field);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, const std::string& field);

json equation_to_json(const DifferenceEquation& eq);
DifferenceEquation equation_from_json(const json& j);

json hypergeometric_to_json(const HypergeometricData& hyp);
HypergeometricData hypergeometric_from_json(const json& j);

/// Either {"g","r","u","h"} directly or {"a".."f","h","lambda"}.
DifferenceEquation any_equation_from_json(const json& j);

json continuous_to_json(const ContinuousEquation& ceq);
ContinuousEquation continuous_from_json(const json& j);

json kernel_to_json(const KernelBasis& kb);
KernelBasis kernel_from_json(const json& j);

json root_to_json(const Root& r);
json rootlist_to_json(const RootList& rl);
json lattice_class_to_json(const LatticeClass& cls);
json certificate_to_json(const UniquenessCertificate& cert);

json abel_report_to_json(const AbelReport& rep);
json bae_report_to_json(const BaeReport& rep);
json norlund_result_to_json(const NorlundResult& res);

std::string verdict_name(Verdict v);

/// File loader with parse diagnostics carrying the byte offset.
json load_json_file(const std::string& path);

}  // namespace hspoly
