#include "hspoly/io.hpp"

#include <fstream>

namespace hspoly {

namespace {

const json& need(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains(field))
        throw parse_error("missing field '" + field + "'");
    return j.at(field);
}


json real_to_json(const Real& v) {
    return real_to_string(v);
}

}  // namespace

json rational_to_json(const Rational& q) {
    return to_string(q);
}

Rational rational_from_json(const json& j, const std::string& field) {
    try {
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long long>());
    } catch (const parse_error& ex) {
        throw parse_error("field '" + field + "': " + ex.what());
    }
    throw parse_error("field '" + field + "' must be a rational string");
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs())
        arr.push_back(to_string(c));
    return arr;
}

Poly poly_from_json(const json& j, const std::string& field) {
    if (!j.is_array())
        throw parse_error("field '" + field + "' must be an array of rational strings");
    std::vector<Rational> c;
    for (size_t i = 0; i < j.size(); ++i)
        c.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return Poly(std::move(c));
}

json equation_to_json(const DifferenceEquation& eq) {
    return json{{"h", rational_to_json(eq.h)},
                {"g", poly_to_json(eq.g)},
                {"r", poly_to_json(eq.r)},
                {"u", poly_to_json(eq.u)}};
}

DifferenceEquation equation_from_json(const json& j) {
    return DifferenceEquation(poly_from_json(need(j, "g"), "g"), poly_from_json(need(j, "r"), "r"),
                              poly_from_json(need(j, "u"), "u"),
                              rational_from_json(need(j, "h"), "h"));
}

json hypergeometric_to_json(const HypergeometricData& hyp) {
    return json{{"h", rational_to_json(hyp.h)}, {"a", rational_to_json(hyp.a)},
                {"b", rational_to_json(hyp.b)}, {"c", rational_to_json(hyp.c)},
                {"d", rational_to_json(hyp.d)}, {"f", rational_to_json(hyp.f)}};
}

HypergeometricData hypergeometric_from_json(const json& j) {
    HypergeometricData hyp;
    hyp.a = rational_from_json(need(j, "a"), "a");
    hyp.b = rational_from_json(need(j, "b"), "b");
    hyp.c = rational_from_json(need(j, "c"), "c");
    hyp.d = rational_from_json(need(j, "d"), "d");
    hyp.f = rational_from_json(need(j, "f"), "f");
    hyp.h = rational_from_json(need(j, "h"), "h");
    return hyp;
}

DifferenceEquation any_equation_from_json(const json& j) {
    if (j.contains("g"))
        return equation_from_json(j);
    if (j.contains("a")) {
        const HypergeometricData hyp = hypergeometric_from_json(j);
        if (!j.contains("lambda"))
            throw parse_error("hypergeometric input needs an explicit 'lambda' field");
        return hyp.equation(rational_from_json(j.at("lambda"), "lambda"));
    }
    throw parse_error("equation JSON must carry either 'g','r','u','h' or 'a'..'f','h','lambda'");
}

json continuous_to_json(const ContinuousEquation& ceq) {
    return json{{"A", poly_to_json(ceq.A)}, {"B2", poly_to_json(ceq.B2)}, {"V", poly_to_json(ceq.V)}};
}

ContinuousEquation continuous_from_json(const json& j) {
    return ContinuousEquation(poly_from_json(need(j, "A"), "A"), poly_from_json(need(j, "B2"), "B2"),
                              poly_from_json(need(j, "V"), "V"));
}

json kernel_to_json(const KernelBasis& kb) {
    json basis = json::array();
    for (const Poly& p : kb.basis)
        basis.push_back(poly_to_json(p));
    return json{{"degree_bound", kb.degree_bound}, {"dimension", kb.dimension}, {"basis", basis}};
}

KernelBasis kernel_from_json(const json& j) {
    KernelBasis kb;
    kb.degree_bound = need(j, "degree_bound").get<int>();
    kb.dimension = need(j, "dimension").get<int>();
    const json& basis = need(j, "basis");
    if (!basis.is_array())
        throw parse_error("field 'basis' must be an array");
    for (size_t i = 0; i < basis.size(); ++i)
        kb.basis.push_back(poly_from_json(basis[i], "basis[" + std::to_string(i) + "]"));
    if (kb.dimension != static_cast<int>(kb.basis.size()))
        throw parse_error("kernel dimension does not match the basis size");
    return kb;
}

json root_to_json(const Root& r) {
    json j;
    if (r.exact())
        j["value"] = rational_to_json(r.value());
    else
        j["interval"] = json::array({rational_to_json(r.lo), rational_to_json(r.hi)});
    j["multiplicity"] = r.multiplicity;
    return j;
}

json rootlist_to_json(const RootList& rl) {
    json arr = json::array();
    for (const Root& r : rl.roots)
        arr.push_back(root_to_json(r));
    return arr;
}

json lattice_class_to_json(const LatticeClass& cls) {
    json members = json::array();
    for (const LatticeMember& m : cls.members) {
        json mj = root_to_json(m.root);
        mj["source"] = m.source == RootSource::G ? "g" : "g_minus_hr";
        mj["offset"] = m.offset.str();
        members.push_back(std::move(mj));
    }
    return json{{"anchor", root_to_json(cls.anchor)}, {"members", members}};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::T1: return "T1";
        case Verdict::T1_REMARK: return "T1_REMARK";
        case Verdict::T2: return "T2";
        case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    throw error("verdict_name: bad enum");
}

json certificate_to_json(const UniquenessCertificate& cert) {
    json j;
    j["verdict"] = verdict_name(cert.verdict);
    j["kappa"] = rational_to_json(cert.kappa);
    if (cert.witness) {
        j["witness"] = lattice_class_to_json(*cert.witness);
        j["witness"]["direction"] = cert.witness_direction == LatticeDirection::UP ? "up" : "down";
    } else {
        j["witness"] = nullptr;
    }
    j["roots_g"] = rootlist_to_json(cert.roots_g);
    j["roots_g_minus_hr"] = rootlist_to_json(cert.roots_g_minus_hr);
    json cols = json::array();
    for (const LatticeClass& c : cert.collisions)
        cols.push_back(lattice_class_to_json(c));
    j["collisions"] = cols;
    return j;
}

json abel_report_to_json(const AbelReport& rep) {
    json j;
    j["recurrence_exact"] = rep.recurrence_exact;
    j["identically_zero"] = rep.identically_zero;
    j["points"] = rep.points;
    j["x0"] = rational_to_json(rep.x0);
    j["shifted"] = rep.shifted;
    j["kappa_negative"] = rep.kappa_negative;
    if (!rep.identically_zero) {
        j["ratio_mean"] = real_to_json(rep.ratio_mean);
        j["ratio_rel_stddev"] = real_to_json(rep.ratio_rel_stddev);
    }
    j["digits"] = static_cast<int>(Real::default_precision());
    return j;
}

json bae_report_to_json(const BaeReport& rep) {
    json residuals = json::array();
    for (const Real& r : rep.residuals)
        residuals.push_back(real_to_json(r));
    return json{{"verdict", rep.pass ? "pass" : "fail"},
                {"bae_pass", rep.bae_pass},
                {"equation_pass", rep.equation_pass},
                {"equivalent", rep.equivalent},
                {"max_bae_residual", real_to_json(rep.max_bae_residual)},
                {"max_equation_coeff", real_to_json(rep.max_equation_coeff)},
                {"tolerance", real_to_json(rep.tolerance)},
                {"n", rep.residuals.size()},
                {"residuals", residuals},
                {"digits", static_cast<int>(Real::default_precision())}};
}

json norlund_result_to_json(const NorlundResult& res) {
    return json{{"value", real_to_json(res.value)},
                {"error_estimate", real_to_json(res.error_estimate)},
                {"levels", res.levels},
                {"converged", res.converged},
                {"diagnostic", res.diagnostic},
                {"digits", static_cast<int>(Real::default_precision())}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw parse_error("malformed JSON in " + path + ": " + ex.what());
    }
}

}  // namespace hspoly
