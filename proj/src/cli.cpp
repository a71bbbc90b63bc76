#include "hspoly/cli.hpp"

#include "hspoly/gammah.hpp"
#include "hspoly/io.hpp"

#include <CLI11.hpp>

#include <random>

namespace hspoly {

namespace {

struct Common {
    std::string output = "json";
    int digits = 0;
    uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    // free the short -h for the lattice-step option
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--output", c.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--digits", c.digits, "working precision in decimal digits");
    cmd->add_option("--seed", c.seed, "seed for randomized sampling");
}

void emit(const Common& c, const json& j, const std::string& text, std::ostream& out) {
    if (c.output == "json")
        out << j.dump(2) << "\n";
    else
        out << text;
}

int cmd_solve(const Common& c, const std::string& input, int degree, std::ostream& out) {
    const json j = load_json_file(input);
    const DifferenceEquation eq = any_equation_from_json(j);
    const KernelBasis kb = polynomial_kernel(eq, degree);
    std::string text = "degree bound " + std::to_string(kb.degree_bound) + ", dimension " +
                       std::to_string(kb.dimension) + "\n";
    for (const Poly& p : kb.basis)
        text += "  " + to_display_string(p) + "\n";
    emit(c, kernel_to_json(kb), text, out);
    return 0;
}

int cmd_certify(const Common& c, const std::string& input, std::ostream& out) {
    const json j = load_json_file(input);
    const DifferenceEquation eq = any_equation_from_json(j);
    const UniquenessCertificate cert = certify(eq);
    std::string text = "verdict " + verdict_name(cert.verdict) + " (kappa " + to_string(cert.kappa) +
                       ", " + std::to_string(cert.collisions.size()) + " collision classes)\n";
    emit(c, certificate_to_json(cert), text, out);
    return 0;
}

int cmd_casoratian(const Common& c, const std::string& input, int points, std::ostream& out) {
    const json j = load_json_file(input);
    const DifferenceEquation eq = any_equation_from_json(j);
    // random-ish rational start derived from the seed, then auto-shifted off poles
    std::mt19937_64 rng(c.seed);
    const Rational x0 = Rational(static_cast<int>(rng() % 7)) + make_rational(1, 7);
    std::optional<std::pair<Rational, Rational>> s1, s2;
    if (c.seed != 1) {
        s1 = std::make_pair(Rational(1 + static_cast<int>(rng() % 5)),
                            Rational(static_cast<int>(rng() % 5)));
        s2 = std::make_pair(Rational(static_cast<int>(rng() % 5)),
                            Rational(1 + static_cast<int>(rng() % 5)));
    }
    const AbelReport rep = run_abel_verification(eq, x0, points, s1, s2);
    std::string text = std::string("recurrence_exact ") + (rep.recurrence_exact ? "yes" : "no");
    if (rep.identically_zero)
        text += ", Casoratian identically zero\n";
    else
        text += ", ratio mean " + real_to_string(rep.ratio_mean, 20) + ", rel stddev " +
                real_to_string(rep.ratio_rel_stddev, 8) + "\n";
    emit(c, abel_report_to_json(rep), text, out);
    return 0;
}

int cmd_bae(const Common& c, const std::string& input, const std::string& roots_path,
            const std::string& tol, std::ostream& out) {
    const json j = load_json_file(input);
    const DifferenceEquation eq = any_equation_from_json(j);
    const json rj = load_json_file(roots_path);
    if (!rj.is_array())
        throw parse_error("roots file must be a JSON array of decimal or rational strings");
    std::vector<Real> roots;
    for (const auto& v : rj) {
        if (!v.is_string())
            throw parse_error("roots entries must be strings");
        const std::string s = v.get<std::string>();
        roots.push_back(s.find('/') != std::string::npos ? to_real(parse_rational(s)) : Real(s));
    }
    const RootSet rs = RootSet::of(std::move(roots), Real("1e-30"));
    const BaeReport rep = verify_solution_via_bae(eq, rs, Real(tol));
    emit(c, bae_report_to_json(rep),
         std::string(rep.pass ? "pass" : "fail") + ", max residual " +
             real_to_string(rep.max_bae_residual, 12) + "\n",
         out);
    return 0;
}

int cmd_norlund(const Common& c, const std::string& demo, const std::string& h_s,
                const std::string& x_s, const std::string& c_s, int p, int q, std::ostream& out) {
    const Rational h = parse_rational(h_s), x = parse_rational(x_s), cc = parse_rational(c_s);
    PhiSpec phi = PhiSpec::constant(Rational(1));
    ClosedKind kind = ClosedKind::constant;
    if (demo == "constant") {
        phi = PhiSpec::constant(Rational(1));
        kind = ClosedKind::constant;
    } else if (demo == "exp") {
        phi = PhiSpec::exponential();
        kind = ClosedKind::exponential;
    } else if (demo == "log") {
        phi = PhiSpec::logarithm();
        kind = ClosedKind::logarithm;
    } else {
        throw parse_error("norlund --demo must be constant, exp or log");
    }
    RegularizationConfig cfg = RegularizationConfig::defaults();
    cfg.p = p;
    cfg.q = q;
    const Real closed = principal_sum_closed(kind, Rational(1), cc, x, h);
    const NorlundResult res = principal_sum_numeric(phi, cc, x, h, cfg);
    json j = norlund_result_to_json(res);
    j["closed_form"] = real_to_string(closed);
    if (kind == ClosedKind::constant)
        j["exact"] = to_string(Rational(x - cc - h / 2));
    emit(c, j,
         "closed " + real_to_string(closed, 20) + "\nnumeric " + real_to_string(res.value, 20) +
             "\nerror estimate " + real_to_string(res.error_estimate, 6) + "\n",
         out);
    return 0;
}

int cmd_gamma_h(const Common& c, const std::string& h_s, const std::string& x_s, std::ostream& out) {
    const Rational h = parse_rational(h_s), x = parse_rational(x_s);
    const GammaHValue v = gamma_h(x, h);
    json j;
    j["x"] = to_string(x);
    j["h"] = to_string(h);
    j["is_pole"] = v.is_pole;
    if (v.is_pole) {
        if (v.pole_index)
            j["pole_index"] = *v.pole_index;
        emit(c, j, "pole\n", out);
    } else {
        j["value"] = real_to_string(v.value);
        j["digits"] = static_cast<int>(Real::default_precision());
        emit(c, j, real_to_string(v.value) + "\n", out);
    }
    return 0;
}

int cmd_corpus(const Common& c, const std::string& family, const std::string& params_path,
               int degree, std::ostream& out) {
    const auto fixtures = load_corpus_fixtures(params_path);
    const Family fam = family_from_name(family);
    const auto it = fixtures.find(fam);
    if (it == fixtures.end())
        throw parse_error("family '" + family + "' missing from " + params_path);
    const CorpusEntry& entry = it->second;
    const Rational lambda = entry.lambda_n(static_cast<unsigned>(degree));
    const DifferenceEquation eq = entry.equation(lambda);
    json j;
    j["family"] = family_name(entry.family);
    json params;
    for (const auto& [k, v] : entry.params)
        params[k] = to_string(v);
    j["parameters"] = params;
    j["derivation"] = {{"sigma", poly_to_json(entry.sigma)},
                       {"tau", poly_to_json(entry.tau)},
                       {"form", "sigma(x+1) D2 + tau(x+1) D + lambda shift"},
                       {"g", "sigma(x+1) + tau(x+1)"},
                       {"r", "tau(x+1)"}};
    j["degree"] = degree;
    j["lambda"] = to_string(lambda);
    j["equation"] = equation_to_json(eq);
    emit(c, j,
         family_name(entry.family) + ": lambda_" + std::to_string(degree) + " = " + to_string(lambda) +
             ", g = " + to_display_string(eq.g) + ", r = " + to_display_string(eq.r) + "\n",
         out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polynomial solutions of second-order finite-difference equations: "
                 "exact kernels, uniqueness certificates, Casoratian closed forms, "
                 "Bethe-Ansatz checks, Noerlund sums"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    Common common;
    std::string input, roots_path, demo, h_s, x_s, c_s = "0", tol = "1e-8", family;
    std::string params_path = "fixtures/corpus.json";
    int degree = 5, points = 20, p = 1, q = 0;

    auto* solve = app.add_subcommand("solve", "polynomial kernel up to a degree bound");
    solve->add_option("--input", input, "equation JSON file")->required();
    solve->add_option("--degree", degree, "degree bound")->required();
    add_common(solve, common);

    auto* certify_cmd = app.add_subcommand("certify", "uniqueness certificate");
    certify_cmd->add_option("--input", input, "equation JSON file")->required();
    add_common(certify_cmd, common);

    auto* cas = app.add_subcommand("casoratian", "Casoratian recurrence and closed-form check");
    cas->add_option("--input", input, "equation JSON file")->required();
    cas->add_option("--points", points, "sample points");
    add_common(cas, common);

    auto* bae = app.add_subcommand("bae", "Bethe-Ansatz residual verification");
    bae->add_option("--input", input, "equation JSON file")->required();
    bae->add_option("--roots", roots_path, "JSON array of zeros")->required();
    bae->add_option("--tol", tol, "residual tolerance");
    add_common(bae, common);

    auto* nor = app.add_subcommand("norlund", "principal-sum demos");
    nor->add_option("--demo", demo, "constant, exp or log")->required();
    nor->add_option("--h", h_s, "lattice step")->required();
    nor->add_option("--x", x_s, "evaluation point")->required();
    nor->add_option("--c", c_s, "lower limit");
    nor->add_option("--p", p, "regularizer power");
    nor->add_option("--q", q, "regularizer log power");
    add_common(nor, common);

    auto* gam = app.add_subcommand("gamma-h", "generalized gamma value");
    gam->add_option("--h", h_s, "lattice step")->required();
    gam->add_option("--x", x_s, "argument")->required();
    add_common(gam, common);

    auto* cor = app.add_subcommand("corpus", "classical discrete families");
    cor->add_option("--family", family, "charlier, meixner, kravchuk or hahn")->required();
    cor->add_option("--params", params_path, "fixture JSON file");
    cor->add_option("--degree", degree, "degree n for lambda_n");
    add_common(cor, common);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (common.digits > 0)
        set_default_digits(common.digits);

    try {
        if (solve->parsed())
            return cmd_solve(common, input, degree, out);
        if (certify_cmd->parsed())
            return cmd_certify(common, input, out);
        if (cas->parsed())
            return cmd_casoratian(common, input, points, out);
        if (bae->parsed())
            return cmd_bae(common, input, roots_path, tol, out);
        if (nor->parsed())
            return cmd_norlund(common, demo, h_s, x_s, c_s, p, q, out);
        if (gam->parsed())
            return cmd_gamma_h(common, h_s, x_s, out);
        if (cor->parsed())
            return cmd_corpus(common, family, params_path, degree, out);
    } catch (const numeric_error& ex) {
        err << "numeric failure: " << ex.what() << "\n";
        return 3;
    } catch (const hypothesis_error& ex) {
        err << "hypothesis violation: " << ex.what() << "\n";
        return 2;
    } catch (const parse_error& ex) {
        err << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const error& ex) {
        err << "error: " << ex.what() << "\n";
        return 3;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace hspoly
