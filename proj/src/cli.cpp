#include "localabc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "localabc/errors.hpp"

namespace localabc {

namespace {

const char* status_name(int code) {
    switch (code) {
        case kExitPass: return "pass";
        case kExitInequalityFailed: return "inequality_failed";
        case kExitHypothesisFailure: return "hypothesis_failure";
        case kExitNumericalFailure: return "numerical_failure";
        default: return "input_error";
    }
}

struct Outcome {
    Json result;
    int code = kExitPass;
};

struct Context {
    const Json& problem;
    const RunFlags& flags;
    QuadratureConfig cfg;
    double alpha = 0.5;
};

QuadratureConfig read_config(const Json& problem, const RunFlags& flags) {
    QuadratureConfig cfg;
    if (problem.contains("quadrature")) {
        const Json& q = problem.at("quadrature");
        cfg.boundary_samples = q.value("boundary_samples", cfg.boundary_samples);
        cfg.radial_nodes = q.value("radial_nodes", cfg.radial_nodes);
        cfg.refinement_limit = q.value("refinement_limit", cfg.refinement_limit);
        cfg.rel_tol = q.value("rel_tol", cfg.rel_tol);
    }
    if (flags.samples) cfg.boundary_samples = *flags.samples;
    if (flags.radial) cfg.radial_nodes = *flags.radial;
    if (flags.tol) cfg.rel_tol = *flags.tol;
    cfg.validate();
    return cfg;
}

const Json& require(const Json& problem, const char* key) {
    if (!problem.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return problem.at(key);
}

std::vector<PolyC> polyc_list(const Json& problem) {
    const Json& list = require(problem, "polynomials");
    if (!list.is_array() || list.empty()) throw InputError("'polynomials' must be a nonempty array");
    std::vector<PolyC> out;
    for (const auto& p : list) out.push_back(parse_polyc(p));
    return out;
}

std::vector<PolyQ> polyq_list(const Json& problem) {
    const Json& list = require(problem, "polynomials");
    if (!list.is_array() || list.empty()) throw InputError("'polynomials' must be a nonempty array");
    std::vector<PolyQ> out;
    for (const auto& p : list) out.push_back(parse_polyq(p));
    return out;
}

DiskDomain read_domain(const Json& problem) {
    return problem.contains("domain") ? parse_domain(problem.at("domain")) : DiskDomain::unit();
}

int certificate_code(const AbcCertificate& c) {
    if (!c.hypothesis_ok) return kExitHypothesisFailure;
    return c.pass_21 && c.pass_22 && c.divisibility_ok ? kExitPass : kExitInequalityFailed;
}

Json system_json(const AbcSystem& s) {
    Json fs = Json::array();
    for (const auto& f : s.fs) fs.push_back(to_json(f));
    return {{"polynomials", fs},
            {"f_sum", to_json(s.f_sum)},
            {"wronskian", to_json(s.wronskian)},
            {"B_lcm", to_json(s.b_lcm)},
            {"B_rad", to_json(s.b_rad)}};
}

Outcome certify(const std::vector<PolyC>& fs, const DiskDomain& domain, const QuadratureConfig& cfg) {
    const AbcSystem system = build_system(fs, domain);
    const AbcCertificate cert = verify(system, cfg);
    return {{{"system", system_json(system)}, {"certificate", to_json(cert)}}, certificate_code(cert)};
}

void write_csv(const RunFlags& flags, const std::string& text, Json& result) {
    if (!flags.csv_path) return;
    std::ofstream file(*flags.csv_path, std::ios::binary);
    if (!file) throw InputError("cannot write CSV to '" + *flags.csv_path + "'");
    file << text;
    result["csv"] = *flags.csv_path;
}

Outcome run_abc(const Context& ctx) {
    const DiskDomain domain = read_domain(ctx.problem);
    if (!ctx.problem.contains("polynomials") && !ctx.problem.contains("random"))
        throw InputError("mode 'abc' needs 'polynomials' or 'random'");
    Outcome out;
    out.result = Json::object();
    if (ctx.problem.contains("polynomials")) {
        Outcome single = certify(polyc_list(ctx.problem), domain, ctx.cfg);
        out.result = single.result;
        out.code = single.code;
    }
    if (ctx.problem.contains("random")) {
        const Json& spec = ctx.problem.at("random");
        FamilyOptions options;
        options.max_n = spec.value("max_n", options.max_n);
        options.max_degree = spec.value("max_degree", options.max_degree);
        const int count = spec.value("count", 10);
        if (count < 0) throw InputError("'random.count' must be nonnegative");
        std::mt19937_64 rng(ctx.flags.seed);
        Json family = Json::array();
        for (int i = 0; i < count; ++i) {
            const AbcSystem system = random_admissible_system(rng, domain, options, ctx.cfg);
            const AbcCertificate cert = verify(system, ctx.cfg);
            Json polys = Json::array();
            for (const auto& f : system.fs) polys.push_back(to_json(f));
            family.push_back({{"polynomials", polys}, {"certificate", to_json(cert)}});
            out.code = std::max(out.code, certificate_code(cert));
        }
        out.result["random"] = family;
    }
    return out;
}

Outcome run_mason_a(const Context& ctx) {
    const auto ps = polyq_list(ctx.problem);
    if (ps.size() != 3) throw InputError("mode 'mason_a' needs exactly three polynomials a, b, c");
    const MasonReport report = verify_theorem_A(ps[0], ps[1], ps[2]);
    return {{{"report", to_json(report)}}, report.holds ? kExitPass : kExitInequalityFailed};
}

Outcome run_mason_b(const Context& ctx) {
    const auto ps = polyq_list(ctx.problem);
    const MasonReport report = verify_theorem_B(ps, ctx.problem.value("relaxed", false));
    Json result{{"report", to_json(report)}, {"wronskian_degree_bound", wronskian_degree_bound_check(ps)}};
    return {result, report.holds ? kExitPass : kExitInequalityFailed};
}

Outcome run_limit_r(const Context& ctx) {
    std::optional<std::vector<double>> radii;
    if (ctx.problem.contains("radii")) radii = ctx.problem.at("radii").get<std::vector<double>>();
    LimitStudy study;
    if (ctx.problem.contains("wronskian"))
        study = limit_R_study(parse_polyc(ctx.problem.at("wronskian")), radii, ctx.cfg);
    else
        study = limit_R_study(polyq_list(ctx.problem), radii, ctx.cfg);
    Outcome out{{{"study", to_json(study)}}, kExitPass};
    write_csv(ctx.flags, limit_study_csv(study), out.result);
    return out;
}

Outcome run_dalpha(const Context& ctx) {
    Outcome out;
    out.result = Json::object();
    if (ctx.problem.contains("polynomials"))
        out.result["report"] = to_json(verify_theorem_41(polyc_list(ctx.problem), ctx.alpha, ctx.cfg));
    if (ctx.problem.contains("inner_factor")) {
        const Json& factor = ctx.problem.at("inner_factor");
        const PolyC f = parse_polyc(require(factor, "f"));
        const BlaschkeProduct theta = parse_blaschke(require(factor, "theta"));
        const double r = r_alpha(f, theta, ctx.alpha);
        const bool monotone = division_monotonicity_check(f, theta, ctx.alpha);
        out.result["inner_factor"] = {{"r_alpha", r},
                               {"r_alpha_area", r_alpha_area(f, theta, ctx.alpha, ctx.cfg)},
                               {"division_monotone", monotone}};
        if (!monotone || r < -1e-9) out.code = kExitInequalityFailed;
    }
    if (out.result.empty()) throw InputError("mode 'dalpha' needs 'polynomials' or 'lemma'");
    return out;
}

Outcome run_truncation(const Context& ctx) {
    TruncationSchedule schedule;
    schedule.zero_rule = ctx.problem.value("zero_rule", schedule.zero_rule);
    schedule.truncation_levels = require(ctx.problem, "levels").get<std::vector<int>>();
    const auto rows = truncation_study(schedule, ctx.alpha);
    Json table = Json::array();
    for (const auto& row : rows) table.push_back(to_json(row));
    Outcome out{{{"rows", table}}, kExitPass};
    write_csv(ctx.flags, truncation_csv(rows), out.result);
    return out;
}

Outcome run_example(const Context& ctx, bool monomial) {
    const int n = ctx.problem.value("n", 2);
    const double eps = ctx.problem.value("epsilon", 0.1);
    const auto fs = monomial ? equality_example_monomial(n, ctx.problem.value("m", 5), eps)
                             : equality_example_constant(n, eps);
    return certify(fs, DiskDomain::unit(), ctx.cfg);
}

Outcome dispatch(const Context& ctx) {
    const std::string mode = require(ctx.problem, "mode").get<std::string>();
    if (mode == "abc") return run_abc(ctx);
    if (mode == "mason_a") return run_mason_a(ctx);
    if (mode == "mason_b") return run_mason_b(ctx);
    if (mode == "limit_r") return run_limit_r(ctx);
    if (mode == "dalpha") return run_dalpha(ctx);
    if (mode == "truncation") return run_truncation(ctx);
    if (mode == "example1") return run_example(ctx, false);
    if (mode == "example2") return run_example(ctx, true);
    throw InputError("unknown mode '" + mode + "'");
}

Json flags_json(const RunFlags& flags) {
    Json out{{"seed", flags.seed}};
    if (flags.samples) out["samples"] = *flags.samples;
    if (flags.radial) out["radial"] = *flags.radial;
    if (flags.tol) out["tol"] = *flags.tol;
    if (flags.alpha) out["alpha"] = *flags.alpha;
    return out;
}

}  // namespace

int run_problem(const Json& problem, const RunFlags& flags, std::ostream& out, std::ostream& err) {
    Json doc{{"input", problem}, {"flags", flags_json(flags)}};
    int code = kExitPass;
    try {
        if (!problem.is_object()) throw InputError("problem must be a JSON object");
        doc["mode"] = problem.value("mode", "");
        Context ctx{problem, flags, read_config(problem, flags)};
        ctx.alpha = flags.alpha ? *flags.alpha : problem.value("alpha", 0.5);
        Outcome outcome = dispatch(ctx);
        doc["result"] = std::move(outcome.result);
        code = outcome.code;
    } catch (const InputError& e) {
        code = kExitInputError;
        doc["error"] = e.what();
        err << "input error: " << e.what() << "\n";
    } catch (const MasonHypothesisError& e) {
        code = kExitHypothesisFailure;
        doc["error"] = e.what();
        doc["hypothesis"] = to_string(e.kind());
    } catch (const HypothesisFailure& e) {
        code = kExitHypothesisFailure;
        doc["error"] = e.what();
    } catch (const NumericalFailure& e) {
        code = kExitNumericalFailure;
        doc["error"] = e.what();
        doc["diagnostics"] = e.diagnostics();
    } catch (const Json::exception& e) {
        code = kExitInputError;
        doc["error"] = e.what();
        err << "input error: " << e.what() << "\n";
    }
    doc["status"] = status_name(code);
    doc["exit_code"] = code;
    out << doc.dump(2) << "\n";
    return code;
}

int run_file(const std::string& path, const RunFlags& flags, std::ostream& out, std::ostream& err) {
    std::ifstream file(path);
    if (!file) {
        err << "input error: cannot open '" << path << "'\n";
        return kExitInputError;
    }
    Json problem;
    try {
        problem = Json::parse(file);
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return run_problem(problem, flags, out, err);
}

}  // namespace localabc
