#include "localabc/serialization.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "localabc/errors.hpp"

namespace localabc {

namespace {

Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class parse_integer(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw InputError("expected an integer, got " + j.dump());
}

// [num, den], an integer, or a "p/q" string.
mpq_class parse_rational(const Json& j) {
    mpq_class q;
    if (j.is_array()) {
        if (j.size() != 2) throw InputError("rational must be [num, den]: " + j.dump());
        const mpz_class den = parse_integer(j[1]);
        if (den == 0) throw InputError("zero denominator in " + j.dump());
        q = mpq_class(parse_integer(j[0]), den);
    } else if (j.is_string()) {
        try {
            q = mpq_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw InputError("malformed rational " + j.dump());
        }
        if (q.get_den() == 0) throw InputError("zero denominator in " + j.dump());
    } else {
        q = mpq_class(parse_integer(j));
    }
    q.canonicalize();
    return q;
}

Json rational_to_json(const mpq_class& q) { return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}); }

double finite_number(const Json& j) {
    if (!j.is_number()) throw InputError("expected a number, got " + j.dump());
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError("non-finite number");
    return v;
}

std::string format_number(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex parse_complex(const Json& j) {
    if (j.is_number()) return {finite_number(j), 0.0};
    if (!j.is_array() || j.size() != 2) throw InputError("complex number must be [re, im]: " + j.dump());
    return {finite_number(j[0]), finite_number(j[1])};
}

Json to_json(const PolyC& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Json to_json(const PolyQ& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(Json::array({rational_to_json(c.re()), rational_to_json(c.im())}));
    return out;
}

PolyC parse_polyc(const Json& j) {
    if (!j.is_array()) throw InputError("polynomial must be an array of coefficients");
    std::vector<Complex> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_complex(c));
    return PolyC(std::move(coeffs));
}

PolyQ parse_polyq(const Json& j) {
    if (!j.is_array()) throw InputError("polynomial must be an array of coefficients");
    std::vector<GaussRational> coeffs;
    for (const auto& c : j) {
        if (c.is_array() && c.size() == 2 && (c[0].is_array() || c[1].is_array()))
            coeffs.emplace_back(parse_rational(c[0]), parse_rational(c[1]));
        else
            coeffs.emplace_back(parse_rational(c));
    }
    return PolyQ(std::move(coeffs));
}

Json to_json(const DiskDomain& d) { return {{"center", to_json(d.center())}, {"radius", d.radius()}}; }

DiskDomain parse_domain(const Json& j) {
    if (!j.is_object()) throw InputError("domain must be an object");
    const Complex center = j.contains("center") ? parse_complex(j.at("center")) : Complex{};
    const double radius = j.contains("radius") ? finite_number(j.at("radius")) : 1.0;
    return DiskDomain(center, radius);
}

Json to_json(const BlaschkeProduct& b) {
    Json zeros = Json::array();
    for (const auto& z : b.zeros()) zeros.push_back(Json::array({z.location.real(), z.location.imag(), z.multiplicity}));
    Json out = to_json(b.domain());
    out["zeros"] = zeros;
    return out;
}

BlaschkeProduct parse_blaschke(const Json& j) {
    const DiskDomain domain = parse_domain(j);
    std::vector<Zero> zeros;
    if (j.contains("zeros")) {
        for (const auto& z : j.at("zeros")) {
            if (!z.is_array() || z.size() != 3 || !z[2].is_number_integer())
                throw InputError("zero must be [re, im, multiplicity]: " + z.dump());
            zeros.push_back({{finite_number(z[0]), finite_number(z[1])}, z[2].get<int>()});
        }
    }
    return BlaschkeProduct::from_zeros(domain, ZeroList(std::move(zeros)));
}

Json to_json(const AbcCertificate& c) {
    return {{"n", c.n},
            {"N_lcm", c.n_lcm},
            {"N_rad", c.n_rad},
            {"lambda", c.lambda},
            {"mu", c.mu},
            {"kappa", c.kappa},
            {"lhs", c.lhs},
            {"rhs_21", c.rhs_21},
            {"rhs_22", c.rhs_22},
            {"slack_21", c.slack_21},
            {"slack_22", c.slack_22},
            {"pass_21", c.pass_21},
            {"pass_22", c.pass_22},
            {"hypothesis_ok", c.hypothesis_ok},
            {"divisibility_ok", c.divisibility_ok},
            {"hypothesis_note", c.hypothesis_note}};
}

Json to_json(const MasonReport& r) {
    return {{"degrees", r.degrees},
            {"max_degree", r.max_degree},
            {"n_distinct", r.n_distinct},
            {"bound", r.bound},
            {"holds", r.holds},
            {"coprimality_ok", r.coprimality_ok},
            {"disjointness_ok", r.disjointness_ok},
            {"independence_ok", r.independence_ok},
            {"n", r.n},
            {"relaxed", r.relaxed}};
}

Json to_json(const LimitStudy& s) {
    return {{"radii", s.radii},
            {"kappa_values", s.kappa_values},
            {"mu_values", s.mu_values},
            {"skipped_radii", s.skipped_radii},
            {"kappa_limit_expected", s.kappa_limit_expected},
            {"mu_limit_expected", s.mu_limit_expected}};
}

Json to_json(const DalphaReport& r) {
    return {{"alpha", r.alpha},
            {"n", r.n},
            {"norm_B_lcm_sq", r.norm_B_lcm_sq},
            {"norm_B_rad_sq", r.norm_B_rad_sq},
            {"lambda_alpha", r.lambda_alpha},
            {"mu", r.mu},
            {"ratio", r.ratio}};
}

Json to_json(const TruncationRow& row) {
    return {{"K", row.K},
            {"criterion_sum", row.criterion_sum},
            {"blaschke_sum", row.blaschke_sum},
            {"norm_sq", row.norm_sq},
            {"tail_bound", row.tail_bound},
            {"terms", row.terms}};
}

std::string limit_study_csv(const LimitStudy& s) {
    std::string out = "R,kappa,mu\n";
    for (std::size_t i = 0; i < s.radii.size(); ++i)
        out += format_number(s.radii[i]) + "," + format_number(s.kappa_values[i]) + "," +
               format_number(s.mu_values[i]) + "\n";
    return out;
}

std::string truncation_csv(const std::vector<TruncationRow>& rows) {
    std::string out = "K,criterion_sum,norm_sq\n";
    for (const auto& row : rows)
        out += std::to_string(row.K) + "," + format_number(row.criterion_sum) + "," + format_number(row.norm_sq) + "\n";
    return out;
}

}  // namespace localabc
