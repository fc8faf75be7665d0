#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "localabc/abc_verifier.hpp"
#include "localabc/dalpha.hpp"
#include "localabc/mason_stothers.hpp"

namespace localabc {

using Json = nlohmann::json;

// PolyC: [[re, im], ...] ascending. PolyQ: [[[num, den], [num, den]], ...],
// integers may be given as strings to exceed 64 bits. Parsers throw InputError.
Json to_json(const PolyC& p);
Json to_json(const PolyQ& p);
PolyC parse_polyc(const Json& j);
PolyQ parse_polyq(const Json& j);

Json to_json(Complex z);
Complex parse_complex(const Json& j);

/// {"center": [re, im], "radius": r}
Json to_json(const DiskDomain& d);
DiskDomain parse_domain(const Json& j);

/// {"center": [re, im], "radius": r, "zeros": [[re, im, mult], ...]}
Json to_json(const BlaschkeProduct& b);
BlaschkeProduct parse_blaschke(const Json& j);

Json to_json(const AbcCertificate& c);
Json to_json(const MasonReport& r);
Json to_json(const LimitStudy& s);
Json to_json(const DalphaReport& r);
Json to_json(const TruncationRow& row);

/// R,kappa,mu
std::string limit_study_csv(const LimitStudy& s);
/// K,criterion_sum,norm_sq
std::string truncation_csv(const std::vector<TruncationRow>& rows);

}  // namespace localabc
