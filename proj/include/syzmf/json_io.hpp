#pragma once

#include "syzmf/disks.hpp"
#include "syzmf/fourier.hpp"
#include "syzmf/laurent.hpp"
#include "syzmf/matfac.hpp"
#include "syzmf/toric.hpp"

#include <json.hpp>

#include <vector>

namespace syzmf {

using ordered_json = nlohmann::ordered_json;

// Canonical polynomial schema, terms sorted by monomial order:
//   {"n": int, "terms": [{"coeff": "num/den", "qexp": "num/den", "zexp": [int...]}]}
// Round trips are bit exact.
ordered_json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

// {"r": int, "F": [[poly...]], "G": [[poly...]], "lambda": poly}
ordered_json mf_to_json(const MatrixFactorization& m);
MatrixFactorization mf_from_json(const nlohmann::json& j);

// {"n": int, "facets": [{"normal": [int...], "offset_t": "num/den"}]}
ordered_json polytope_to_json(const PolytopeData& pd);

ordered_json area_to_json(const AffineArea& a);
AffineArea area_from_json(const nlohmann::json& j);

ordered_json disk_catalogue_json(const std::vector<DiskClass>& catalogue);
ordered_json pair_catalogue_json(const std::vector<PermissiblePair>& catalogue);

ordered_json verify_report_json(const VerifyReport& report);
ordered_json floer_report_json(const FloerReport& report);

}  // namespace syzmf
