#pragma once

#include "bps/densitylab.hpp"
#include "bps/exactmat.hpp"
#include "bps/families.hpp"
#include "bps/intpoly.hpp"
#include "bps/rootcert.hpp"

#include "json.hpp"

#include <string>

namespace bps {

using Json = nlohmann::ordered_json;

// Exact values are written as decimal strings ("-12", "3/4"); floats only
// appear under keys ending in "_approx".

Json to_json(const IntMatrix& m);
Json to_json(const IntPoly& p);
Json to_json(const Rational& r);
Json to_json(const IsolatingInterval& iv);
Json to_json(const DiskRecord& rec);
Json to_json(const SquareFreeDecomposition& sfd);
Json to_json(const AnnulusCertificate& cert);
Json to_json(const NonsurjectivityCertificate& cert);
Json to_json(const DensityReport& report);

/// Array of rows; entries may be JSON integers or decimal strings.
IntMatrix matrix_from_json(const Json& j);
/// Array of ascending coefficients, integers or decimal strings.
IntPoly poly_from_json(const Json& j);

/// Text or JSON, chosen by the first non-blank character ('[' means JSON).
IntMatrix parse_matrix(const std::string& content);
IntPoly parse_poly(const std::string& content);

std::string read_file(const std::string& path);

/// CSV header "K,count_Q,count_total,fraction_num,fraction_den,bound_num,bound_den".
std::string density_csv_header();
std::string density_csv_row(const DensityReport& report);

} // namespace bps
