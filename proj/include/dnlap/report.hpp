#pragma once

#include <string>

#include <json.hpp>

#include "dnlap/audit.hpp"
#include "dnlap/certificate.hpp"
#include "dnlap/curvature.hpp"
#include "dnlap/matrix.hpp"
#include "dnlap/rigidity.hpp"
#include "dnlap/spectra.hpp"

namespace dnlap {

using Json = nlohmann::ordered_json;

/// Finite numbers as numbers, infinities as the strings "inf" / "-inf".
Json number(double x);

Json to_json(const Matrix& m);
Json to_json(const GraphSpectra& s);
/// Tagged with "type": "certificate".
Json to_json(const ComparisonCertificate& c);
/// Tagged with "type": "rigidity".
Json to_json(const RigidityReport& r);
/// Tagged with "type": "curvature".
Json to_json(const CurvatureResult& r);
/// Tagged with "type": "audit".
Json to_json(const AuditReport& r);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace dnlap
