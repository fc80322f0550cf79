#pragma once

#include <string>

#include "json.hpp"

#include "ivpoly/construct.hpp"

namespace ivpoly::io {

using json = nlohmann::json;

// Arbitrary-precision integers travel as decimal strings; structural
// counters and indices as JSON numbers.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json zpoly_to_json(const ZPoly& g);
ZPoly zpoly_from_json(const json& j);

json rational_poly_to_json(const RationalPoly& f);
RationalPoly rational_poly_from_json(const json& j);

json design_to_json(const ResidueDesign& d);
ResidueDesign design_from_json(const json& j);

json lift_to_json(const LiftCertificate& cert);
LiftCertificate lift_from_json(const json& j);

json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const json& j);

json prescribed_to_json(const PrescribedLengthsArtifact& art);
PrescribedLengthsArtifact prescribed_from_json(const json& j);

json transfer_to_json(const TransferArtifact& art);
TransferArtifact transfer_from_json(const json& j);

// Adds kind/version/generated_at envelope fields.
json artifact_envelope(json body, const std::string& kind);

}  // namespace ivpoly::io
