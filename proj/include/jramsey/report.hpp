#pragma once

#include <json.hpp>

#include "jramsey/oracle.hpp"
#include "jramsey/witness.hpp"

namespace jramsey {

using Json = nlohmann::ordered_json;

Json to_json(const ExtractionTrace& trace);
// Trace fields plus the witness itself and its verification flag.
Json to_json(const DichotomyWitness& w);
Json to_json(const RamseyCertificate& cert);
Json to_json(const RamseyBound& bound);

/// Parses a certificate and re-checks its lower witness with the search
/// engine; throws InvalidArgument when either step fails. The upper record
/// is only re-derived by verify_certificate.
RamseyCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace jramsey
