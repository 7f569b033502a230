#pragma once

#include <json.hpp>

#include "autqm/automorphism.hpp"
#include "autqm/norms.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/rational.hpp"
#include "autqm/word.hpp"

namespace autqm {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"rank", "images", "trace"}; rebuilt from the trace, which must
/// reproduce the stored images.
Json to_json(const Automorphism& phi);
Automorphism automorphism_from_json(const Json& j);

/// The provenance tree. Rebuilding replays the constructors, so values
/// and flags come out identical.
Json to_json(const Quasimorphism& f);
Quasimorphism quasimorphism_from_json(const Json& j);

Json to_json(const ProductQuasimorphism& f);
ProductQuasimorphism product_quasimorphism_from_json(const Json& j);

Json to_json(const DefectCertificate& c);
Json to_json(const ProductDefectCertificate& c);
Json to_json(const WitnessFactor& f);
Json to_json(const NormResult& r);
Json to_json(const SaclEstimate& s);

}  // namespace autqm
