#pragma once

#include <json.hpp>

#include "tlq/functor.hpp"

namespace tlq {

using Json = nlohmann::ordered_json;

/// {"inputs", "outputs", "terms": [{"matching": [1-based], "coefficient"}]}
Json to_json(const TLMorphism& f);
/// {"rank", "components": {"01": "coefficient", ...}}
Json to_json(const TensorVector& v);
/// {"source_rank", "target_rank", "entries": [[...], ...]} for a 2^l x 2^k map.
Json to_json_repmap(const RepMap& m);
/// Rows of scalar strings.
Json to_json(const Matrix& m);
Json to_json(const FunctorReport& r);

/// Inverse of to_json(Matrix), lifting every entry into `field`.
Matrix matrix_from_json(const Json& j, const Field& field);

}  // namespace tlq
