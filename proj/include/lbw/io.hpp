#pragma once

// JSON codecs. Scalars are "p/q" strings (integers are accepted on input);
// matrices are row-major lists of rows; basis indices are 0-based.

#include <json.hpp>

#include "lbw/oop_prelie.hpp"

namespace lbw::io {

using Json = nlohmann::ordered_json;

Scalar scalar_from_json(const Json& j);
Json to_json(const Scalar& q);

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json to_json(const Matrix& m);

// {"dim": n, "brackets": [{"i": i, "j": j, "out": [[k, "p/q"], ...]}, ...]}
LieAlgebra lie_from_json(const Json& j);
// Throws InvalidInput for constants that are not antisymmetric.
Json to_json(const LieAlgebra& L);

// [{"k": k, "out": [[i, j, "p/q"], ...]}, ...], i < j only.
Cobracket cobracket_from_json(const Json& j, std::size_t n);
Json cobracket_to_json(const Cobracket& d);

// {"dim": n, "products": [{"i": i, "j": j, "out": [[k, "p/q"], ...]}, ...]}
PreLieAlgebra prelie_from_json(const Json& j);
Json to_json(const PreLieAlgebra& A);

Json rho_to_json(const Representation& R);

Json report_to_json(const Report& r);

}  // namespace lbw::io
