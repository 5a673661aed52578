#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "linearr/arrangement.hpp"
#include "linearr/boundary_ring.hpp"
#include "linearr/exact_linalg.hpp"
#include "linearr/graded_algebra.hpp"
#include "linearr/plumbing.hpp"
#include "linearr/resonance.hpp"

namespace linearr {

using Json = nlohmann::ordered_json;

/// Well-formed JSON that does not follow the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"lines": n, "points": [[...], ...]}; a "points_full" member, when
/// present, is read instead of "points". Throws SchemaError or ArrangementError.
Arrangement arrangement_from_json(const Json& j);

/// {"lines", "points" (input points, normalized), "points_full" (all points)}.
Json arrangement_to_json(const Arrangement& arr);

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
Json integer_to_json(const Integer& x);

/// Accepts a JSON integer or a string "p" / "p/q".
Rational rational_from_json(const Json& j);

/// {"rows", "cols", "entries": [decimal or "p/q" strings, row-major]}.
Json matrix_to_json(const IntMatrix& m);
Json matrix_to_json(const RatMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);

/// {"degree1": [labels], ..., "products": [{"x", "y", "value": {label: c}}]}
/// listing the nonzero products on canonical pairs.
Json algebra_to_json(const GradedAlgebra& alg);

/// Labels, pairing matrix, and the product of every ordered pair of H_2
/// basis elements (zero products included, as {}).
Json ring_to_json(const IntersectionRing& ring);

Json h1_to_json(const H1Result& h1, const IntMatrix& matrix);
Json isomorphism_to_json(const IsomorphismReport& report);

/// {"a": [...], "b": [...]} with entries as accepted by rational_from_json.
AomotoPoint point_from_json(const Json& j);

}  // namespace linearr
