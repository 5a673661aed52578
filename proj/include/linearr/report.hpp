#pragma once

#include <cstdint>
#include <string>

#include "linearr/json_io.hpp"
#include "linearr/resonance.hpp"

namespace linearr {

struct RunConfig {
  enum class Format { Json, Table };

  std::uint64_t seed = 1;
  int trials = kDefaultTrials;
  Format format = Format::Json;
};

/// {"class", "beta", "predicted_r11_dim"}.
Json classification_json(const Arrangement& arr);

/// Generic Betti numbers of the double, one generic_betti() call per degree.
Json generic_resonance_json(const Arrangement& arr, const RunConfig& config);

/// Every invariant of the arrangement in one document: nbc pairs, graph b1,
/// both algebras, H_1 of the boundary manifold, the intersection ring, the
/// isomorphism audit, beta, the R^1_1 prediction and generic Betti numbers.
/// Deterministic for a fixed config.
Json build_report(const Arrangement& arr, const RunConfig& config);

/// Intersection ring laid out as product tables, one product per line.
std::string ring_table(const IntersectionRing& ring);

/// Flattens a JSON document into "path: value" lines.
std::string json_table(const Json& j);

}  // namespace linearr
