#pragma once

#include "lattice_equiv/enumeration.hpp"
#include "lattice_equiv/equivalence.hpp"
#include "lattice_equiv/invariants.hpp"
#include "lattice_equiv/lattice_algebra.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lattice_equiv {

using Json = nlohmann::ordered_json;

struct PolytopeDocument {
  LatticePolytope polytope;
  std::optional<std::string> label;
  /// Set when the points were not in convex position and the hull was taken.
  bool hull_taken = false;
  std::vector<LatticePoint> dropped;
};

/// {"dim": d, "points": [[...], ...], "label": "..."}; coordinates are JSON
/// integers or decimal integer strings (for values beyond 64 bits).
/// Throws ParseError, DegenerateInput or DimensionMismatch.
PolytopeDocument parse_polytope(std::string_view text);
PolytopeDocument read_polytope_file(const std::string& path);

Json integer_to_json(const Integer& x);
Json point_to_json(const LatticePoint& p);
Json polytope_to_json(const LatticePolytope& p, const std::optional<std::string>& label = std::nullopt);
std::string serialize_polytope(const LatticePolytope& p, const std::optional<std::string>& label = std::nullopt);

/// Rational entries as "p/q" strings, row convention x -> x * A + v.
Json map_to_json(const RationalAffineMap& map);
Json witness_to_json(const EquivalenceWitness& w, EquivalenceMode mode);
Json volume_vector_to_json(const VolumeVector& w);
Json primitive_to_json(const PrimitiveVolumeVector& p);
Json heights_to_json(const LatticeHeightVector& h);

struct CensusRow {
  std::string param;
  std::size_t h = 0, k = 0, a = 0;
};

/// "%#.6g"; empty when undefined (log|H| = 0).
std::string format_log_ratio(std::size_t numerator_count, std::size_t h);
std::string emit_census_csv(const std::vector<CensusRow>& rows);

}  // namespace lattice_equiv
