#pragma once

#include "lattice_equiv/equivalence.hpp"
#include "lattice_equiv/geometry.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lattice_equiv {

/// Size limits for the exhaustive experiments. Defaults can be raised through
/// LATTICE_EQUIV_CAPS, e.g. "region_points=60,volume=16,box_side=30,oracle_vertices=9".
struct Caps {
  std::size_t max_region_points = 40;
  std::size_t max_oracle_vertices = 8;
  std::size_t max_volume = 12;
  std::size_t max_box_side = 24;
};

Caps default_caps();
/// Defaults overridden by LATTICE_EQUIV_CAPS when set. Throws ParseError on a
/// malformed value.
Caps caps_from_env();
Caps parse_caps(const std::string& spec, Caps base = {});

struct EnumerationOptions {
  std::optional<std::size_t> max_vertices;
  /// Keep only polygons with normalized volume <= this (prunes the search).
  std::optional<Integer> max_normalized_volume;
  /// Keep only polygons touching both coordinate axes lines x = min, y = min of
  /// the region box (one translate per class inside a box anchored at 0).
  bool touching_axes = false;
  /// 0 = hardware concurrency.
  std::size_t threads = 1;
};

/// Every convex lattice polygon whose vertices lie in the region, each once,
/// sorted by (vertex count, vertex cycle). Throws RegionTooLarge beyond the
/// region point cap.
std::vector<LatticePolytope> enumerate_convex_polygons(const Region& region, const EnumerationOptions& options = {},
                                                       const Caps& caps = caps_from_env());

/// Same, over an explicit point set (no cap check).
std::vector<LatticePolytope> enumerate_convex_polygons(std::vector<LatticePoint> points,
                                                       const EnumerationOptions& options = {});

struct ClassCensus {
  std::string region;
  std::size_t h = 0;
  std::size_t k = 0;
  std::size_t a = 0;
  /// normalized volume -> number of polygons in H
  std::map<Integer, std::size_t> volume_histogram;
};

ClassCensus census(const Region& region, std::size_t threads = 1, const Caps& caps = caps_from_env());
ClassCensus census_of(const std::vector<LatticePolytope>& polygons, std::string label);

/// Representatives of the affine classes among `polygons` (first occurrence kept).
std::vector<LatticePolytope> affine_class_representatives(const std::vector<LatticePolytope>& polygons);

enum class ClassShape { Triangles, All };

struct VolumeClasses {
  Integer volume;
  ClassShape shape = ClassShape::All;
  std::size_t count = 0;
  std::vector<LatticePolytope> representatives;  // canonical forms, sorted
  std::optional<std::size_t> box_side;            // unset for the box-free triangle path
  bool exact = false;                             // true only for the triangle path
};

/// Unimodular classes with normalized volume exactly V. Triangles are listed
/// from normal-form keys directly; general polygons are searched in [0, side]^2
/// (default side = V). Throws CapExceeded.
VolumeClasses classes_by_volume(const Integer& volume, ClassShape shape, std::optional<std::size_t> box_side = {},
                                std::size_t threads = 1, const Caps& caps = caps_from_env());

struct LVEntry {
  Integer factor;  // i
  LatticePolytope base;
  LatticePolytope polytope;  // base * diag(factor, 1)
};

/// Union over divisors i of V of the index-1 affine class representatives of
/// normalized volume V / i, each stretched by diag(i, 1). Throws CapExceeded.
std::vector<LVEntry> build_LV(const Integer& volume, std::size_t threads = 1, const Caps& caps = caps_from_env());

struct ConstructionReport {
  Rational radius_squared;
  LatticePolytope q_prime;
  LatticePolytope q;
  Integer p;
  int case_number = 1;
  LatticePolytope s;
  std::vector<LatticePoint> b;
  Integer volume_delta;
  std::vector<LatticePoint> expected_difference;  // B without its first element
  std::vector<LatticePoint> actual_difference;    // (S cap Z^2) minus (Q cap Z^2), sorted
  bool identity_holds = false;
  bool s_contains_q = false;
  bool b_are_vertices = false;
};

/// Q = 2 conv(lattice points of the closed quarter disk of radius^2 r2) and
/// its enlargement S. Requires r2 >= 1.
ConstructionReport construct_QS(const Rational& radius_squared);

struct ShaveResult {
  LatticePolytope polytope;
  Integer removed;  // normalized volume
};

/// conv((Q cap Z^2) minus W). Throws InvalidArgument when W has a non-vertex and
/// DegenerateResult when the remainder is not full-dimensional.
ShaveResult delta_shave(const LatticePolytope& q, const std::vector<LatticePoint>& w);

struct PrimitivityReport {
  std::string region;
  std::size_t polygons = 0;
  std::size_t index_one = 0;
  std::vector<LatticePolytope> counterexamples;
};

PrimitivityReport primitivity_scan(const Region& region, std::size_t threads = 1, const Caps& caps = caps_from_env());
PrimitivityReport primitivity_scan(const std::vector<LatticePolytope>& polygons, std::string label);

struct AffineMapCensus {
  std::string region;
  std::size_t polygons = 0;
  std::size_t simplices = 0;
  std::size_t witnesses_examined = 0;
  std::size_t distinct_matrices = 0;
  bool budget_exhausted = false;
  Rational max_row_norm_squared;
  /// simplices^2 * (d+1)!: each matrix comes from an ordered pair of labelled simplices.
  Integer simplex_pair_bound;
  /// sqrt(max_row_norm_squared) / scale^2 with scale = radius or box side.
  double empirical_constant = 0.0;
  bool has_identity = false;
  std::vector<std::vector<std::vector<Rational>>> matrices;  // sorted
};

/// Collects affine witnesses between enumerated polygon pairs (pairs in
/// enumeration order, stopping after `budget` witnesses).
AffineMapCensus affine_map_census(const Region& region, std::size_t budget, std::size_t threads = 1,
                                  const Caps& caps = caps_from_env());

}  // namespace lattice_equiv
