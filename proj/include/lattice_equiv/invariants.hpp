#pragma once

#include "lattice_equiv/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lattice_equiv {

/// Lexicographically ordered k-element index combinations of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Simplex determinants of every (d+1)-subset of an ordered point set, in
/// lexicographic order of the sorted index tuples.
struct VolumeVector {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<Integer> entries;

  /// The index tuples the entries refer to (0-based), same order as entries.
  std::vector<std::vector<std::size_t>> manifest() const { return combinations(n, d + 1); }

  friend bool operator==(const VolumeVector&, const VolumeVector&) = default;
};

/// w = content * direction, gcd(direction) = 1, first nonzero direction entry > 0.
struct PrimitiveVolumeVector {
  Integer content;
  std::vector<Integer> direction;

  friend bool operator==(const PrimitiveVolumeVector&, const PrimitiveVolumeVector&) = default;
};

/// normal . x + offset = 0 with a primitive normal whose first nonzero entry is positive.
struct PrimitiveHyperplane {
  std::vector<Integer> normal;
  Integer offset;

  Integer evaluate(const LatticePoint& p) const;
  friend bool operator==(const PrimitiveHyperplane&, const PrimitiveHyperplane&) = default;
};

/// Block i holds the heights of point i over the hyperplanes through every
/// d-subset of the remaining points (lexicographic); degenerate tuples give
/// std::nullopt.
struct LatticeHeightVector {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::vector<std::optional<Integer>>> blocks;

  /// Index tuples (0-based, into the full point list) of block i.
  std::vector<std::vector<std::size_t>> manifest(std::size_t i) const;

  friend bool operator==(const LatticeHeightVector&, const LatticeHeightVector&) = default;
};

VolumeVector volume_vector(std::span<const LatticePoint> points, std::size_t d);
VolumeVector volume_vector(const LatticePolytope& p);

/// Throws ZeroVector when every entry vanishes.
PrimitiveVolumeVector primitive_decomposition(const VolumeVector& w);
PrimitiveVolumeVector primitive_decomposition(std::span<const Integer> entries);

PrimitiveHyperplane primitive_hyperplane(std::span<const LatticePoint> points);

LatticeHeightVector lattice_height_vector(std::span<const LatticePoint> points, std::size_t d);
LatticeHeightVector lattice_height_vector(const LatticePolytope& p);

/// Sorted absolute values of the defined heights.
std::vector<Integer> abs_height_multiset(const LatticeHeightVector& h);

}  // namespace lattice_equiv
