#pragma once

#include "lattice_equiv/arith.hpp"
#include "lattice_equiv/error.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lattice_equiv {

/// A point of Z^d.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long long> coords);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Integer> coords() const { return coords_; }

  LatticePoint operator+(const LatticePoint& o) const;
  LatticePoint operator-(const LatticePoint& o) const;
  LatticePoint scaled(const Integer& k) const;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order on coordinates.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

  std::string str() const;

 private:
  std::vector<Integer> coords_;
};

/// A full-dimensional convex lattice polytope given by its vertices.
///
/// For d = 2 the vertices are kept in strictly convex position, in
/// counterclockwise order starting at the lexicographically smallest vertex.
/// For d >= 3 the vertex list is stored as given after checking that the
/// points are distinct and affinely span R^d; convex position is not verified.
class LatticePolytope {
 public:
  /// Validating factory. Throws DegenerateInput (duplicates, not full
  /// dimensional) or NotConvexPosition (d = 2, some point is not a vertex).
  static LatticePolytope from_vertices(std::size_t dim, std::vector<LatticePoint> vertices);

  /// Trusted factory for code that already produced a canonical vertex cycle.
  static LatticePolytope from_canonical_unchecked(std::size_t dim, std::vector<LatticePoint> vertices);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const LatticePoint> vertices() const { return vertices_; }
  const LatticePoint& vertex(std::size_t i) const { return vertices_[i]; }

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

  std::string str() const;

 private:
  LatticePolytope(std::size_t dim, std::vector<LatticePoint> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {}

  std::size_t dim_ = 0;
  std::vector<LatticePoint> vertices_;
};

/// x -> x * A + v acting on row vectors, exact rationals.
class RationalAffineMap {
 public:
  RationalAffineMap(std::vector<std::vector<Rational>> matrix, std::vector<Rational> translation);
  static RationalAffineMap identity(std::size_t dim);

  std::size_t dim() const { return translation_.size(); }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
  const std::vector<Rational>& translation() const { return translation_; }

  std::vector<Rational> apply(std::span<const Integer> x) const;
  /// Image of x if it is a lattice point.
  std::optional<LatticePoint> apply_integral(const LatticePoint& x) const;

  Rational determinant() const;
  bool has_integral_matrix() const;
  bool has_integral_translation() const;
  /// Integer matrix with det = +-1 and integer translation.
  bool is_unimodular() const;

  /// (this o other)(x) = this(other(x)).
  RationalAffineMap compose(const RationalAffineMap& other) const;

  friend bool operator==(const RationalAffineMap&, const RationalAffineMap&) = default;

 private:
  std::vector<std::vector<Rational>> matrix_;
  std::vector<Rational> translation_;
};

/// Bounded region used by lattice-point enumeration and the census.
///
/// Balls and orthant balls are centered at the origin and described by r^2;
/// boxes are [0, side]^d.
struct Region {
  enum class Kind { Ball, Box, OrthantBall };

  Kind kind = Kind::Ball;
  std::size_t dim = 2;
  Rational radius_squared = 0;
  Rational side = 0;

  static Region ball(Rational radius_squared, std::size_t dim = 2);
  static Region ball_of_radius(const Rational& radius, std::size_t dim = 2);
  static Region orthant_ball(Rational radius_squared, std::size_t dim = 2);
  static Region box(Rational side, std::size_t dim = 2);

  bool contains(const LatticePoint& p) const;
  std::string describe() const;
};

/// Bordered determinant det[(1,...,1); (p_1,...,p_{d+1})].
Integer simplex_determinant(std::span<const LatticePoint> points);

/// z-component of (b - a) x (c - a) in the plane.
Integer orientation_2d(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// Strict convex hull of planar points (collinear boundary points dropped).
LatticePolytope convex_hull_2d(std::span<const LatticePoint> points);

/// d! * vol(P), from a fan (d = 2) or pulling (d >= 3) triangulation at vertex 1.
Integer normalized_volume(const LatticePolytope& p);

std::vector<LatticePoint> lattice_points_of(const LatticePolytope& p);
std::vector<LatticePoint> lattice_points_of(const Region& region);

bool contains(const LatticePolytope& p, const LatticePoint& x);

LatticePolytope dilate(const LatticePolytope& p, const Integer& k);

/// Supporting hyperplane {x : normal . x + offset = 0} with the polytope on the
/// non-negative side; `vertices` lists the indices lying on it.
struct Facet {
  std::vector<Integer> normal;
  Integer offset;
  std::vector<std::size_t> vertices;
};

/// All facets by brute force over d-subsets of vertices.
std::vector<Facet> facets(const LatticePolytope& p);

/// Integer normal of the hyperplane through d points of Z^d (generalized cross
/// product of the difference vectors); all zeros when the points are degenerate.
std::vector<Integer> hyperplane_normal(std::span<const LatticePoint> points);

/// Dimension of the affine hull of the given points (-1 for none).
int affine_dimension(std::span<const LatticePoint> points);

/// Apply an affine map to every vertex; throws InvalidArgument when an image
/// is not a lattice point or the map is degenerate.
LatticePolytope apply_map(const RationalAffineMap& map, const LatticePolytope& p);

}  // namespace lattice_equiv
