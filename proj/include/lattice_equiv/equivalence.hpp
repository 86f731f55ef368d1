#pragma once

#include "lattice_equiv/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lattice_equiv {

enum class EquivalenceMode {
  Affine,          // any invertible affine map
  Unimodular,      // integer matrix, det = +-1, integer translation
  DeterminantOne,  // det = +1 exactly, matrix may be rational
};

std::string_view to_string(EquivalenceMode mode);
/// "affine" | "unimodular" | "det-one"; throws InvalidArgument otherwise.
EquivalenceMode parse_mode(std::string_view text);

/// A vertex correspondence and the affine map realizing it:
/// map(P.vertex(i)) == Q.vertex(bijection[i]) for every i.
struct EquivalenceWitness {
  std::vector<std::size_t> bijection;
  RationalAffineMap map;
};

/// Invariant-guided search (volume-vector anchor matching, then reconstruction
/// of the unique map per candidate simplex correspondence). Works on arbitrary
/// ordered full-dimensional point sets; the polytope overloads call it with
/// vertex lists.
std::optional<EquivalenceWitness> find_equivalence(std::span<const LatticePoint> p,
                                                   std::span<const LatticePoint> q, std::size_t dim,
                                                   EquivalenceMode mode);

std::optional<EquivalenceWitness> affine_equivalent(const LatticePolytope& p, const LatticePolytope& q);
std::optional<EquivalenceWitness> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q);
std::optional<EquivalenceWitness> unimodular_affine_equivalent(const LatticePolytope& p,
                                                               const LatticePolytope& q);
std::optional<EquivalenceWitness> equivalent(const LatticePolytope& p, const LatticePolytope& q,
                                             EquivalenceMode mode);

/// Every distinct witness the candidate search accepts (all symmetries).
std::vector<EquivalenceWitness> all_witnesses(const LatticePolytope& p, const LatticePolytope& q,
                                              EquivalenceMode mode);

/// Exhaustive ground truth: tries every vertex bijection in lexicographic
/// order and solves for the map over Q. Throws TooLarge above `max_vertices`.
std::optional<EquivalenceWitness> oracle_equivalent(const LatticePolytope& p, const LatticePolytope& q,
                                                    EquivalenceMode mode, std::size_t max_vertices = 8);

/// True iff applying the witness map to each vertex of p hits the claimed
/// vertex of q.
bool verify_witness(const EquivalenceWitness& w, const LatticePolytope& p, const LatticePolytope& q);

/// Unimodular normal form of a lattice triangle: vertices (0,0), (g,0), (a,b)
/// with b >= 1 and 0 <= a < b; the key (g, b, a) is minimal over labelings.
struct CanonicalTriangle {
  Integer g;
  Integer b;
  Integer a;

  LatticePolytope polytope() const;
  friend auto operator<=>(const CanonicalTriangle& x, const CanonicalTriangle& y) {
    if (auto c = x.g.compare(y.g); c != 0) return c <=> 0;
    if (auto c = x.b.compare(y.b); c != 0) return c <=> 0;
    return x.a.compare(y.a) <=> 0;
  }
  friend bool operator==(const CanonicalTriangle&, const CanonicalTriangle&) = default;
};

CanonicalTriangle canonical_triangle(const LatticePolytope& t);

/// Unimodular normal form of a lattice polygon: the smallest vertex cycle over
/// all anchorings (directed edge + following vertex normalized to (0,0), (g,0),
/// (x,y) with y > 0 and g <= x < g + y). Equal iff unimodular equivalent.
LatticePolytope canonical_polygon(const LatticePolytope& p);

}  // namespace lattice_equiv
