#pragma once

#include "lattice_equiv/geometry.hpp"
#include "lattice_equiv/matrix.hpp"

namespace lattice_equiv {

/// Row-style Hermite normal form: H = U * M with U unimodular, H in row
/// echelon form, pivots positive, entries above each pivot in [0, pivot).
/// Zero rows come last.
struct HnfResult {
  IntegerMatrix h;
  IntegerMatrix u;
  std::size_t rank = 0;
};

HnfResult hnf(const IntegerMatrix& m);

/// The lattice L(P) generated by the vertex differences v_i - v_1.
struct SublatticeInfo {
  IntegerMatrix basis;  // d x d, HNF rows
  Integer index;        // [Z^d : L(P)] = |det(basis)|
};

SublatticeInfo sublattice_info(const LatticePolytope& p);

/// Index of the lattice generated by differences of all lattice points of P
/// (diagnostic; never larger than sublattice_info(P).index).
Integer lattice_point_sublattice_index(const LatticePolytope& p);

/// True iff L(P) = Z^d, i.e. P has the smallest volume in its affine class.
bool attains_vmin(const LatticePolytope& p);

struct ShrinkResult {
  LatticePolytope polytope;
  RationalAffineMap map;  // carries the input onto `polytope`
  Integer index;          // index of the input
};

/// Map P onto an affinely equivalent polytope whose vertex lattice is Z^d:
/// translate v_1 to the origin, then change basis by the inverse HNF basis.
/// Index-1 input is returned unchanged with the identity map.
ShrinkResult shrink_to_vmin(const LatticePolytope& p);

}  // namespace lattice_equiv
