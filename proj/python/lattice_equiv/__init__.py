"""Exact lattice polytope invariants, equivalence tests and census tools."""

from ._core import (
    LatticeError,
    Polytope,
    attains_vmin,
    build_lv,
    canonical_polygon,
    canonical_triangle,
    census,
    classes_by_volume,
    construct_qs,
    delta_shave,
    dilate,
    enumerate_polygons,
    equivalent,
    lattice_heights,
    normalized_volume,
    oracle_equivalent,
    parse_polytope,
    primitive_decomposition,
    shrink_to_vmin,
    sublattice_index,
    volume_vector,
)

__all__ = [
    "LatticeError",
    "Polytope",
    "attains_vmin",
    "build_lv",
    "canonical_polygon",
    "canonical_triangle",
    "census",
    "classes_by_volume",
    "construct_qs",
    "delta_shave",
    "dilate",
    "enumerate_polygons",
    "equivalent",
    "lattice_heights",
    "normalized_volume",
    "oracle_equivalent",
    "parse_polytope",
    "primitive_decomposition",
    "shrink_to_vmin",
    "sublattice_index",
    "volume_vector",
]
