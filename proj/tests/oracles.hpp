#pragma once
// Independent reference computations for the test suites. Everything here uses
// plain 64-bit integers and brute force, sharing no code with the library.

#include "lattice_equiv/geometry.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using I = std::int64_t;
struct Pt {
  I x, y;
  auto operator<=>(const Pt&) const = default;
};

inline I cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline Pt to_pt(const lattice_equiv::LatticePoint& p) { return {p[0].convert_to<I>(), p[1].convert_to<I>()}; }

inline std::vector<Pt> to_pts(const lattice_equiv::LatticePolytope& p) {
  std::vector<Pt> v;
  for (const auto& x : p.vertices()) v.push_back(to_pt(x));
  return v;
}

inline lattice_equiv::LatticePolytope to_polytope(const std::vector<Pt>& pts) {
  std::vector<lattice_equiv::LatticePoint> v;
  for (auto p : pts) v.push_back(lattice_equiv::LatticePoint{p.x, p.y});
  return lattice_equiv::LatticePolytope::from_vertices(2, std::move(v));
}

/// Twice the signed area by the shoelace formula (order as given).
inline I shoelace2(const std::vector<Pt>& v) {
  I s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Pt& a = v[i];
    const Pt& b = v[(i + 1) % v.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

/// Every point of `s` is a strict vertex of conv(s) (and the hull is 2D).
inline bool strictly_convex_position(const std::vector<Pt>& s) {
  if (s.size() < 3) return false;
  bool two_d = false;
  for (std::size_t i = 2; i < s.size() && !two_d; ++i) two_d = cross(s[0], s[1], s[i]) != 0;
  if (!two_d) return false;
  // p is a vertex iff some line through p has every other point strictly on one side;
  // equivalently p is not in conv of the others. Test: p lies in a closed triangle of others
  // or on a closed segment of others.
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (b == i) continue;
        if (cross(s[a], s[b], s[i]) == 0) {
          bool between = std::min(s[a].x, s[b].x) <= s[i].x && s[i].x <= std::max(s[a].x, s[b].x) &&
                         std::min(s[a].y, s[b].y) <= s[i].y && s[i].y <= std::max(s[a].y, s[b].y);
          if (between) return false;
        }
        for (std::size_t c = b + 1; c < s.size(); ++c) {
          if (c == i) continue;
          I d1 = cross(s[a], s[b], s[i]), d2 = cross(s[b], s[c], s[i]), d3 = cross(s[c], s[a], s[i]);
          bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
          if (!(neg && pos)) return false;
        }
      }
    }
  }
  return true;
}

/// Vertex sets of all convex polygons on the given points, by subset scan.
inline std::set<std::vector<Pt>> polygons_by_subsets(const std::vector<Pt>& pts) {
  std::set<std::vector<Pt>> out;
  const std::size_t n = pts.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 3) continue;
    std::vector<Pt> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(pts[i]);
    if (strictly_convex_position(s)) {
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
  }
  return out;
}

inline std::vector<Pt> disk_points(I r2) {
  std::vector<Pt> v;
  for (I x = -r2; x <= r2; ++x)
    for (I y = -r2; y <= r2; ++y)
      if (x * x + y * y <= r2) v.push_back({x, y});
  return v;
}

inline std::vector<Pt> box_points(I side) {
  std::vector<Pt> v;
  for (I x = 0; x <= side; ++x)
    for (I y = 0; y <= side; ++y) v.push_back({x, y});
  return v;
}

/// 3x3 determinant by cofactor expansion.
inline I det3(const std::array<std::array<I, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Volume vector of a planar ordered point list: det[1 1 1; p_i p_j p_k] over i<j<k.
inline std::vector<I> volume_vector(const std::vector<Pt>& v) {
  std::vector<I> w;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (std::size_t k = j + 1; k < v.size(); ++k)
        w.push_back(det3({{{1, 1, 1}, {v[i].x, v[j].x, v[k].x}, {v[i].y, v[j].y, v[k].y}}}));
  return w;
}

/// Index of the lattice spanned by the differences v_i - v_0: gcd of all 2x2 minors.
inline I sublattice_index(const std::vector<Pt>& v) {
  I g = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Pt a{v[i].x - v[0].x, v[i].y - v[0].y}, b{v[j].x - v[0].x, v[j].y - v[0].y};
      g = std::gcd(g, a.x * b.y - a.y * b.x);
    }
  return g;
}

/// Integer 2x2 matrix (row convention) and translation.
struct IntMap {
  I a, b, c, d;  // [[a b] [c d]]
  I tx, ty;
  Pt apply(Pt p) const { return {p.x * a + p.y * c + tx, p.x * b + p.y * d + ty}; }
  I det() const { return a * d - b * c; }
};

inline IntMap random_unimodular(std::mt19937_64& rng, int sign, int steps = 6) {
  IntMap m{1, 0, 0, 1, 0, 0};
  std::uniform_int_distribution<int> op(0, 3), k(-2, 2), t(-4, 4);
  for (int s = 0; s < steps; ++s) {
    int kk = k(rng);
    switch (op(rng)) {
      case 0: m = {m.a + kk * m.c, m.b + kk * m.d, m.c, m.d, 0, 0}; break;   // row0 += k row1
      case 1: m = {m.a, m.b, m.c + kk * m.a, m.d + kk * m.b, 0, 0}; break;   // row1 += k row0
      case 2: m = {m.c, m.d, -m.a, -m.b, 0, 0}; break;                       // rotation, det preserved
      default: m = {m.a + kk * m.b, m.b, m.c + kk * m.d, m.d, 0, 0}; break;  // col0 += k col1
    }
  }
  if ((m.det() > 0) != (sign > 0)) m = {m.b, m.a, m.d, m.c, 0, 0};  // swap columns flips the sign
  m.tx = t(rng);
  m.ty = t(rng);
  return m;
}

}  // namespace oracle
