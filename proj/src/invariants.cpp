#include "lattice_equiv/invariants.hpp"

#include <algorithm>

namespace lattice_equiv {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

VolumeVector volume_vector(std::span<const LatticePoint> points, std::size_t d) {
  if (points.size() < d + 1) {
    throw LatticeError(ErrorKind::DegenerateInput, "a volume vector needs at least d+1 points");
  }
  for (const auto& p : points)
    if (p.dim() != d) throw LatticeError(ErrorKind::DimensionMismatch, "point dimension differs from d");
  VolumeVector w{points.size(), d, {}};
  const auto combos = combinations(points.size(), d + 1);
  w.entries.reserve(combos.size());
  std::vector<LatticePoint> simplex(d + 1);
  bool any = false;
  for (const auto& c : combos) {
    for (std::size_t i = 0; i <= d; ++i) simplex[i] = points[c[i]];
    w.entries.push_back(simplex_determinant(simplex));
    any = any || !w.entries.back().is_zero();
  }
  if (!any) throw LatticeError(ErrorKind::DegenerateInput, "points are not full-dimensional");
  return w;
}

VolumeVector volume_vector(const LatticePolytope& p) { return volume_vector(p.vertices(), p.dim()); }

PrimitiveVolumeVector primitive_decomposition(std::span<const Integer> entries) {
  Integer g = 0;
  const Integer* first = nullptr;
  for (const auto& x : entries) {
    g = gcd(g, x);
    if (!first && !x.is_zero()) first = &x;
  }
  if (!first) throw LatticeError(ErrorKind::ZeroVector, "volume vector has no nonzero entry");
  Integer k = first->sign() < 0 ? Integer(-g) : g;
  PrimitiveVolumeVector out{k, {}};
  out.direction.reserve(entries.size());
  for (const auto& x : entries) out.direction.push_back(x / k);
  return out;
}

PrimitiveVolumeVector primitive_decomposition(const VolumeVector& w) { return primitive_decomposition(w.entries); }

Integer PrimitiveHyperplane::evaluate(const LatticePoint& p) const {
  Integer s = offset;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * p[i];
  return s;
}

PrimitiveHyperplane primitive_hyperplane(std::span<const LatticePoint> points) {
  std::vector<Integer> normal = hyperplane_normal(points);
  Integer g = 0;
  const Integer* first = nullptr;
  for (const auto& x : normal) {
    g = gcd(g, x);
    if (!first && !x.is_zero()) first = &x;
  }
  if (!first) throw LatticeError(ErrorKind::DegenerateInput, "points do not span a hyperplane");
  if (first->sign() < 0) g = -g;
  for (auto& x : normal) x /= g;
  PrimitiveHyperplane h{std::move(normal), 0};
  h.offset = -h.evaluate(points[0]);
  return h;
}

std::vector<std::vector<std::size_t>> LatticeHeightVector::manifest(std::size_t i) const {
  auto combos = combinations(n - 1, d);
  for (auto& c : combos)
    for (auto& j : c)
      if (j >= i) ++j;
  return combos;
}

LatticeHeightVector lattice_height_vector(std::span<const LatticePoint> points, std::size_t d) {
  const std::size_t n = points.size();
  if (n < d + 1) throw LatticeError(ErrorKind::DegenerateInput, "a height vector needs at least d+1 points");
  for (const auto& p : points)
    if (p.dim() != d) throw LatticeError(ErrorKind::DimensionMismatch, "point dimension differs from d");
  LatticeHeightVector h{n, d, {}};
  h.blocks.resize(n);
  std::vector<LatticePoint> tuple(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& c : h.manifest(i)) {
      for (std::size_t k = 0; k < d; ++k) tuple[k] = points[c[k]];
      std::vector<Integer> normal = hyperplane_normal(tuple);
      if (std::all_of(normal.begin(), normal.end(), [](const Integer& x) { return x.is_zero(); })) {
        h.blocks[i].emplace_back(std::nullopt);
        continue;
      }
      h.blocks[i].emplace_back(primitive_hyperplane(tuple).evaluate(points[i]));
    }
  }
  return h;
}

LatticeHeightVector lattice_height_vector(const LatticePolytope& p) {
  return lattice_height_vector(p.vertices(), p.dim());
}

std::vector<Integer> abs_height_multiset(const LatticeHeightVector& h) {
  std::vector<Integer> out;
  for (const auto& block : h.blocks)
    for (const auto& x : block)
      if (x) out.push_back(abs(*x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lattice_equiv
