#include "lattice_equiv/geometry.hpp"

#include "lattice_equiv/matrix.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace lattice_equiv {

// ---------------------------------------------------------------------------
// LatticePoint

LatticePoint::LatticePoint(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
  if (o.dim() != dim()) throw LatticeError(ErrorKind::DimensionMismatch, "point addition");
  std::vector<Integer> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] + o.coords_[i];
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
  if (o.dim() != dim()) throw LatticeError(ErrorKind::DimensionMismatch, "point subtraction");
  std::vector<Integer> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] - o.coords_[i];
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::scaled(const Integer& k) const {
  std::vector<Integer> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = coords_[i] * k;
  return LatticePoint(std::move(out));
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    int c = a.coords_[i].compare(b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

std::string LatticePoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += coords_[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Small helpers

Integer orientation_2d(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

namespace {

void check_dims(std::span<const LatticePoint> points, std::size_t dim) {
  for (const auto& p : points) {
    if (p.dim() != dim) {
      throw LatticeError(ErrorKind::DimensionMismatch,
                         "point " + p.str() + " does not have dimension " + std::to_string(dim));
    }
  }
}

IntegerMatrix difference_matrix(std::span<const LatticePoint> points) {
  const std::size_t d = points[0].dim();
  IntegerMatrix m(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(i - 1, j) = points[i][j] - points[0][j];
  return m;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Monotone chain; strict = drop collinear points. Returns the CCW cycle
// starting at the lexicographically smallest point.
std::vector<LatticePoint> hull_cycle(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation_2d(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation_2d(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

int affine_dimension(std::span<const LatticePoint> points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  return static_cast<int>(rank(difference_matrix(points)));
}

std::vector<Integer> hyperplane_normal(std::span<const LatticePoint> points) {
  const std::size_t d = points.empty() ? 0 : points[0].dim();
  if (points.size() != d || d == 0) {
    throw LatticeError(ErrorKind::InvalidArgument, "a hyperplane in Z^d needs exactly d points");
  }
  check_dims(points, d);
  std::vector<Integer> normal(d);
  if (d == 1) {
    normal[0] = 1;
    return normal;
  }
  IntegerMatrix diff = difference_matrix(points);  // (d-1) x d
  IntegerMatrix minor(d - 1, d - 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r + 1 < d; ++r)
      for (std::size_t c = 0, mc = 0; c < d; ++c) {
        if (c == j) continue;
        minor.at(r, mc++) = diff.at(r, c);
      }
    Integer m = determinant(minor);
    normal[j] = (j % 2 == 0) ? m : Integer(-m);
  }
  return normal;
}

// ---------------------------------------------------------------------------
// LatticePolytope

LatticePolytope LatticePolytope::from_canonical_unchecked(std::size_t dim, std::vector<LatticePoint> vertices) {
  return LatticePolytope(dim, std::move(vertices));
}

LatticePolytope LatticePolytope::from_vertices(std::size_t dim, std::vector<LatticePoint> vertices) {
  if (dim == 0) throw LatticeError(ErrorKind::InvalidArgument, "dimension must be positive");
  check_dims(vertices, dim);
  std::vector<LatticePoint> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw LatticeError(ErrorKind::DegenerateInput, "duplicate vertices");
  }
  if (vertices.size() < dim + 1 || affine_dimension(vertices) != static_cast<int>(dim)) {
    throw LatticeError(ErrorKind::DegenerateInput, "vertices do not span a full-dimensional polytope");
  }
  if (dim == 1) {
    if (sorted.size() != 2) throw LatticeError(ErrorKind::NotConvexPosition, "a segment has two vertices");
    return LatticePolytope(dim, std::move(sorted));
  }
  if (dim == 2) {
    std::vector<LatticePoint> cycle = hull_cycle(vertices);
    if (cycle.size() != vertices.size()) {
      throw LatticeError(ErrorKind::NotConvexPosition, "some points are not vertices of their convex hull");
    }
    return LatticePolytope(dim, std::move(cycle));
  }
  return LatticePolytope(dim, std::move(vertices));
}

std::string LatticePolytope::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += vertices_[i].str();
  }
  return s + "]";
}

LatticePolytope convex_hull_2d(std::span<const LatticePoint> points) {
  check_dims(points, 2);
  std::vector<LatticePoint> cycle = hull_cycle({points.begin(), points.end()});
  if (cycle.size() < 3) {
    throw LatticeError(ErrorKind::DegenerateInput, "fewer than 3 distinct points or all points collinear");
  }
  return LatticePolytope::from_canonical_unchecked(2, std::move(cycle));
}

// ---------------------------------------------------------------------------
// Determinants and volume

Integer simplex_determinant(std::span<const LatticePoint> points) {
  if (points.empty()) throw LatticeError(ErrorKind::InvalidArgument, "no points");
  const std::size_t d = points[0].dim();
  if (points.size() != d + 1) {
    throw LatticeError(ErrorKind::InvalidArgument, "a simplex in Z^d needs exactly d+1 points");
  }
  check_dims(points, d);
  if (d == 2) return orientation_2d(points[0], points[1], points[2]);
  // Subtracting the first column of the bordered matrix from the others leaves
  // det of the d x d matrix whose columns are p_i - p_1.
  IntegerMatrix cols(d, d);
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = 0; j < d; ++j) cols.at(j, i - 1) = points[i][j] - points[0][j];
  return determinant(cols);
}

std::vector<Facet> facets(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  const std::size_t n = p.size();
  const auto verts = p.vertices();
  std::vector<Facet> out;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> idx(d);
  std::vector<LatticePoint> tuple(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      for (std::size_t i = 0; i < d; ++i) tuple[i] = verts[idx[i]];
      std::vector<Integer> normal = hyperplane_normal(tuple);
      if (std::all_of(normal.begin(), normal.end(), [](const Integer& x) { return x.is_zero(); })) return;
      Integer g = 0;
      for (const auto& x : normal) g = gcd(g, x);
      for (auto& x : normal) x /= g;
      Integer offset = -dot(normal, verts[idx[0]].coords());
      int side = 0;
      std::vector<std::size_t> on;
      for (std::size_t v = 0; v < n; ++v) {
        int s = (dot(normal, verts[v].coords()) + offset).sign();
        if (s == 0) {
          on.push_back(v);
        } else if (side == 0) {
          side = s;
        } else if (side != s) {
          return;
        }
      }
      if (!seen.insert(on).second) return;
      if (side < 0) {
        for (auto& x : normal) x = -x;
        offset = -offset;
      }
      out.push_back({std::move(normal), std::move(offset), std::move(on)});
      return;
    }
    for (std::size_t i = start; i + (d - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

namespace {

// Pulling triangulation of the face spanned by `face` (sorted vertex indices,
// affine dimension k): cone from its first vertex over every facet of the face
// that avoids it. Facets of a face are its (k-1)-dimensional intersections
// with facets of the polytope.
void pulling_triangulation(std::span<const LatticePoint> verts, const std::vector<Facet>& all_facets,
                           const std::vector<std::size_t>& face, int k,
                           std::vector<std::vector<std::size_t>>& out) {
  if (face.size() == static_cast<std::size_t>(k) + 1) {
    out.push_back(face);
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& f : all_facets) {
    std::vector<std::size_t> inter;
    std::set_intersection(face.begin(), face.end(), f.vertices.begin(), f.vertices.end(),
                          std::back_inserter(inter));
    if (inter.size() < static_cast<std::size_t>(k) || inter.size() == face.size()) continue;
    if (std::binary_search(inter.begin(), inter.end(), apex)) continue;
    std::vector<LatticePoint> pts;
    for (auto i : inter) pts.push_back(verts[i]);
    if (affine_dimension(pts) == k - 1) subfaces.insert(std::move(inter));
  }
  for (const auto& sub : subfaces) {
    std::vector<std::vector<std::size_t>> part;
    pulling_triangulation(verts, all_facets, sub, k - 1, part);
    for (auto& simplex : part) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
}

}  // namespace

Integer normalized_volume(const LatticePolytope& p) {
  const auto v = p.vertices();
  if (p.dim() == 1) return abs(v[1][0] - v[0][0]);
  if (p.dim() == 2) {
    Integer twice_area = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) twice_area += orientation_2d(v[0], v[i], v[i + 1]);
    if (twice_area.sign() <= 0) throw LatticeError(ErrorKind::DegenerateInput, "polygon has no area");
    return twice_area;
  }
  std::vector<Facet> fs = facets(p);
  std::vector<std::size_t> all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> simplices;
  pulling_triangulation(v, fs, all, static_cast<int>(p.dim()), simplices);
  Integer total = 0;
  std::vector<LatticePoint> pts(p.dim() + 1);
  for (const auto& s : simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) pts[i] = v[s[i]];
    total += abs(simplex_determinant(pts));
  }
  if (total.is_zero()) throw LatticeError(ErrorKind::DegenerateInput, "polytope has no volume");
  return total;
}

// ---------------------------------------------------------------------------
// Lattice points

bool contains(const LatticePolytope& p, const LatticePoint& x) {
  if (x.dim() != p.dim()) throw LatticeError(ErrorKind::DimensionMismatch, "point and polytope dimensions differ");
  const auto v = p.vertices();
  if (p.dim() == 1) return v[0][0] <= x[0] && x[0] <= v[1][0];
  if (p.dim() == 2) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (orientation_2d(v[i], v[(i + 1) % v.size()], x).sign() < 0) return false;
    }
    return true;
  }
  for (const auto& f : facets(p)) {
    if ((dot(f.normal, x.coords()) + f.offset).sign() < 0) return false;
  }
  return true;
}

namespace {

void scan_box(std::vector<Integer>& lo, std::vector<Integer>& hi, std::vector<Integer>& cur, std::size_t axis,
              const std::function<bool(const LatticePoint&)>& keep, std::vector<LatticePoint>& out) {
  if (axis == lo.size()) {
    LatticePoint p(cur);
    if (keep(p)) out.push_back(std::move(p));
    return;
  }
  for (Integer x = lo[axis]; x <= hi[axis]; ++x) {
    cur[axis] = x;
    scan_box(lo, hi, cur, axis + 1, keep, out);
  }
}

}  // namespace

std::vector<LatticePoint> lattice_points_of(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  std::vector<Integer> lo(d), hi(d), cur(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = hi[j] = p.vertex(0)[j];
    for (const auto& v : p.vertices()) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }
  std::vector<LatticePoint> out;
  if (d <= 2) {
    scan_box(lo, hi, cur, 0, [&](const LatticePoint& x) { return contains(p, x); }, out);
    return out;
  }
  const std::vector<Facet> fs = facets(p);
  scan_box(lo, hi, cur, 0,
           [&](const LatticePoint& x) {
             return std::all_of(fs.begin(), fs.end(), [&](const Facet& f) {
               return (dot(f.normal, x.coords()) + f.offset).sign() >= 0;
             });
           },
           out);
  return out;
}

// ---------------------------------------------------------------------------
// Regions

Region Region::ball(Rational radius_squared, std::size_t dim) {
  if (radius_squared < 0) throw LatticeError(ErrorKind::InvalidArgument, "negative squared radius");
  return Region{Kind::Ball, dim, std::move(radius_squared), 0};
}

Region Region::ball_of_radius(const Rational& radius, std::size_t dim) {
  if (radius < 0) throw LatticeError(ErrorKind::InvalidArgument, "negative radius");
  return ball(radius * radius, dim);
}

Region Region::orthant_ball(Rational radius_squared, std::size_t dim) {
  if (radius_squared < 0) throw LatticeError(ErrorKind::InvalidArgument, "negative squared radius");
  return Region{Kind::OrthantBall, dim, std::move(radius_squared), 0};
}

Region Region::box(Rational side, std::size_t dim) {
  if (side < 0) throw LatticeError(ErrorKind::InvalidArgument, "negative box side");
  return Region{Kind::Box, dim, 0, std::move(side)};
}

bool Region::contains(const LatticePoint& p) const {
  if (p.dim() != dim) return false;
  if (kind == Kind::Box) {
    for (const auto& x : p.coords())
      if (x.sign() < 0 || Rational(x) > side) return false;
    return true;
  }
  Integer norm = 0;
  for (const auto& x : p.coords()) {
    if (kind == Kind::OrthantBall && x.sign() < 0) return false;
    norm += x * x;
  }
  return Rational(norm) <= radius_squared;
}

std::string Region::describe() const {
  switch (kind) {
    case Kind::Ball: return "ball(r^2=" + radius_squared.str() + ",d=" + std::to_string(dim) + ")";
    case Kind::OrthantBall: return "orthant-ball(r^2=" + radius_squared.str() + ",d=" + std::to_string(dim) + ")";
    case Kind::Box: return "box(side=" + side.str() + ",d=" + std::to_string(dim) + ")";
  }
  return "region";
}

std::vector<LatticePoint> lattice_points_of(const Region& region) {
  std::vector<Integer> lo(region.dim), hi(region.dim), cur(region.dim);
  Integer bound;
  if (region.kind == Region::Kind::Box) {
    bound = numerator(region.side) / denominator(region.side);
  } else {
    Integer r2_floor = numerator(region.radius_squared) / denominator(region.radius_squared);
    bound = isqrt(r2_floor);
  }
  for (std::size_t j = 0; j < region.dim; ++j) {
    lo[j] = region.kind == Region::Kind::Ball ? Integer(-bound) : Integer(0);
    hi[j] = bound;
  }
  std::vector<LatticePoint> out;
  scan_box(lo, hi, cur, 0, [&](const LatticePoint& x) { return region.contains(x); }, out);
  return out;
}

LatticePolytope dilate(const LatticePolytope& p, const Integer& k) {
  if (k.sign() <= 0) throw LatticeError(ErrorKind::InvalidArgument, "dilation factor must be positive");
  std::vector<LatticePoint> v;
  v.reserve(p.size());
  for (const auto& x : p.vertices()) v.push_back(x.scaled(k));
  // Positive scaling keeps the canonical cycle canonical.
  return LatticePolytope::from_canonical_unchecked(p.dim(), std::move(v));
}

// ---------------------------------------------------------------------------
// RationalAffineMap

RationalAffineMap::RationalAffineMap(std::vector<std::vector<Rational>> matrix, std::vector<Rational> translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  const std::size_t d = translation_.size();
  if (matrix_.size() != d) throw LatticeError(ErrorKind::DimensionMismatch, "affine map shape");
  for (const auto& row : matrix_)
    if (row.size() != d) throw LatticeError(ErrorKind::DimensionMismatch, "affine map shape");
}

RationalAffineMap RationalAffineMap::identity(std::size_t dim) {
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return RationalAffineMap(std::move(m), std::vector<Rational>(dim));
}

std::vector<Rational> RationalAffineMap::apply(std::span<const Integer> x) const {
  const std::size_t d = dim();
  if (x.size() != d) throw LatticeError(ErrorKind::DimensionMismatch, "affine map applied to wrong dimension");
  std::vector<Rational> y = translation_;
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    Rational xi(x[i]);
    for (std::size_t j = 0; j < d; ++j) y[j] += xi * matrix_[i][j];
  }
  return y;
}

std::optional<LatticePoint> RationalAffineMap::apply_integral(const LatticePoint& x) const {
  std::vector<Rational> y = apply(x.coords());
  std::vector<Integer> out(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (!is_integer(y[j])) return std::nullopt;
    out[j] = numerator(y[j]);
  }
  return LatticePoint(std::move(out));
}

Rational RationalAffineMap::determinant() const { return lattice_equiv::determinant(matrix_); }

bool RationalAffineMap::has_integral_matrix() const {
  for (const auto& row : matrix_)
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return true;
}

bool RationalAffineMap::has_integral_translation() const {
  return std::all_of(translation_.begin(), translation_.end(), [](const Rational& x) { return is_integer(x); });
}

bool RationalAffineMap::is_unimodular() const {
  if (!has_integral_matrix() || !has_integral_translation()) return false;
  Rational det = determinant();
  return det == 1 || det == -1;
}

RationalAffineMap RationalAffineMap::compose(const RationalAffineMap& other) const {
  // this(other(x)) = (x*B + u)*A + v = x*(B*A) + (u*A + v)
  const std::size_t d = dim();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) m[i][j] += other.matrix_[i][k] * matrix_[k][j];
  std::vector<Rational> t = translation_;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) t[j] += other.translation_[k] * matrix_[k][j];
  return RationalAffineMap(std::move(m), std::move(t));
}

LatticePolytope apply_map(const RationalAffineMap& map, const LatticePolytope& p) {
  if (map.dim() != p.dim()) throw LatticeError(ErrorKind::DimensionMismatch, "map and polytope dimensions differ");
  if (map.determinant() == 0) throw LatticeError(ErrorKind::InvalidArgument, "degenerate affine map");
  std::vector<LatticePoint> image;
  image.reserve(p.size());
  for (const auto& v : p.vertices()) {
    auto y = map.apply_integral(v);
    if (!y) throw LatticeError(ErrorKind::InvalidArgument, "image of " + v.str() + " is not a lattice point");
    image.push_back(std::move(*y));
  }
  return LatticePolytope::from_vertices(p.dim(), std::move(image));
}

}  // namespace lattice_equiv
