#include "lattice_equiv/enumeration.hpp"

#include "lattice_equiv/invariants.hpp"
#include "lattice_equiv/lattice_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

namespace lattice_equiv {

// ---------------------------------------------------------------------------
// Caps

Caps default_caps() { return Caps{}; }

Caps parse_caps(const std::string& spec, Caps base) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw LatticeError(ErrorKind::ParseError, "bad caps entry '" + item + "'");
    std::string key = item.substr(0, eq);
    Integer value = parse_integer(item.substr(eq + 1));
    if (value.sign() <= 0 || value > 1000000) {
      throw LatticeError(ErrorKind::ParseError, "caps value out of range in '" + item + "'");
    }
    auto v = value.convert_to<std::size_t>();
    if (key == "region_points") base.max_region_points = v;
    else if (key == "oracle_vertices") base.max_oracle_vertices = v;
    else if (key == "volume") base.max_volume = v;
    else if (key == "box_side") base.max_box_side = v;
    else throw LatticeError(ErrorKind::ParseError, "unknown caps key '" + key + "'");
  }
  return base;
}

Caps caps_from_env() {
  const char* env = std::getenv("LATTICE_EQUIV_CAPS");
  if (env == nullptr) return default_caps();
  return parse_caps(env);
}

// ---------------------------------------------------------------------------
// Polygon enumeration

namespace {

struct P2 {
  std::int64_t x, y;
};

std::int64_t cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool polygon_less(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto va = a.vertices();
  auto vb = b.vertices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

struct Enumerator {
  const std::vector<P2>& pts;  // lexicographically sorted
  const EnumerationOptions& opt;
  std::int64_t max_area2;      // normalized volume bound
  std::size_t max_vertices;
  std::int64_t floor_x = 0, floor_y = 0;

  std::vector<LatticePolytope> out;
  std::vector<P2> cand;
  std::vector<std::size_t> chain;  // indices into cand

  void run_start(std::size_t s) {
    const P2& o = pts[s];
    if (opt.touching_axes && o.x != floor_x) return;
    cand.assign(pts.begin() + static_cast<std::ptrdiff_t>(s) + 1, pts.end());
    std::stable_sort(cand.begin(), cand.end(), [&](const P2& a, const P2& b) { return cross(o, a, b) > 0; });
    for (std::size_t i = 0; i < cand.size(); ++i) {
      chain.assign(1, i);
      extend(o, 0);
    }
  }

  void extend(const P2& o, std::int64_t area2) {
    const std::size_t last = chain.back();
    const P2& b = cand[last];
    const P2& a = chain.size() >= 2 ? cand[chain[chain.size() - 2]] : o;
    if (chain.size() >= 2 && cross(a, b, o) > 0) emit(o);
    if (chain.size() + 1 >= max_vertices) return;
    for (std::size_t t = last + 1; t < cand.size(); ++t) {
      const P2& c = cand[t];
      std::int64_t fan = cross(o, b, c);
      if (fan <= 0) continue;
      if (cross(a, b, c) <= 0) continue;
      if (area2 + fan > max_area2) continue;
      chain.push_back(t);
      extend(o, area2 + fan);
      chain.pop_back();
    }
  }

  void emit(const P2& o) {
    if (opt.touching_axes) {
      std::int64_t min_y = o.y;
      for (auto i : chain) min_y = std::min(min_y, cand[i].y);
      if (min_y != floor_y) return;
    }
    std::vector<LatticePoint> v;
    v.reserve(chain.size() + 1);
    v.push_back(LatticePoint{o.x, o.y});
    for (auto i : chain) v.push_back(LatticePoint{cand[i].x, cand[i].y});
    out.push_back(LatticePolytope::from_canonical_unchecked(2, std::move(v)));
  }
};

std::size_t resolve_threads(std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace

std::vector<LatticePolytope> enumerate_convex_polygons(std::vector<LatticePoint> points,
                                                       const EnumerationOptions& options) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<P2> pts;
  pts.reserve(points.size());
  constexpr std::int64_t limit = std::int64_t{1} << 28;
  std::int64_t fx = std::numeric_limits<std::int64_t>::max(), fy = fx;
  for (const auto& p : points) {
    if (p.dim() != 2) throw LatticeError(ErrorKind::DimensionMismatch, "polygon enumeration is planar");
    if (abs(p[0]) >= limit || abs(p[1]) >= limit) {
      throw LatticeError(ErrorKind::RegionTooLarge, "coordinates too large for enumeration");
    }
    pts.push_back({p[0].convert_to<std::int64_t>(), p[1].convert_to<std::int64_t>()});
    fx = std::min(fx, pts.back().x);
    fy = std::min(fy, pts.back().y);
  }

  std::int64_t max_area2 = std::numeric_limits<std::int64_t>::max();
  if (options.max_normalized_volume) {
    if (options.max_normalized_volume->sign() < 0) return {};
    max_area2 = *options.max_normalized_volume > Integer(limit) ? limit
                                                                 : options.max_normalized_volume->convert_to<std::int64_t>();
  }
  std::size_t max_vertices = options.max_vertices.value_or(std::numeric_limits<std::size_t>::max());
  if (max_vertices < 3) return {};

  const std::size_t nthreads = std::min(resolve_threads(options.threads), std::max<std::size_t>(1, pts.size()));
  std::vector<Enumerator> workers;
  workers.reserve(nthreads);
  for (std::size_t w = 0; w < nthreads; ++w) workers.push_back(Enumerator{pts, options, max_area2, max_vertices, fx, fy, {}, {}, {}});
  auto work = [&](std::size_t w) {
    for (std::size_t s = w; s < pts.size(); s += nthreads) workers[w].run_start(s);
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nthreads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<LatticePolytope> all;
  for (auto& w : workers) std::move(w.out.begin(), w.out.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), polygon_less);
  return all;
}

std::vector<LatticePolytope> enumerate_convex_polygons(const Region& region, const EnumerationOptions& options,
                                                       const Caps& caps) {
  if (region.dim != 2) throw LatticeError(ErrorKind::InvalidArgument, "polygon enumeration needs d = 2");
  auto points = lattice_points_of(region);
  if (points.size() > caps.max_region_points) {
    throw LatticeError(ErrorKind::RegionTooLarge, region.describe() + " has " + std::to_string(points.size()) +
                                                      " lattice points, cap is " +
                                                      std::to_string(caps.max_region_points));
  }
  return enumerate_convex_polygons(std::move(points), options);
}

// ---------------------------------------------------------------------------
// Census

namespace {

struct AffineBucketKey {
  std::size_t n;
  std::vector<Integer> primitive;
  auto operator<=>(const AffineBucketKey&) const = default;
};

AffineBucketKey affine_key(const LatticePolytope& p) {
  VolumeVector w = volume_vector(p);
  Integer g = 0;
  for (const auto& x : w.entries) g = gcd(g, x);
  std::vector<Integer> v;
  v.reserve(w.entries.size());
  for (const auto& x : w.entries) v.push_back(abs(x) / g);
  std::sort(v.begin(), v.end());
  return {p.size(), std::move(v)};
}

struct PolygonLess {
  bool operator()(const LatticePolytope& a, const LatticePolytope& b) const { return polygon_less(a, b); }
};

}  // namespace

std::vector<LatticePolytope> affine_class_representatives(const std::vector<LatticePolytope>& polygons) {
  std::map<AffineBucketKey, std::vector<std::size_t>> buckets;
  std::vector<LatticePolytope> reps;
  for (const auto& p : polygons) {
    auto& bucket = buckets[affine_key(p)];
    bool fresh = true;
    for (auto idx : bucket) {
      if (affine_equivalent(reps[idx], p)) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(reps.size());
      reps.push_back(p);
    }
  }
  return reps;
}

ClassCensus census_of(const std::vector<LatticePolytope>& polygons, std::string label) {
  ClassCensus c;
  c.region = std::move(label);
  c.h = polygons.size();
  std::set<LatticePolytope, PolygonLess> canon;
  for (const auto& p : polygons) {
    canon.insert(canonical_polygon(p));
    ++c.volume_histogram[normalized_volume(p)];
  }
  c.k = canon.size();
  c.a = affine_class_representatives(std::vector<LatticePolytope>(canon.begin(), canon.end())).size();
  return c;
}

ClassCensus census(const Region& region, std::size_t threads, const Caps& caps) {
  EnumerationOptions opt;
  opt.threads = threads;
  return census_of(enumerate_convex_polygons(region, opt, caps), region.describe());
}

// ---------------------------------------------------------------------------
// Classes by volume, L_V

VolumeClasses classes_by_volume(const Integer& volume, ClassShape shape, std::optional<std::size_t> box_side,
                                std::size_t threads, const Caps& caps) {
  if (volume.sign() <= 0) throw LatticeError(ErrorKind::InvalidArgument, "volume must be positive");
  VolumeClasses out;
  out.volume = volume;
  out.shape = shape;

  if (shape == ClassShape::Triangles) {
    // Every triangle has a normal form (0,0),(g,0),(a,b) with g*b = V, 0 <= a < b.
    if (volume > Integer(1000000)) throw LatticeError(ErrorKind::CapExceeded, "volume too large for triangle listing");
    std::set<CanonicalTriangle> keys;
    for (Integer g = 1; g <= volume; ++g) {
      if (!(volume % g).is_zero()) continue;
      Integer b = volume / g;
      for (Integer a = 0; a < b; ++a) {
        keys.insert(canonical_triangle(CanonicalTriangle{g, b, a}.polytope()));
      }
    }
    for (const auto& k : keys) out.representatives.push_back(k.polytope());
    out.count = keys.size();
    out.exact = true;
    return out;
  }

  if (volume > Integer(caps.max_volume)) {
    throw LatticeError(ErrorKind::CapExceeded, "volume " + volume.str() + " above cap " +
                                                   std::to_string(caps.max_volume));
  }
  std::size_t side = box_side.value_or(volume.convert_to<std::size_t>());
  if (side == 0) throw LatticeError(ErrorKind::InvalidArgument, "box side must be positive");
  if (side > caps.max_box_side) {
    throw LatticeError(ErrorKind::CapExceeded, "box side " + std::to_string(side) + " above cap " +
                                                   std::to_string(caps.max_box_side));
  }
  EnumerationOptions opt;
  opt.max_normalized_volume = volume;
  opt.touching_axes = true;
  opt.threads = threads;
  auto polygons = enumerate_convex_polygons(lattice_points_of(Region::box(Rational(Integer(side)))), opt);
  std::set<LatticePolytope, PolygonLess> canon;
  for (const auto& p : polygons)
    if (normalized_volume(p) == volume) canon.insert(canonical_polygon(p));
  out.representatives.assign(canon.begin(), canon.end());
  out.count = canon.size();
  out.box_side = side;
  out.exact = false;
  return out;
}

std::vector<LVEntry> build_LV(const Integer& volume, std::size_t threads, const Caps& caps) {
  if (volume.sign() <= 0) throw LatticeError(ErrorKind::InvalidArgument, "volume must be positive");
  std::vector<LVEntry> out;
  for (Integer i = 1; i <= volume; ++i) {
    if (!(volume % i).is_zero()) continue;
    auto classes = classes_by_volume(volume / i, ClassShape::All, std::nullopt, threads, caps);
    std::vector<LatticePolytope> vmin;
    for (const auto& p : classes.representatives)
      if (attains_vmin(p)) vmin.push_back(p);
    for (auto& base : affine_class_representatives(vmin)) {
      // x -> x * diag(i, 1): an index-i image, so the normalized volume grows by i.
      RationalAffineMap stretch({{Rational(i), 0}, {0, 1}}, {0, 0});
      LatticePolytope scaled = apply_map(stretch, base);
      out.push_back({i, std::move(base), std::move(scaled)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q / S construction and shaving

namespace {

std::vector<LatticePoint> sorted_points(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool is_vertex(const LatticePolytope& p, const LatticePoint& x) {
  return std::find(p.vertices().begin(), p.vertices().end(), x) != p.vertices().end();
}

}  // namespace

ConstructionReport construct_QS(const Rational& radius_squared) {
  if (radius_squared < 1) throw LatticeError(ErrorKind::InvalidArgument, "construction needs r >= 1");
  auto pts = lattice_points_of(Region::orthant_ball(radius_squared));
  LatticePolytope q_prime = convex_hull_2d(pts);
  Integer p = 0;
  for (const auto& x : pts) p = std::max(p, x[0]);
  std::size_t column = 0;
  for (const auto& x : pts)
    if (x[0] == p) ++column;
  const int case_number = column == 1 ? 1 : 2;

  LatticePolytope q = dilate(q_prime, 2);
  Integer bx = 2 * p + (case_number == 2 ? 1 : 0);
  std::vector<LatticePoint> b{LatticePoint(std::vector<Integer>{bx, 0}), LatticePoint(std::vector<Integer>{bx, 1})};
  std::vector<LatticePoint> gen(q.vertices().begin(), q.vertices().end());
  gen.insert(gen.end(), b.begin(), b.end());
  LatticePolytope s = convex_hull_2d(gen);

  auto q_pts = sorted_points(lattice_points_of(q));
  auto s_pts = sorted_points(lattice_points_of(s));
  std::vector<LatticePoint> diff;
  std::set_difference(s_pts.begin(), s_pts.end(), q_pts.begin(), q_pts.end(), std::back_inserter(diff));

  ConstructionReport r{radius_squared, q_prime, q, p, case_number, s, b, normalized_volume(s) - normalized_volume(q),
                       std::vector<LatticePoint>(b.begin() + 1, b.end()), diff, false, true, true};
  r.identity_holds = sorted_points(r.expected_difference) == r.actual_difference;
  for (const auto& v : q.vertices()) r.s_contains_q = r.s_contains_q && contains(s, v);
  for (const auto& v : b) r.b_are_vertices = r.b_are_vertices && is_vertex(s, v);
  return r;
}

ShaveResult delta_shave(const LatticePolytope& q, const std::vector<LatticePoint>& w) {
  if (q.dim() != 2) throw LatticeError(ErrorKind::InvalidArgument, "delta_shave is implemented for d = 2");
  for (const auto& x : w)
    if (!is_vertex(q, x)) throw LatticeError(ErrorKind::InvalidArgument, x.str() + " is not a vertex");
  std::vector<LatticePoint> rest;
  for (auto& x : lattice_points_of(q))
    if (std::find(w.begin(), w.end(), x) == w.end()) rest.push_back(std::move(x));
  if (affine_dimension(rest) < 2) {
    throw LatticeError(ErrorKind::DegenerateResult, "remaining lattice points are not full-dimensional");
  }
  LatticePolytope result = convex_hull_2d(rest);
  Integer removed = normalized_volume(q) - normalized_volume(result);
  return {std::move(result), std::move(removed)};
}

// ---------------------------------------------------------------------------
// Primitivity scan

PrimitivityReport primitivity_scan(const std::vector<LatticePolytope>& polygons, std::string label) {
  PrimitivityReport r;
  r.region = std::move(label);
  r.polygons = polygons.size();
  for (const auto& p : polygons) {
    if (sublattice_info(p).index != 1) continue;
    ++r.index_one;
    if (abs(primitive_decomposition(volume_vector(p)).content) > 1) r.counterexamples.push_back(p);
  }
  return r;
}

PrimitivityReport primitivity_scan(const Region& region, std::size_t threads, const Caps& caps) {
  EnumerationOptions opt;
  opt.threads = threads;
  return primitivity_scan(enumerate_convex_polygons(region, opt, caps), region.describe());
}

// ---------------------------------------------------------------------------
// Affine map census

AffineMapCensus affine_map_census(const Region& region, std::size_t budget, std::size_t threads, const Caps& caps) {
  EnumerationOptions opt;
  opt.threads = threads;
  auto polygons = enumerate_convex_polygons(region, opt, caps);
  AffineMapCensus c;
  c.region = region.describe();
  c.polygons = polygons.size();
  for (const auto& p : polygons)
    if (p.size() == 3) ++c.simplices;
  c.simplex_pair_bound = Integer(c.simplices) * Integer(c.simplices) * 6;

  // Only pairs with equal affine keys can have witnesses.
  std::vector<AffineBucketKey> keys;
  std::map<AffineBucketKey, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    keys.push_back(affine_key(polygons[i]));
    buckets[keys.back()].push_back(i);
  }
  std::set<std::vector<std::vector<Rational>>> seen;
  for (std::size_t i = 0; i < polygons.size() && !c.budget_exhausted; ++i) {
    for (std::size_t j : buckets[keys[i]]) {
      if (c.budget_exhausted) break;
      for (auto& w : all_witnesses(polygons[i], polygons[j], EquivalenceMode::Affine)) {
        if (c.witnesses_examined == budget) {
          c.budget_exhausted = true;
          break;
        }
        ++c.witnesses_examined;
        for (const auto& row : w.map.matrix()) {
          Rational n2 = 0;
          for (const auto& x : row) n2 += x * x;
          if (n2 > c.max_row_norm_squared) c.max_row_norm_squared = n2;
        }
        seen.insert(w.map.matrix());
      }
    }
  }
  c.distinct_matrices = seen.size();
  c.matrices.assign(seen.begin(), seen.end());
  c.has_identity = seen.count(RationalAffineMap::identity(2).matrix()) > 0;
  double scale = region.kind == Region::Kind::Box ? region.side.convert_to<double>()
                                                  : std::sqrt(region.radius_squared.convert_to<double>());
  if (scale > 0) c.empirical_constant = std::sqrt(c.max_row_norm_squared.convert_to<double>()) / (scale * scale);
  return c;
}

}  // namespace lattice_equiv
