#include "lattice_equiv/equivalence.hpp"

#include "lattice_equiv/invariants.hpp"
#include "lattice_equiv/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace lattice_equiv {

std::string_view to_string(EquivalenceMode mode) {
  switch (mode) {
    case EquivalenceMode::Affine: return "affine";
    case EquivalenceMode::Unimodular: return "unimodular";
    case EquivalenceMode::DeterminantOne: return "det-one";
  }
  return "unknown";
}

EquivalenceMode parse_mode(std::string_view text) {
  if (text == "affine") return EquivalenceMode::Affine;
  if (text == "unimodular") return EquivalenceMode::Unimodular;
  if (text == "det-one" || text == "det_one") return EquivalenceMode::DeterminantOne;
  throw LatticeError(ErrorKind::InvalidArgument, "unknown equivalence mode '" + std::string(text) + "'");
}

namespace {

struct Prepared {
  std::vector<std::vector<std::size_t>> combos;
  std::vector<Integer> entries;
  std::vector<Integer> abs_primitive;  // |w| / gcd(w)
};

Prepared prepare(std::span<const LatticePoint> pts, std::size_t d) {
  VolumeVector w = volume_vector(pts, d);
  Prepared out{combinations(pts.size(), d + 1), std::move(w.entries), {}};
  Integer g = 0;
  for (const auto& x : out.entries) g = gcd(g, x);
  out.abs_primitive.reserve(out.entries.size());
  for (const auto& x : out.entries) out.abs_primitive.push_back(abs(x) / g);
  return out;
}

std::vector<Integer> sorted_abs(const std::vector<Integer>& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(abs(x));
  std::sort(out.begin(), out.end());
  return out;
}

// Index of the anchor tuple: nonzero |primitive entry| with the rarest value,
// ties broken by the lexicographically first tuple.
std::size_t choose_anchor(const Prepared& p) {
  std::map<Integer, std::size_t> freq;
  for (const auto& x : p.abs_primitive)
    if (!x.is_zero()) ++freq[x];
  std::size_t best = p.abs_primitive.size();
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < p.abs_primitive.size(); ++i) {
    const auto& x = p.abs_primitive[i];
    if (x.is_zero()) continue;
    std::size_t c = freq[x];
    if (best == p.abs_primitive.size() || c < best_count) {
      best = i;
      best_count = c;
    }
  }
  return best;
}

IntegerMatrix edge_rows(std::span<const LatticePoint> pts, std::span<const std::size_t> tuple, std::size_t d) {
  IntegerMatrix m(d, d);
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t j = 0; j < d; ++j) m.at(k - 1, j) = pts[tuple[k]][j] - pts[tuple[0]][j];
  return m;
}

struct IndexedPoint {
  const LatticePoint* point;
  std::size_t index;
};

std::ptrdiff_t lookup(const std::vector<IndexedPoint>& sorted, const LatticePoint& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x,
                             [](const IndexedPoint& a, const LatticePoint& b) { return *a.point < b; });
  if (it == sorted.end() || !(*it->point == x)) return -1;
  return static_cast<std::ptrdiff_t>(it->index);
}

// Candidate search. Every equivalence sends the anchor simplex of P onto some
// simplex of Q with the same |primitive entry|, in some vertex order; each such
// ordered correspondence fixes a unique affine map, which is then checked on
// all points. Candidates are visited in a fixed order, so the first accepted
// witness is deterministic.
std::vector<EquivalenceWitness> search(std::span<const LatticePoint> p, std::span<const LatticePoint> q,
                                       std::size_t d, EquivalenceMode mode, bool collect_all) {
  std::vector<EquivalenceWitness> found;
  for (const auto& x : p)
    if (x.dim() != d) throw LatticeError(ErrorKind::DimensionMismatch, "point of the wrong dimension");
  for (const auto& x : q)
    if (x.dim() != d) throw LatticeError(ErrorKind::DimensionMismatch, "point of the wrong dimension");
  if (p.size() != q.size()) return found;
  const std::size_t n = p.size();
  if (n < d + 1) throw LatticeError(ErrorKind::DegenerateInput, "fewer than d+1 points");

  Prepared pp = prepare(p, d);
  Prepared pq = prepare(q, d);
  if (sorted_abs(pp.abs_primitive) != sorted_abs(pq.abs_primitive)) return found;
  if (mode != EquivalenceMode::Affine) {
    // |det| = 1 preserves every |entry|, not only the direction.
    if (sorted_abs(pp.entries) != sorted_abs(pq.entries)) return found;
  }
  if (mode == EquivalenceMode::Unimodular && d == 2) {
    if (abs_height_multiset(lattice_height_vector(p, d)) != abs_height_multiset(lattice_height_vector(q, d))) {
      return found;
    }
  }

  const std::size_t anchor = choose_anchor(pp);
  const auto& a = pp.combos[anchor];
  const Integer& target = pp.abs_primitive[anchor];
  IntegerMatrix dp = edge_rows(p, a, d);
  const Integer det_p = determinant(dp);
  const IntegerMatrix adj_p = adjugate(dp);

  std::vector<IndexedPoint> q_sorted;
  q_sorted.reserve(n);
  for (std::size_t i = 0; i < n; ++i) q_sorted.push_back({&q[i], i});
  std::sort(q_sorted.begin(), q_sorted.end(), [](const IndexedPoint& x, const IndexedPoint& y) {
    return *x.point < *y.point;
  });

  std::vector<std::size_t> bijection(n);
  std::vector<char> used(n);
  std::vector<Integer> image(d);
  LatticePoint image_point;

  for (std::size_t ci = 0; ci < pq.combos.size(); ++ci) {
    if (pq.abs_primitive[ci] != target) continue;
    std::vector<std::size_t> perm = pq.combos[ci];
    do {
      IntegerMatrix dq = edge_rows(q, perm, d);
      const Integer det_q = determinant(dq);
      if (mode == EquivalenceMode::DeterminantOne && det_q != det_p) continue;
      if (mode == EquivalenceMode::Unimodular && abs(det_q) != abs(det_p)) continue;
      // A = dp^{-1} dq = num / det_p
      IntegerMatrix num = adj_p * dq;
      if (mode == EquivalenceMode::Unimodular) {
        bool integral = true;
        for (std::size_t i = 0; i < d && integral; ++i)
          for (std::size_t j = 0; j < d && integral; ++j) integral = (num.at(i, j) % det_p).is_zero();
        if (!integral) continue;
      }
      const LatticePoint& p0 = p[a[0]];
      const LatticePoint& q0 = q[perm[0]];
      std::fill(used.begin(), used.end(), 0);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        // det_p * image = (p_i - p0) * num + det_p * q0
        for (std::size_t j = 0; j < d; ++j) image[j] = det_p * q0[j];
        for (std::size_t k = 0; k < d; ++k) {
          Integer diff = p[i][k] - p0[k];
          if (diff.is_zero()) continue;
          for (std::size_t j = 0; j < d; ++j) image[j] += diff * num.at(k, j);
        }
        for (std::size_t j = 0; j < d && ok; ++j) {
          if (!(image[j] % det_p).is_zero()) ok = false;
          else image[j] /= det_p;
        }
        if (!ok) break;
        image_point = LatticePoint(image);
        std::ptrdiff_t hit = lookup(q_sorted, image_point);
        if (hit < 0 || used[static_cast<std::size_t>(hit)]) {
          ok = false;
          break;
        }
        used[static_cast<std::size_t>(hit)] = 1;
        bijection[i] = static_cast<std::size_t>(hit);
      }
      if (!ok) continue;

      std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = make_rational(num.at(i, j), det_p);
      std::vector<Rational> t(d);
      for (std::size_t j = 0; j < d; ++j) {
        t[j] = Rational(q0[j]);
        for (std::size_t k = 0; k < d; ++k) t[j] -= Rational(p0[k]) * m[k][j];
      }
      found.push_back({bijection, RationalAffineMap(std::move(m), std::move(t))});
      if (!collect_all) return found;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return found;
}

void check_pair(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim()) {
    throw LatticeError(ErrorKind::DimensionMismatch, "polytopes of dimension " + std::to_string(p.dim()) +
                                                         " and " + std::to_string(q.dim()));
  }
}

}  // namespace

std::optional<EquivalenceWitness> find_equivalence(std::span<const LatticePoint> p,
                                                   std::span<const LatticePoint> q, std::size_t dim,
                                                   EquivalenceMode mode) {
  auto found = search(p, q, dim, mode, false);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::optional<EquivalenceWitness> equivalent(const LatticePolytope& p, const LatticePolytope& q,
                                             EquivalenceMode mode) {
  check_pair(p, q);
  if (p.size() != q.size()) return std::nullopt;
  if (mode != EquivalenceMode::Affine && normalized_volume(p) != normalized_volume(q)) return std::nullopt;
  return find_equivalence(p.vertices(), q.vertices(), p.dim(), mode);
}

std::optional<EquivalenceWitness> affine_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  return equivalent(p, q, EquivalenceMode::Affine);
}

std::optional<EquivalenceWitness> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  return equivalent(p, q, EquivalenceMode::Unimodular);
}

std::optional<EquivalenceWitness> unimodular_affine_equivalent(const LatticePolytope& p,
                                                               const LatticePolytope& q) {
  return equivalent(p, q, EquivalenceMode::DeterminantOne);
}

std::vector<EquivalenceWitness> all_witnesses(const LatticePolytope& p, const LatticePolytope& q,
                                              EquivalenceMode mode) {
  check_pair(p, q);
  if (p.size() != q.size()) return {};
  return search(p.vertices(), q.vertices(), p.dim(), mode, true);
}

bool verify_witness(const EquivalenceWitness& w, const LatticePolytope& p, const LatticePolytope& q) {
  if (w.bijection.size() != p.size() || p.size() != q.size() || w.map.dim() != p.dim()) return false;
  std::vector<char> hit(q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (w.bijection[i] >= q.size() || hit[w.bijection[i]]) return false;
    hit[w.bijection[i]] = 1;
    auto y = w.map.apply_integral(p.vertex(i));
    if (!y || !(*y == q.vertex(w.bijection[i]))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Oracle

std::optional<EquivalenceWitness> oracle_equivalent(const LatticePolytope& p, const LatticePolytope& q,
                                                    EquivalenceMode mode, std::size_t max_vertices) {
  check_pair(p, q);
  if (p.size() > max_vertices || q.size() > max_vertices) {
    throw LatticeError(ErrorKind::TooLarge, "oracle limited to " + std::to_string(max_vertices) + " vertices");
  }
  if (p.size() != q.size()) return std::nullopt;
  const std::size_t n = p.size(), d = p.dim();

  // First d+1 affinely independent vertices of p, greedily by index.
  std::vector<std::size_t> basis{0};
  for (std::size_t i = 1; i < n && basis.size() < d + 1; ++i) {
    std::vector<LatticePoint> pts;
    for (auto b : basis) pts.push_back(p.vertex(b));
    pts.push_back(p.vertex(i));
    if (affine_dimension(pts) == static_cast<int>(pts.size()) - 1) basis.push_back(i);
  }
  if (basis.size() != d + 1) throw LatticeError(ErrorKind::DegenerateInput, "polytope is not full-dimensional");

  RationalMatrix dp(d, std::vector<Rational>(d));
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t j = 0; j < d; ++j) dp[k - 1][j] = Rational(p.vertex(basis[k])[j] - p.vertex(basis[0])[j]);
  const RationalMatrix dp_inv = inverse(dp);
  IntegerMatrix dp_int(d, d);
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t j = 0; j < d; ++j) dp_int.at(k - 1, j) = p.vertex(basis[k])[j] - p.vertex(basis[0])[j];
  const Integer det_p = determinant(dp_int);

  struct Candidate {
    bool valid = false;
    std::optional<RationalAffineMap> map;
    std::vector<std::optional<LatticePoint>> images;
  };
  std::map<std::vector<std::size_t>, Candidate> cache;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> key;
    for (auto b : basis) key.push_back(perm[b]);
    auto [it, inserted] = cache.try_emplace(key);
    Candidate& c = it->second;
    if (inserted) {
      // det(A) = det(dq) / det(dp): reject wrong determinants before solving.
      IntegerMatrix dq_int(d, d);
      for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t j = 0; j < d; ++j) dq_int.at(k - 1, j) = q.vertex(key[k])[j] - q.vertex(key[0])[j];
      const Integer det_q = determinant(dq_int);
      if (det_q.is_zero() || (mode == EquivalenceMode::Unimodular && abs(det_q) != abs(det_p)) ||
          (mode == EquivalenceMode::DeterminantOne && det_q != det_p)) {
        continue;
      }
      RationalMatrix dq(d, std::vector<Rational>(d));
      for (std::size_t k = 1; k <= d; ++k)
        for (std::size_t j = 0; j < d; ++j) dq[k - 1][j] = Rational(q.vertex(key[k])[j] - q.vertex(key[0])[j]);
      RationalMatrix a(d, std::vector<Rational>(d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t j = 0; j < d; ++j) a[i][j] += dp_inv[i][k] * dq[k][j];
      std::vector<Rational> t(d);
      for (std::size_t j = 0; j < d; ++j) {
        t[j] = Rational(q.vertex(key[0])[j]);
        for (std::size_t k = 0; k < d; ++k) t[j] -= Rational(p.vertex(basis[0])[k]) * a[k][j];
      }
      RationalAffineMap map(std::move(a), std::move(t));
      Rational det = map.determinant();
      bool mode_ok = det != 0;
      if (mode == EquivalenceMode::Unimodular) mode_ok = mode_ok && map.is_unimodular();
      if (mode == EquivalenceMode::DeterminantOne) mode_ok = mode_ok && det == 1;
      c.valid = mode_ok;
      if (mode_ok) {
        for (const auto& v : p.vertices()) c.images.push_back(map.apply_integral(v));
        c.map = std::move(map);
      }
    }
    if (!c.valid) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = c.images[i] && *c.images[i] == q.vertex(perm[i]);
    if (ok) return EquivalenceWitness{perm, *c.map};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Canonical forms (d = 2)

namespace {

void require_planar(const LatticePolytope& p) {
  if (p.dim() != 2) throw LatticeError(ErrorKind::InvalidArgument, "canonical forms are defined for d = 2 only");
}

// Unimodular row transform sending u to (g, 0): rows (s, t) and (-u_y/g, u_x/g).
struct EdgeFrame {
  Integer g, s, t, ux, uy;

  explicit EdgeFrame(const LatticePoint& u) {
    ExtendedGcd e = extended_gcd(u[0], u[1]);
    g = e.g;
    s = e.s;
    t = e.t;
    ux = u[0] / g;
    uy = u[1] / g;
  }
  Integer x(const LatticePoint& w) const { return s * w[0] + t * w[1]; }
  Integer y(const LatticePoint& w) const { return ux * w[1] - uy * w[0]; }
};

}  // namespace

LatticePolytope CanonicalTriangle::polytope() const {
  std::vector<LatticePoint> v{LatticePoint(std::vector<Integer>{0, 0}), LatticePoint(std::vector<Integer>{g, 0}),
                              LatticePoint(std::vector<Integer>{a, b})};
  return LatticePolytope::from_vertices(2, std::move(v));
}

CanonicalTriangle canonical_triangle(const LatticePolytope& t) {
  require_planar(t);
  if (t.size() != 3) throw LatticeError(ErrorKind::DegenerateInput, "canonical_triangle needs a triangle");
  static constexpr std::size_t labelings[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::optional<CanonicalTriangle> best;
  for (const auto& l : labelings) {
    const LatticePoint& o = t.vertex(l[0]);
    EdgeFrame f(t.vertex(l[1]) - o);
    LatticePoint w = t.vertex(l[2]) - o;
    Integer b = abs(f.y(w));
    if (b.is_zero()) throw LatticeError(ErrorKind::DegenerateInput, "degenerate triangle");
    CanonicalTriangle c{f.g, b, floor_mod(f.x(w), b)};
    if (!best || c < *best) best = c;
  }
  return *best;
}

LatticePolytope canonical_polygon(const LatticePolytope& p) {
  require_planar(p);
  const std::size_t n = p.size();
  std::optional<std::vector<LatticePoint>> best;
  std::vector<LatticePoint> cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int dir : {1, -1}) {
      auto at = [&](std::size_t k) -> const LatticePoint& {
        return p.vertex(dir > 0 ? (i + k) % n : (i + n - k % n) % n);
      };
      const LatticePoint& o = at(0);
      EdgeFrame f(at(1) - o);
      std::vector<Integer> xs(n), ys(n);
      for (std::size_t k = 0; k < n; ++k) {
        LatticePoint w = at(k) - o;
        xs[k] = f.x(w);
        ys[k] = f.y(w);
      }
      if (ys[2].sign() < 0)
        for (auto& y : ys) y = -y;
      // Shear x -> x - q*y so that the following vertex has g <= x < g + y.
      Integer q = floor_div(xs[2] - f.g, ys[2]);
      for (std::size_t k = 0; k < n; ++k) {
        xs[k] -= q * ys[k];
        cycle[k] = LatticePoint(std::vector<Integer>{xs[k], ys[k]});
      }
      if (!best || std::lexicographical_compare(cycle.begin(), cycle.end(), best->begin(), best->end())) {
        best = cycle;
      }
    }
  }
  return LatticePolytope::from_vertices(2, std::move(*best));
}

}  // namespace lattice_equiv
