#include "lattice_equiv/lattice_algebra.hpp"

#include <utility>

namespace lattice_equiv {

namespace {

// rows a, b <- (s*a + t*b, -y*a + x*b) with s*x + t*y = 1: a unimodular step.
void combine_rows(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& x, const Integer& y) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer ra = m.at(a, c), rb = m.at(b, c);
    m.at(a, c) = s * ra + t * rb;
    m.at(b, c) = x * rb - y * ra;
  }
}

void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(dst, c) -= q * m.at(src, c);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

}  // namespace

HnfResult hnf(const IntegerMatrix& m) {
  HnfResult res{m, IntegerMatrix::identity(m.rows()), 0};
  IntegerMatrix& h = res.h;
  IntegerMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h.at(i, c).is_zero()) continue;
      ExtendedGcd e = extended_gcd(h.at(r, c), h.at(i, c));
      Integer x = h.at(r, c) / e.g;
      Integer y = h.at(i, c) / e.g;
      combine_rows(h, r, i, e.s, e.t, x, y);
      combine_rows(u, r, i, e.s, e.t, x, y);
    }
    if (h.at(r, c).is_zero()) continue;
    if (h.at(r, c).sign() < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h.at(i, c), h.at(r, c));
      if (q.is_zero()) continue;
      add_row_multiple(h, i, r, q);
      add_row_multiple(u, i, r, q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

namespace {

SublatticeInfo lattice_of_differences(std::span<const LatticePoint> pts, std::size_t d) {
  IntegerMatrix diff(pts.size() - 1, d);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) diff.at(i - 1, j) = pts[i][j] - pts[0][j];
  HnfResult res = hnf(diff);
  if (res.rank < d) throw LatticeError(ErrorKind::DegenerateInput, "vertex differences are not full rank");
  SublatticeInfo info{IntegerMatrix(d, d), 1};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) info.basis.at(i, j) = res.h.at(i, j);
    info.index *= res.h.at(i, i);  // full rank: pivots sit on the diagonal
  }
  return info;
}

}  // namespace

SublatticeInfo sublattice_info(const LatticePolytope& p) { return lattice_of_differences(p.vertices(), p.dim()); }

Integer lattice_point_sublattice_index(const LatticePolytope& p) {
  return lattice_of_differences(lattice_points_of(p), p.dim()).index;
}

bool attains_vmin(const LatticePolytope& p) { return sublattice_info(p).index == 1; }

ShrinkResult shrink_to_vmin(const LatticePolytope& p) {
  SublatticeInfo info = sublattice_info(p);
  const std::size_t d = p.dim();
  if (info.index == 1) return {p, RationalAffineMap::identity(d), 1};

  // Points of L(P) are v_1 + c * B for integer rows c; x -> (x - v_1) * B^{-1}
  // sends them onto Z^d.
  RationalMatrix binv = inverse(to_rational(info.basis));
  std::vector<Rational> t(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) t[j] -= Rational(p.vertex(0)[k]) * binv[k][j];
  RationalAffineMap map(std::move(binv), std::move(t));

  std::vector<LatticePoint> image;
  image.reserve(p.size());
  for (const auto& v : p.vertices()) {
    auto y = map.apply_integral(v);
    if (!y) throw LatticeError(ErrorKind::DegenerateResult, "shrink produced a non-lattice vertex");
    image.push_back(std::move(*y));
  }
  return {LatticePolytope::from_vertices(d, std::move(image)), std::move(map), std::move(info.index)};
}

}  // namespace lattice_equiv
