#include "lattice_equiv/invariants.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lattice_equiv;
using P = LatticePoint;

namespace {
std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("combinations are lexicographic") {
  auto c = combinations(4, 3);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(c[1] == std::vector<std::size_t>{0, 1, 3});
  CHECK(c[2] == std::vector<std::size_t>{0, 2, 3});
  CHECK(c[3] == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("volume vector values") {
  std::vector<P> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(volume_vector(square, 2).entries == ints({1, 1, 1, 1}));
  std::vector<P> tri{{0, 0}, {9, 0}, {0, 10}};
  CHECK(volume_vector(tri, 2).entries == ints({90}));
  std::vector<P> flipped{{0, 0}, {0, 1}, {1, 0}};
  CHECK(volume_vector(flipped, 2).entries == ints({-1}));
  std::vector<P> line{{0, 0}, {1, 1}, {2, 2}};
  CHECK_THROWS_AS(volume_vector(line, 2), LatticeError);
}

TEST_CASE("volume vector agrees with cofactor oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-7, 7);
  for (int t = 0; t < 300; ++t) {
    std::vector<P> pts;
    std::vector<oracle::Pt> op;
    for (int i = 0; i < 5; ++i) {
      int x = c(rng), y = c(rng);
      pts.push_back(P{x, y});
      op.push_back({x, y});
    }
    auto expect = oracle::volume_vector(op);
    if (std::all_of(expect.begin(), expect.end(), [](auto v) { return v == 0; })) continue;
    auto got = volume_vector(pts, 2).entries;
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
  }
}

TEST_CASE("primitive decomposition") {
  auto a = primitive_decomposition(ints({90}));
  CHECK(a.content == 90);
  CHECK(a.direction == ints({1}));
  auto b = primitive_decomposition(ints({2, 2, 2, 2}));
  CHECK(b.content == 2);
  CHECK(b.direction == ints({1, 1, 1, 1}));
  auto c = primitive_decomposition(ints({-3, 3}));
  CHECK(c.content == -3);
  CHECK(c.direction == ints({1, -1}));
  try {
    primitive_decomposition(ints({0, 0}));
    CHECK(false);
  } catch (const LatticeError& e) {
    CHECK(e.kind() == ErrorKind::ZeroVector);
  }
}

TEST_CASE("primitive hyperplane") {
  std::vector<P> x_axis{{0, 0}, {2, 0}};
  auto h = primitive_hyperplane(x_axis);
  CHECK(h.normal == ints({0, 1}));
  CHECK(h.offset == 0);
  std::vector<P> diag{{2, 0}, {0, 2}};
  auto g = primitive_hyperplane(diag);
  CHECK(g.normal == ints({1, 1}));
  CHECK(g.offset == -2);
  std::vector<P> same{{1, 1}, {1, 1}};
  CHECK_THROWS_AS(primitive_hyperplane(same), LatticeError);
}

TEST_CASE("lattice heights") {
  std::vector<P> tri{{0, 0}, {2, 0}, {0, 2}};
  auto h = lattice_height_vector(tri, 2);
  REQUIRE(h.blocks.size() == 3);
  CHECK(*h.blocks[0][0] == -2);
  CHECK(*h.blocks[1][0] == 2);
  CHECK(*h.blocks[2][0] == 2);
  std::vector<P> unit{{0, 0}, {1, 0}, {0, 1}};
  auto u = lattice_height_vector(unit, 2);
  CHECK(*u.blocks[0][0] == -1);
  CHECK(*u.blocks[1][0] == 1);
  CHECK(*u.blocks[2][0] == 1);
  CHECK(u.manifest(0) == std::vector<std::vector<std::size_t>>{{1, 2}});
}

TEST_CASE("height magnitudes equal cross product over edge content") {
  std::vector<P> hex{{0, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 2}, {-1, 1}};
  auto h = lattice_height_vector(hex, 2);
  for (const auto& block : h.blocks)
    for (const auto& v : block) CHECK(v.has_value());
  // The height of a point over the line through two others is |cross| / gcd of the edge.
  for (std::size_t i = 0; i < hex.size(); ++i) {
    auto manifest = h.manifest(i);
    for (std::size_t k = 0; k < manifest.size(); ++k) {
      auto a = oracle::to_pt(hex[manifest[k][0]]), b = oracle::to_pt(hex[manifest[k][1]]);
      auto p = oracle::to_pt(hex[i]);
      auto g = std::gcd(b.x - a.x, b.y - a.y);
      CHECK(abs(*h.blocks[i][k]) == std::abs(oracle::cross(a, b, p)) / g);
    }
  }
}
