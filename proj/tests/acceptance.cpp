// Acceptance suite: one PASS/FAIL line per criterion.
#include "lattice_equiv/cli.hpp"
#include "lattice_equiv/enumeration.hpp"
#include "lattice_equiv/equivalence.hpp"
#include "lattice_equiv/invariants.hpp"
#include "lattice_equiv/io.hpp"
#include "lattice_equiv/lattice_algebra.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lattice_equiv;
using oracle::Pt;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  bool pass = o.pass && in_time;
  if (!pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " [" << timing;
  if (limit_seconds > 0) std::cout << " / limit " << limit_seconds << "s";
  std::cout << "] " << o.detail << (in_time ? "" : " (time limit exceeded)") << std::endl;
}

LatticePolytope poly(std::vector<LatticePoint> v) { return LatticePolytope::from_vertices(2, std::move(v)); }

std::vector<Pt> map_points(const oracle::IntMap& m, const std::vector<Pt>& v) {
  std::vector<Pt> out;
  for (auto p : v) out.push_back(m.apply(p));
  return out;
}

std::vector<LatticePoint> to_lattice(const std::vector<Pt>& v) {
  std::vector<LatticePoint> out;
  for (auto p : v) out.push_back(LatticePoint{p.x, p.y});
  return out;
}

std::optional<LatticePolytope> random_polygon(std::mt19937_64& rng, int c) {
  std::uniform_int_distribution<int> coord(-c, c), count(3, 8);
  std::vector<LatticePoint> pts;
  int n = count(rng);
  for (int i = 0; i < n; ++i) pts.push_back(LatticePoint{coord(rng), coord(rng)});
  try {
    return convex_hull_2d(pts);
  } catch (const LatticeError&) {
    return std::nullopt;
  }
}

std::vector<Integer> sorted_abs_primitive(const LatticePolytope& p) {
  auto d = primitive_decomposition(volume_vector(p)).direction;
  for (auto& x : d) x = abs(x);
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t oracle_class_count(const std::vector<LatticePolytope>& ps, EquivalenceMode mode) {
  std::vector<LatticePolytope> reps;
  for (const auto& p : ps) {
    bool found = false;
    for (const auto& r : reps)
      if (oracle_equivalent(r, p, mode)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(p);
  }
  return reps.size();
}

std::string counts(const ClassCensus& c) {
  return "(" + std::to_string(c.h) + "," + std::to_string(c.k) + "," + std::to_string(c.a) + ")";
}

// ---------------------------------------------------------------------------

Outcome diagonal_triangle_pair() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "lattice_equiv_acceptance";
  fs::create_directories(dir);
  std::string a = (dir / "p1.json").string(), b = (dir / "p2.json").string();
  std::ofstream(a) << R"({"dim":2,"points":[[0,0],[9,0],[0,10]]})";
  std::ofstream(b) << R"({"dim":2,"points":[[0,0],[6,0],[0,15]]})";
  auto run = [](std::vector<std::string> args, std::string& out) {
    std::ostringstream o, e;
    int code = run_command(args, o, e);
    out = o.str();
    return code;
  };
  std::string out_aff, out_uni, out_det;
  int c_aff = run({"equiv", "--mode", "affine", "--witness", a, b}, out_aff);
  int c_uni = run({"equiv", "--mode", "unimodular", a, b}, out_uni);
  int c_det = run({"equiv", "--mode", "det-one", "--witness", a, b}, out_det);

  auto witness_json = [](const std::string& out) { return Json::parse(out.substr(out.find('\n') + 1)); };
  bool ok = c_aff == 0 && c_uni == 1 && c_det == 0 && out_uni == "not-equivalent\n";
  std::string detail;
  if (ok) {
    Json wa = witness_json(out_aff), wd = witness_json(out_det);
    Json diag = Json::parse(R"([["2/3","0/1"],["0/1","3/2"]])");
    // Up to relabeling: some accepted witness has the diagonal matrix.
    auto P1 = poly({{0, 0}, {9, 0}, {0, 10}}), P2 = poly({{0, 0}, {6, 0}, {0, 15}});
    bool has_diag = false;
    for (const auto& w : all_witnesses(P1, P2, EquivalenceMode::Affine))
      has_diag = has_diag || map_to_json(w.map)["matrix"] == diag;
    ok = has_diag && wa["map"]["matrix"] == diag && wd["map"]["determinant"] == "1/1";
    detail = "affine exit 0 with matrix " + wa["map"]["matrix"].dump() + ", unimodular exit 1 (" +
             out_uni.substr(0, out_uni.size() - 1) + "), det-one exit 0 with determinant " +
             wd["map"]["determinant"].get<std::string>();
  } else {
    detail = "exit codes " + std::to_string(c_aff) + "/" + std::to_string(c_uni) + "/" + std::to_string(c_det);
  }
  return {ok, detail};
}

Outcome triangle_oracle_agreement() {
  // Translation classes of triangles with coordinates in [-3,3]^2: shift to touch both axes.
  std::vector<Pt> grid;
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) grid.push_back({x, y});
  std::set<std::vector<Pt>> classes;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j)
      for (std::size_t k = j + 1; k < grid.size(); ++k) {
        if (oracle::cross(grid[i], grid[j], grid[k]) == 0) continue;
        std::vector<Pt> t{grid[i], grid[j], grid[k]};
        oracle::I mx = std::min({t[0].x, t[1].x, t[2].x}), my = std::min({t[0].y, t[1].y, t[2].y});
        for (auto& p : t) p = {p.x - mx, p.y - my};
        std::sort(t.begin(), t.end());
        classes.insert(t);
      }
  std::vector<LatticePolytope> tris;
  std::vector<CanonicalTriangle> keys;
  for (const auto& t : classes) {
    tris.push_back(oracle::to_polytope(t));
    keys.push_back(canonical_triangle(tris.back()));
  }
  std::size_t pairs = 0, disagree_oracle = 0, disagree_key = 0, equivalent_pairs = 0, bad_witness = 0;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (std::size_t j = i; j < tris.size(); ++j) {
      ++pairs;
      auto w = unimodular_equivalent(tris[i], tris[j]);
      bool o = oracle_equivalent(tris[i], tris[j], EquivalenceMode::Unimodular).has_value();
      if (w.has_value() != o) ++disagree_oracle;
      if ((keys[i] == keys[j]) != o) ++disagree_key;
      if (w && !(w->map.is_unimodular() && verify_witness(*w, tris[i], tris[j]))) ++bad_witness;
      if (o) ++equivalent_pairs;
    }
  }
  std::ostringstream d;
  d << tris.size() << " translation classes, " << pairs << " pairs (incl. self), " << equivalent_pairs
    << " equivalent; decider/oracle disagreements " << disagree_oracle << ", key/oracle disagreements "
    << disagree_key << ", invalid witnesses " << bad_witness;
  return {disagree_oracle == 0 && disagree_key == 0 && bad_witness == 0, d.str()};
}

Outcome affine_round_trip() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> e(-5, 5), tr(-20, 20);
  std::size_t positive = 0, negative = 0, fail_pos = 0, fail_neg = 0, oracle_checked = 0, tries = 0;
  while (positive < 1000) {
    auto p = random_polygon(rng, 6);
    if (!p) continue;
    oracle::IntMap m{e(rng), e(rng), e(rng), e(rng), tr(rng), tr(rng)};
    if (m.det() == 0) continue;
    auto q = convex_hull_2d(to_lattice(map_points(m, oracle::to_pts(*p))));
    auto w = affine_equivalent(*p, q);
    if (!w || !verify_witness(*w, *p, q)) ++fail_pos;
    ++positive;
  }
  while (negative < 1000 && tries < 1000000) {
    ++tries;
    auto p = random_polygon(rng, 6), q = random_polygon(rng, 6);
    if (!p || !q || p->size() != q->size()) continue;
    if (sorted_abs_primitive(*p) == sorted_abs_primitive(*q)) continue;  // not certified
    if (affine_equivalent(*p, q.value())) ++fail_neg;
    if (p->size() <= 6 && oracle_checked < 200) {
      ++oracle_checked;
      if (oracle_equivalent(*p, *q, EquivalenceMode::Affine)) ++fail_neg;
    }
    ++negative;
  }
  std::ostringstream d;
  d << positive << " mapped pairs (failures " << fail_pos << "), " << negative
    << " certified non-equivalent pairs (failures " << fail_neg << ", " << oracle_checked
    << " also confirmed by the oracle)";
  return {fail_pos == 0 && fail_neg == 0 && negative == 1000, d.str()};
}

Outcome census_exactness() {
  auto r1 = census(Region::ball(1));
  auto box = census(Region::box(1));
  auto p1 = enumerate_convex_polygons(Region::ball(1));
  auto pb = enumerate_convex_polygons(Region::box(1));
  bool oracle_ok = oracle_class_count(p1, EquivalenceMode::Unimodular) == 3 &&
                   oracle_class_count(p1, EquivalenceMode::Affine) == 2 &&
                   oracle_class_count(pb, EquivalenceMode::Unimodular) == 2 &&
                   oracle_class_count(pb, EquivalenceMode::Affine) == 2;
  bool exact = r1.h == 9 && r1.k == 3 && r1.a == 2 && box.h == 5 && box.k == 2 && box.a == 2;

  auto a = census(Region::ball(4), 1);
  auto b = census(Region::ball(4), 1);
  auto c = census(Region::ball(4), 4);
  bool chain = a.h >= a.k && a.k >= a.a;
  bool repro = counts(a) == counts(b) && counts(a) == counts(c) && a.volume_histogram == c.volume_histogram;
  std::string detail = "ball r=1 " + counts(r1) + ", unit box " + counts(box) + ", oracle dedup " +
                       (oracle_ok ? "agrees" : "DISAGREES") + "; ball r=2 " + counts(a) + " run 2 " + counts(b) +
                       " 4 threads " + counts(c);
  return {exact && oracle_ok && chain && repro, detail};
}

Outcome vmin_suite() {
  std::size_t checked = 0, violations = 0;
  for (long long r2 : {1, 4}) {
    for (const auto& p : enumerate_convex_polygons(Region::ball(r2))) {
      ++checked;
      auto s = shrink_to_vmin(p);
      auto again = shrink_to_vmin(s.polytope);
      bool ok = normalized_volume(p) == s.index * normalized_volume(s.polytope) && attains_vmin(s.polytope) &&
                again.polytope == s.polytope && again.map == RationalAffineMap::identity(2) &&
                apply_map(s.map, p) == s.polytope;
      if (!ok) ++violations;
    }
  }
  return {violations == 0, std::to_string(checked) + " polygons (r=1 and r=2), " + std::to_string(violations) +
                               " violations"};
}

Outcome unit_difference_pair() {
  std::size_t with_basis = 0, violations = 0, total = 0;
  for (long long r2 : {1, 4}) {
    for (const auto& p : enumerate_convex_polygons(Region::ball(r2))) {
      ++total;
      auto v = oracle::to_pts(p);
      std::vector<Pt> diffs;
      for (auto a : v)
        for (auto b : v)
          if (!(a == b)) diffs.push_back({a.x - b.x, a.y - b.y});
      bool unimodular_pair = false;
      for (std::size_t i = 0; i < diffs.size() && !unimodular_pair; ++i)
        for (std::size_t j = i + 1; j < diffs.size() && !unimodular_pair; ++j)
          unimodular_pair = std::abs(diffs[i].x * diffs[j].y - diffs[i].y * diffs[j].x) == 1;
      if (!unimodular_pair) continue;
      ++with_basis;
      if (sublattice_info(p).index != 1) ++violations;
    }
  }
  return {violations == 0, std::to_string(with_basis) + " of " + std::to_string(total) +
                               " polygons have a unimodular difference pair, " + std::to_string(violations) +
                               " violations"};
}

Outcome lv_suite() {
  std::size_t total = 0, violations = 0;
  std::string sizes;
  for (long long v = 1; v <= 8; ++v) {
    auto l = build_LV(v);
    sizes += (sizes.empty() ? "" : ",") + std::to_string(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      ++total;
      if (normalized_volume(l[i].polytope) != v) ++violations;
      if (!attains_vmin(l[i].base)) ++violations;
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        if (oracle_equivalent(l[i].polytope, l[j].polytope, EquivalenceMode::Unimodular)) ++violations;
        if (unimodular_equivalent(l[i].polytope, l[j].polytope)) ++violations;
      }
    }
  }
  return {violations == 0, "|L_V| for V=1..8: " + sizes + "; " + std::to_string(total) + " polytopes, " +
                               std::to_string(violations) + " violations"};
}

Outcome qs_construction() {
  bool ok = true;
  std::string detail;
  for (long long r = 1; r <= 10; ++r) {
    auto rep = construct_QS(r * r);
    // Independent case decision: the column x = p holds (p,1) iff p^2 + 1 <= r^2.
    long long p = rep.p.convert_to<long long>();
    int expected_case = p * p + 1 <= r * r ? 2 : 1;
    bool row = rep.case_number == expected_case && rep.identity_holds && rep.s_contains_q && rep.b_are_vertices &&
               rep.volume_delta >= 0 && p == r;
    ok = ok && row;
    if (!row) detail += " r=" + std::to_string(r) + " mismatch;";
  }
  auto r2 = construct_QS(4);
  auto listed = convex_hull_2d(std::vector<LatticePoint>{{0, 0}, {4, 0}, {2, 2}, {0, 4}});
  bool worked = r2.q == listed && contains(r2.q, LatticePoint{2, 2}) &&
                std::find(r2.s.vertices().begin(), r2.s.vertices().end(), LatticePoint{4, 1}) != r2.s.vertices().end() &&
                r2.actual_difference == std::vector<LatticePoint>{{4, 1}};
  ok = ok && worked;
  // Case 2 needs a non-integer radius; reported as data.
  std::size_t case2 = 0, case2_identity = 0;
  for (long long k : {2, 5, 8, 10, 17}) {
    auto rep = construct_QS(k);
    if (rep.case_number == 2) {
      ++case2;
      if (rep.identity_holds) ++case2_identity;
    }
  }
  detail = "r=1..10 all Case 1 with identity, S ⊇ Q, B vertices; r=2: Q2 = conv{(0,0),(4,0),(2,2),(0,4)}, "
           "(4,1) vertex of S2, difference {(4,1)}" + detail +
           "; data: r^2 in {2,5,8,10,17} gives " + std::to_string(case2) + " Case-2 instances, identity holds in " +
           std::to_string(case2_identity);
  return {ok, detail};
}

Outcome invariance_suite() {
  std::mt19937_64 rng(424242);
  std::size_t checks = 0, violations = 0;
  while (checks < 10000) {
    auto p = random_polygon(rng, 6);
    if (!p) continue;
    int sign = checks % 2 ? 1 : -1;
    auto m = oracle::random_unimodular(rng, sign);
    auto src = oracle::to_pts(*p);
    auto img = map_points(m, src);
    auto a = to_lattice(src), b = to_lattice(img);
    auto wa = volume_vector(a, 2).entries, wb = volume_vector(b, 2).entries;
    bool ok = true;
    for (std::size_t i = 0; i < wa.size(); ++i) ok = ok && wb[i] == sign * wa[i];
    ok = ok && primitive_decomposition(wa).direction == primitive_decomposition(wb).direction;
    // Relabel the image and compare |heights| through the induced index map.
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LatticePoint> shuffled(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) shuffled[perm[i]] = b[i];
    auto ha = lattice_height_vector(a, 2), hb = lattice_height_vector(shuffled, 2);
    ok = ok && abs_height_multiset(ha) == abs_height_multiset(hb);
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      auto mi = ha.manifest(i);
      auto mb = hb.manifest(perm[i]);
      for (std::size_t k = 0; k < mi.size() && ok; ++k) {
        std::vector<std::size_t> target{perm[mi[k][0]], perm[mi[k][1]]};
        std::sort(target.begin(), target.end());
        auto it = std::find(mb.begin(), mb.end(), target);
        ok = it != mb.end() && abs(*ha.blocks[i][k]) == abs(*hb.blocks[perm[i]][it - mb.begin()]);
      }
    }
    if (!ok) ++violations;
    ++checks;
  }
  return {violations == 0, std::to_string(checks) + " randomized checks (half det +1, half det -1), " +
                               std::to_string(violations) + " violations"};
}

Outcome primitivity() {
  std::string detail;
  bool ok = true;
  for (long long r2 : {1, 4}) {
    auto a = primitivity_scan(Region::ball(r2), 1);
    auto b = primitivity_scan(Region::ball(r2), 4);
    bool same = a.polygons == b.polygons && a.index_one == b.index_one && a.counterexamples == b.counterexamples;
    ok = ok && same;
    detail += "r^2=" + std::to_string(r2) + ": " + std::to_string(a.polygons) + " polygons, " +
              std::to_string(a.index_one) + " with index 1, " + std::to_string(a.counterexamples.size()) +
              " counterexamples" + (same ? " (reproducible); " : " (NOT reproducible); ");
  }
  return {ok, detail + "report is data, not a verdict on the open question"};
}

}  // namespace

int main() {
  std::cout << "acceptance suite" << std::endl;
  criterion(1, 1.0, diagonal_triangle_pair);
  criterion(2, 300.0, triangle_oracle_agreement);
  criterion(3, 120.0, affine_round_trip);
  criterion(4, 60.0, census_exactness);
  criterion(5, 0, vmin_suite);
  criterion(6, 0, unit_difference_pair);
  criterion(7, 300.0, lv_suite);
  criterion(8, 0, qs_construction);
  criterion(9, 120.0, invariance_suite);
  criterion(10, 0, primitivity);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
