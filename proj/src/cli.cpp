#include "lattice_equiv/cli.hpp"

#include "lattice_equiv/io.hpp"

#include <CLI11.hpp>

#include <algorithm>

namespace lattice_equiv {

namespace {

struct RegionArgs {
  std::vector<std::string> ball_r;
  std::vector<std::string> ball_r2;
  std::vector<std::string> box;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ball-r", ball_r, "disk radius (integer or p/q); repeatable");
    cmd->add_option("--ball-r2", ball_r2, "squared disk radius (integer or p/q); repeatable");
    cmd->add_option("--box", box, "box [0,s]^2 side; repeatable");
  }

  std::vector<std::pair<std::string, Region>> regions() const {
    std::vector<std::pair<std::string, Region>> out;
    for (const auto& r : ball_r) out.emplace_back(r, Region::ball_of_radius(parse_rational(r)));
    for (const auto& r : ball_r2) out.emplace_back("r2=" + r, Region::ball(parse_rational(r)));
    for (const auto& s : box) out.emplace_back("box=" + s, Region::box(parse_rational(s)));
    return out;
  }
};

Json polytopes_to_json(const std::vector<LatticePolytope>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(polytope_to_json(p));
  return a;
}

Json points_to_json(const std::vector<LatticePoint>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(point_to_json(p));
  return a;
}

PolytopeDocument load(const std::string& path, std::ostream& err) {
  PolytopeDocument doc = read_polytope_file(path);
  if (doc.hull_taken) {
    err << "warning: " << path << ": points not in convex position, using their convex hull (dropped";
    for (const auto& p : doc.dropped) err << " " << p.str();
    err << ")\n";
  }
  return doc;
}

int cmd_invariants(const std::string& path, bool heights, std::ostream& out, std::ostream& err) {
  auto doc = load(path, err);
  const auto& p = doc.polytope;
  VolumeVector w = volume_vector(p);
  SublatticeInfo info = sublattice_info(p);
  Json j{{"polytope", polytope_to_json(p, doc.label)},
         {"normalized_volume", integer_to_json(normalized_volume(p))},
         {"volume_vector", volume_vector_to_json(w)},
         {"primitive", primitive_to_json(primitive_decomposition(w))},
         {"sublattice_index", integer_to_json(info.index)},
         {"attains_vmin", info.index == 1}};
  if (heights) j["lattice_heights"] = heights_to_json(lattice_height_vector(p));
  out << j.dump(2) << "\n";
  return exit_code::ok;
}

int cmd_equiv(const std::string& a, const std::string& b, const std::string& mode_text, bool witness, bool oracle,
              std::ostream& out, std::ostream& err) {
  EquivalenceMode mode = parse_mode(mode_text);
  auto p = load(a, err).polytope;
  auto q = load(b, err).polytope;
  auto w = oracle ? oracle_equivalent(p, q, mode, caps_from_env().max_oracle_vertices) : equivalent(p, q, mode);
  if (!w) {
    out << "not-equivalent\n";
    return exit_code::negative;
  }
  out << "equivalent\n";
  if (witness) out << witness_to_json(*w, mode).dump(2) << "\n";
  return exit_code::ok;
}

int cmd_canon(const std::string& path, bool triangle, std::ostream& out, std::ostream& err) {
  auto p = load(path, err).polytope;
  if (p.dim() != 2) throw LatticeError(ErrorKind::InvalidArgument, "canonical forms are planar");
  Json j;
  if (triangle || p.size() == 3) {
    if (p.size() != 3) throw LatticeError(ErrorKind::DegenerateInput, "--triangle needs three vertices");
    CanonicalTriangle t = canonical_triangle(p);
    j["triangle_key"] = Json{{"g", integer_to_json(t.g)}, {"b", integer_to_json(t.b)}, {"a", integer_to_json(t.a)}};
    j["triangle"] = polytope_to_json(t.polytope());
  }
  j["canonical_polygon"] = polytope_to_json(canonical_polygon(p));
  out << j.dump(2) << "\n";
  return exit_code::ok;
}

int cmd_vmin(const std::string& path, std::ostream& out, std::ostream& err) {
  auto p = load(path, err).polytope;
  SublatticeInfo info = sublattice_info(p);
  ShrinkResult s = shrink_to_vmin(p);
  Json basis = Json::array();
  for (std::size_t i = 0; i < info.basis.rows(); ++i) {
    Json row = Json::array();
    for (const auto& x : info.basis.row(i)) row.push_back(integer_to_json(x));
    basis.push_back(std::move(row));
  }
  Json j{{"index", integer_to_json(info.index)},
         {"attains_vmin", info.index == 1},
         {"basis", std::move(basis)},
         {"normalized_volume", integer_to_json(normalized_volume(p))},
         {"shrunk", polytope_to_json(s.polytope)},
         {"shrunk_normalized_volume", integer_to_json(normalized_volume(s.polytope))},
         {"map", map_to_json(s.map)}};
  out << j.dump(2) << "\n";
  return exit_code::ok;
}

int cmd_census(const RegionArgs& ra, bool csv, bool histogram, std::size_t threads, std::ostream& out) {
  auto regions = ra.regions();
  if (regions.empty()) throw LatticeError(ErrorKind::InvalidArgument, "census needs --ball-r, --ball-r2 or --box");
  std::vector<CensusRow> rows;
  Json all = Json::array();
  for (const auto& [param, region] : regions) {
    ClassCensus c = census(region, threads);
    rows.push_back({param, c.h, c.k, c.a});
    Json j{{"param", param}, {"region", c.region}, {"H", c.h}, {"K", c.k}, {"A", c.a}};
    if (histogram) {
      Json h = Json::array();
      for (const auto& [v, n] : c.volume_histogram) h.push_back(Json::array({integer_to_json(v), n}));
      j["volume_histogram"] = std::move(h);
    }
    all.push_back(std::move(j));
  }
  if (csv) out << emit_census_csv(rows);
  else out << all.dump(2) << "\n";
  return exit_code::ok;
}

int cmd_classes(const std::string& volume, const std::string& shape, std::optional<std::size_t> side, bool list,
                std::size_t threads, std::ostream& out) {
  ClassShape s;
  if (shape == "triangles") s = ClassShape::Triangles;
  else if (shape == "all") s = ClassShape::All;
  else throw LatticeError(ErrorKind::InvalidArgument, "--shape must be triangles or all");
  VolumeClasses c = classes_by_volume(parse_integer(volume), s, side, threads);
  Json j{{"volume", integer_to_json(c.volume)}, {"shape", shape}, {"count", c.count}};
  if (c.box_side) {
    j["search_box_side"] = *c.box_side;
    j["exact"] = false;
    j["note"] = "complete only relative to the search box [0,side]^2";
  } else {
    j["exact"] = true;
  }
  if (list) j["representatives"] = polytopes_to_json(c.representatives);
  out << j.dump(2) << "\n";
  return c.count == 0 ? exit_code::negative : exit_code::ok;
}

int cmd_build_lv(const std::string& volume, std::size_t threads, std::ostream& out) {
  auto entries = build_LV(parse_integer(volume), threads);
  Json list = Json::array();
  for (const auto& e : entries) {
    list.push_back(Json{{"factor", integer_to_json(e.factor)},
                        {"base", polytope_to_json(e.base)},
                        {"polytope", polytope_to_json(e.polytope)}});
  }
  out << Json{{"volume", volume}, {"count", entries.size()}, {"polytopes", std::move(list)}}.dump(2) << "\n";
  return exit_code::ok;
}

int cmd_barany(const std::string& r, const std::string& r2, std::size_t shave, std::ostream& out) {
  if (r.empty() == r2.empty()) throw LatticeError(ErrorKind::InvalidArgument, "give exactly one of --r, --r2");
  Rational radius_squared = r.empty() ? parse_rational(r2) : parse_rational(r) * parse_rational(r);
  ConstructionReport rep = construct_QS(radius_squared);
  Json j{{"r2", to_fraction_string(rep.radius_squared)},
         {"q_prime", polytope_to_json(rep.q_prime)},
         {"q", polytope_to_json(rep.q)},
         {"p", integer_to_json(rep.p)},
         {"case", rep.case_number},
         {"s", polytope_to_json(rep.s)},
         {"b", points_to_json(rep.b)},
         {"volume_delta", integer_to_json(rep.volume_delta)},
         {"expected_difference", points_to_json(rep.expected_difference)},
         {"actual_difference", points_to_json(rep.actual_difference)},
         {"identity_holds", rep.identity_holds},
         {"s_contains_q", rep.s_contains_q},
         {"b_are_vertices", rep.b_are_vertices}};
  if (shave > 0) {
    std::vector<LatticePoint> w;
    for (const auto& v : rep.s.vertices()) {
      if (w.size() == shave) break;
      bool in_b = std::find(rep.b.begin(), rep.b.end(), v) != rep.b.end();
      bool origin = std::all_of(v.coords().begin(), v.coords().end(), [](const Integer& x) { return x.is_zero(); });
      if (!in_b && !origin) w.push_back(v);
    }
    ShaveResult s = delta_shave(rep.s, w);
    j["shave"] = Json{{"removed_vertices", points_to_json(w)},
                      {"polytope", polytope_to_json(s.polytope)},
                      {"removed_normalized_volume", integer_to_json(s.removed)}};
  }
  out << j.dump(2) << "\n";
  return exit_code::ok;
}

int cmd_scan(const RegionArgs& ra, std::size_t threads, std::ostream& out) {
  auto regions = ra.regions();
  if (regions.empty()) throw LatticeError(ErrorKind::InvalidArgument, "scan needs --ball-r, --ball-r2 or --box");
  Json all = Json::array();
  bool found = false;
  for (const auto& [param, region] : regions) {
    PrimitivityReport r = primitivity_scan(region, threads);
    found = found || !r.counterexamples.empty();
    all.push_back(Json{{"param", param},
                       {"region", r.region},
                       {"polygons", r.polygons},
                       {"index_one", r.index_one},
                       {"counterexamples", polytopes_to_json(r.counterexamples)}});
  }
  out << all.dump(2) << "\n";
  return found ? exit_code::ok : exit_code::negative;
}

int cmd_affine_maps(const RegionArgs& ra, std::size_t budget, std::size_t threads, std::ostream& out) {
  auto regions = ra.regions();
  if (regions.empty()) throw LatticeError(ErrorKind::InvalidArgument, "affine-maps needs a region");
  Json all = Json::array();
  for (const auto& [param, region] : regions) {
    AffineMapCensus c = affine_map_census(region, budget, threads);
    all.push_back(Json{{"param", param},
                       {"region", c.region},
                       {"polygons", c.polygons},
                       {"simplices", c.simplices},
                       {"witnesses_examined", c.witnesses_examined},
                       {"budget_exhausted", c.budget_exhausted},
                       {"distinct_matrices", c.distinct_matrices},
                       {"simplex_pair_bound", integer_to_json(c.simplex_pair_bound)},
                       {"max_row_norm_squared", to_fraction_string(c.max_row_norm_squared)},
                       {"empirical_constant", c.empirical_constant},
                       {"identity_found", c.has_identity}});
  }
  out << all.dump(2) << "\n";
  return exit_code::ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice polytope equivalence toolkit", "lattice-equiv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file_a, file_b, mode = "affine", volume, shape = "triangles", r, r2;
  bool witness = false, oracle = false, heights = false, triangle = false, csv = false, histogram = false,
       list = false;
  std::size_t threads = 1, shave = 0, budget = 100000;
  std::optional<std::size_t> box_side;
  RegionArgs regions;

  auto* inv = app.add_subcommand("invariants", "volume vector, primitive part, sublattice index");
  inv->add_option("file", file_a)->required();
  inv->add_flag("--heights", heights, "include lattice heights");

  auto* eq = app.add_subcommand("equiv", "decide equivalence of two polytopes");
  eq->add_option("a", file_a)->required();
  eq->add_option("b", file_b)->required();
  eq->add_option("--mode", mode, "affine | unimodular | det-one")->check(CLI::IsMember({"affine", "unimodular", "det-one"}));
  eq->add_flag("--witness", witness, "print the witness map");
  eq->add_flag("--oracle", oracle, "use the exhaustive bijection search");

  auto* canon = app.add_subcommand("canon", "unimodular normal form (d = 2)");
  canon->add_option("file", file_a)->required();
  canon->add_flag("--triangle", triangle, "require a triangle and print its (g,b,a) key");

  auto* vmin = app.add_subcommand("vmin", "sublattice index and shrink to the minimal-volume representative");
  vmin->add_option("file", file_a)->required();

  auto* cen = app.add_subcommand("census", "H/K/A counts of convex lattice polygons in regions");
  regions.attach(cen);
  cen->add_flag("--csv", csv, "emit CSV");
  cen->add_flag("--histogram", histogram, "include the volume histogram (JSON only)");
  cen->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* cls = app.add_subcommand("classes-by-volume", "count unimodular classes of a given normalized volume");
  cls->add_option("--volume", volume)->required();
  cls->add_option("--shape", shape, "triangles | all");
  cls->add_option("--box-side", box_side, "search box side for --shape all (default: volume)");
  cls->add_flag("--list", list, "print representatives");
  cls->add_option("--threads", threads);

  auto* lv = app.add_subcommand("build-lv", "index-1 class representatives stretched to volume V");
  lv->add_option("--volume", volume)->required();
  lv->add_option("--threads", threads);

  auto* bar = app.add_subcommand("barany", "Q / S construction with optional shaving");
  bar->add_option("--r", r, "radius (integer or p/q)");
  bar->add_option("--r2", r2, "squared radius (integer or p/q)");
  bar->add_option("--shave", shave, "shave this many vertices of S (not the origin, not B)");

  auto* scan = app.add_subcommand("scan-primitivity", "index-1 polygons whose volume vector is not primitive");
  regions.attach(scan);
  scan->add_option("--threads", threads);

  auto* maps = app.add_subcommand("affine-maps", "distinct affine matrices between enumerated polygons");
  regions.attach(maps);
  maps->add_option("--budget", budget, "maximum witnesses examined");
  maps->add_option("--threads", threads);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(file_a, heights, out, err);
    if (eq->parsed()) return cmd_equiv(file_a, file_b, mode, witness, oracle, out, err);
    if (canon->parsed()) return cmd_canon(file_a, triangle, out, err);
    if (vmin->parsed()) return cmd_vmin(file_a, out, err);
    if (cen->parsed()) return cmd_census(regions, csv, histogram, threads, out);
    if (cls->parsed()) return cmd_classes(volume, shape, box_side, list, threads, out);
    if (lv->parsed()) return cmd_build_lv(volume, threads, out);
    if (bar->parsed()) return cmd_barany(r, r2, shave, out);
    if (scan->parsed()) return cmd_scan(regions, threads, out);
    if (maps->parsed()) return cmd_affine_maps(regions, budget, threads, out);
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? exit_code::usage : exit_code::input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  }
  return exit_code::usage;
}

}  // namespace lattice_equiv
