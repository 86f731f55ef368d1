#include "lattice_equiv/enumeration.hpp"
#include "lattice_equiv/equivalence.hpp"
#include "lattice_equiv/invariants.hpp"
#include "lattice_equiv/io.hpp"
#include "lattice_equiv/lattice_algebra.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lattice_equiv;

// Python int <-> Integer and fractions.Fraction <-> Rational, via decimal text.
namespace pybind11::detail {

template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }
  static handle cast(const Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (PyLong_Check(src.ptr())) {
      value = Rational(Integer(py::str(src).cast<std::string>()));
      return true;
    }
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (!py::isinstance(src, fraction)) return false;
    Integer n(py::str(src.attr("numerator")).cast<std::string>());
    Integer d(py::str(src.attr("denominator")).cast<std::string>());
    value = Rational(n, d);
    return true;
  }
  static handle cast(const Rational& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ n = py::reinterpret_steal<py::int_>(PyLong_FromString(numerator(v).str().c_str(), nullptr, 10));
    py::int_ d = py::reinterpret_steal<py::int_>(PyLong_FromString(denominator(v).str().c_str(), nullptr, 10));
    return fraction(n, d).release();
  }
};

}  // namespace pybind11::detail

namespace {

LatticePoint to_point(const std::vector<Integer>& coords) { return LatticePoint(coords); }

std::vector<std::vector<Integer>> to_lists(std::span<const LatticePoint> pts) {
  std::vector<std::vector<Integer>> out;
  for (const auto& p : pts) out.emplace_back(p.coords().begin(), p.coords().end());
  return out;
}

LatticePolytope make_polytope(const std::vector<std::vector<Integer>>& points, std::optional<std::size_t> dim,
                              bool hull) {
  if (points.empty()) throw LatticeError(ErrorKind::DegenerateInput, "no points");
  std::size_t d = dim.value_or(points.front().size());
  std::vector<LatticePoint> pts;
  for (const auto& p : points) pts.push_back(to_point(p));
  if (hull && d == 2) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return convex_hull_2d(pts);
  }
  return LatticePolytope::from_vertices(d, std::move(pts));
}

py::object witness_to_python(const std::optional<EquivalenceWitness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["bijection"] = w->bijection;
  d["matrix"] = w->map.matrix();
  d["translation"] = w->map.translation();
  d["determinant"] = w->map.determinant();
  return d;
}

py::dict census_to_python(const ClassCensus& c) {
  py::dict d;
  d["region"] = c.region;
  d["H"] = c.h;
  d["K"] = c.k;
  d["A"] = c.a;
  d["volume_histogram"] = c.volume_histogram;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice polytope invariants, equivalence and census tools";

  static py::exception<LatticeError> error(m, "LatticeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LatticeError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<LatticePolytope>(m, "Polytope")
      .def(py::init(&make_polytope), py::arg("points"), py::arg("dim") = py::none(), py::arg("hull") = false,
           "Validated polytope; hull=True takes the planar convex hull instead of rejecting non-vertices.")
      .def_property_readonly("dim", &LatticePolytope::dim)
      .def_property_readonly("vertices", [](const LatticePolytope& p) { return to_lists(p.vertices()); })
      .def("__len__", &LatticePolytope::size)
      .def("__eq__", [](const LatticePolytope& a, const LatticePolytope& b) { return a == b; })
      .def("__repr__", [](const LatticePolytope& p) { return "Polytope(" + p.str() + ")"; })
      .def("to_json", [](const LatticePolytope& p) { return serialize_polytope(p); });

  m.def("parse_polytope", [](const std::string& text) { return parse_polytope(text).polytope; });
  m.def("normalized_volume", &normalized_volume);
  m.def("volume_vector", [](const LatticePolytope& p) { return volume_vector(p).entries; });
  m.def("primitive_decomposition", [](const LatticePolytope& p) {
    auto d = primitive_decomposition(volume_vector(p));
    return py::make_tuple(d.content, d.direction);
  });
  m.def("lattice_heights", [](const LatticePolytope& p) { return lattice_height_vector(p).blocks; });
  m.def("sublattice_index", [](const LatticePolytope& p) { return sublattice_info(p).index; });
  m.def("attains_vmin", &attains_vmin);
  m.def("shrink_to_vmin", [](const LatticePolytope& p) {
    auto s = shrink_to_vmin(p);
    return py::make_tuple(s.polytope, s.map.matrix(), s.map.translation(), s.index);
  });
  m.def("dilate", &dilate);

  m.def(
      "equivalent",
      [](const LatticePolytope& p, const LatticePolytope& q, const std::string& mode) {
        return witness_to_python(equivalent(p, q, parse_mode(mode)));
      },
      py::arg("p"), py::arg("q"), py::arg("mode") = "affine",
      "Witness dict (bijection, matrix, translation, determinant) or None; mode is affine, unimodular or det-one.");
  m.def(
      "oracle_equivalent",
      [](const LatticePolytope& p, const LatticePolytope& q, const std::string& mode) {
        return witness_to_python(oracle_equivalent(p, q, parse_mode(mode)));
      },
      py::arg("p"), py::arg("q"), py::arg("mode") = "affine");
  m.def("canonical_triangle", [](const LatticePolytope& t) {
    auto c = canonical_triangle(t);
    return py::make_tuple(c.g, c.b, c.a);
  });
  m.def("canonical_polygon", &canonical_polygon);

  m.def(
      "enumerate_polygons",
      [](const Rational& r2, const std::string& kind, std::size_t threads) {
        Region region = kind == "box" ? Region::box(r2) : Region::ball(r2);
        EnumerationOptions opt;
        opt.threads = threads;
        return enumerate_convex_polygons(region, opt);
      },
      py::arg("size"), py::arg("kind") = "ball", py::arg("threads") = 1,
      "Convex lattice polygons in the disk of squared radius `size` (kind='ball') or the box [0,size]^2.");
  m.def(
      "census",
      [](const Rational& size, const std::string& kind, std::size_t threads) {
        Region region = kind == "box" ? Region::box(size) : Region::ball(size);
        return census_to_python(census(region, threads));
      },
      py::arg("size"), py::arg("kind") = "ball", py::arg("threads") = 1);
  m.def(
      "classes_by_volume",
      [](const Integer& v, const std::string& shape) {
        auto c = classes_by_volume(v, shape == "triangles" ? ClassShape::Triangles : ClassShape::All);
        return c.representatives;
      },
      py::arg("volume"), py::arg("shape") = "triangles");
  m.def("build_lv", [](const Integer& v) {
    std::vector<LatticePolytope> out;
    for (auto& e : build_LV(v)) out.push_back(e.polytope);
    return out;
  });
  m.def("construct_qs", [](const Rational& r2) {
    auto r = construct_QS(r2);
    py::dict d;
    d["p"] = r.p;
    d["case"] = r.case_number;
    d["q"] = r.q;
    d["s"] = r.s;
    d["b"] = to_lists(r.b);
    d["actual_difference"] = to_lists(r.actual_difference);
    d["identity_holds"] = r.identity_holds;
    d["volume_delta"] = r.volume_delta;
    return d;
  });
  m.def("delta_shave", [](const LatticePolytope& q, const std::vector<std::vector<Integer>>& w) {
    std::vector<LatticePoint> pts;
    for (const auto& x : w) pts.push_back(to_point(x));
    auto s = delta_shave(q, pts);
    return py::make_tuple(s.polytope, s.removed);
  });
}
