#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricfold/render.hpp"
#include "toricfold/report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace toricfold;

namespace {

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const IntMatrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.append(to_py(m.row(r)));
  return out;
}

py::list to_py(const std::vector<IntVector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

py::tuple to_py(const Vec2& v) { return py::make_tuple(v[0], v[1]); }

py::list to_py(const Mat2& g) { return py::cast(std::vector<std::vector<std::int64_t>>{{g.a, g.b}, {g.c, g.d}}); }

Mat2 to_mat2(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
    throw InvalidArgument("expected a 2x2 integer matrix");
  return {rows[0][0], rows[0][1], rows[1][0], rows[1][1]};
}

IntVector to_int_vector(const py::handle& seq) {
  IntVector v;
  for (auto x : seq) v.emplace_back(py::str(x).cast<std::string>());
  return v;
}

py::dict singularity_dict(const SingularityReport& s) {
  py::dict d;
  d["q_gorenstein"] = s.q_gorenstein;
  d["gorenstein"] = s.gorenstein;
  d["certificate"] = s.certificate ? py::object(to_py(*s.certificate)) : py::object(py::none());
  d["generators_extreme"] = s.generators_extreme;
  d["cone_q_gorenstein"] = s.cone_q_gorenstein;
  d["cone_gorenstein"] = s.cone_gorenstein;
  d["simplicial"] = s.simplicial;
  d["smooth"] = s.smooth;
  d["terminal"] = s.terminal;
  d["vertices"] = to_py(s.vertices);
  d["offenders"] = to_py(s.offenders);
  d["only_vertices"] = s.only_vertices ? py::object(py::bool_(*s.only_vertices)) : py::object(py::none());
  d["method"] = to_string(s.method);
  return d;
}

py::dict quotient_dict(const Fan2D& f) {
  auto w = weight_decomposition(f);
  auto q = build_quotient(w);
  py::dict d;
  d["rank"] = q.nprime_rank;
  d["B"] = to_py(q.B);
  d["A"] = to_py(q.A);
  d["section"] = to_py(q.section);
  d["generators"] = to_py(q.rays);
  d["generator_extreme"] = py::cast(q.ray_extreme);
  d["primitive_images"] = primitivity_audit(q);
  d["singularity"] = singularity_dict(singularity_report(q, w));
  return d;
}

}  // namespace

PYBIND11_MODULE(_toricfold, m) {
  m.doc() = "Lattice symmetries, deformations and local moduli quotients of smooth toric surfaces";
  m.attr("__version__") = kToolVersion;

  static py::exception<Error> base_error(m, "ToricfoldError");
  static py::exception<FanError> fan_error(m, "FanError", base_error.ptr());
  static py::exception<QuotientError> quotient_error(m, "QuotientError", base_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FanError& e) {
      py::set_error(fan_error, (to_string(e.defect) + ": " + e.what()).c_str());
    } catch (const QuotientError& e) {
      py::set_error(quotient_error, (to_string(e.mode) + ": " + e.what()).c_str());
    } catch (const Error& e) {
      py::set_error(base_error, e.what());
    }
  });

  py::class_<Fan2D>(m, "Fan")
      .def(py::init([](std::vector<Vec2> rays, std::string name) { return Fan2D::validate(std::move(rays), name); }),
           "rays"_a, "name"_a = "")
      .def_property_readonly("rays", [](const Fan2D& f) {
        py::list out;
        for (const auto& u : f.rays()) out.append(to_py(u));
        return out;
      })
      .def_property_readonly("name", &Fan2D::name)
      .def("__len__", &Fan2D::size)
      .def("__eq__", [](const Fan2D& a, const Fan2D& b) { return a == b; })
      .def("__repr__", [](const Fan2D& f) {
        return "Fan(" + py::repr(py::cast(f).attr("rays")).cast<std::string>() + ", name='" + f.name() + "')";
      })
      .def("self_intersections", [](const Fan2D& f) { return self_intersections(f); });

  m.def("catalog", &catalog, "name"_a);
  m.def("catalog_names", &catalog_names);
  m.def("blow_up", &blow_up, "fan"_a, "corner"_a);
  m.def("blow_down", &blow_down, "fan"_a, "ray"_a);
  m.def("change_basis", [](const Fan2D& f, const std::vector<std::vector<std::int64_t>>& g) {
    return change_basis(f, to_mat2(g));
  });
  m.def("fans_isomorphic", [](const Fan2D& a, const Fan2D& b) -> py::object {
    auto g = fans_isomorphic(a, b);
    return g ? py::object(to_py(*g)) : py::object(py::none());
  });

  m.def("lattice_automorphisms", [](const Fan2D& f) {
    auto g = lattice_automorphisms(f);
    py::list elements;
    for (const auto& x : g.elements) elements.append(to_py(x));
    return py::dict("type"_a = to_string(g.type), "order"_a = g.elements.size(), "elements"_a = elements);
  });
  m.def("foldability", [](const Fan2D& f) {
    auto w = foldability(f);
    return py::dict("foldable"_a = w.foldable, "p"_a = w.p,
                    "rotation"_a = w.rotation ? py::object(to_py(*w.rotation)) : py::object(py::none()));
  });

  m.def("weight_decomposition", [](const Fan2D& f) {
    py::list out;
    for (const auto& e : weight_decomposition(f).entries()) out.append(py::make_tuple(to_py(e.weight), e.multiplicity));
    return out;
  });
  m.def("oracle_dimension", &oracle_dimension);
  m.def("demazure_roots", [](const Fan2D& f) {
    py::list out;
    for (const auto& r : demazure_roots(f).roots) out.append(to_py(r));
    return out;
  });

  m.def("quotient", &quotient_dict, "fan"_a);
  m.def("cone_singularities", [](const py::iterable& generators) {
    std::vector<IntVector> gens;
    for (auto g : generators) gens.push_back(to_int_vector(g));
    return singularity_dict(cone_singularities(gens));
  });

  m.def("minimal_model", [](const Fan2D& f) {
    auto c = minimal_model(f);
    py::list steps;
    for (const auto& s : c.blowdown_sequence) {
      py::list orbit;
      for (const auto& u : s.orbit) orbit.append(to_py(u));
      steps.append(orbit);
    }
    return py::dict("foldable"_a = c.foldable, "p"_a = c.p, "minimal_model"_a = c.minimal_model,
                    "minimal"_a = c.minimal, "blowdown_sequence"_a = steps, "csck"_a = to_string(c.csck));
  });
  m.def(
      "random_foldable_fan",
      [](std::uint64_t seed, const std::string& base, int rounds, int order, std::size_t max_rays) {
        RandomFanOptions o;
        o.seed = seed;
        o.base = base;
        o.rounds = rounds;
        o.order = order;
        o.max_rays = max_rays;
        return random_foldable_fan(o);
      },
      "seed"_a, "base"_a = "Y3", "rounds"_a = 1, "order"_a = 0, "max_rays"_a = 30);

  m.def(
      "report_json",
      [](const Fan2D& f, const std::string& source) { return report_to_json(full_report(f), {source, std::nullopt}).dump(); },
      "fan"_a, "source"_a = "python");
  m.def("render_svg", &render_svg, "fan"_a);
}
