#include "grs/char_table.hpp"
#include "grs/constructions.hpp"
#include "grs/data.hpp"
#include "grs/error.hpp"
#include "grs/finite_field.hpp"
#include "grs/help.hpp"
#include "grs/oracle.hpp"
#include "grs/patterns.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default: return py::none();
  }
}

grs::TableSlice table(const std::string& group, int p) {
  if (group == "psl2") return grs::psl2_slice(p);
  if (group == "psl33") return grs::load_table(grs::psl33_table_path());
  throw grs::PreconditionFailed("group must be 'psl2' or 'psl33'");
}

py::object help_scan(const std::string& group, int p, unsigned jobs, std::vector<std::string> thetas) {
  auto t = table(group, p);
  grs::HelpScan scan;
  {
    py::gil_scoped_release release;
    scan = group == "psl2" ? grs::feasible_distributions(t, p, 2, {thetas, jobs})
                           : grs::feasible_distributions(t, 3, 3, {thetas, jobs});
  }
  return to_py(grs::to_json(scan));
}

py::object construct(const std::string& group, int p, const std::string& pattern) {
  json out;
  if (group == "psl2") {
    auto t = grs::psl2_slice(p);
    auto ug = grs::build_psl2_units(p, grs::parse_pattern(p, pattern));
    out["report"] = grs::to_json(grs::verify_unit_group(ug, t));
    auto w = grs::valenti_search(grs::unit_profiles(ug), t, p);
    if (w) {
      grs::Fp2 f(p);
      out["valenti"] = {{"image_u", f.to_string(w->image_u)},
                        {"image_v", f.to_string(w->image_v)},
                        {"pattern", w->pattern.to_string()}};
    } else {
      out["valenti"] = nullptr;
    }
  } else {
    auto t = table(group, p);
    out["report"] = grs::to_json(grs::verify_unit_group(grs::build_psl33_units(t), t));
  }
  return to_py(out);
}

py::object oracle(const std::string& group, int q) {
  auto spec = group == "psl2" ? grs::GroupSpec::psl2(q) : grs::GroupSpec::psl3(q);
  auto g = grs::MatrixGroup::enumerate(spec);
  json out = grs::to_json(g, g.classes());
  out["exponent"] = g.exponent();
  return to_py(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact HeLP, construction and pattern computations for PSL(2,p^2) and PSL(3,3)";
  py::register_exception<grs::Error>(m, "GrsError", PyExc_ValueError);

  py::class_<grs::Cyclotomic>(m, "Cyclotomic")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init([](const std::string& s) { return grs::Cyclotomic(grs::parse_rational(s)); }))
      .def(py::init([](int order, const std::vector<std::string>& coeffs) {
             std::vector<grs::Rational> c;
             for (const auto& s : coeffs) c.push_back(grs::parse_rational(s));
             return grs::Cyclotomic(order, std::move(c));
           }),
           py::arg("order"), py::arg("coeffs"))
      .def_static("root", &grs::Cyclotomic::root, py::arg("n"), py::arg("k") = 1)
      .def_property_readonly("order", &grs::Cyclotomic::order)
      .def("is_rational", &grs::Cyclotomic::is_rational)
      .def("is_zero", &grs::Cyclotomic::is_zero)
      .def("conj", &grs::Cyclotomic::conj)
      .def("inverse", &grs::Cyclotomic::inverse)
      .def("rational", [](const grs::Cyclotomic& c) { return grs::to_string(c.as_rational()); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &grs::Cyclotomic::to_string)
      .def("__repr__", [](const grs::Cyclotomic& c) { return "Cyclotomic(" + c.to_string() + ")"; });

  m.def("table", [](const std::string& group, int p) { return to_py(grs::to_json(table(group, p))); },
        py::arg("group"), py::arg("p") = 0);
  m.def("orthogonal", [](const std::string& group, int p) { return grs::validate_orthogonality(table(group, p)).ok(); },
        py::arg("group"), py::arg("p") = 0);
  m.def("help_scan", &help_scan, py::arg("group"), py::arg("p") = 0, py::arg("jobs") = 1,
        py::arg("thetas") = std::vector<std::string>{});
  m.def("construct", &construct, py::arg("group"), py::arg("p") = 0, py::arg("pattern") = "");
  m.def("gap_report", [](int p, bool list_missing) { return to_py(grs::to_json(grs::gap_report(p), list_missing)); },
        py::arg("p"), py::arg("list_missing") = true);
  m.def("square_lines", [](int p) {
    auto r = grs::square_lines(p);
    return py::make_tuple(r.square_lines, r.nonsquare_lines, r.homogeneous);
  });
  m.def("oracle", &oracle, py::arg("group"), py::arg("q"));
  m.def("data_dir", [] { return grs::data_dir().string(); });
}
