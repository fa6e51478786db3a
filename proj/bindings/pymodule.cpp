#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "borel/chain.hpp"
#include "borel/decompose.hpp"
#include "borel/errors.hpp"
#include "borel/fuzz.hpp"
#include "borel/invariants.hpp"
#include "borel/json_io.hpp"
#include "borel/parser.hpp"
#include "borel/properties.hpp"

namespace py = pybind11;

namespace {

py::object degree_to_py(borel::ExtendedDegree d) {
  if (d.is_finite()) return py::int_(d.value());
  return py::float_(-std::numeric_limits<double>::infinity());
}

py::object json_to_py(const borel::Json& j) {
  switch (j.type()) {
    case borel::Json::value_t::null: return py::none();
    case borel::Json::value_t::boolean: return py::bool_(j.get<bool>());
    case borel::Json::value_t::number_integer:
    case borel::Json::value_t::number_unsigned: return py::int_(j.get<long long>());
    case borel::Json::value_t::number_float: return py::float_(j.get<double>());
    case borel::Json::value_t::string: return py::str(j.get<std::string>());
    case borel::Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case borel::Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

borel::Monomial monomial_from_list(const borel::MonomialIdeal& I, const std::vector<int>& exps) {
  if (static_cast<int>(exps.size()) != I.var_count())
    borel::fail("dimension_mismatch", "monomial has wrong variable count");
  return borel::Monomial(exps);
}

std::vector<borel::IrreducibleComponent> components_from_lists(
    const std::vector<std::vector<int>>& lists) {
  std::vector<borel::IrreducibleComponent> out;
  out.reserve(lists.size());
  for (const auto& b : lists) out.emplace_back(b);
  return out;
}

}  // namespace

PYBIND11_MODULE(_borel, m) {
  m.doc() = "Partial regularities and a*-invariants of Borel-type monomial ideals";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const borel::Error& e) {
      PyErr_SetString(PyExc_ValueError, (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::class_<borel::MonomialIdeal>(m, "Ideal")
      .def(py::init([](const std::vector<std::string>& vars,
                       const std::vector<std::vector<int>>& gens) {
             std::vector<borel::Monomial> ms;
             ms.reserve(gens.size());
             for (const auto& e : gens) ms.emplace_back(e);
             return borel::MonomialIdeal::make(static_cast<int>(vars.size()), std::move(ms),
                                               vars);
           }),
           py::arg("vars"), py::arg("gens"))
      .def_property_readonly("vars", &borel::MonomialIdeal::var_names)
      .def_property_readonly("gens",
                             [](const borel::MonomialIdeal& I) {
                               std::vector<std::vector<int>> out;
                               for (const auto& g : I.gens()) out.push_back(g.exps);
                               return out;
                             })
      .def_property_readonly("n", &borel::MonomialIdeal::var_count)
      .def("is_zero", &borel::MonomialIdeal::is_zero)
      .def("is_unit", &borel::MonomialIdeal::is_unit)
      .def("contains",
           [](const borel::MonomialIdeal& I, const std::vector<int>& exps) {
             return I.contains(monomial_from_list(I, exps));
           })
      .def("intersect", [](const borel::MonomialIdeal& a,
                           const borel::MonomialIdeal& b) { return borel::intersect(a, b); })
      .def("plus", [](const borel::MonomialIdeal& a,
                      const borel::MonomialIdeal& b) { return borel::sum(a, b); })
      .def("times", [](const borel::MonomialIdeal& a,
                       const borel::MonomialIdeal& b) { return borel::product(a, b); })
      .def("__and__", [](const borel::MonomialIdeal& a,
                         const borel::MonomialIdeal& b) { return borel::intersect(a, b); })
      .def("__add__", [](const borel::MonomialIdeal& a,
                         const borel::MonomialIdeal& b) { return borel::sum(a, b); })
      .def("__mul__", [](const borel::MonomialIdeal& a,
                         const borel::MonomialIdeal& b) { return borel::product(a, b); })
      .def("colon_var_saturate",
           [](const borel::MonomialIdeal& I, int i) { return borel::colon_var_saturate(I, i); },
           py::arg("i"))
      .def("colon_prefix_saturate",
           [](const borel::MonomialIdeal& I, int i) {
             return borel::colon_prefix_saturate(I, i);
           },
           py::arg("i"))
      .def("saturate", [](const borel::MonomialIdeal& I) { return borel::saturation(I); })
      .def("truncate",
           [](const borel::MonomialIdeal& I, long long e) { return borel::truncate(I, e); },
           py::arg("e"))
      .def("hilbert_count",
           [](const borel::MonomialIdeal& I, long long d) { return borel::hilbert_count(I, d); },
           py::arg("d"))
      .def("__eq__", [](const borel::MonomialIdeal& a,
                        const borel::MonomialIdeal& b) { return a == b; })
      .def("__str__", [](const borel::MonomialIdeal& I) { return borel::to_source_string(I); })
      .def("__repr__", [](const borel::MonomialIdeal& I) {
        return "Ideal(\"" + borel::to_source_string(I) + "\")";
      });

  m.def("parse", &borel::parse_ideal, py::arg("text"),
        "Parse 'vars x,y,z; x^4, x^2*z^3, ...' or the JSON ideal form.");
  m.def("m_ideal", &borel::m_ideal, py::arg("ideal"));
  m.def("decompose", [](const borel::MonomialIdeal& I) {
    std::vector<std::vector<int>> out;
    for (const auto& c : borel::decompose(I).components) out.push_back(c.b);
    return out;
  });
  m.def("recompose",
        [](const std::vector<std::vector<int>>& components, const std::vector<std::string>& vars) {
          return borel::recompose(components_from_lists(components),
                                  static_cast<int>(vars.size()), vars);
        },
        py::arg("components"), py::arg("vars"));
  m.def("is_irredundant",
        [](const std::vector<std::vector<int>>& components, const borel::MonomialIdeal& I) {
          return borel::is_irredundant(components_from_lists(components), I);
        });
  m.def("is_borel_type", &borel::is_borel_type);
  m.def("borel_failing_index", [](const borel::MonomialIdeal& I) -> py::object {
    auto check = borel::borel_type_check(I);
    if (check.failing_index) return py::int_(*check.failing_index);
    return py::none();
  });
  m.def("is_stable", &borel::is_stable);
  m.def("is_strongly_stable", &borel::is_strongly_stable_colon);
  m.def("sequential_chain", [](const borel::MonomialIdeal& I) {
    return json_to_py(borel::chain_to_json(borel::sequential_chain(I)));
  });
  m.def("satiety",
        [](const borel::MonomialIdeal& I) { return degree_to_py(borel::satiety_quotient(I)); });
  m.def("invariants",
        [](const borel::MonomialIdeal& I, const std::string& route) {
          auto r = borel::route_from_name(route);
          if (!r) borel::fail("config", "unknown route '" + route + "'");
          return json_to_py(borel::report_to_json(borel::report(I, *r)));
        },
        py::arg("ideal"), py::arg("route") = "decomposition");
  m.def("betti", [](const borel::MonomialIdeal& I) {
    return json_to_py(borel::betti_to_json(borel::betti_table(I)));
  });
  m.def("verify", [](const borel::MonomialIdeal& I) {
    return json_to_py(borel::comparison_to_json(borel::compare_routes(I), I));
  });
  m.def("reg_via_stable_truncation", [](const borel::MonomialIdeal& I) {
    return degree_to_py(borel::reg_via_stable_truncation(I));
  });
  m.def("fuzz",
        [](std::uint64_t seed, int count, int n_max, int exp_max, int depth) {
          borel::FuzzConfig cfg;
          cfg.seed = seed;
          cfg.count = count;
          cfg.n_max = n_max;
          cfg.exp_max = exp_max;
          cfg.depth = depth;
          return borel::fuzz_borel(cfg).samples;
        },
        py::arg("seed") = 1, py::arg("count") = 10, py::arg("n_max") = 4,
        py::arg("exp_max") = 5, py::arg("depth") = 3);
  m.def("run_properties",
        [](std::uint64_t seed, int count) {
          borel::FuzzConfig cfg;
          cfg.seed = seed;
          cfg.count = count;
          return json_to_py(borel::properties_to_json(borel::run_properties(cfg)));
        },
        py::arg("seed") = 1, py::arg("count") = 25);
}
