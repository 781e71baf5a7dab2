// Python bindings: groups, actions and extensions as objects, checks and
// reports as plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nabc/runner.hpp"

namespace py = pybind11;
using namespace nabc;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) return Json::parse(o.cast<std::string>());
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::dict outcome(const CheckOutcome& c) {
  py::dict d;
  d["holds"] = c.holds();
  d["values"] = to_py(c.values);
  d["violations"] = c.violations;
  return d;
}

py::tuple report(const Report& r) { return py::make_tuple(r.exit_code, to_py(r.machine)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Non-abelian cohomology of finite groups";

  static py::exception<BoundExceeded> bound_exc(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BoundExceeded& e) {
      bound_exc(e.what());
    } catch (const InvalidInput& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def_static("named", &named_group, py::arg("name"))
      .def_static("cyclic", &FiniteGroup::cyclic, py::arg("n"))
      .def_static("from_table", &FiniteGroup::from_table, py::arg("mul"), py::arg("name") = "")
      .def_static(
          "from_permutations",
          [](int degree, const std::vector<std::vector<int>>& gens) { return FiniteGroup::from_permutations(degree, gens); },
          py::arg("degree"), py::arg("generators"), "Image arrays on 0..degree-1")
      .def_static(
          "parse", [](const py::object& desc) { return parse_group(from_py(desc), DescriptionScope{}, "group"); },
          py::arg("description"), "A group description as in scenario files")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("generators", &FiniteGroup::generators)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("table", &FiniteGroup::table_rows)
      .def("describe", [](const FiniteGroup& g) { return to_py(describe_group(g)); })
      .def(
          "subgroups",
          [](const FiniteGroup& g, bool up_to_conjugacy) {
            return up_to_conjugacy ? subgroup_class_reps(g) : all_subgroups(g);
          },
          py::arg("up_to_conjugacy") = false)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + (g.name().empty() ? std::string("?") : g.name()) + " of order " + std::to_string(g.order()) + ">";
      });

  py::class_<Subgroup>(m, "Subgroup")
      .def_static(
          "generated_by",
          [](const FiniteGroup& g, const std::vector<Elem>& gens) { return Subgroup::generated_by(g, gens); },
          py::arg("group"), py::arg("generators"))
      .def_static("from_elements", &Subgroup::from_elements, py::arg("group"), py::arg("elements"))
      .def_property_readonly("ambient", &Subgroup::ambient)
      .def_property_readonly("group", &Subgroup::group, "The subgroup as an abstract group")
      .def_property_readonly("elements", &Subgroup::members)
      .def_property_readonly("order", &Subgroup::order)
      .def_property_readonly("index", &Subgroup::index)
      .def_property_readonly("coset_reps", &Subgroup::coset_reps)
      .def("is_normal", &Subgroup::is_normal)
      .def("__repr__", [](const Subgroup& h) {
        return "<Subgroup of order " + std::to_string(h.order()) + ", index " + std::to_string(h.index()) + ">";
      });

  py::class_<GAction>(m, "Action")
      .def_static("trivial", &GAction::trivial, py::arg("actor"), py::arg("space"))
      .def_static("from_generators", &GAction::from_generators, py::arg("actor"), py::arg("space"),
                  py::arg("generators"), py::arg("images"))
      .def_property_readonly("actor", &GAction::actor)
      .def_property_readonly("space", &GAction::space)
      .def("apply", &GAction::apply, py::arg("g"), py::arg("n"))
      .def("automorphism", &GAction::automorphism, py::arg("g"))
      .def("is_trivial", &GAction::is_trivial)
      .def("restrict_to", &GAction::restrict_to, py::arg("subgroup"));
  m.def("all_actions", &all_actions, py::arg("actor"), py::arg("space"));

  py::class_<Extension>(m, "Extension")
      .def_property_readonly("total", &Extension::total)
      .def_property_readonly("kernel", &Extension::kernel)
      .def_property_readonly("quotient", &Extension::quotient)
      .def_property_readonly("inject", &Extension::inject_images)
      .def_property_readonly("project", &Extension::project_images)
      .def("splits", &extension_splits);
  m.def("semidirect", &semidirect_extension, py::arg("action"));
  m.def("direct_product", &direct_product_extension, py::arg("kernel"), py::arg("quotient"));
  m.def(
      "extensions",
      [](const FiniteGroup& g, const FiniteGroup& n) {
        const ExtensionCensus c = extension_census(g, shared_automorphism_group(n));
        std::vector<Extension> out;
        for (const auto& f : c.fibres)
          for (long k = 0; k < f.size(); ++k) out.push_back(extension_from_factor_set(f.member(k)));
        return out;
      },
      py::arg("quotient"), py::arg("kernel"), "One extension per equivalence class, kernel by kernel");

  m.def("h1", [](const GAction& a, int jobs) { return outcome(check_h1(a, jobs)); }, py::arg("action"), py::arg("jobs") = 1);
  m.def(
      "shapiro1", [](const Subgroup& h, const GAction& a, int jobs) { return outcome(check_shapiro1(h, a, jobs)); },
      py::arg("subgroup"), py::arg("action"), py::arg("jobs") = 1);
  m.def(
      "h1_sections", [](const GAction& a, int jobs) { return outcome(check_h1_sections(a, jobs)); }, py::arg("action"),
      py::arg("jobs") = 1);
  m.def(
      "sections", [](const Extension& e, int jobs) { return outcome(check_sections(e, jobs)); }, py::arg("extension"),
      py::arg("jobs") = 1);
  m.def(
      "prop_ext", [](const FiniteGroup& g, const FiniteGroup& n, int jobs) { return outcome(check_prop_ext(g, n, jobs)); },
      py::arg("quotient"), py::arg("kernel"), py::arg("jobs") = 1);
  m.def(
      "abelian_cohomology", [](const GAction& a, int degree) { return outcome(check_abelian_cohomology(a, degree)); },
      py::arg("module"), py::arg("degree"));
  m.def(
      "abelian_shapiro",
      [](const Subgroup& h, const GAction& a, int degree) { return outcome(check_abelian_shapiro(h, a, degree)); },
      py::arg("subgroup"), py::arg("module"), py::arg("degree"));
  m.def(
      "transport",
      [](const Extension& f, const Subgroup& h, bool fallback, int jobs) {
        return outcome(check_transport(f, h, fallback, jobs));
      },
      py::arg("extension"), py::arg("subgroup"), py::arg("fallback_search") = false, py::arg("jobs") = 1);
  m.def(
      "holt", [](const Subgroup& h, const FiniteGroup& n) { return outcome(check_holt(h, n)); }, py::arg("subgroup"),
      py::arg("kernel"));
  m.def(
      "anabelian", [](const FiniteGroup& g, const FiniteGroup& n, int jobs) { return outcome(check_anabelian(g, n, jobs)); },
      py::arg("quotient"), py::arg("kernel"), py::arg("jobs") = 1);

  m.def(
      "run_scenario",
      [](const py::object& scenario, int jobs, bool fallback) {
        RunOptions o;
        o.jobs = jobs;
        o.fallback_search = fallback;
        return report(run_scenario(from_py(scenario), o));
      },
      py::arg("scenario"), py::arg("jobs") = 1, py::arg("fallback_search") = false,
      "Scenario as a dict or JSON text; returns (exit_code, machine_report)");
  m.def(
      "verify",
      [](const std::string& suite, int jobs, int max_group_order, int max_kernel_order, int max_index) {
        RunOptions o;
        o.jobs = jobs;
        o.max_group_order = max_group_order;
        o.max_kernel_order = max_kernel_order;
        o.max_index = max_index;
        return report(verify_suite(suite, o));
      },
      py::arg("suite"), py::arg("jobs") = 1, py::arg("max_group_order") = 12, py::arg("max_kernel_order") = 6,
      py::arg("max_index") = 4);
  m.def("suite_names", &suite_names);
  m.attr("__version__") = kToolVersion;
}
