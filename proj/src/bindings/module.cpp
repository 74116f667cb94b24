#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cotstruct/decompose.hpp"
#include "cotstruct/formats.hpp"
#include "cotstruct/random_complex.hpp"
#include "cotstruct/verify.hpp"

namespace py = pybind11;
using namespace cotstruct;

namespace {

// python-side handle; the engine passes shared_ptr<const PathAlgebra> around
struct PyAlgebra {
  AlgebraPtr ptr;
};

GeneratorSet make_gens(const std::vector<Complex>& gens, bool generating) {
  return GeneratorSet(gens, generating);
}

std::size_t resolve_iters(const Complex& x, const GeneratorSet& gens, std::size_t max_iter) {
  return max_iter ? max_iter : default_max_iter(x, gens);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "co-t-structure decomposition engine over path-algebra complexes";

  py::class_<PyAlgebra>(m, "PathAlgebra")
      .def_property_readonly("path_count", [](const PyAlgebra& a) { return a.ptr->path_count(); })
      .def_property_readonly("field", [](const PyAlgebra& a) { return a.ptr->field().str(); })
      .def_property_readonly("vertices", [](const PyAlgebra& a) { return a.ptr->quiver().vertex_labels(); })
      .def("__repr__", [](const PyAlgebra& a) {
        return "<PathAlgebra over F_" + a.ptr->field().str() + ", " + std::to_string(a.ptr->path_count()) +
               " paths>";
      });

  py::class_<Complex>(m, "Complex")
      .def_property_readonly("empty", &Complex::empty)
      .def_property_readonly("degrees",
                             [](const Complex& x) {
                               std::vector<int> out;
                               for (const auto& [n, s] : x.terms()) out.push_back(n);
                               return out;
                             })
      .def_property_readonly("total_path_dim", &Complex::total_path_dim)
      .def("__repr__", [](const Complex& x) {
        if (x.empty()) return std::string("<Complex 0>");
        return "<Complex degrees " + std::to_string(x.lowest_degree()) + ".." +
               std::to_string(x.highest_degree()) + ">";
      });

  py::class_<Decomposition>(m, "Decomposition")
      .def_property_readonly("a_part", [](const Decomposition& d) { return d.a_part; })
      .def_property_readonly("b_part", [](const Decomposition& d) { return d.b_part; })
      .def_property_readonly("tower_length", [](const Decomposition& d) { return d.tower.steps.size(); });

  m.def("parse_algebra", [](const std::string& text) { return PyAlgebra{parse_algebra_text(text)}; },
        py::arg("text"));
  m.def("parse_complex",
        [](const std::string& text, const PyAlgebra& a) { return parse_complex_text(text, a.ptr); },
        py::arg("text"), py::arg("algebra"));
  m.def("serialize_complex", &serialize_complex, py::arg("complex"), py::arg("algebra_ref") = "algebra.alg");
  m.def("stalk",
        [](const PyAlgebra& a, const std::vector<std::string>& vertices, int degree) {
          ProjSummands s;
          for (const auto& label : vertices) {
            int v = a.ptr->quiver().vertex_index(label);
            if (v < 0) throw std::invalid_argument("unknown vertex " + label);
            s.push_back(v);
          }
          return Complex::stalk(a.ptr, s, degree);
        },
        py::arg("algebra"), py::arg("vertices"), py::arg("degree") = 0);

  m.def("cohomology", [](const Complex& x) { return cohomology_dims(x); }, py::arg("complex"));
  m.def("suspend", py::overload_cast<const Complex&, int>(&suspend), py::arg("complex"), py::arg("n"));
  m.def("direct_sum",
        [](const std::vector<Complex>& parts) {
          if (parts.empty()) throw std::invalid_argument("direct_sum of nothing needs an algebra");
          return direct_sum(parts.front().algebra(), parts).sum;
        },
        py::arg("parts"));
  m.def("cone_cohomology",
        [](const Complex& x) {
          Triangle t = cone(ChainMap::identity(x));
          return cohomology_dims(t.w_obj);
        },
        py::arg("complex"));
  m.def("hom_dimension", &hom_dimension, py::arg("x"), py::arg("y"), py::arg("shift") = 0);
  m.def("is_contractible", &is_contractible, py::arg("complex"));

  m.def("in_B",
        [](const Complex& x, const std::vector<Complex>& gens) {
          MembershipVerdict v = in_B(x, make_gens(gens, false));
          return py::make_tuple(v.member, v.witness ? py::cast(v.witness->shift) : py::none());
        },
        py::arg("x"), py::arg("generators"));
  m.def("in_A_bar",
        [](const Complex& x, const std::vector<Complex>& gens) {
          MembershipVerdict v = in_A_bar(x, make_gens(gens, false));
          return py::make_tuple(v.member, v.witness ? py::cast(v.witness->shift) : py::none());
        },
        py::arg("x"), py::arg("generators"));

  m.def("decompose",
        [](const Complex& x, const std::vector<Complex>& gens, bool generating, std::size_t max_iter) {
          GeneratorSet gs = make_gens(gens, generating);
          return decompose(x, gs, resolve_iters(x, gs, max_iter));
        },
        py::arg("x"), py::arg("generators"), py::arg("generating") = false, py::arg("max_iter") = 0);

  m.def("check_setup2",
        [](const std::vector<Complex>& gens) {
          SetupReport r = check_setup2(make_gens(gens, false));
          py::dict out;
          out["condition1_pass"] = r.cond1_pass;
          out["condition2_pass"] = r.cond2_pass;
          return out;
        },
        py::arg("generators"));

  m.def("verify_axioms",
        [](const std::vector<Complex>& gens, const std::vector<Complex>& objects, std::size_t max_iter) {
          AxiomReport r = verify_axioms(make_gens(gens, false), objects, max_iter);
          py::dict out;
          out["pass"] = r.all_pass();
          out["summand_closure"] = verdict_name(r.summand_closure);
          out["shift_closure"] = verdict_name(r.shift_closure);
          out["orthogonality"] = verdict_name(r.orthogonality);
          out["decompositions"] = verdict_name(r.decompositions);
          out["finite_type"] = verdict_name(r.finite_type);
          return out;
        },
        py::arg("generators"), py::arg("objects"), py::arg("max_iter") = 0);

  m.def("nondegeneracy_witnesses",
        [](const Complex& x, const std::vector<Complex>& gens) {
          NondegeneracyReport r = nondegeneracy_window(make_gens(gens, false), x);
          return py::make_tuple(r.b_break ? py::cast(*r.b_break) : py::none(),
                                r.a_break ? py::cast(*r.a_break) : py::none());
        },
        py::arg("x"), py::arg("generators"));

  m.def("random_complex",
        [](const PyAlgebra& algebra, std::uint64_t seed, int degree_span, int max_rank) {
          return random_complex(algebra.ptr, RandomSpec{seed, degree_span, max_rank});
        },
        py::arg("algebra"), py::arg("seed") = 1, py::arg("degree_span") = 4, py::arg("max_rank") = 2);

  py::register_exception<NonTerminating>(m, "NonTerminatingError");
}
