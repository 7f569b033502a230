#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "autqm/automorphism.hpp"
#include "autqm/errors.hpp"
#include "autqm/graphprod.hpp"
#include "autqm/norms.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/serialize.hpp"
#include "autqm/text.hpp"
#include "autqm/verify.hpp"
#include "autqm/whitehead.hpp"

namespace py = pybind11;
using namespace autqm;

namespace {

// Words cross the boundary as strings in the a/A syntax.
Word w(const std::string& text, int rank) { return parse_word(text, rank); }
std::string s(const Word& x) { return format_word(x); }

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::shared_ptr<const VertexGraph> graph(const std::string& text) {
  return std::make_shared<const VertexGraph>(parse_graph(text));
}

}  // namespace

PYBIND11_MODULE(_autqm, m) {
  m.doc() = "Quasimorphisms, autocommutator lengths and graph products";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<CutoffExceeded>(m, "CutoffExceeded", PyExc_RuntimeError);

  m.def("reduce", [](const std::string& x, int rank) { return s(w(x, rank)); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("multiply", [](const std::string& x, const std::string& y, int rank) {
    return s(w(x, rank) * w(y, rank));
  }, py::arg("u"), py::arg("v"), py::arg("rank") = 2);
  m.def("invert", [](const std::string& x, int rank) { return s(invert(w(x, rank))); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("power", [](const std::string& x, long k, int rank) { return s(power(w(x, rank), k)); },
        py::arg("word"), py::arg("k"), py::arg("rank") = 2);
  m.def("cyclic_reduce", [](const std::string& x, int rank) {
    const auto c = cyclic_reduce(w(x, rank));
    return py::make_tuple(format_word(c.core), s(c.conjugator));
  }, py::arg("word"), py::arg("rank") = 2);
  m.def("is_conjugate", [](const std::string& x, const std::string& y, int rank) {
    return is_conjugate(w(x, rank), w(y, rank));
  }, py::arg("u"), py::arg("v"), py::arg("rank") = 2);

  py::class_<Automorphism>(m, "Automorphism")
      .def(py::init([](const std::string& text, int rank) { return parse_automorphism(text, rank); }),
           py::arg("text"), py::arg("rank") = 2)
      .def_static("ad", [](const std::string& g, int rank) { return ad(w(g, rank)); },
                  py::arg("g"), py::arg("rank") = 2)
      .def_property_readonly("rank", &Automorphism::rank)
      .def_property_readonly("images", [](const Automorphism& a) {
        std::vector<std::string> out;
        for (const auto& x : a.images()) out.push_back(s(x));
        return out;
      })
      .def_property_readonly("trace", [](const Automorphism& a) { return format_trace(a); })
      .def("__call__", [](const Automorphism& a, const std::string& x) { return s(a(w(x, a.rank()))); })
      .def("__matmul__", [](const Automorphism& a, const Automorphism& b) { return compose(a, b); })
      .def("inverse", [](const Automorphism& a) { return inverse(a); })
      .def("__eq__", [](const Automorphism& a, const Automorphism& b) { return equal(a, b); })
      .def("autocommutator", [](const Automorphism& a, const std::string& g) {
        return s(autocommutator(a, w(g, a.rank())));
      })
      .def("__repr__", [](const Automorphism& a) { return "Automorphism('" + format_trace(a) + "')"; });

  m.def("is_primitive", [](const std::string& x, int rank) { return is_primitive(w(x, rank)); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("in_proper_free_factor", [](const std::string& x, int rank) {
    return in_proper_free_factor(w(x, rank));
  }, py::arg("word"), py::arg("rank") = 2);
  m.def("minimize", [](const std::string& x, int rank) { return s(minimize(w(x, rank)).min_word); },
        py::arg("word"), py::arg("rank") = 2);

  py::class_<Quasimorphism>(m, "Quasimorphism")
      .def_property_readonly("rank", &Quasimorphism::rank)
      .def_property_readonly("homogeneous", &Quasimorphism::homogeneous)
      .def_property_readonly("defect_bound", [](const Quasimorphism& f) -> py::object {
        if (!f.defect_bound()) return py::none();
        return fraction(*f.defect_bound());
      })
      .def("__call__", [](const Quasimorphism& f, const std::string& g) {
        return fraction(f(w(g, f.rank())));
      })
      .def("to_json", [](const Quasimorphism& f) { return to_json(f).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return quasimorphism_from_json(Json::parse(text));
      });

  m.def("brooks", [](const std::string& p, int rank) { return brooks(w(p, rank)); },
        py::arg("pattern"), py::arg("rank") = 2);
  m.def("brooks_homogeneous", [](const std::string& p, int rank) {
    return brooks_homogeneous(w(p, rank));
  }, py::arg("pattern"), py::arg("rank") = 2);
  m.def("average_signed_permutations", [](const Quasimorphism& f) {
    return finite_average(f, signed_permutations(f.rank()));
  }, "Average over the signed permutations of the basis.");
  m.def("defect_enumerate", [](const Quasimorphism& f, int max_len) {
    return to_python(to_json(defect_enumerate(f, max_len)));
  }, py::arg("f"), py::arg("max_len"));

  m.def("bfs_norm", [](const std::string& g, const std::vector<std::string>& gens, long cutoff,
                       int rank) {
    std::vector<Word> ws;
    for (const auto& x : gens) ws.push_back(w(x, rank));
    return to_python(to_json(bfs_norm(w(g, rank), ws, cutoff)));
  }, py::arg("word"), py::arg("generators"), py::arg("cutoff"), py::arg("rank") = 2);
  m.def("acl_upper", [](const std::string& g, int rank) {
    return to_python(to_json(acl_upper(w(g, rank))));
  }, py::arg("word"), py::arg("rank") = 2);
  m.def("cl_upper", [](const std::string& g, int len_cap, int k_max, int rank) {
    return to_python(to_json(cl_upper(w(g, rank), len_cap, k_max)));
  }, py::arg("word"), py::arg("len_cap") = 2, py::arg("k_max") = 2, py::arg("rank") = 2);
  m.def("sacl_estimate", [](const std::string& g, int n_max, int rank) {
    return to_python(to_json(sacl_estimate(w(g, rank), n_max)));
  }, py::arg("word"), py::arg("n_max"), py::arg("rank") = 2);

  m.def("normal_form", [](const std::string& graph_text, const std::string& syllables) {
    return format_gpword(normal_form(graph(graph_text), parse_syllables(syllables)));
  }, py::arg("graph"), py::arg("syllables"));
  m.def("join_decompose", [](const std::string& graph_text) {
    const auto d = join_decompose(graph(graph_text));
    return py::make_tuple(d.gamma0, d.factors);
  }, py::arg("graph"));
  m.def("classify_virtually_abelian", [](const std::string& graph_text) {
    return classify_virtually_abelian(parse_graph(graph_text));
  }, py::arg("graph"));

  m.def("run_check", [](int id, std::uint64_t seed) {
    VerifyConfig config;
    config.seed = seed;
    const auto r = run_check(id, config);
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    return d;
  }, py::arg("id"), py::arg("seed") = VerifyConfig{}.seed);
}
