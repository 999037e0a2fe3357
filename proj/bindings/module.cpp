#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tdesc/hopf.hpp"
#include "tdesc/json_io.hpp"
#include "tdesc/render.hpp"
#include "tdesc/symgroup.hpp"
#include "tdesc/verify.hpp"

namespace py = pybind11;
using namespace tdesc;

namespace {

// linear combinations cross the boundary as [(coeff string, key), ...]
template <class K>
py::list lc_to_py(const LinearCombination<K>& x) {
    py::list out;
    for (const auto& [k, c] : x.terms()) out.append(py::make_tuple(c.str(), k));
    return out;
}

template <class K>
py::list tc_to_py(const TensorCombination<K>& x) {
    py::list out;
    for (const auto& [pair, c] : x.terms())
        out.append(py::make_tuple(c.str(), pair.first, pair.second));
    return out;
}

py::dict report_to_py(const Report& report) {
    py::list checks;
    for (const auto& c : report.checks) {
        py::dict line;
        line["name"] = c.name;
        line["pass"] = c.pass;
        line["detail"] = c.detail;
        checks.append(line);
    }
    py::dict out;
    out["suite"] = report.title;
    out["pass"] = report.pass();
    out["checks"] = checks;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "set compositions, increasing planar rooted trees, and the algebras they span";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<SetComposition>(m, "SetComposition")
        .def(py::init([](const std::string& literal) { return SetComposition::parse(literal); }),
             py::arg("literal"))
        .def(py::init([](const std::vector<std::vector<int>>& blocks) {
                 return SetComposition(blocks);
             }),
             py::arg("blocks"))
        .def("__str__", &SetComposition::str)
        .def("__repr__",
             [](const SetComposition& p) { return "SetComposition('" + p.str() + "')"; })
        .def("__eq__", [](const SetComposition& a, const SetComposition& b) { return a == b; })
        .def("__lt__", [](const SetComposition& a, const SetComposition& b) { return a < b; })
        .def("__hash__", [](const SetComposition& p) { return py::hash(py::str(p.str())); })
        .def_property_readonly("blocks",
                               [](const SetComposition& p) { return p.blocks(); })
        .def_property_readonly("support", [](const SetComposition& p) { return p.support(); })
        .def_property_readonly("degree", &SetComposition::degree);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init([](const std::string& literal) { return Permutation::parse(literal); }),
             py::arg("literal"))
        .def(py::init([](const std::vector<int>& word) { return Permutation(word); }),
             py::arg("word"))
        .def("__str__", &Permutation::str)
        .def("__repr__", [](const Permutation& w) { return "Permutation('" + w.str() + "')"; })
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
        .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
        .def("__hash__", [](const Permutation& w) { return py::hash(py::str(w.str())); })
        .def_property_readonly("word", [](const Permutation& w) { return w.word(); })
        .def_property_readonly("degree", &Permutation::degree)
        .def("inverse", &Permutation::inverse)
        .def("compose", &Permutation::compose)
        .def("restrict_std", &Permutation::restrict_std);

    py::class_<PlanarTree>(m, "PlanarTree")
        .def(py::init([](const std::string& literal) { return PlanarTree::parse(literal); }),
             py::arg("literal"))
        .def("__str__", &PlanarTree::str)
        .def("__repr__", [](const PlanarTree& t) { return "PlanarTree('" + t.str() + "')"; })
        .def("__eq__", [](const PlanarTree& a, const PlanarTree& b) { return a == b; })
        .def("__lt__", [](const PlanarTree& a, const PlanarTree& b) { return a < b; })
        .def("__hash__", [](const PlanarTree& t) { return py::hash(py::str(t.str())); })
        .def_property_readonly("branching_count", &PlanarTree::branching_count)
        .def_property_readonly("is_binary", &PlanarTree::is_binary);

    py::class_<IncreasingTree>(m, "IncreasingTree")
        .def(py::init([](const std::string& literal) { return IncreasingTree::parse(literal); }),
             py::arg("literal"))
        .def("__str__", &IncreasingTree::str)
        .def("__repr__",
             [](const IncreasingTree& t) { return "IncreasingTree('" + t.str() + "')"; })
        .def("__eq__", [](const IncreasingTree& a, const IncreasingTree& b) { return a == b; })
        .def("__hash__", [](const IncreasingTree& t) { return py::hash(py::str(t.str())); })
        .def_property_readonly("branching_count", &IncreasingTree::branching_count)
        .def_property_readonly("is_standard", &IncreasingTree::is_standard);

    // combinatorics
    m.def("enumerate_set_compositions", &enumerate_set_compositions, py::arg("n"));
    m.def("enumerate_permutations", &enumerate_permutations, py::arg("n"));
    m.def("enumerate_trees", &enumerate_trees, py::arg("n"));
    m.def("enumerate_increasing_trees", &enumerate_increasing_trees, py::arg("n"));
    m.def("restrict", &restrict, py::arg("p"), py::arg("subset"));
    m.def("standardize", &standardize, py::arg("p"));
    m.def("is_reduced", &is_reduced, py::arg("p"));
    m.def("factor_reduced", &factor_reduced, py::arg("p"));
    m.def("internal_product", &internal_product, py::arg("p"), py::arg("q"));
    m.def("concat_disjoint", &concat_disjoint, py::arg("p"), py::arg("q"));
    m.def("perm_to_setcomp", &perm_to_setcomp, py::arg("w"));
    m.def("setcomp_to_perm", &setcomp_to_perm, py::arg("p"));

    // the bijection with increasing trees
    m.def("to_increasing_tree", &to_increasing_tree, py::arg("p"));
    m.def("to_set_composition", &to_set_composition, py::arg("t"));
    m.def("contract", &contract, py::arg("t"), py::arg("labels"));
    m.def("fgt", &fgt, py::arg("t"));
    m.def("inc", &inc, py::arg("t"));
    m.def("is_left_increasing", &is_left_increasing, py::arg("t"));
    m.def("graft_left", &graft_left, py::arg("t1"), py::arg("t2"));
    m.def("render_ascii", py::overload_cast<const PlanarTree&>(&render_ascii), py::arg("t"));
    m.def("render_ascii", py::overload_cast<const IncreasingTree&>(&render_ascii), py::arg("t"));

    // products and coproducts
    m.def("restricted_product", &restricted_product, py::arg("p"), py::arg("q"));
    m.def("symmetrized_product",
          [](const SetComposition& p, const SetComposition& q) {
              return lc_to_py(symmetrized_product(p, q));
          },
          py::arg("p"), py::arg("q"));
    m.def("twisted_coproduct",
          [](const SetComposition& p) { return tc_to_py(twisted_coproduct(p)); }, py::arg("p"));
    m.def("restricted_coproduct",
          [](const SetComposition& p) { return tc_to_py(restricted_coproduct(p)); },
          py::arg("p"));
    m.def("cosym_coproduct",
          [](const SetComposition& p) { return tc_to_py(cosym_coproduct(p)); }, py::arg("p"));
    m.def("check_triangularity", &check_triangularity, py::arg("p"), py::arg("q"));
    m.def("primitive_generators",
          [](int n) {
              py::list out;
              for (const auto& [source, x] : primitive_generators(n))
                  out.append(py::make_tuple(source, lc_to_py(x)));
              return out;
          },
          py::arg("n"));

    // permutation algebras
    m.def("concat_perm", &concat_perm, py::arg("a"), py::arg("b"));
    m.def("q_shuffle_sum", [](int n, int m_) { return lc_to_py(q_shuffle_sum(n, m_)); },
          py::arg("n"), py::arg("m"));
    m.def("mr_product",
          [](const Permutation& a, const Permutation& b) { return lc_to_py(mr_product(a, b)); },
          py::arg("a"), py::arg("b"));
    m.def("mr_coproduct", [](const Permutation& a) { return tc_to_py(mr_coproduct(a)); },
          py::arg("a"));
    m.def("cosym_coproduct_perm",
          [](const Permutation& a) { return tc_to_py(cosym_coproduct_perm(a)); }, py::arg("a"));

    // verification
    m.def("verify",
          [](const std::string& suite, int n, int workers) {
              return report_to_py(run_verify_suite(suite, n, workers));
          },
          py::arg("suite"), py::arg("n") = -1, py::arg("workers") = 1);

    m.attr("__version__") = "0.1.0";
}
