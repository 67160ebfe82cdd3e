#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uacat/automorphism.hpp"
#include "uacat/category.hpp"
#include "uacat/derived.hpp"
#include "uacat/finite.hpp"
#include "uacat/json_io.hpp"

namespace py = pybind11;
using namespace uacat;

namespace {

Variety variety_arg(const std::string& name) {
    return Variety::from_tag(variety_tag_from_string(name));
}

}  // namespace

PYBIND11_MODULE(_uacat, m) {
    m.doc() = "bounded symbolic toolkit for free-algebra categories";

    // most-recently-registered translators run first, so the subclass goes last
    py::register_exception<error>(m, "Error");
    py::register_exception<cap_exceeded>(m, "CapExceeded");

    py::class_<Term>(m, "Term")
        .def_static("var", &Term::var)
        .def_static("app", [](const std::string& op, const std::vector<Term>& args) {
            return Term::app(op, args);
        })
        .def_property_readonly("is_var", &Term::is_var)
        .def_property_readonly("size", &Term::size)
        .def_property_readonly("max_var", &Term::max_var)
        .def("render", &Term::render)
        .def("__repr__", &Term::render)
        .def("__eq__", [](const Term& a, const Term& b) { return a == b; });

    py::class_<NormalForm>(m, "NormalForm")
        .def_property_readonly("key", &NormalForm::key)
        .def_property_readonly("size", &NormalForm::size)
        .def_property_readonly("max_var", &NormalForm::max_var)
        .def("__repr__", &NormalForm::key)
        .def("__eq__", [](const NormalForm& a, const NormalForm& b) { return a == b; })
        .def("__lt__", [](const NormalForm& a, const NormalForm& b) { return a < b; })
        .def("__hash__", [](const NormalForm& n) { return py::hash(py::str(n.key())); });

    m.def("parse_term", [](const std::string& text, const std::string& variety) {
        return parse_term(text, variety_arg(variety).signature());
    });
    m.def("normalize", [](const std::string& text, const std::string& variety) {
        Variety v = variety_arg(variety);
        return normalize(parse_term(text, v.signature()), v);
    });
    m.def("equal_in_free", [](const std::string& lhs, const std::string& rhs,
                              const std::string& variety) {
        Variety v = variety_arg(variety);
        return equal_in_free(parse_term(lhs, v.signature()), parse_term(rhs, v.signature()), v);
    });
    m.def("identity_holds", [](const std::string& lhs, const std::string& rhs,
                               const std::string& variety) {
        Variety v = variety_arg(variety);
        return identity_holds(parse_term(lhs, v.signature()), parse_term(rhs, v.signature()), v);
    });
    m.def("munn_canonical", [](const std::string& text) {
        Variety v = Variety::inverse_semigroup();
        return munn_tree(parse_term(text, v.signature())).canonical;
    });
    m.def(
        "enumerate_terms",
        [](const std::string& variety, int vars, int max_size, std::size_t cap) {
            std::vector<int> v;
            for (int i = 1; i <= vars; ++i) v.push_back(i);
            return enumerate_terms(variety_arg(variety).signature(), v, max_size, cap);
        },
        py::arg("variety"), py::arg("vars"), py::arg("max_size"),
        py::arg("cap") = kDefaultEnumCap);
    m.def(
        "enumerate_elements",
        [](const std::string& variety, int rank, int max_size, std::size_t cap) {
            return enumerate_elements(FreeObject(variety_arg(variety), rank), max_size, cap);
        },
        py::arg("variety"), py::arg("rank"), py::arg("max_size"),
        py::arg("cap") = kDefaultEnumCap);
    m.def(
        "solve_system",
        [](const std::string& path, int max_size, bool dedupe) {
            EquationSystem sys = load_equation_system(path);
            SolveOptions opts;
            opts.dedupe_by_element = dedupe;
            std::vector<std::map<std::string, std::string>> out;
            for (const auto& a : solve_term_equations(sys, max_size, opts)) {
                std::map<std::string, std::string> entry;
                for (const auto& [name, t] : a.entries()) entry[name] = t.render();
                out.push_back(std::move(entry));
            }
            return out;
        },
        py::arg("path"), py::arg("max_size"), py::arg("dedupe") = true);
    m.def("check_mutual_derivability",
          [](const std::string& variety, const std::map<std::string, std::string>& assignment,
             int max_size) {
              Variety v = variety_arg(variety);
              TermAssignment a;
              for (const auto& [name, text] : assignment)
                  a.set(name, parse_term(text, v.signature()));
              return check_mutual_derivability(v, a, max_size);
          });

    py::class_<FiniteAlgebra>(m, "FiniteAlgebra")
        .def_property_readonly("carrier", &FiniteAlgebra::carrier)
        .def("apply", &FiniteAlgebra::apply)
        .def("table", &FiniteAlgebra::table)
        .def("text", [](const FiniteAlgebra& a) { return table_file_text(a); });
    m.def("load_table_file", &load_table_file);
    m.def("transformation_monoid", &transformation_monoid, py::arg("n"),
          py::arg("partial") = false);
    m.def("homomorphisms", &homomorphisms);
    m.def("all_semilattices", &all_semilattices);
    m.def(
        "right_indicator",
        [](const FiniteAlgebra& a0, const std::vector<FiniteAlgebra>& universe, int max_carrier) {
            return is_right_indicator(a0, universe, max_carrier).is_indicator;
        },
        py::arg("a0"), py::arg("universe"), py::arg("max_carrier") = 6);
    m.def("all_monoid_automorphisms_inner", [](int n, bool partial) {
        FiniteAlgebra mo = transformation_monoid(n, partial);
        return check_automorphisms_inner(mo, n, partial).all_inner;
    });

    m.def(
        "mirror_is_inner",
        [](const std::string& variety, int term_bound, int elem_bound) {
            Variety v = variety_arg(variety);
            AutomorphismSpec spec = mirror_spec();
            PartialBijection s = extract_s(spec, FreeObject(v, 2), 4);
            TermAssignment assignment;
            for (const auto& op : v.signature().ops()) {
                std::vector<Term> args;
                for (int i = 1; i <= op.arity; ++i) args.push_back(Term::var(i));
                NormalForm base = normalize(Term::app(op.name, args), v);
                const NormalForm* img = s.image(base);
                if (!img) throw error("s undefined on " + op.name);
                assignment.set(op.name, nf_to_term(*img, v));
            }
            InnerVerdict verdict =
                decide_inner_via_central(spec, v, assignment, term_bound, elem_bound);
            switch (verdict.kind) {
                case InnerVerdictKind::inner_witness: return std::string("inner_witness");
                case InnerVerdictKind::not_inner_up_to_bound:
                    return std::string("not_inner_up_to_bound");
                default: return std::string("inconclusive");
            }
        },
        py::arg("variety"), py::arg("term_bound") = 7, py::arg("elem_bound") = 3);
}
