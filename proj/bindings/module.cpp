#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "legdga/dga_io.hpp"
#include "legdga/obstruction.hpp"
#include "legdga/shipped.hpp"

namespace py = pybind11;
using namespace legdga;

namespace {

// The C++ API passes shared_ptr<const Algebra>; pybind11 holds the mutable
// pointer, so strip the const when handing algebras back to Python.
std::shared_ptr<Algebra> unconst(const AlgebraPtr& alg) {
    return std::const_pointer_cast<Algebra>(alg);
}

std::vector<std::string> word_names(const Algebra& alg, const Word& w) {
    std::vector<std::string> out;
    out.reserve(w.length());
    for (GenIndex g : w.factors()) out.push_back(alg.generator(g).name);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chekanov DGAs of Legendrian knots over GF(2)";

    // Translators run newest-first, so the base class goes first.
    const auto base = py::register_exception<Error>(m, "LegdgaError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def(py::init([](const std::vector<std::pair<std::string, int>>& generators,
                         int grading_modulus, std::size_t word_length_cap) {
                 std::vector<GeneratorSymbol> gens;
                 gens.reserve(generators.size());
                 for (const auto& [name, degree] : generators) gens.push_back({name, degree});
                 return std::make_shared<Algebra>(std::move(gens), grading_modulus,
                                                  word_length_cap);
             }),
             py::arg("generators"), py::arg("grading_modulus") = 0,
             py::arg("word_length_cap") = Algebra::kDefaultWordCap)
        .def_property_readonly("generators",
                               [](const Algebra& alg) {
                                   std::vector<std::pair<std::string, int>> out;
                                   for (const auto& g : alg.generators())
                                       out.emplace_back(g.name, g.degree);
                                   return out;
                               })
        .def_property_readonly("grading_modulus", &Algebra::grading_modulus)
        .def("__len__", &Algebra::size)
        .def("degree_of",
             [](const Algebra& alg, const std::string& name) {
                 return alg.degree_of(alg.index_of(name));
             })
        .def("poly",
             [](const std::shared_ptr<Algebra>& alg, const std::string& text) {
                 return parse_polynomial(alg, text);
             })
        .def("zero", [](const std::shared_ptr<Algebra>& alg) { return Polynomial::zero(alg); })
        .def("unit", [](const std::shared_ptr<Algebra>& alg) { return Polynomial::unit(alg); })
        .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
        .def("__repr__", [](const Algebra& alg) {
            return "Algebra(" + std::to_string(alg.size()) + " generators, modulus " +
                   std::to_string(alg.grading_modulus()) + ")";
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def_property_readonly("algebra", [](const Polynomial& p) { return unconst(p.algebra()); })
        .def_property_readonly("terms",
                               [](const Polynomial& p) {
                                   std::vector<std::vector<std::string>> out;
                                   for (const Word& w : p.terms())
                                       out.push_back(word_names(*p.algebra(), w));
                                   return out;
                               })
        .def("is_zero", &Polynomial::is_zero)
        .def("is_unit", &Polynomial::is_unit)
        .def("reversed", &Polynomial::reversed)
        .def("homogeneity",
             [](const Polynomial& p) -> std::pair<std::string, py::object> {
                 const auto h = homogeneity(p);
                 switch (h.kind) {
                     case Homogeneity::zero: return {"zero", py::none()};
                     case Homogeneity::homogeneous:
                         return {"homogeneous", py::int_(h.degree)};
                     default: return {"mixed", py::none()};
                 }
             })
        .def("__add__", [](const Polynomial& p, const Polynomial& q) { return p + q; })
        .def("__mul__", [](const Polynomial& p, const Polynomial& q) { return p * q; })
        .def("__eq__", [](const Polynomial& p, const Polynomial& q) { return p == q; })
        .def("__str__", [](const Polynomial& p) { return to_string(p); })
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + to_string(p) + ")"; });

    py::class_<KnotMetadata>(m, "KnotMetadata")
        .def_readonly("display_name", &KnotMetadata::display_name)
        .def_readonly("smooth_type", &KnotMetadata::smooth_type)
        .def_readonly("thurston_bennequin", &KnotMetadata::thurston_bennequin)
        .def_readonly("maslov_number", &KnotMetadata::maslov_number);

    py::class_<AxiomReport>(m, "AxiomReport")
        .def_readonly("degree_ok", &AxiomReport::degree_ok)
        .def_readonly("d_squared_zero", &AxiomReport::d_squared_zero)
        .def_readonly("violations", &AxiomReport::violations)
        .def("ok", &AxiomReport::ok);

    py::class_<ChekanovDGA>(m, "ChekanovDGA")
        .def_property_readonly("algebra",
                               [](const ChekanovDGA& d) { return unconst(d.algebra()); })
        .def_property_readonly("metadata",
                               [](const ChekanovDGA& d) -> std::optional<KnotMetadata> {
                                   return d.metadata();
                               })
        .def_property_readonly("display_name", &ChekanovDGA::display_name)
        .def("differential",
             [](const ChekanovDGA& d, const std::string& name) { return d.differential(name); })
        .def("d", [](const ChekanovDGA& d, const Polynomial& p) {
            return apply_differential(d, p);
        })
        .def("__eq__", [](const ChekanovDGA& a, const ChekanovDGA& b) { return a == b; })
        .def("__repr__", [](const ChekanovDGA& d) {
            return "ChekanovDGA(" + (d.display_name().empty() ? "unnamed" : d.display_name()) +
                   ", " + std::to_string(d.algebra()->size()) + " generators)";
        });

    py::class_<ElementaryAutomorphism>(m, "ElementaryAutomorphism")
        .def(py::init<std::string, Polynomial>(), py::arg("target"), py::arg("shift"))
        .def_readonly("target", &ElementaryAutomorphism::target)
        .def_readonly("shift", &ElementaryAutomorphism::shift);

    m.def("parse_dga", &parse_dga, py::arg("text"), py::arg("source_name") = "<dga>");
    m.def("format_dga", &format_dga);
    m.def("check_axioms", &check_axioms);
    m.def("apply_differential",
          py::overload_cast<const ChekanovDGA&, const Polynomial&>(&apply_differential));
    m.def("mirror", &mirror);
    m.def("apply_automorphism", &apply_automorphism);
    m.def("apply_automorphisms",
          [](const ChekanovDGA& d, const std::vector<ElementaryAutomorphism>& phis) {
              return apply_automorphisms(d, phis);
          });
    m.def(
        "stabilize",
        [](const ChekanovDGA& d, int degree, const std::pair<std::string, std::string>& names) {
            return stabilize(d, degree, names);
        },
        py::arg("dga"), py::arg("degree"),
        py::arg("names") = std::pair<std::string, std::string>{"e1", "e2"});

    py::class_<RewriteRule>(m, "RewriteRule")
        .def_property_readonly("lhs",
                               [](const RewriteRule& r) {
                                   return word_names(*r.rhs.algebra(), r.lhs);
                               })
        .def_readonly("rhs", &RewriteRule::rhs);

    py::class_<ConfluenceReport>(m, "ConfluenceReport")
        .def_readonly("confluent", &ConfluenceReport::confluent)
        .def_readonly("critical_pairs", &ConfluenceReport::critical_pairs)
        .def_readonly("words_checked", &ConfluenceReport::words_checked)
        .def_readonly("divergences", &ConfluenceReport::divergences);

    py::class_<RewriteSystem>(m, "RewriteSystem")
        .def_property_readonly("algebra",
                               [](const RewriteSystem& s) { return unconst(s.algebra()); })
        .def_property_readonly("rules", &RewriteSystem::rules)
        .def("normal_form",
             [](const RewriteSystem& s, const Polynomial& p) { return normal_form(s, p); })
        .def("reduce_once",
             [](const RewriteSystem& s, const Polynomial& p) { return reduce_once(s, p); });

    m.def("parse_rules", &parse_rules, py::arg("text"), py::arg("source_name") = "<rules>");
    m.def("normal_form", &normal_form);
    m.def("check_local_confluence", &check_local_confluence);

    py::class_<ProjectionMap>(m, "ProjectionMap")
        .def_property_readonly("source",
                               [](const ProjectionMap& p) { return unconst(p.source()); })
        .def_property_readonly("target",
                               [](const ProjectionMap& p) { return unconst(p.target()); })
        .def("image", [](const ProjectionMap& p, const std::string& name) {
            return p.image(p.source()->index_of(name));
        });
    m.def("project", &project);
    m.def("ideal_images", &ideal_images);

    py::class_<ProjectionRecipe>(m, "ProjectionRecipe")
        .def_readonly("substitutions", &ProjectionRecipe::substitutions)
        .def_readonly("map", &ProjectionRecipe::map);
    m.def("parse_projection_recipe", &parse_projection_recipe, py::arg("text"),
          py::arg("source"), py::arg("source_name") = "<map>");

    py::class_<Witness>(m, "Witness")
        .def(py::init<Polynomial, Polynomial, Polynomial, int, int>(), py::arg("x"),
             py::arg("y"), py::arg("z"), py::arg("p"), py::arg("q"))
        .def_readonly("x", &Witness::x)
        .def_readonly("y", &Witness::y)
        .def_readonly("z", &Witness::z)
        .def_readonly("p", &Witness::p)
        .def_readonly("q", &Witness::q);
    m.def("reversed_witness", [](const Witness& w) { return reversed(w); });

    py::class_<WitnessCheck>(m, "WitnessCheck")
        .def_readonly("valid", &WitnessCheck::valid)
        .def_readonly("diagnostic", &WitnessCheck::diagnostic);
    m.def("verify_witness", &verify_witness);
    m.def(
        "search_witness",
        [](const ChekanovDGA& d, int p, int q, std::size_t max_len) {
            return search_witness(d, p, q, max_len);
        },
        py::arg("dga"), py::arg("p"), py::arg("q"), py::arg("max_len"));

    py::class_<RefutationReport>(m, "RefutationReport")
        .def_property_readonly("status",
                               [](const RefutationReport& r) { return to_string(r.status); })
        .def("refuted", &RefutationReport::refuted)
        .def_readonly("reason", &RefutationReport::reason)
        .def_readonly("pairs_checked", &RefutationReport::pairs_checked)
        .def_property_readonly("left_normal_forms",
                               [](const RefutationReport& r) {
                                   std::vector<std::string> out;
                                   for (const Word& w : r.left_words)
                                       out.push_back(r.target->to_string(w));
                                   return out;
                               })
        .def_property_readonly("right_normal_forms", [](const RefutationReport& r) {
            std::vector<std::string> out;
            for (const Word& w : r.right_words) out.push_back(r.target->to_string(w));
            return out;
        });
    m.def(
        "refute_unit_product",
        [](const ChekanovDGA& d, int p, int q, const ProjectionMap& pi, std::size_t max_len) {
            return refute_unit_product(d, p, q, pi, max_len);
        },
        py::arg("dga"), py::arg("p"), py::arg("q"), py::arg("projection"), py::arg("max_len"));

    py::class_<DistinguishReport>(m, "DistinguishReport")
        .def_property_readonly("verdict",
                               [](const DistinguishReport& r) {
                                   return r.verdict == Verdict::nonisomorphic
                                              ? "nonisomorphic"
                                              : "undetermined";
                               })
        .def_property_readonly(
            "witness",
            [](const DistinguishReport& r) -> std::optional<Witness> { return r.witness; })
        .def_readonly("refutation", &DistinguishReport::refutation)
        .def("certificate", [](const DistinguishReport& r) { return format_certificate(r); });
    m.def(
        "distinguish",
        [](const ChekanovDGA& left, const ChekanovDGA& right, int p, int q,
           const ProjectionRecipe& recipe, std::size_t max_len) {
            return distinguish(left, right, p, q, recipe, max_len);
        },
        py::arg("left"), py::arg("right"), py::arg("p"), py::arg("q"), py::arg("recipe"),
        py::arg("max_len") = 9);
    m.def("format_certificate", &format_certificate);

    m.def("k62_text", [] { return std::string(shipped::k62_text()); });
    m.def("k62_projection_text", [] { return std::string(shipped::k62_projection_text()); });
    m.def("unknot_rules_text", [] { return std::string(shipped::unknot_rules_text()); });
    m.def("k62", &shipped::k62);
    m.def("k62_projection", &shipped::k62_projection);
    m.def("unknot_rules", &shipped::unknot_rules);

    m.attr("__version__") = "0.1.0";
}
