#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gn/group.hpp"
#include "gn/report.hpp"
#include "gn/subgroup.hpp"
#include "gn/transfer.hpp"
#include "gn/word.hpp"

namespace py = pybind11;
using namespace gn;

PYBIND11_MODULE(pygn, m) {
  m.doc() = "exact arithmetic, subgroup structure and transfer maps for the "
            "2-group family G(n)";

  py::class_<GroupParams>(m, "GroupParams")
      .def_readonly("n", &GroupParams::n)
      .def_readonly("tau_order", &GroupParams::tau_order)
      .def_readonly("sigma_fold", &GroupParams::sigma_fold)
      .def_readonly("rho_square_b", &GroupParams::rho_square_b)
      .def_readonly("group_order", &GroupParams::group_order)
      .def("__repr__", [](const GroupParams& g) {
        return "GroupParams(n=" + std::to_string(g.n) + ")";
      });

  py::class_<Element>(m, "Element")
      .def(py::init([](int a, int b, int c) {
             return Element{a, b, c};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"))
      .def_readonly("a", &Element::a)
      .def_readonly("b", &Element::b)
      .def_readonly("c", &Element::c)
      .def("__eq__",
           [](const Element& x, const Element& y) { return x == y; })
      .def("__hash__",
           [](const Element& x) {
             return py::hash(py::make_tuple(x.a, x.b, x.c));
           })
      .def("__repr__", [](const Element& x) { return to_string(x); });

  m.def("make_group", &make_group, py::arg("n"));
  m.def("identity", &identity);
  m.def("gen_sigma", &gen_sigma);
  m.def("gen_tau", &gen_tau);
  m.def("gen_rho", &gen_rho);
  m.def("normalize", &normalize, py::arg("g"), py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def("mul", &mul);
  m.def("inv", &inv);
  m.def("power",
        static_cast<Element (*)(const GroupParams&, Element, int64_t)>(
            &gn::pow),
        py::arg("g"), py::arg("x"), py::arg("k"));
  m.def("commutator", &commutator);
  m.def("conjugate", &conjugate);
  m.def("element_order", &element_order);
  m.def("enumerate_elements", &enumerate_elements);

  py::class_<CheckItem>(m, "CheckItem")
      .def_readonly("name", &CheckItem::name)
      .def_readonly("pass_", &CheckItem::pass)
      .def_readonly("detail", &CheckItem::detail);
  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("items", &CheckReport::items)
      .def("all_pass", &CheckReport::all_pass);
  m.def("check_presentation", &check_presentation);

  py::class_<Subgroup>(m, "Subgroup")
      .def_readonly("generators", &Subgroup::generators)
      .def_readonly("elements", &Subgroup::elements)
      .def_readonly("index", &Subgroup::index)
      .def("order", &Subgroup::order)
      .def("contains", &Subgroup::contains);
  m.def("closure", &closure);
  m.def("trivial_subgroup", &trivial_subgroup);
  m.def("full_group", &full_group);
  m.def("is_normal", &is_normal);
  m.def("same_subgroup", &same_subgroup);
  m.def("subgroup_contains", &subgroup_contains);
  m.def("derived_subgroup",
        py::overload_cast<const GroupParams&, const Subgroup&>(
            &derived_subgroup));
  m.def("derived_subgroup",
        py::overload_cast<const GroupParams&>(&derived_subgroup));

  py::class_<AbelianType>(m, "AbelianType")
      .def_readonly("exps", &AbelianType::exps)
      .def("__eq__", [](const AbelianType& x,
                        const AbelianType& y) { return x == y; })
      .def("__repr__", &AbelianType::to_string);
  py::class_<Quotient>(m, "Quotient")
      .def_readonly("normal_elements", &Quotient::normal_elements)
      .def_readonly("reps", &Quotient::reps)
      .def("order", &Quotient::order)
      .def("rep", &Quotient::rep)
      .def("mul_coset", &Quotient::mul_coset);
  m.def("quotient", &quotient);
  m.def("abelian_type",
        py::overload_cast<const GroupParams&, const Subgroup&>(&abelian_type));
  m.def("abelian_type",
        py::overload_cast<const GroupParams&, const Quotient&>(&abelian_type));
  m.def("abelianization", &abelianization);

  py::class_<LabeledSubgroup>(m, "LabeledSubgroup")
      .def_readonly("label", &LabeledSubgroup::label)
      .def_readonly("subgroup", &LabeledSubgroup::subgroup);
  m.def("maximal_subgroups", &maximal_subgroups);
  m.def("index4_subgroups_above_derived", &index4_subgroups_above_derived);

  py::class_<IndexSubgroups>(m, "IndexSubgroups")
      .def_readonly("containing_derived", &IndexSubgroups::containing_derived)
      .def_readonly("others", &IndexSubgroups::others)
      .def("total", &IndexSubgroups::total);
  m.def("all_subgroups_of_index", &all_subgroups_of_index);

  py::class_<SeriesReport>(m, "SeriesReport")
      .def_readonly("gamma", &SeriesReport::gamma)
      .def_readonly("nilpotency_class", &SeriesReport::nilpotency_class)
      .def_readonly("coclass", &SeriesReport::coclass);
  m.def("lower_central_series", &lower_central_series);
  m.def("verify_tables",
        py::overload_cast<const GroupParams&>(&verify_tables));

  py::class_<Coord>(m, "Coord")
      .def(py::init<int, int, int>(), py::arg("eps_sigma"),
           py::arg("eps_tau"), py::arg("eps_rho"))
      .def_property_readonly("eps_sigma", &Coord::eps_sigma)
      .def_property_readonly("eps_tau", &Coord::eps_tau)
      .def_property_readonly("eps_rho", &Coord::eps_rho)
      .def("__eq__", [](Coord x, Coord y) { return x == y; })
      .def("__add__", [](Coord x, Coord y) { return x + y; })
      .def("__repr__", [](Coord v) {
        return "Coord(" + std::to_string(v.eps_sigma()) + ", " +
               std::to_string(v.eps_tau()) + ", " +
               std::to_string(v.eps_rho()) + ")";
      });
  m.def("coord_of", &coord_of);
  m.def("coord_lift", &coord_lift);

  m.def("coset_transversal", &coset_transversal);
  m.def("random_coset_transversal", &random_coset_transversal);
  m.def("transfer_eq2",
        py::overload_cast<const GroupParams&, const Subgroup&, Element>(
            &transfer_eq2));
  m.def("transfer_transversal",
        py::overload_cast<const GroupParams&, const Subgroup&, Element>(
            &transfer_transversal));
  m.def("transfer_closed_form",
        py::overload_cast<const GroupParams&, const Subgroup&, Element>(
            &transfer_closed_form));

  py::class_<KernelSubspace>(m, "KernelSubspace")
      .def_readonly("basis", &KernelSubspace::basis)
      .def_readonly("members", &KernelSubspace::members)
      .def("size", &KernelSubspace::size)
      .def("contains", &KernelSubspace::contains);
  m.def("span_of", &span_of);
  m.def("transfer_kernel",
        py::overload_cast<const GroupParams&, const Subgroup&>(
            &transfer_kernel));
  m.def("verify_transfer_kernels", &verify_transfer_kernels);

  py::class_<CapitulationView>(m, "CapitulationView")
      .def_readonly("labels", &CapitulationView::labels)
      .def_readonly("summary", &CapitulationView::summary);
  m.def("capitulation_view", &capitulation_view);

  py::class_<WordFactor>(m, "WordFactor")
      .def_readonly("gen", &WordFactor::gen)
      .def_readonly("exp", &WordFactor::exp);
  py::class_<ElementWord>(m, "ElementWord")
      .def_readonly("factors", &ElementWord::factors);
  m.def("parse_element_word", &parse_element_word);
  m.def("render_word", &render_word);
  m.def("eval_word", &eval_word);

  m.def("report_json", [](int n) {
    return report_to_json(build_report(make_group(n)));
  });
  m.def("report_markdown", [](int n) {
    return report_to_markdown(build_report(make_group(n)));
  });
  m.def("verify", [](int n) {
    return run_verification(make_group(n)).all_pass();
  });

  py::register_exception<WordParseError>(m, "WordParseError",
                                         PyExc_ValueError);
}
