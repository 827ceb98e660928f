#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regula/bounds.hpp"
#include "regula/classes.hpp"
#include "regula/constructors.hpp"
#include "regula/error.hpp"
#include "regula/expr.hpp"
#include "regula/numbers.hpp"
#include "regula/radicals.hpp"
#include "regula/verify.hpp"
#include "regula/version.hpp"

namespace py = pybind11;
using namespace regula;

namespace {

py::int_ big(const BigInt& v) { return py::int_(py::str(v.str())); }

std::vector<std::string> cycle_strings(const PermGroup& g) {
    std::vector<std::string> out;
    for (const auto& x : g.generators()) out.push_back(x.to_cycle_string());
    return out;
}

CoreKind core_kind(const std::string& name) {
    if (name == "p") return CoreKind::p_core;
    if (name == "p_prime") return CoreKind::p_prime_core;
    if (name == "solvable") return CoreKind::solvable_radical;
    throw InvalidArgument("core kind must be 'p', 'p_prime' or 'solvable'");
}

}  // namespace

PYBIND11_MODULE(_regula, m) {
    m.doc() = "p-regular class counts and structural subgroups of permutation groups";
    m.attr("__version__") = std::string(kVersion);

    auto base = py::register_exception<Error>(m, "RegulaError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<UnknownName>(m, "UnknownName", base.ptr());
    py::register_exception<NotNormal>(m, "NotNormal", base.ptr());

    py::class_<PermGroup>(m, "Group")
        .def_property_readonly("order", [](const PermGroup& g) { return big(g.order()); })
        .def_property_readonly("degree", &PermGroup::degree)
        .def_property_readonly("generators", &cycle_strings)
        .def("contains",
             [](const PermGroup& g, const std::string& cycles) {
                 return g.contains(Permutation::from_cycles(cycles, g.degree()));
             })
        .def("__repr__", [](const PermGroup& g) {
            return "<Group of order " + g.order().str() + " on " + std::to_string(g.degree()) + " points>";
        });

    m.def("group", [](const std::string& expr) { return evaluate(expr); }, py::arg("expr"),
          "Build the permutation group named by a group expression.");
    m.def("known_group_names", &known_group_names);
    m.def("canonical", [](const std::string& expr) { return to_string(parse_group_expr(expr)); }, py::arg("expr"));
    m.def("from_cycles",
          [](const std::vector<std::string>& gens, std::size_t degree) {
              std::vector<Permutation> perms;
              for (const auto& g : gens) perms.push_back(Permutation::from_cycles(g, degree));
              return PermGroup::build(std::move(perms));
          },
          py::arg("generators"), py::arg("degree"));

    m.def("_classes_json",
          [](const PermGroup& g, const std::string& descriptor) {
              return to_json(conjugacy_classes(g), descriptor).dump();
          });
    m.def("class_counts",
          [](const PermGroup& g, std::uint64_t p) {
              const auto c = class_counts(g, p);
              return py::dict(py::arg("p") = c.p, py::arg("k_total") = c.k_total,
                              py::arg("k_regular") = c.k_regular, py::arg("k_singular") = c.k_singular);
          },
          py::arg("group"), py::arg("p"));
    m.def("fused_counts",
          [](const PermGroup& g, const PermGroup& n, std::uint64_t p) {
              const auto c = fused_counts(g, n, p);
              return py::dict(py::arg("p") = c.p, py::arg("k_total") = c.k_total,
                              py::arg("k_regular") = c.k_regular, py::arg("k_singular") = c.k_singular);
          },
          py::arg("group"), py::arg("normal"), py::arg("p"));
    m.def("singular_element_count",
          [](const PermGroup& g, std::uint64_t p) { return singular_element_count(g, p); }, py::arg("group"),
          py::arg("p"));
    m.def("core",
          [](const PermGroup& g, const std::string& kind, std::uint64_t p) { return core(g, core_kind(kind), p); },
          py::arg("group"), py::arg("kind"), py::arg("p") = 0);
    m.def("fitting", [](const PermGroup& g) { return fitting(g); }, py::arg("group"));
    m.def("derived_length", &derived_length, py::arg("group"));
    m.def("quotient",
          [](const PermGroup& g, const PermGroup& n) { return quotient(g, n, default_caps().index_cap); },
          py::arg("group"), py::arg("normal"));

    m.def("landau_quantity",
          [](std::uint64_t r, std::uint64_t a, std::uint64_t p) {
              const auto q = landau_quantity(r, a, p);
              return py::make_tuple(big(boost::multiprecision::numerator(q)),
                                    big(boost::multiprecision::denominator(q)));
          },
          py::arg("r"), py::arg("a"), py::arg("p"));
    m.def("zsigmondy_primes",
          [](std::uint64_t r, std::uint64_t b) {
              py::list out;
              for (const auto& z : zsigmondy_primes(r, b)) out.append(big(z));
              return out;
          },
          py::arg("r"), py::arg("b"));
    m.def("prime_family",
          [](const std::string& kind, std::uint64_t bound) {
              return prime_family(prime_family_from_string(kind), bound);
          },
          py::arg("kind"), py::arg("bound"));
    m.def("psl2_candidate_scan", &psl2_candidate_scan, py::arg("bound"));
    m.def("coxeter_number", &coxeter_number, py::arg("family"), py::arg("rank"));
    m.def("bound",
          [](const std::string& what, const std::string& series, unsigned n, std::uint64_t q, std::uint64_t p,
             double a) {
              BoundParams params{n, q};
              params.A = a;
              const auto s = bound_series_from_string(series);
              if (what == "regular_classes") return regular_class_lower_bound(s, params);
              if (what == "min_centralizer") return min_centralizer_lower_bound(s, params);
              if (what == "singular_proportion") return singular_proportion_lower_bound(s, params, p);
              if (what == "regular_proportion") return regular_proportion_lower_bound(s, params);
              throw InvalidArgument("unknown bound " + what);
          },
          py::arg("what"), py::arg("series"), py::arg("n"), py::arg("q"), py::arg("p") = 0, py::arg("A") = 1.0);

    m.def("suite_names", &suite_names);
    m.def("_run_suite_json", [](const std::string& name) {
        const auto report = run_suite(name);
        return py::make_tuple(to_json(report).dump(), report.ok());
    });
}
