// Python bindings for the main operations. Polynomials cross the boundary
// as their inline expression strings; exact coefficients stay exact on the
// C++ side and are rendered as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nonassoc/catalog.hpp"
#include "nonassoc/concrete.hpp"
#include "nonassoc/io.hpp"
#include "nonassoc/newident.hpp"
#include "nonassoc/repro.hpp"
#include "nonassoc/split.hpp"

namespace py = pybind11;
using namespace nonassoc;

namespace {

OpAlphabet alphabet_of(const std::vector<std::string>& ops) { return OpAlphabet(ops); }

Polynomial parse_over(const std::string& expr, const OpAlphabet& alpha) {
    return to_polynomial(parse_poly_expr(expr, alpha));
}

struct PyReport {
    int degree;
    std::size_t block_rows, block_cols, generator_count, module_rank;
    std::vector<std::string> minimal_generators;
};

PyReport report_of(const IdentitySystem& sys, const ExpansionRule& rule, int degree,
                   bool rational) {
    PyReport out;
    auto fill = [&](auto rep) {
        out.degree = rep.degree;
        out.block_rows = rep.block_rows;
        out.block_cols = rep.block_cols;
        out.generator_count = rep.generator_count;
        out.module_rank = rep.module.rank();
        for (const auto& g : rep.minimal_generators)
            out.minimal_generators.push_back(poly_expr(g.normalized()));
    };
    if (rational)
        fill(find_new_identities<Rat>(sys, rule, degree));
    else
        fill(find_new_identities<Fp101>(sys, rule, degree));
    return out;
}

}  // namespace

PYBIND11_MODULE(_nonassoc, m) {
    m.doc() = "multilinear polynomial identities in free multioperator algebras";

    m.def("assoc_type_count",
          [](int degree, int ops) { return TypeTable::get(degree, ops).count(degree); },
          py::arg("degree"), py::arg("ops"));
    m.def("monomial_count",
          [](int degree, int ops) { return Polynomial::monomial_count(degree, ops); },
          py::arg("degree"), py::arg("ops"));

    m.def("act",
          [](const std::vector<int>& perm, const std::string& expr,
             const std::vector<std::string>& ops) {
              return poly_expr(act(perm, parse_over(expr, alphabet_of(ops))));
          },
          py::arg("perm"), py::arg("poly"), py::arg("ops"));
    m.def("substitute",
          [](const std::string& p, int var, const std::string& q,
             const std::vector<std::string>& ops) {
              OpAlphabet a = alphabet_of(ops);
              return poly_expr(substitute(parse_over(p, a), var, parse_over(q, a)));
          },
          py::arg("poly"), py::arg("var"), py::arg("inner"), py::arg("ops"));
    m.def("polarize",
          [](const std::string& expr, const std::vector<std::string>& ops) {
              std::vector<std::string> out;
              for (const auto& p : polarize(parse_poly_expr(expr, alphabet_of(ops))))
                  out.push_back(poly_expr(p));
              return out;
          },
          py::arg("poly"), py::arg("ops"));

    m.def("expand",
          [](const std::string& rule, const std::string& expr) {
              const auto& r = get_rule(rule);
              return poly_expr(expand(r, parse_over(expr, r.source)));
          },
          py::arg("rule"), py::arg("poly"));
    m.def("disuccessor",
          [](const std::string& expr, const std::vector<std::string>& ops) {
              std::vector<std::string> out;
              for (const auto& p : disuccessor(parse_over(expr, alphabet_of(ops))))
                  out.push_back(poly_expr(p));
              return out;
          },
          py::arg("poly"), py::arg("ops"));

    m.def("systems", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog_systems()) names.push_back(e.name);
        return names;
    });
    m.def("rules", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog_rules()) names.push_back(e.name);
        return names;
    });
    m.def("system_identities", [](const std::string& name) {
        std::vector<std::string> out;
        for (const auto& f : get_system(name).identities) out.push_back(poly_expr(f));
        return out;
    });
    m.def("system_ops",
          [](const std::string& name) { return get_system(name).alphabet.names(); });

    m.def("lifting_module_rank",
          [](const std::string& system, int degree, bool rational) {
              const auto& sys = get_system(system);
              return rational ? lifting_module<Rat>(sys, degree).rank()
                              : lifting_module<Fp101>(sys, degree).rank();
          },
          py::arg("system"), py::arg("degree"), py::arg("rational") = false);
    m.def("is_consequence",
          [](const std::string& target, const std::string& system, const std::string& rule,
             bool rational) {
              const auto& sys = get_system(system);
              const ExpansionRule* r = rule.empty() ? nullptr : &get_rule(rule);
              Polynomial t = parse_over(target, r ? r->source : sys.alphabet);
              return rational ? is_consequence<Rat>(t, sys, r)
                              : is_consequence<Fp101>(t, sys, r);
          },
          py::arg("target"), py::arg("system"), py::arg("rule") = std::string(),
          py::arg("rational") = false);

    py::class_<PyReport>(m, "NewIdentityReport")
        .def_readonly("degree", &PyReport::degree)
        .def_readonly("block_rows", &PyReport::block_rows)
        .def_readonly("block_cols", &PyReport::block_cols)
        .def_readonly("generator_count", &PyReport::generator_count)
        .def_readonly("module_rank", &PyReport::module_rank)
        .def_readonly("minimal_generators", &PyReport::minimal_generators);
    m.def("find_new_identities",
          [](const std::string& system, const std::string& rule, int degree, bool rational) {
              return report_of(get_system(system), get_rule(rule), degree, rational);
          },
          py::arg("system"), py::arg("rule"), py::arg("degree"),
          py::arg("rational") = false);

    m.def("rref_rank",
          [](const std::vector<std::vector<std::string>>& rows, bool rational) {
              Mat<Rat> mq(rows.size(), rows.empty() ? 0 : rows[0].size());
              for (std::size_t i = 0; i < rows.size(); ++i)
                  for (std::size_t j = 0; j < rows[i].size(); ++j) {
                      auto v = parse_rat(rows[i][j]);
                      if (!v) throw std::invalid_argument("bad scalar " + rows[i][j]);
                      mq.at(i, j) = *v;
                  }
              if (rational) return rref(std::move(mq)).rank;
              Mat<Fp101> mp(mq.rows(), mq.cols());
              for (std::size_t i = 0; i < mq.rows(); ++i)
                  for (std::size_t j = 0; j < mq.cols(); ++j)
                      mp.at(i, j) = FieldOps<Fp101>::from_rat(mq.at(i, j));
              return rref(std::move(mp)).rank;
          },
          py::arg("rows"), py::arg("rational") = true);

    m.def("repro",
          [](const std::string& field, const std::string& only) {
              FieldChoice f = field == "rational" ? FieldChoice::Rational
                              : field == "both"   ? FieldChoice::Both
                                                  : FieldChoice::P101;
              std::vector<py::dict> out;
              for (const auto& r : run_repro(f, only)) {
                  py::dict d;
                  d["criterion"] = r.criterion;
                  d["name"] = r.name;
                  d["field"] = r.field;
                  d["expected"] = r.expected;
                  d["computed"] = r.computed;
                  d["pass"] = r.pass;
                  d["millis"] = r.millis;
                  out.push_back(std::move(d));
              }
              return out;
          },
          py::arg("field") = "p101", py::arg("only") = std::string());
}
