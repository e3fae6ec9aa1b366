#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cendiv/equivalence.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/factor.hpp"
#include "cendiv/isoclass.hpp"
#include "cendiv/oracle.hpp"
#include "cendiv/permutation.hpp"
#include "cendiv/poly_io.hpp"
#include "cendiv/report.hpp"
#include "cendiv/structure.hpp"

namespace py = pybind11;
using namespace cendiv;

namespace {

py::object json_to_py(const report::json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

Field make_field(std::int64_t p, int k, const py::object& modulus) {
    if (p == 0) return Field::rationals();
    if (modulus.is_none()) return make_extension_field(p, k);
    std::string text = modulus.cast<std::string>();
    for (auto& ch : text)
        if (ch == 't') ch = 'x';
    Poly mod = parse_poly(Field::finite(p), text);
    std::vector<std::int64_t> coeffs;
    for (int i = 0; i <= mod.degree(); ++i)
        coeffs.push_back(std::get<GFVec>(mod.coeff(i))[0]);
    return Field::finite(p, k, std::move(coeffs));
}

MatrixExact make_matrix(const Field& f, const std::vector<std::vector<std::string>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<FieldElem> entries;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw precondition_error("matrix rows must all have length n");
        for (const auto& cell : row) entries.push_back(parse_element(f, cell));
    }
    return MatrixExact::from_entries(f, n, std::move(entries));
}

CycleType make_cycle_type(const py::object& spec) {
    if (py::isinstance<py::str>(spec)) return CycleType::parse(spec.cast<std::string>());
    return CycleType::of(spec.cast<std::vector<std::int64_t>>());
}

} // namespace

PYBIND11_MODULE(_cendiv, m) {
    m.doc() = "exact elementary-divisor profiles and centralizer-algebra equivalence";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<field_mismatch_error>(m, "FieldMismatchError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    py::class_<Field>(m, "Field")
        .def_static("rationals", &Field::rationals)
        .def_static(
            "finite",
            [](std::int64_t p, int k, const py::object& modulus) {
                return make_field(p, k, modulus);
            },
            py::arg("p"), py::arg("k") = 1, py::arg("modulus") = py::none())
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("extension_degree", &Field::extension_degree)
        .def_property_readonly("name", &Field::name)
        .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
        .def("__repr__", [](const Field& f) { return "Field(" + f.name() + ")"; });

    py::class_<Poly>(m, "Poly")
        .def_property_readonly("degree", &Poly::degree)
        .def_property_readonly("field", &Poly::field)
        .def("is_monic", &Poly::is_monic)
        .def("__str__", [](const Poly& p) { return p.to_string(); })
        .def("__repr__",
             [](const Poly& p) { return "Poly(" + p.to_string() + " over " + p.field().name() + ")"; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__pow__", [](const Poly& a, int e) { return a.pow(e); });

    m.def("poly", &parse_poly, py::arg("field"), py::arg("text"),
          "parse a polynomial in the canonical syntax");
    m.def("poly_gcd", &poly_gcd);
    m.def("factor", [](const Poly& f) {
        Factorization fac = factor(f);
        py::list out;
        for (const auto& [base, exp] : fac.factors) out.append(py::make_tuple(base, exp));
        return py::make_tuple(Poly::constant(f.field(), fac.unit), out);
    });
    m.def("squarefree_decompose", &squarefree_decompose);
    m.def("is_irreducible", &is_irreducible);
    m.def("cyclotomic", &cyclotomic, py::arg("d"));
    m.def("residue_iso", &residue_iso);
    m.def("prime_power_iso",
          [](const Poly& b1, int e1, const Poly& b2, int e2) {
              return prime_power_iso(b1, e1, b2, e2);
          });

    py::class_<MatrixExact>(m, "Matrix")
        .def(py::init(&make_matrix), py::arg("field"), py::arg("rows"))
        .def_static("identity", &MatrixExact::identity)
        .def_static("companion", &MatrixExact::companion)
        .def_property_readonly("n", &MatrixExact::dim)
        .def_property_readonly("field", &MatrixExact::field)
        .def("rank", &MatrixExact::rank)
        .def("__eq__", [](const MatrixExact& a, const MatrixExact& b) { return a == b; })
        .def("__mul__", [](const MatrixExact& a, const MatrixExact& b) { return a * b; })
        .def("entry",
             [](const MatrixExact& m, int i, int j) { return m.field().to_string(m.at(i, j)); });

    m.def("char_poly", &char_poly);
    m.def("nullity", &nullity);
    m.def("eval_poly_at_matrix", &eval_poly_at_matrix);

    py::class_<DivisorProfile>(m, "DivisorProfile")
        .def_property_readonly("n", [](const DivisorProfile& p) { return p.n; })
        .def_property_readonly("field", [](const DivisorProfile& p) { return p.field; })
        .def_property_readonly("from_permutation",
                               [](const DivisorProfile& p) { return p.permutation_origin; })
        .def("divisors",
             [](const DivisorProfile& p) {
                 py::list out;
                 for (const auto& d : p.divisors)
                     out.append(py::make_tuple(d.base, d.exponent, d.multiplicity));
                 return out;
             })
        .def("blocks",
             [](const DivisorProfile& p) {
                 py::list out;
                 for (const auto& b : p.blocks)
                     out.append(py::make_tuple(b.base, b.exponent, b.pset, b.reducible));
                 return out;
             })
        .def("maximal_divisors",
             [](const DivisorProfile& p) {
                 py::list out;
                 for (const auto& b : p.blocks) out.append(b.divisor_string());
                 return out;
             })
        .def("to_dict",
             [](const DivisorProfile& p) { return json_to_py(report::profile_to_json(p)); })
        .def("__repr__", [](const DivisorProfile& p) {
            return "DivisorProfile(n=" + std::to_string(p.n) + " over " + p.field.name() + ")";
        });

    m.def("profile", &profile, "elementary-divisor profile of a square matrix");
    m.def("elementary_divisors", [](const MatrixExact& mat) {
        py::list out;
        for (const auto& d : elementary_divisors(mat))
            out.append(py::make_tuple(d.base, d.exponent, d.multiplicity));
        return out;
    });
    m.def(
        "profile_from_divisors",
        [](const Field& f, const std::vector<std::tuple<Poly, int, int>>& divisors) {
            std::vector<DivisorEntry> entries;
            for (const auto& [base, exp, mult] : divisors)
                entries.push_back(DivisorEntry{base, exp, mult});
            return DivisorProfile::from_divisors(f, std::move(entries));
        },
        py::arg("field"), py::arg("divisors"));
    m.def("h_multiset", &h_multiset);
    m.def("j_set", &j_set);
    m.def("centralizer_dim", &centralizer_dim);
    m.def("is_principal_cyclic", &is_principal_cyclic);
    m.def("jordan_profile_nilpotent", &jordan_profile_nilpotent);

    m.def(
        "decide",
        [](const std::string& rel, const DivisorProfile& a, const DivisorProfile& b) {
            auto r = relation_from_string(rel);
            if (!r) throw precondition_error("unknown relation '" + rel + "'");
            return json_to_py(report::verdict_to_json(decide(*r, a, b)));
        },
        py::arg("relation"), py::arg("a"), py::arg("b"));
    m.def("decide_all", [](const DivisorProfile& a, const DivisorProfile& b) {
        py::list out;
        for (const auto& v : decide_all(a, b)) out.append(json_to_py(report::verdict_to_json(v)));
        return out;
    });

    m.def("structure_report", [](const DivisorProfile& p) {
        return json_to_py(report::structure_to_json(structure_report(p)));
    });

    m.def(
        "cycle_type_profile",
        [](const py::object& spec, const Field& f) {
            return cycle_type_profile(make_cycle_type(spec), f);
        },
        py::arg("cycle_type"), py::arg("field"));
    m.def(
        "permutation_matrix",
        [](const py::object& spec, const Field& f) {
            return permutation_matrix(make_cycle_type(spec), f);
        },
        py::arg("cycle_type"), py::arg("field"));
    m.def(
        "p_split",
        [](const py::object& spec, std::int64_t p) {
            auto [reg, sing] = p_split(make_cycle_type(spec), p);
            return py::make_tuple(reg.to_string(), sing.to_string());
        },
        py::arg("cycle_type"), py::arg("p"));
    m.def("rep_finite_perm", [](const py::object& spec, std::int64_t p) {
        return rep_finite_perm(make_cycle_type(spec), p);
    });
    m.def("fixed_point_extension_equivalent", [](const py::object& spec, std::int64_t p) {
        return fixed_point_extension_equivalent(make_cycle_type(spec), p);
    });

    m.def("brute_centralizer_dim", &brute_centralizer_dim);
    m.def(
        "selftest",
        [](int count) {
            py::list out;
            for (const auto& r : run_selftest_corpus(count)) {
                py::dict row;
                row["seed"] = r.seed;
                row["field"] = r.field;
                row["total_degree"] = r.total_degree;
                row["roundtrip"] = r.roundtrip_ok;
                row["centralizer_dim"] = r.dim_ok;
                out.append(row);
            }
            return out;
        },
        py::arg("count") = 20);
}
