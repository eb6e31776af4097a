#include "poslab/dyck.hpp"
#include "poslab/json_io.hpp"
#include "poslab/lediagram.hpp"
#include "poslab/necklace.hpp"
#include "poslab/permutation.hpp"
#include "poslab/plabic.hpp"
#include "poslab/polytope.hpp"
#include "poslab/positroid.hpp"
#include "poslab/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace poslab;

namespace {

py::int_ to_pyint(const Int& v) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(v.str()));
}

DyckPath parse_path(const std::string& steps) { return DyckPath::parse(steps); }

Positroid positroid_of(const std::string& steps) {
    return bases_from_matrix(phi(path_to_matrix(parse_path(steps))));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact toolkit for positroids of rational lattice paths";

    py::register_exception<NotCoprimeError>(m, "NotCoprimeError", PyExc_ValueError);
    py::register_exception<MalformedInputError>(m, "MalformedInputError", PyExc_ValueError);
    py::register_exception<NotRationalDyckError>(m, "NotRationalDyckError", PyExc_ValueError);

    py::class_<DyckPath>(m, "DyckPath")
        .def(py::init(&parse_path), py::arg("steps"))
        .def_property_readonly("m", &DyckPath::east)
        .def_property_readonly("d", &DyckPath::north)
        .def_property_readonly("steps", &DyckPath::steps)
        .def("__repr__", [](const DyckPath& p) { return "DyckPath('" + p.steps() + "')"; })
        .def("__eq__", [](const DyckPath& a, const DyckPath& b) { return a == b; });

    m.def("enumerate_paths", [](int mm, int dd) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_paths(mm, dd)) out.push_back(p.steps());
        return out;
    });
    m.def("count_formula", [](int mm, int dd) { return to_pyint(count_formula(mm, dd)); });
    m.def("count_bizley", [](int a, int b, int N) {
        py::list out;
        for (const auto& v : count_bizley(a, b, N)) out.append(to_pyint(v));
        return out;
    });

    m.def("path_to_matrix",
          [](const std::string& s) { return path_to_matrix(parse_path(s)).rows(); });
    m.def("matrix_to_path", [](int d, int mm, const std::vector<std::vector<int>>& rows) {
        return matrix_to_path(DyckMatrix(d, mm, rows)).steps();
    });
    m.def("phi", [](const std::string& s) { return phi(path_to_matrix(parse_path(s))).rows(); });
    m.def("column_profile", [](const std::string& s) {
        ColumnProfile prof = column_profile(phi(path_to_matrix(parse_path(s))));
        py::dict out;
        out["weights"] = prof.weights;
        out["principal"] = prof.principal;
        out["complement"] = prof.complement;
        return out;
    });

    m.def("det_exact", [](const std::vector<std::vector<long long>>& rows) {
        IntMat M(static_cast<int>(rows.size()),
                 rows.empty() ? 0 : static_cast<int>(rows.front().size()));
        for (size_t i = 0; i < rows.size(); ++i) {
            for (size_t j = 0; j < rows[i].size(); ++j) {
                M.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = rows[i][j];
            }
        }
        return to_pyint(det_exact(M));
    });

    m.def("bases", [](const std::string& s) { return positroid_of(s).bases(); });
    m.def("is_connected",
          [](const std::string& s) { return is_connected(positroid_of(s)); });

    m.def("necklace", [](const std::string& s) {
        return necklace_from_bases(positroid_of(s)).entries();
    });
    m.def("necklace_explicit", [](const std::string& s) {
        return necklace_explicit(column_profile(phi(path_to_matrix(parse_path(s))))).entries();
    });
    m.def("bases_from_necklace", [](int n, int d, const std::vector<std::vector<int>>& entries) {
        return bases_from_necklace(GrassmannNecklace(n, d, entries)).bases();
    });

    m.def("southwest_perm",
          [](const std::string& s) { return southwest_perm(parse_path(s)).images(); });
    m.def("southwest_cycle",
          [](const std::string& s) { return southwest_perm(parse_path(s)).cycle_string(); });
    m.def("path_from_perm", [](const std::vector<int>& images, int d) {
        return path_from_perm(DecoratedPermutation(images), d).steps();
    });
    m.def("weak_excedances", [](const std::vector<int>& images) {
        auto s = weak_excedances(DecoratedPermutation(images));
        return std::vector<int>(s.begin(), s.end());
    });

    m.def("le_diagram", [](const std::string& s) { return le_from_path(parse_path(s)).fill(); });
    m.def("le_dimension",
          [](const std::string& s) { return cell_dimension(le_from_path(parse_path(s))); });
    m.def("perm_from_le", [](int d, int mm, const std::vector<int>& shape,
                             const std::vector<std::string>& fill) {
        return perm_from_le(LeDiagram(d, mm, shape, fill)).images();
    });

    m.def("plabic_json",
          [](const std::string& s) { return to_json(build_plabic(parse_path(s))).dump(); });
    m.def("trip_cycle", [](const std::string& s) {
        return trip_permutation(build_plabic(parse_path(s))).cycle_string();
    });
    m.def("orientation_sources", [](const std::string& s) {
        std::vector<std::vector<int>> out;
        for (const auto& o : perfect_orientations(build_plabic(parse_path(s)))) {
            out.push_back(o.boundary_sources);
        }
        return out;
    });

    m.def("polytope_json", [](const std::string& s, const std::string& system) {
        DyckPath p = parse_path(s);
        if (system == "general") {
            return to_json(hrep_general(necklace_from_bases(positroid_of(s)))).dump();
        }
        return to_json(hrep_refined(column_profile(phi(path_to_matrix(p))))).dump();
    });
    m.def("polytope_lattice_points", [](const std::string& s, const std::string& system) {
        DyckPath p = parse_path(s);
        HPolytope H = system == "general"
                          ? hrep_general(necklace_from_bases(positroid_of(s)))
                          : hrep_refined(column_profile(phi(path_to_matrix(p))));
        return zero_one_points(H, p.north());
    });

    m.def(
        "verify_type",
        [](int mm, int dd, int lpMaxN) {
            VerifyOptions options;
            options.lp_max_n = lpMaxN;
            VerifyReport report = verify_type(mm, dd, options);
            py::dict out;
            out["paths_checked"] = report.paths_checked;
            out["failures"] = report.failures;
            out["ok"] = report.ok();
            return out;
        },
        py::arg("m"), py::arg("d"), py::arg("lp_max_n") = 8);
}
