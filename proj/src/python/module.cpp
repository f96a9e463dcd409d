#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfano/fano.hpp"
#include "qfano/kostka.hpp"
#include "qfano/qseries.hpp"
#include "qfano/verify.hpp"
#include "qfano/version.hpp"

namespace py = pybind11;
using namespace qfano;

namespace {

py::int_ to_py_int(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list terms_list(const LaurentPoly& p) {
    py::list out;
    for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(e, to_py_int(c)));
    return out;
}

py::list int_list(const std::vector<Int>& values) {
    py::list out;
    for (const Int& v : values) out.append(to_py_int(v));
    return out;
}

HMethod method_from_name(const std::string& name) {
    auto m = parse_h_method(name);
    if (!m) throw std::invalid_argument("unknown h method '" + name + "'");
    return *m;
}

py::list report_list(const std::vector<VerificationReport>& reports) {
    py::list out;
    for (const auto& r : reports) {
        py::dict d;
        d["identity"] = r.identity;
        py::dict params;
        for (const auto& [k, v] : r.params) params[py::str(k)] = v;
        d["params"] = params;
        d["pass"] = r.pass;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(qfano, m) {
    m.doc() = "exact cohomology tables and q-series identity checks for Fano varieties of "
              "k-planes in smooth intersections of two quadrics";
    m.attr("__version__") = kVersion;

    m.def(
        "h_poly",
        [](int n, int mm, const std::string& method) { return h_poly(n, mm, method_from_name(method)).str(); },
        py::arg("n"), py::arg("m"), py::arg("method") = "recursive",
        "h_m^(n)(q) in canonical text form");
    m.def(
        "h_poly_terms",
        [](int n, int mm, const std::string& method) { return terms_list(h_poly(n, mm, method_from_name(method))); },
        py::arg("n"), py::arg("m"), py::arg("method") = "recursive",
        "h_m^(n)(q) as a list of (exponent, coefficient) pairs");
    m.def(
        "p_poly", [](int n, int j) { return p_poly(n, j).str(); }, py::arg("n"), py::arg("j"),
        "multiplicity polynomial P_j^(n)(q)");
    m.def(
        "q_binomial", [](long n, long k, long step) { return q_binomial(n, k, step).str(); },
        py::arg("n"), py::arg("k"), py::arg("step") = 1, "Gaussian binomial in base q^step");
    m.def(
        "ogr_poincare", [](long j, long n) { return ogr_poincare(j, n).str(); }, py::arg("j"),
        py::arg("n"), "Poincare polynomial of OGr(j, 2n)");
    m.def(
        "grassmann_poincare", [](long i, long k) { return grassmann_poincare(i, k).str(); },
        py::arg("i"), py::arg("k"), "Poincare polynomial of Gr(i, k)");
    m.def(
        "s_number", [](int n, int i, int j, int k) { return to_py_int(s_number(n, i, j, k)); },
        py::arg("n"), py::arg("i"), py::arg("j"), py::arg("k"), "multiplicity s^i_jk");
    m.def(
        "stalk_dims",
        [](int n, int i, int j) {
            py::dict out;
            const StalkTable table = stalk_table(n, i, j);
            for (const auto& [deg, dim] : table.dims) out[py::int_(deg)] = to_py_int(dim);
            return out;
        },
        py::arg("n"), py::arg("i"), py::arg("j"),
        "IC stalk dimensions by perverse degree");
    m.def(
        "betti", [](int g, int kplane) { return int_list(betti_via_multiplicities(g, kplane)); },
        py::arg("g"), py::arg("kplane"),
        "Betti numbers of the Fano variety of kplane-planes, multiplicity route");
    m.def(
        "cohomology_betti", [](int g, int i) { return int_list(cohomology_table(g, i).betti); },
        py::arg("g"), py::arg("i"),
        "Betti numbers of F_{g-i}, generating-polynomial route (cross-checked)");
    m.def(
        "decomp_entries",
        [](int g, int i) {
            py::list out;
            const CohomologyTable table = cohomology_table(g, i);
            for (const auto& [kj, v] : table.ncoeffs)
                out.append(py::make_tuple(kj.first, kj.second, to_py_int(v)));
            return out;
        },
        py::arg("g"), py::arg("i"), "nonzero N_i(k,j) as (k, j, N) triples");
    m.def(
        "example_f1_betti", [](int n) { return int_list(example_f1_betti(n)); }, py::arg("n"),
        "closed-form Betti numbers of the Fano variety of lines in P^(2n-1)");
    m.def(
        "n_generating_poly", [](int i, int j) { return n_generating_poly(i, j).str(); },
        py::arg("i"), py::arg("j"));

    m.def("verify_inductive", [](int nmax) { return report_list(check_inductive(nmax)); },
          py::arg("nmax") = 12);
    m.def("verify_h_suite", [](int nmax) { return report_list(check_h_suite(nmax)); },
          py::arg("nmax") = 12);
    m.def("verify_fano_suite", [](int gmax) { return report_list(check_fano_suite(gmax)); },
          py::arg("gmax") = 6);
    m.def("verify_bailey", [](int mm, int n) { return report_list(check_q_bailey_family(mm, n)); },
          py::arg("m"), py::arg("n"));
    m.def("verify_matrix_inversion",
          [](int size, std::int64_t a_exp, std::int64_t q_exp, std::uint64_t seed) {
              return report_list(check_matrix_inversion(size, a_exp, q_exp, seed));
          },
          py::arg("size"), py::arg("a_exp"), py::arg("q_exp") = -2, py::arg("seed") = 1);
    m.def("verify_quad_transform",
          [](int order, std::int64_t d2_exp, std::int64_t r_exp, std::int64_t base_step) {
              return report_list(check_quad_transform(order, d2_exp, r_exp, base_step));
          },
          py::arg("order"), py::arg("d2_exp"), py::arg("r_exp"), py::arg("base_step") = -2);
}
