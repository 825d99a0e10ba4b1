#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omex/commands.hpp"
#include "omex/eta.hpp"
#include "omex/overpartition.hpp"
#include "omex/smex.hpp"

namespace py = pybind11;

namespace {

py::int_ to_pyint(const omex::Int& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list to_pylist(const std::vector<omex::Int>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_pyint(v));
    return out;
}

py::list series_to_pylist(const omex::TruncatedSeries& s) { return to_pylist(s.coeffs()); }

omex::Overpartition parts_to_overpartition(
    const std::vector<std::tuple<long, long, bool>>& parts) {
    omex::Overpartition pi;
    for (const auto& [value, mult, over] : parts) pi.parts.push_back({value, mult, over});
    return pi;
}

std::vector<std::tuple<long, long, bool>> overpartition_to_parts(const omex::Overpartition& pi) {
    std::vector<std::tuple<long, long, bool>> out;
    for (const auto& p : pi.parts) out.emplace_back(p.value, p.multiplicity, p.overlined_first);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact q-series toolkit for overpartition mex statistics";

    py::register_exception<omex::CapExceeded>(m, "CapExceeded");
    py::register_exception<omex::UnsupportedR>(m, "UnsupportedR");
    py::register_exception<omex::KTooSmall>(m, "KTooSmall");
    py::register_exception<omex::NonUnitConstantTerm>(m, "NonUnitConstantTerm");
    py::register_exception<omex::FractionalLeadingExponent>(m, "FractionalLeadingExponent");

    // series primitives
    m.def(
        "pochhammer",
        [](long a, long b, long T) { return series_to_pylist(omex::pochhammer(a, b, T)); },
        py::arg("a"), py::arg("b"), py::arg("T"),
        "Coefficients of (q^a; q^b)_inf up to order T.");
    m.def(
        "neg_pochhammer",
        [](long a, long b, long T) { return series_to_pylist(omex::neg_pochhammer(a, b, T)); },
        py::arg("a"), py::arg("b"), py::arg("T"),
        "Coefficients of (-q^a; q^b)_inf up to order T.");
    m.def(
        "jacobi_cube", [](long T) { return series_to_pylist(omex::jacobi_cube(T)); },
        py::arg("T"), "Cube of the Euler product via Jacobi's identity.");
    m.def(
        "triangular_gf",
        [](long r, long T) { return series_to_pylist(omex::triangular_gf(r, T)); }, py::arg("r"),
        py::arg("T"), "Indicator series of r-scaled triangular numbers.");

    // closed-route tables
    m.def(
        "overpartition_series",
        [](long T) { return series_to_pylist(omex::overpartition_series(T)); }, py::arg("T"),
        "Overpartition counts pbar(0..T).");
    m.def(
        "smex_series", [](long T) { return series_to_pylist(omex::smex_series(T)); },
        py::arg("T"), "Mex sums over overpartitions, (-q;q)^3 coefficients.");
    m.def(
        "sigma_mex_table",
        [](long r, long max_n, const std::string& route) {
            if (route == "product") return to_pylist(omex::sigma_mex_table(r, max_n).values);
            if (route == "convolution")
                return to_pylist(omex::sigma_mex_by_triangular(r, max_n).values);
            throw std::invalid_argument("route must be 'product' or 'convolution'");
        },
        py::arg("r"), py::arg("max_n"), py::arg("route") = "product",
        "Sum of least r-gaps for n = 0..max_n by the chosen route.");

    // enumeration oracle
    m.def(
        "sigma_mex_oracle",
        [](long n, long r, long cap) { return to_pyint(omex::sigma_mex_oracle(n, r, cap).total); },
        py::arg("n"), py::arg("r") = 1, py::arg("cap") = omex::kDefaultEnumerationCap,
        "Brute-force sum of least r-gaps over all overpartitions of n.");
    m.def(
        "overpartition_count",
        [](long n, long cap) { return to_pyint(omex::overpartition_count(n, cap)); },
        py::arg("n"), py::arg("cap") = omex::kDefaultEnumerationCap);
    m.def(
        "colored_distinct_count",
        [](long n, long cap) { return to_pyint(omex::colored_distinct_count(n, cap)); },
        py::arg("n"), py::arg("cap") = omex::kDefaultEnumerationCap,
        "Partitions of n into distinct three-colored parts, by enumeration.");
    m.def(
        "enumerate_overpartitions",
        [](long n, long cap) {
            std::vector<std::vector<std::tuple<long, long, bool>>> out;
            omex::for_each_overpartition(
                n, [&](const omex::Overpartition& pi) { out.push_back(overpartition_to_parts(pi)); },
                cap);
            return out;
        },
        py::arg("n"), py::arg("cap") = omex::kDefaultEnumerationCap,
        "Overpartitions as lists of (value, multiplicity, overlined) runs.");
    m.def(
        "min_excludant",
        [](const std::vector<std::tuple<long, long, bool>>& parts) {
            return omex::min_excludant(parts_to_overpartition(parts));
        },
        py::arg("parts"));
    m.def(
        "least_r_gap",
        [](const std::vector<std::tuple<long, long, bool>>& parts, long r) {
            return omex::least_r_gap(parts_to_overpartition(parts), r);
        },
        py::arg("parts"), py::arg("r"));
    m.def(
        "staircase_insert",
        [](const std::vector<std::tuple<long, long, bool>>& parts, long r, long k) {
            return overpartition_to_parts(
                omex::staircase_insert(parts_to_overpartition(parts), r, k));
        },
        py::arg("parts"), py::arg("r"), py::arg("k"));

    // parity and asymptotics
    m.def("parity_predict", &omex::parity_predict, py::arg("n"));
    m.def(
        "is_triangular",
        [](long long n) -> py::object {
            const auto j = omex::is_triangular(n);
            return j ? py::cast(*j) : py::none();
        },
        py::arg("n"));
    m.def(
        "asym_points",
        [](long r, const std::vector<long>& points) {
            long max_point = 1;
            for (long n : points) max_point = std::max(max_point, n);
            const omex::SmexTable table = omex::sigma_mex_table(r, max_point);
            py::list out;
            for (long n : points) {
                const omex::AsymptoticPoint p = omex::asym_estimate(table, n);
                py::dict row;
                row["n"] = p.n;
                row["exact"] = to_pyint(p.exact);
                row["estimate"] = static_cast<double>(p.estimate);
                row["ratio"] = static_cast<double>(p.ratio);
                out.append(row);
            }
            return out;
        },
        py::arg("r"), py::arg("points"),
        "Exact value, e^{pi sqrt n}/(8 r n^{3/4}) estimate, and their ratio.");

    // eta quotient certification
    m.def("factor_23", &omex::factor_23, py::arg("r"));
    m.def(
        "star_value",
        [](long r, int k, long d) { return to_pyint(omex::star_value(r, k, d)); }, py::arg("r"),
        py::arg("k"), py::arg("d"));
    m.def("kronecker_symbol", &omex::kronecker_symbol, py::arg("a"), py::arg("n"));
    m.def(
        "eta_certify",
        [](long r, int k) {
            const omex::FrkForm form = omex::build_frk(r, k);
            const auto [cond4, cond5] = omex::ghn_check(form.quotient);
            const omex::CuspReport cusps = omex::cusp_orders(form.quotient);
            py::dict out;
            out["r"] = r;
            out["k"] = k;
            out["level"] = form.quotient.level;
            out["weight"] = form.weight;
            out["exponents"] = form.quotient.exponents;
            out["cond_delta_sum"] = cond4;
            out["cond_codelta_sum"] = cond5;
            py::list cusp_rows;
            for (const auto& entry : cusps.entries) {
                py::dict row;
                row["d"] = entry.d;
                row["order"] = entry.order.str();
                cusp_rows.append(row);
            }
            out["cusps"] = cusp_rows;
            out["holomorphic"] = cusps.holomorphic;
            return out;
        },
        py::arg("r"), py::arg("k"),
        "Level, weight, mod-24 conditions and exact cusp orders of f_{r,k}.");
    m.def(
        "character_chi",
        [](long r, int k, long long d) { return omex::character_chi(omex::build_frk(r, k), d); },
        py::arg("r"), py::arg("k"), py::arg("d"));
    m.def(
        "verify_congruence",
        [](long r, int k, long terms) {
            const omex::CongruenceReport report = omex::verify_congruence(r, k, terms);
            py::dict out;
            out["r"] = report.r;
            out["k"] = report.k;
            out["terms"] = report.terms;
            out["ok"] = report.ok;
            out["first_bad_exponent"] =
                report.first_bad_exponent ? py::cast(*report.first_bad_exponent) : py::none();
            return out;
        },
        py::arg("r"), py::arg("k"), py::arg("terms"),
        "Checks the f_{r,k} expansion against the sigma_r mex table mod 2^k.");

    // density scan
    m.def(
        "density_scan",
        [](long r, int k, long X) {
            omex::StoreOptions store;
            store.no_cache = true;
            const omex::DensityReport report = omex::density_scan(r, k, X, store);
            py::dict out;
            out["r"] = report.r;
            out["k"] = report.k;
            out["x"] = report.X;
            out["nonzero_count"] = report.nonzero_count;
            out["density"] = report.density;
            out["triangular_count"] =
                report.triangular_count ? py::cast(*report.triangular_count) : py::none();
            out["warning"] = report.warning ? py::cast(*report.warning) : py::none();
            return out;
        },
        py::arg("r"), py::arg("k"), py::arg("x"),
        "Counts n <= x with sigma_r mex(n) nonzero mod 2^k (reduced mode).");

    m.def(
        "sigma_mex_mod2k",
        [](long r, int k, long T) { return omex::sigma_mex_values_mod2k(r, k, T); }, py::arg("r"),
        py::arg("k"), py::arg("T"), "Residue table built entirely in reduced mode.");
}
