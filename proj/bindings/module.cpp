// Python module exposing the main operations: series arithmetic, the fitted
// generating forms, BPS tables, the mirror pipeline, lattice counts, Picard
// ranks and the verification suite. Exact values cross the boundary as
// python ints or as rational strings "num/den".

#include <nlk3/bridge.hpp>
#include <nlk3/lattice.hpp>
#include <nlk3/mirror.hpp>
#include <nlk3/modforms.hpp>
#include <nlk3/picrank.hpp>
#include <nlk3/qseries.hpp>
#include <nlk3/verify.hpp>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nlk3;

namespace {

py::object py_int(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object py_rat(const Rat& v) {
    if (is_integer(v)) return py_int(v.get_num());
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(rat_str(v));
}

Rat rat_from_py(const py::object& o) { return rat_parse(py::str(o).cast<std::string>()); }

py::list series_terms(const FracSeries& s) {
    py::list out;
    for (const auto& [k, v] : s.terms()) out.append(py::make_tuple(py_rat(s.exponent_at(k)), py_rat(v)));
    return out;
}

}  // namespace

PYBIND11_MODULE(nlk3, m) {
    m.doc() = "exact Noether-Lefschetz / BPS / mirror-symmetry calculator for K3 pencils";

    py::class_<FracSeries>(m, "FracSeries")
        .def_property_readonly("grading", &FracSeries::grading)
        .def_property_readonly("truncation", [](const FracSeries& s) { return py_rat(s.truncation()); })
        .def("coeff", [](const FracSeries& s, const py::object& e) { return py_rat(s.coeff(rat_from_py(e))); })
        .def("terms", &series_terms)
        .def("__repr__", [](const FracSeries& s) {
            return "FracSeries(N=" + std::to_string(s.grading()) + ", terms=" +
                   std::to_string(s.term_count()) + ", trunc=" + rat_str(s.truncation()) + ")";
        });

    m.def(
        "theta_fit",
        [](std::int64_t l, int family, int trunc) {
            std::string name = l == 2   ? "l2-sextic"
                               : l == 4 ? "quartic-pencil"
                               : l == 6 ? (family == 2 ? "l6-family2" : "l6-family1")
                                        : "l8-quadrics";
            FitResult fr = fit(l, preset_family(name).constraints, trunc);
            py::dict out;
            out["family"] = name;
            py::list coeffs;
            for (const auto& c : fr.coefficients) coeffs.append(py_rat(c));
            out["coefficients"] = coeffs;
            out["scalar"] = scalarize(fr.form);
            py::list comps;
            for (const auto& c : fr.form.components) comps.append(c);
            out["components"] = comps;
            return out;
        },
        py::arg("l"), py::arg("family") = 1, py::arg("trunc") = 14,
        "fit the level-l generating form for a preset family");

    m.def(
        "nl_quartic",
        [](int dmax, bool doubled, int trunc) {
            if (trunc == 0) trunc = (dmax * dmax + 8) / 8 + 2;
            FitResult fr = fit(4, preset_family("quartic-pencil").constraints, trunc);
            NLTable t = nl_from_form(fr.form, dmax, doubled ? Rat(2) : Rat(1),
                                     NLProvenance::FittedModular);
            py::list rows;
            for (const auto& [hd, v] : t.values) {
                LatticePair lp{4, hd.first, hd.second};
                rows.append(py::make_tuple(hd.first, hd.second, lp.disc(), lp.coset(), py_rat(v)));
            }
            return rows;
        },
        py::arg("dmax") = 6, py::arg("doubled") = false, py::arg("trunc") = 0,
        "rows (h, d, disc, coset, value) of the quartic-pencil NL table");

    m.def(
        "yau_zaslow",
        [](int hmax) {
            py::list out;
            for (const auto& v : yau_zaslow(hmax)) out.append(py_int(v));
            return out;
        },
        py::arg("hmax"));

    m.def(
        "kkv_table",
        [](int gmax, int hmax) {
            RTable t = kkv_table(gmax, hmax);
            py::dict out;
            for (int g = 0; g <= gmax; ++g)
                for (int h = g; h <= hmax; ++h)
                    out[py::make_tuple(g, h)] = py_int(t.r(g, h));
            return out;
        },
        py::arg("gmax"), py::arg("hmax"));

    m.def(
        "fiber_bps",
        [](int dmax) {
            py::dict out;
            for (const auto& [gd, v] : fiber_bps(dmax).values) out[py::int_(gd.second)] = py_rat(v);
            return out;
        },
        py::arg("dmax"), "genus-0 BPS numbers of the doubled quartic pencil, from mirror symmetry");

    m.def(
        "theta_from_gw",
        [](int dmax) {
            ThetaFit tf = fit_theta_from_gw(fiber_bps(dmax), dmax);
            py::dict out;
            py::list mono;
            Rat scale(Int(1) << 22);
            for (const auto& c : tf.monomial) mono.append(py_rat(c * scale));
            out["monomial_2_22"] = mono;
            out["scalar"] = tf.series;
            return out;
        },
        py::arg("dmax") = 10, "solve for the quartic form from mirror BPS data");

    m.def(
        "predict",
        [](int genus, int dmax, bool single) {
            int trunc = (dmax * dmax + 8) / 8 + 2;
            FitResult fr = fit(4, preset_family("quartic-pencil").constraints, trunc);
            NLTable nl = nl_from_form(fr.form, dmax, single ? Rat(1) : Rat(2),
                                      NLProvenance::FittedModular);
            int hmax = static_cast<int>(h_top(4, dmax));
            RTable r = kkv_table(std::min(genus, hmax), hmax);
            py::dict out;
            for (int d = 1; d <= dmax; ++d)
                out[py::int_(d)] = py_rat(theorem1_genus(genus, nl, r, d));
            return out;
        },
        py::arg("genus"), py::arg("dmax") = 6, py::arg("single") = false);

    m.def(
        "mu",
        [](std::int64_t l, std::int64_t h, std::int64_t d,
           const std::vector<std::int64_t>& gram) {
            if (gram.size() != 3)
                throw std::invalid_argument("gram must be (a, b, c) for [[a,b],[b,c]]");
            return mu(l, h, d, Gram{gram[0], gram[1], gram[2]});
        },
        py::arg("l"), py::arg("h"), py::arg("d"), py::arg("gram"));

    m.def(
        "mu_solutions",
        [](std::int64_t l, std::int64_t h, std::int64_t d,
           const std::vector<std::int64_t>& gram) {
            if (gram.size() != 3)
                throw std::invalid_argument("gram must be (a, b, c) for [[a,b],[b,c]]");
            return mu_solutions(l, h, d, Gram{gram[0], gram[1], gram[2]});
        },
        py::arg("l"), py::arg("h"), py::arg("d"), py::arg("gram"));

    m.def("disc", &disc, py::arg("l"), py::arg("h"), py::arg("d"));
    m.def("castelnuovo_max_square", &castelnuovo_max_square, py::arg("deg"));
    m.def("bruinier_rank", &bruinier_rank, py::arg("l"));
    m.def("gauss_sum", &gauss_sum, py::arg("a"), py::arg("b"));

    m.def(
        "corollary2_degree",
        [](std::int64_t h, std::int64_t d, int trunc) {
            FracSeries theta =
                scalarize(fit(4, preset_family("quartic-pencil").constraints, trunc).form);
            return py_rat(corollary2_degree(h, d, theta));
        },
        py::arg("h"), py::arg("d"), py::arg("trunc") = 16,
        "degree of the projectivized quartic NL divisor");

    m.def(
        "verify",
        [](const std::string& suite) {
            py::list out;
            for (const CheckResult& r : run_suite(suite)) {
                py::dict row;
                row["criterion"] = r.criterion;
                row["name"] = r.name;
                row["pass"] = r.pass;
                row["detail"] = r.detail;
                out.append(row);
            }
            return out;
        },
        py::arg("suite") = "all", "run the verification suite");
}
