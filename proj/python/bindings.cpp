#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "goodsemi/catalog.hpp"
#include "goodsemi/duality.hpp"
#include "goodsemi/idealops.hpp"
#include "goodsemi/io.hpp"
#include "goodsemi/metric.hpp"
#include "goodsemi/poincare.hpp"
#include "goodsemi/render.hpp"

namespace py = pybind11;
namespace gs = goodsemi;

namespace {

using Coords = std::vector<gs::Coord>;

gs::Point to_point(const Coords& v) {
    if (v.empty() || v.size() > gs::kMaxDim) throw gs::DimensionMismatch("point needs 1 to " + std::to_string(gs::kMaxDim) + " coordinates");
    return gs::Point(std::span<const gs::Coord>(v));
}

std::vector<gs::Point> to_points(const std::vector<Coords>& v) {
    std::vector<gs::Point> out;
    for (const auto& p : v) out.push_back(to_point(p));
    return out;
}

py::tuple to_tuple(const gs::Point& p) {
    py::tuple t(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) t[i] = p[i];
    return t;
}

py::list to_list(const std::vector<gs::Point>& pts) {
    py::list l;
    for (const auto& p : pts) l.append(to_tuple(p));
    return l;
}

py::dict poly_dict(const gs::Polynomial& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[to_tuple(e)] = c;
    return d;
}

py::dict report_dict(const gs::SymmetryReport& r) {
    py::dict d;
    d["i"] = r.cond_i;
    d["ii"] = r.cond_ii;
    d["iii"] = r.cond_iii;
    d["iv"] = r.cond_iv;
    py::list v;
    for (const auto& x : r.violations)
        v.append(py::make_tuple(x.condition, to_tuple(x.delta), x.axis ? py::cast(*x.axis + 1) : py::none()));
    d["violations"] = v;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Good semigroups of N^s, their ideals, duality and Poincare polynomials";

    static py::exception<gs::Error> error(m, "Error", PyExc_RuntimeError);
    static py::exception<gs::ValidationError> validation_error(m, "ValidationError", error.ptr());
    static py::exception<gs::BudgetExceeded> budget_error(m, "BudgetExceeded", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const gs::ValidationError& e) {
            PyErr_SetString(validation_error.ptr(), e.report().summary().c_str());
        } catch (const gs::BudgetExceeded& e) {
            PyErr_SetString(budget_error.ptr(), e.what());
        } catch (const gs::Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    py::class_<gs::GoodSemigroup>(m, "Semigroup")
        .def(py::init([](const Coords& gamma, const std::vector<Coords>& small) {
                 return gs::GoodSemigroup::from_small(to_point(gamma), to_points(small));
             }),
             py::arg("gamma"), py::arg("small"))
        .def_property_readonly("dim", &gs::GoodSemigroup::dim)
        .def_property_readonly("gamma", [](const gs::GoodSemigroup& s) { return to_tuple(s.gamma()); })
        .def_property_readonly("small", [](const gs::GoodSemigroup& s) { return to_list(s.small()); })
        .def("__contains__", [](const gs::GoodSemigroup& s, const Coords& p) { return s.contains(to_point(p)); })
        .def("whole", &gs::Ideal::whole, "S as an ideal of itself")
        .def("canonical_ideal", &gs::normalized_canonical)
        .def("poincare", [](const gs::GoodSemigroup& s) { return poly_dict(gs::poincare_polynomial(gs::Ideal::whole(s))); })
        .def("to_json", [](const gs::GoodSemigroup& s) { return gs::io::print(gs::io::to_json(s)); })
        .def(py::self == py::self)
        .def("__repr__", [](const gs::GoodSemigroup& s) {
            return "Semigroup(gamma=" + s.gamma().str() + ", small=" + std::to_string(s.small().size()) + " points)";
        });

    py::class_<gs::Ideal>(m, "Ideal")
        .def(py::init([](const gs::GoodSemigroup& parent, const Coords& mu, const Coords& gamma,
                         const std::vector<Coords>& small) {
                 return gs::Ideal::from_small(parent, to_point(mu), to_point(gamma), to_points(small));
             }),
             py::arg("parent"), py::arg("mu"), py::arg("gamma"), py::arg("small"))
        .def_property_readonly("parent", &gs::Ideal::parent)
        .def_property_readonly("dim", &gs::Ideal::dim)
        .def_property_readonly("mu", [](const gs::Ideal& e) { return to_tuple(e.mu()); })
        .def_property_readonly("gamma", [](const gs::Ideal& e) { return to_tuple(e.gamma()); })
        .def_property_readonly("small", [](const gs::Ideal& e) { return to_list(e.small()); })
        .def_property_readonly("goodness", [](const gs::Ideal& e) { return gs::to_string(e.goodness()); })
        .def("__contains__", [](const gs::Ideal& e, const Coords& p) { return e.contains(to_point(p)); })
        .def("translate", [](const gs::Ideal& e, const Coords& a) { return gs::translate(e, to_point(a)); })
        .def("filtration", [](const gs::Ideal& e, const Coords& a) { return gs::filtration(e, to_point(a)); })
        .def("dual", [](const gs::Ideal& e) { return gs::dual(e.parent(), e); }, "K0 - E")
        .def("poincare", [](const gs::Ideal& e) { return poly_dict(gs::poincare_polynomial(e)); })
        .def("poincare_str", [](const gs::Ideal& e) { return gs::poincare_polynomial(e).str(); })
        .def("to_json", [](const gs::Ideal& e) { return gs::io::print(gs::io::to_json(e)); })
        .def(py::self == py::self)
        .def("__repr__", [](const gs::Ideal& e) {
            return "Ideal(mu=" + e.mu().str() + ", gamma=" + e.gamma().str() + ", small=" +
                   std::to_string(e.small().size()) + " points)";
        });

    m.def("numerical", &gs::numerical, py::arg("generators"));
    m.def("product", &gs::product);
    m.def("difference", &gs::difference, py::arg("e"), py::arg("f"));
    m.def("is_subset", &gs::is_subset);
    m.def("ideal_distance", &gs::ideal_distance, py::arg("outer"), py::arg("inner"));
    m.def(
        "element_distance",
        [](const gs::Ideal& e, const Coords& a, const Coords& b) { return gs::element_distance(e, to_point(a), to_point(b)); },
        py::arg("e"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "filtration_distance",
        [](const gs::Ideal& e, const Coords& a, const Coords& b) {
            return gs::filtration_distance(e, to_point(a), to_point(b));
        },
        py::arg("e"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "delta_nonempty",
        [](const gs::Ideal& e, const Coords& a, std::size_t axis, bool closed) {
            if (axis < 1) throw gs::DomainError("axes are numbered from 1");
            return gs::delta_nonempty(e, to_point(a), axis - 1, closed).nonempty;
        },
        py::arg("e"), py::arg("alpha"), py::arg("axis"), py::arg("closed") = true);
    m.def("is_canonical", &gs::is_canonical);
    m.def("symmetry_report", [](const gs::GoodSemigroup& s, const gs::Ideal& e) { return report_dict(gs::symmetry_report(s, e)); });
    m.def("check_symmetry_theorem", [](const gs::GoodSemigroup& s, const gs::Ideal& e) {
        const auto v = gs::check_symmetry_theorem(s, e);
        py::dict d = report_dict(v.report);
        d["identity_holds"] = v.identity_holds;
        d["p_e"] = poly_dict(v.p_e);
        d["p_dual"] = poly_dict(v.p_dual);
        return d;
    });
    m.def(
        "enumerate_good",
        [](std::size_t s, const Coords& gamma_max) { return gs::enumerate_good(s, to_point(gamma_max), gs::Budget::from_env()); },
        py::arg("s"), py::arg("gamma_max"));
    m.def(
        "enumerate_ideals",
        [](const gs::GoodSemigroup& s, const Coords& lo, const Coords& hi) {
            return gs::enumerate_ideals(s, gs::Box(to_point(lo), to_point(hi)), std::nullopt, gs::Budget::from_env());
        },
        py::arg("semigroup"), py::arg("mu_lo"), py::arg("mu_hi"));
    m.def(
        "search",
        [](std::size_t s, const Coords& gamma_max, const Coords& mu_lo, const Coords& mu_hi, unsigned jobs) {
            gs::HuntParams params;
            params.s = s;
            params.gamma_max = to_point(gamma_max);
            params.mu_box = gs::Box(to_point(mu_lo), to_point(mu_hi));
            params.jobs = jobs;
            params.budget = gs::Budget::from_env();
            py::gil_scoped_release release;
            const auto report = gs::hunt_symmetry(params);
            py::gil_scoped_acquire acquire;
            return gs::io::print(gs::io::report_json(report));
        },
        py::arg("s"), py::arg("gamma_max"), py::arg("mu_lo"), py::arg("mu_hi"), py::arg("jobs") = 1,
        "Runs the symmetry search and returns the report document as text.");
    m.def(
        "loads",
        [](const std::string& text) -> py::object {
            auto doc = gs::io::parse(text);
            switch (doc.kind()) {
                case gs::io::Kind::semigroup: return py::cast(doc.semigroup());
                case gs::io::Kind::ideal: return py::cast(doc.ideal());
                case gs::io::Kind::polynomial: return poly_dict(doc.polynomial());
                case gs::io::Kind::report: return py::module_::import("json").attr("loads")(doc.report().dump());
            }
            return py::none();
        },
        py::arg("text"), "Parses an interchange document.");
    m.def(
        "render",
        [](const py::object& obj, const Coords& window, const std::string& format) {
            const gs::Representation& rep =
                py::isinstance<gs::Ideal>(obj) ? obj.cast<const gs::Ideal&>().rep() : obj.cast<const gs::GoodSemigroup&>().rep();
            if (window.size() != 4) throw gs::DomainError("window is x0, y0, x1, y1");
            const gs::Box box(gs::Point{window[0], window[1]}, gs::Point{window[2], window[3]});
            if (format != "ascii" && format != "svg") throw gs::DomainError("format is ascii or svg");
            return gs::render_staircase(rep, box, format == "svg" ? gs::RenderFormat::svg : gs::RenderFormat::ascii, gs::RenderOptions{});
        },
        py::arg("obj"), py::arg("window"), py::arg("format") = "ascii");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
