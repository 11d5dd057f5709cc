#include <optional>
#include <string>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cissa/decompose.hpp"
#include "cissa/errors.hpp"
#include "cissa/extension.hpp"
#include "cissa/grouping.hpp"
#include "cissa/io.hpp"
#include "cissa/version.hpp"

namespace py = pybind11;

namespace {

cissa::ExtensionMode make_mode(const std::string& name, std::optional<int> ar_order) {
    if (name == "ar") {
        return cissa::ExtensionMode::ar(ar_order);
    }
    if (name == "mirror") {
        return cissa::ExtensionMode::mirror();
    }
    if (name == "none") {
        return cissa::ExtensionMode::none();
    }
    throw cissa::ParameterError("unknown extension mode '" + name +
                                "' (want ar|mirror|none)");
}

std::string mode_name(const cissa::ExtensionMode& mode) {
    switch (mode.kind) {
    case cissa::ExtensionKind::Ar:
        return "ar";
    case cissa::ExtensionKind::Mirror:
        return "mirror";
    case cissa::ExtensionKind::None:
        return "none";
    }
    return "ar";
}

} // namespace

PYBIND11_MODULE(_cissa, m) {
    m.doc() = "Circulant singular spectrum analysis: exact frequency decomposition "
              "and signal grouping for univariate time series";

    py::register_exception<cissa::ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<cissa::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<cissa::NumericError>(m, "NumericError", PyExc_ArithmeticError);

    py::class_<cissa::Decomposition>(m, "Decomposition")
        .def_property_readonly("Z", [](const cissa::Decomposition& d) { return d.Z; })
        .def_property_readonly("psd",
                               [](const cissa::Decomposition& d) { return d.psd.lambda; })
        .def_property_readonly("L", [](const cissa::Decomposition& d) { return d.L; })
        .def_property_readonly("F", &cissa::Decomposition::F)
        .def_property_readonly("T", &cissa::Decomposition::T)
        .def_property_readonly(
            "extension", [](const cissa::Decomposition& d) { return mode_name(d.mode); })
        .def("__repr__", [](const cissa::Decomposition& d) {
            return "<cissa.Decomposition T=" + std::to_string(d.T()) +
                   " L=" + std::to_string(d.L) + " F=" + std::to_string(d.F()) + ">";
        });

    py::class_<cissa::GroupingResult>(m, "GroupingResult")
        .def_property_readonly("rc", [](const cissa::GroupingResult& g) { return g.rc; })
        .def_property_readonly("sh", [](const cissa::GroupingResult& g) { return g.sh; })
        .def_property_readonly("kg", [](const cissa::GroupingResult& g) { return g.kg; })
        .def_property_readonly("names",
                               [](const cissa::GroupingResult& g) { return g.names; });

    m.def(
        "cissa",
        [](const Eigen::VectorXd& x, Eigen::Index L, const std::string& extension,
           std::optional<int> ar_order) {
            return cissa::cissa(x, L, make_mode(extension, ar_order));
        },
        py::arg("x"), py::arg("L"), py::arg("extension") = "ar",
        py::arg("ar_order") = std::nullopt,
        "Decompose a series into components by frequency. Returns a Decomposition "
        "whose Z columns sum to the input series.");

    m.def(
        "group",
        [](const cissa::Decomposition& dec, const std::string& spec) {
            return cissa::group(dec, cissa::parse_group_spec(spec));
        },
        py::arg("decomposition"), py::arg("spec"),
        "Group components per a spec string: economic:12, manual:[[21],[3,4]], "
        "share:0.80, or percentile:0.95.");

    m.def(
        "economic_bands",
        [](Eigen::Index L, int per_year) {
            const auto bands = cissa::economic_bands(L, per_year);
            return py::make_tuple(bands.trend, bands.cycle, bands.seasonal);
        },
        py::arg("L"), py::arg("per_year"),
        "Trend, business-cycle, and seasonal index sets (1-based) for the grid of L.");

    m.def(
        "extend",
        [](const Eigen::VectorXd& x, Eigen::Index L, const std::string& extension,
           std::optional<int> ar_order) {
            return cissa::extend(x, L, make_mode(extension, ar_order)).values;
        },
        py::arg("x"), py::arg("L"), py::arg("extension") = "ar",
        py::arg("ar_order") = std::nullopt,
        "Extend a series by L samples per side (AR forecast/backcast or mirroring).");

    m.def(
        "shares",
        [](const Eigen::VectorXd& lambda) {
            return cissa::shares(cissa::PsdVector{lambda}).s;
        },
        py::arg("psd"),
        "Per-frequency share of total eigenvalue mass (length floor(L/2)+1).");

    m.attr("__version__") = cissa::kVersion;
}
