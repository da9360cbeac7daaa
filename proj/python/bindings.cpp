#include <algorithm>
#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freeline/gallery.hpp"
#include "freeline/report.hpp"

namespace py = pybind11;
using namespace freeline;

namespace {

// Documents cross the boundary as JSON text; the Python side decodes them.
Arrangement from_text(const std::string& doc) { return parse_arrangement_text(doc); }

SyzygyOptions syzygy(std::optional<int> cap, bool certified, bool defect) {
    SyzygyOptions o;
    o.cap = cap;
    o.certified = certified;
    o.defect = defect;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact freeness invariants of line arrangements";
    py::register_exception<ArrangementError>(m, "ArrangementError", PyExc_ValueError);
    py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.attr("SCHEMA") = kReportSchema;

    m.def("gallery_names", [] {
        std::vector<std::string> out;
        for (const auto& e : gallery::list()) out.push_back(e.name);
        return out;
    });
    m.def("gallery_document", [](const std::string& name) {
        if (!gallery::find(name)) throw py::key_error(name);
        return arrangement_to_json(gallery::build(name)).dump();
    });
    m.def("normalize", [](const std::string& doc) { return arrangement_to_json(from_text(doc)).dump(); });

    m.def(
        "analyze",
        [](const std::string& doc, std::optional<int> cap, bool certified, bool defect,
           const std::vector<std::string>& theorems, const std::string& name) {
            AnalyzeOptions opts;
            opts.syzygy = syzygy(cap, certified, defect);
            opts.theorems = theorems;
            opts.name = name;
            const auto a = from_text(doc);
            py::gil_scoped_release release;
            return report_to_json(analyze(a, opts)).dump();
        },
        py::arg("document"), py::arg("cap") = py::none(), py::arg("certified") = false, py::arg("defect") = true,
        py::arg("theorems") = std::vector<std::string>{}, py::arg("name") = "input");

    m.def(
        "verify",
        [](const std::string& doc, const std::string& theorem, const std::string& name) {
            if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end())
                throw py::value_error("unknown theorem id: " + theorem);
            VerifyOptions opts;
            opts.name = name;
            const auto a = from_text(doc);
            py::gil_scoped_release release;
            auto out = nlohmann::ordered_json::array();
            for (const auto& r : run_verifier(theorem, a, opts)) out.push_back(case_report_to_json(r));
            return out.dump();
        },
        py::arg("document"), py::arg("theorem"), py::arg("name") = "input");

    m.def("theorem_ids", [] { return theorem_ids(); });

    m.def("weak_combinatorics", [](const std::string& doc) {
        const auto wc = weak_combinatorics(from_text(doc));
        return py::make_tuple(wc.d, wc.m, wc.n);
    });
    m.def("tjurina", [](const std::string& doc) { return tjurina(weak_combinatorics(from_text(doc))); });
    m.def("tau_max", &tau_max, py::arg("d"), py::arg("d1"));
    m.def(
        "degree_bounds",
        [](int m, int eps) {
            const auto b = degree_bounds(m, eps);
            return py::make_tuple(b.d_min, b.d_max);
        },
        py::arg("m"), py::arg("eps"));
}
