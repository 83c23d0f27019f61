// Python bindings for the contextua core: state construction, bench
// evaluation, correlations, the S quantity and bound audit, and the
// operator contradiction report.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contextua/bench.hpp"
#include "contextua/chsh.hpp"
#include "contextua/kochen_specker.hpp"
#include "contextua/measurement.hpp"
#include "contextua/states.hpp"

namespace py = pybind11;
using namespace contextua;

namespace {

std::vector<cx> amplitudes_of(const BeamState& s) { return s.amplitudes.c; }

BeamState make_state(const std::vector<cx>& amplitudes, double intensity) {
    return BeamState(CVec(amplitudes), intensity);
}

}  // namespace

PYBIND11_MODULE(contextua, m) {
    m.doc() = "classical path/polarization beam simulator";

    py::register_exception<ParseError>(m, "BenchParseError");

    py::enum_<BellKind>(m, "BellKind")
        .value("PHI_PLUS", BellKind::PhiPlus)
        .value("PHI_MINUS", BellKind::PhiMinus)
        .value("PSI_PLUS", BellKind::PsiPlus)
        .value("PSI_MINUS", BellKind::PsiMinus);

    py::class_<BeamState>(m, "BeamState")
        .def(py::init(&make_state), py::arg("amplitudes"), py::arg("intensity") = 1.0)
        .def_property_readonly("amplitudes", &amplitudes_of)
        .def_readonly("intensity", &BeamState::intensity)
        .def("norm", [](const BeamState& s) { return s.amplitudes.norm(); })
        .def("to_json", [](const BeamState& s) { return state_to_json(s); })
        .def("__repr__", [](const BeamState& s) { return state_to_json(s); });

    m.def(
        "product_state",
        [](double alpha, double beta, double gamma, double delta, double intensity) {
            return product_state(ProductStateParams(alpha, beta, gamma, delta), intensity);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"),
        py::arg("intensity") = 1.0);
    m.def("bell_state", &bell_state, py::arg("kind"), py::arg("intensity") = 1.0);
    m.def("schmidt_separable", &schmidt_separable, py::arg("state"), py::arg("tol") = 1e-12);

    m.def(
        "correlation_direct",
        [](const BeamState& s, double theta, double phi) {
            return correlation_direct(s, AnalyzerAngles{theta, phi});
        },
        py::arg("state"), py::arg("theta"), py::arg("phi"));
    m.def(
        "intensity_quad",
        [](const BeamState& s, double theta, double phi) {
            const IntensityQuad q = intensity_quad(s, AnalyzerAngles{theta, phi});
            return py::make_tuple(q.i_00, q.i_pp, q.i_p0, q.i_0p);
        },
        py::arg("state"), py::arg("theta"), py::arg("phi"));
    m.def(
        "correlation_from_intensities",
        [](double i00, double ipp, double ip0, double i0p) {
            return correlation_from_intensities(IntensityQuad{i00, ipp, ip0, i0p});
        },
        py::arg("i00"), py::arg("ipp"), py::arg("ip0"), py::arg("i0p"));

    py::class_<ChshResult>(m, "ChshResult")
        .def_readonly("s_value", &ChshResult::s_value)
        .def_readonly("e11", &ChshResult::e11)
        .def_readonly("e12", &ChshResult::e12)
        .def_readonly("e21", &ChshResult::e21)
        .def_readonly("e22", &ChshResult::e22)
        .def_readonly("violates_bound", &ChshResult::violates_bound)
        .def("to_json", [](const ChshResult& r) { return r.to_json(); });

    m.def(
        "chsh_value",
        [](const BeamState& s, double t1, double t2, double f1, double f2) {
            return chsh_value(s, AngleSet{t1, t2, f1, f2});
        },
        py::arg("state"), py::arg("theta1"), py::arg("theta2"), py::arg("phi1"), py::arg("phi2"));

    py::class_<BoundSampleReport>(m, "BoundSampleReport")
        .def_readonly("samples", &BoundSampleReport::samples)
        .def_readonly("seed", &BoundSampleReport::seed)
        .def_readonly("max_abs_s", &BoundSampleReport::max_abs_s)
        .def_readonly("any_violation", &BoundSampleReport::any_violation)
        .def("to_json", [](const BoundSampleReport& r) { return r.to_json(); });

    m.def("product_bound_sample", &product_bound_sample, py::arg("n"), py::arg("seed"));
    m.def(
        "product_bound_ascend",
        [](double alpha, double beta, double gamma, double delta, double t1, double t2, double f1,
           double f2, double tol) {
            return product_bound_ascend(ProductStateParams(alpha, beta, gamma, delta),
                                        AngleSet{t1, t2, f1, f2}, tol);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"), py::arg("theta1"),
        py::arg("theta2"), py::arg("phi1"), py::arg("phi2"), py::arg("tol") = 1e-9);

    m.def(
        "max_violation_search",
        [](const BeamState& s, double tol) {
            const SearchResult r = max_violation_search(s, tol);
            return py::make_tuple(
                py::make_tuple(r.angles.theta1, r.angles.theta2, r.angles.phi1, r.angles.phi2),
                r.s_value);
        },
        py::arg("state"), py::arg("tol") = 1e-9);

    m.def(
        "violation_scan_csv",
        [](BellKind kind, int grid, const std::string& mode) {
            const ScanMode sm = (mode == "full") ? ScanMode::FullGrid : ScanMode::Slice;
            return scan_to_csv(violation_scan(kind, grid, sm));
        },
        py::arg("kind"), py::arg("grid"), py::arg("mode") = "slice");

    m.def("ks_report_json", []() { return eigen_verify_default().to_json(); });
    m.def("ks_contradiction", []() { return eigen_verify_default().contradiction; });
    m.def("ks_commutation_table", []() {
        const auto table = commutation_audit(ks_operators());
        std::vector<std::vector<bool>> out;
        for (const auto& row : table) out.emplace_back(row.begin(), row.end());
        return out;
    });

    m.def("bench_evaluate", [](const std::string& text) { return evaluate(parse(text)); },
          py::arg("text"));
    m.def("bench_format", [](const std::string& text) { return format(parse(text)); },
          py::arg("text"));
}
