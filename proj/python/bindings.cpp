#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shrinkcert/report.hpp"
#include "shrinkcert/special_functions.hpp"

namespace py = pybind11;
using namespace shrinkcert;
using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

CompositeSurface parse_surface(const std::string& text) { return surface_from_json(json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "C++ core of shrinkcert; every structured result is returned as a JSON string";
    m.attr("__version__") = version();

    m.def("kummer_m", [](double a, double b, double xi) { return kummer_m(a, b, xi).value; });
    m.def("tricomi_u_half", [](double xi) { return tricomi_u_half(xi).value; });

    m.def("area", [](const std::string& surface) {
        const CompositeSurface s = parse_surface(surface);
        return dump(area_record("area", to_json(s), area(s)));
    }, py::arg("surface_json"));
    m.def("entropy", [](const std::string& surface, int tau_points, int y_points) {
        EntropySearch search;
        search.tau_points = tau_points;
        search.y_points = y_points;
        py::gil_scoped_release release;
        return dump(to_json(entropy(parse_surface(surface), search)));
    }, py::arg("surface_json"), py::arg("tau_points") = 121, py::arg("y_points") = 33);
    m.def("gaussian_volume_ball", [](double R) { return dump(to_json(gaussian_volume_ball(R))); });

    m.def("bound_names", &bound_names);
    m.def("verify_bounds", [](const std::string& name, int resolution) {
        VerifierOptions opt;
        opt.resolution = resolution;
        py::gil_scoped_release release;
        json out = json::array();
        for (const auto& r : verify_bounds(name, opt)) out.push_back(to_json(r));
        return dump(out);
    }, py::arg("name") = "all", py::arg("resolution") = 0);

    m.def("select_parameters", [](int g, double R) { return dump(to_json(select_parameters(g, R))); });
    m.def("inversion_max_area", [](int g, double R, int resolution) {
        py::gil_scoped_release release;
        return dump(to_json(inversion_max_area(select_parameters(g, R), resolution)));
    }, py::arg("g"), py::arg("R"), py::arg("resolution") = 200);
    m.def("riemann_hurwitz_genus", [](int k1, int k2, int b, int g) { return riemann_hurwitz_genus(k1, k2, b, g); });

    m.def("jacobi_zeros", [] { return dump({{"r1", to_json(phi1_zero())}, {"r2", to_json(phi2_zero())}}); });
    m.def("stability_residual", [](const std::string& kind, double r, double lambda) {
        if (kind != "phi1" && kind != "phi2" && kind != "combination")
            throw std::invalid_argument("kind must be phi1, phi2 or combination");
        JacobiSolution s;
        s.kind = kind == "phi1" ? JacobiKind::phi1 : kind == "phi2" ? JacobiKind::phi2 : JacobiKind::combination;
        s.lambda = lambda;
        return stability_residual(s, r);
    }, py::arg("kind"), py::arg("r"), py::arg("lambda_") = 0.0);
    m.def("verify_no_positive_radial", [](const std::vector<double>& lambdas, int sign_grid_points) {
        py::gil_scoped_release release;
        return dump(to_json(verify_no_positive_radial(lambdas.empty() ? default_lambda_grid() : lambdas,
                                                      sign_grid_points)));
    }, py::arg("lambdas") = std::vector<double>{}, py::arg("sign_grid_points") = 10000);
    m.def("sphere_profile_first_zero", [] { return dump(to_json(sphere_profile_first_zero())); });

    m.def("config_roundtrip", [](const std::string& text) {
        const RunConfig c = parse_config(text);
        return dump(to_json(c));
    });
}
