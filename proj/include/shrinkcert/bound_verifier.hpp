#pragma once

#include <string>
#include <vector>

#include "shrinkcert/quadrature.hpp"

namespace shrinkcert {

struct NamedValue {
    std::string name;
    double value = 0.0;
};

struct GridSpec {
    int resolution = 0;
    int rounds = 0;
    double shrink = 0.0;
    double cell_diameter = 0.0;
    double lipschitz = 0.0;
    double slack = 0.0;
};

struct BoundReport {
    std::string name;
    double computed_max = 0.0;
    std::vector<NamedValue> argmax;
    double paper_bound = 0.0;
    double margin = 0.0;
    bool pass = false;
    bool discrepancy = false;
    std::string note;
    GridSpec grid;
    double tail_bound = 0.0;
    std::vector<NamedValue> details;

    double detail(const std::string& key) const;
};

struct VerifierOptions {
    int resolution = 0;  // 0 picks the per-verifier default
    int rounds = 3;
    double shrink = 0.5;
    // Extra rounds are added until the compass step drops below this fraction of the box width.
    double polish_tol = 1e-8;
    QuadratureSpec quad{};
};

// G(R, h) = e^{-h^2/4} R^2 e^{-R^2/4} + R e^{-R^2/4} int_0^h e^{-z^2/4} dz
double capped_cylinder_bound(double R, double h);
// Doubled-formula ellipsoid area, integrated in the height fraction tau = z/b.
double ellipsoid_area_formula(double a, double b, const QuadratureSpec& spec = {});
// Single-sheet area of the capped graph z+_{h,a,b}.
double capped_graph_area(double h, double a, double b, const QuadratureSpec& spec = {});

BoundReport verify_capped_cylinders(const VerifierOptions& opt = {});
BoundReport verify_cones_finite(const VerifierOptions& opt = {});
BoundReport verify_cones_infinite(const VerifierOptions& opt = {});

struct MonotonicityTrace {
    double R = 0.0;
    double growth_factor = 0.0;  // sqrt(pi) R e^{R^2/4}
    std::vector<double> phi;
    std::vector<double> derivative;
    std::vector<double> analytic_bound;
    bool pass = false;
};

MonotonicityTrace verify_cone_monotonicity(double R, int points = 50);
BoundReport verify_translated_cones(const std::vector<double>& h_grid = {0.0, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0},
                                   const VerifierOptions& opt = {});
BoundReport verify_ellipsoids(const VerifierOptions& opt = {});
BoundReport verify_capped_graphs(const VerifierOptions& opt = {});

std::vector<std::string> bound_names();
std::vector<BoundReport> verify_bounds(const std::string& name, const VerifierOptions& opt = {});

}  // namespace shrinkcert
