#pragma once

#include <functional>
#include <vector>

namespace shrinkcert {

struct QuadratureSpec {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    double truncation_threshold = 1e-18;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    int evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (7, 15). The error of each panel is taken as
// |K15 - G7| without the QUADPACK damping, plus a rounding floor.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec,
                     const std::vector<double>& breakpoints = {});

void validate(const QuadratureSpec& spec);

}  // namespace shrinkcert
