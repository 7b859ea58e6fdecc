#pragma once

#include <array>
#include <string>
#include <vector>

#include "shrinkcert/quadrature.hpp"
#include "shrinkcert/surfaces.hpp"

namespace shrinkcert {

struct FunctionalCenter {
    std::array<double, 3> y{0.0, 0.0, 0.0};
    double tau = 1.0;
};

enum class AreaMethod { closed_form, quadrature, budget };

std::string to_string(AreaMethod m);

struct AreaResult {
    double value = 0.0;
    double error_bound = 0.0;
    AreaMethod method = AreaMethod::closed_form;
    std::string inequality;
    bool converged = true;
};

// Gaussian area (1/4pi) int e^{-|x|^2/4}. Closed forms are used where known.
AreaResult area(const Piece& piece, const QuadratureSpec& spec = {});
AreaResult area_by_quadrature(const Piece& piece, const QuadratureSpec& spec = {});
AreaResult area(const CompositeSurface& surface, const QuadratureSpec& spec = {});

// (1/(4 pi tau)) int e^{-|x-y|^2/(4 tau)} over the surface of revolution of the profile.
AreaResult profile_functional(const RadialProfile& profile, const FunctionalCenter& center, const QuadratureSpec& spec);

AreaResult f_functional(const Piece& piece, const FunctionalCenter& center, const QuadratureSpec& spec = {});
AreaResult f_functional(const CompositeSurface& surface, const FunctionalCenter& center,
                        const QuadratureSpec& spec = {});

struct EntropySearch {
    double tau_min = 1e-3;
    double tau_max = 1e3;
    int tau_points = 121;
    double y_min = -4.0;
    double y_max = 4.0;
    int y_points = 33;
    int rounds = 3;
    double shrink = 0.5;
    // Off-axis probes at distances spread over [0, y_max]; 0 disables them.
    int off_axis_samples = 0;
};

struct EntropyResult {
    double value = 0.0;
    FunctionalCenter argmax;
    bool boundary_warning = false;
    double off_axis_max = 0.0;
    int evaluations = 0;
};

EntropyResult entropy(const CompositeSurface& surface, const EntropySearch& search = {},
                      const QuadratureSpec& spec = {});

// Euclidean ball of radius R measured with the density ((1/4pi) e^{-|x|^2/4})^{3/2}.
AreaResult gaussian_volume_ball(double R);
double gaussian_half_volume_radius();

struct TranslationCheck {
    double shift = 0.0;
    double shifted_area = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool pass = false;
};

TranslationCheck translate_area_bound_check(const RadialProfile& upper, double h, const QuadratureSpec& spec = {});
TranslationCheck translate_area_bound_check(const Piece& piece, double h, const QuadratureSpec& spec = {});

struct MonotonicityCheck {
    std::vector<double> s;
    std::vector<double> values;
    double max_increase = 0.0;
    bool pass = false;
    int first_violation = -1;
};

MonotonicityCheck shrinker_monotonicity_check(const CompositeSurface& shrinker, const std::array<double, 3>& y,
                                              double a, const std::vector<double>& s_grid, double tol = 1e-8,
                                              const QuadratureSpec& spec = {});

}  // namespace shrinkcert
