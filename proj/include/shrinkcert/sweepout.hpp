#pragma once

#include <string>
#include <vector>

#include "shrinkcert/bound_verifier.hpp"
#include "shrinkcert/gaussian_measure.hpp"
#include "shrinkcert/surfaces.hpp"

namespace shrinkcert {

struct SweepoutTargets {
    double delta1 = 0.133;
    double delta2 = 0.02;
    double delta3 = 0.0365;
    double eta1 = 1e-3;
    double eta2 = 0.05;
    double iota = 0.01;
    double catenoid_C = 0.125;
    double h_c = 0.1;
    double h0 = 0.1;
};

struct SweepoutParams {
    int g = 1;
    double R = 1.0;
    double h = 0.0;
    double Omega = 0.0;
    double eps = 0.0;          // ray tube radius, h^3
    double delta_tubes = 0.0;  // vertical tube radius, h^3
    double A = 0.0, B = 0.0, E = 0.0, F = 0.0;
    double catenoid_C = 0.125;
    double h0 = 0.0, h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0, h_c = 0.0;
    double Omega1 = 0.0, Omega2 = 0.0, Omega3 = 0.0;
    double eta1 = 0.0, eta2 = 0.0, iota = 0.0;
    double delta1 = 0.0, delta2 = 0.0, delta3 = 0.0;

    double r_max() const;
    double r_necks() const;
    double ends_budget() const;  // E Omega^2 e^{-Omega^2/4}
};

struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

// Measures A, B, E, F and solves the threshold inequalities for h, then Omega.
SweepoutParams select_parameters(int g, double R, const SweepoutTargets& targets = {});
std::vector<InequalityCheck> check_invariants(const SweepoutParams& p);
bool params_valid(const SweepoutParams& p);

// Step 3 inclination: fold from the vertical, alpha(t) = (1 - t) pi / 2, or the
// literal tilt t pi / 2 (degenerate at both endpoints).
enum class ConeConvention { fold_from_vertical, literal_tilt };

CompositeSurface step_surface(int step, double t, const SweepoutParams& p,
                              ConeConvention conv = ConeConvention::fold_from_vertical);

struct StepProfile {
    std::string id;
    int step = 0;
    std::vector<double> t_grid;
    std::vector<AreaResult> areas;
    std::vector<double> surface_areas;           // uncharged areas, NaN where only a budget exists
    std::vector<std::vector<NamedValue>> terms;  // per t: charged pieces, then itemized extras
    double max_area = 0.0;
    double argmax_t = 0.0;
    double bound = 2.0;
    std::string bound_label;
    double margin = 0.0;
    bool pass = false;
    double offending_t = -1.0;
    std::vector<NamedValue> budget_breakdown;  // terms at the argmax
    std::vector<NamedValue> checks;
    std::vector<double> literal_tilt_areas;  // step 3 only; NaN where undefined
};

// Area charged to a step surface: every piece at its area except SweptEnds,
// which is charged the ends budget. Step 5 interior points are charged 2 - C h^2.
// `actual` receives the uncharged Gaussian area (NaN for step 5 interior points).
AreaResult charged_area(int step, double t, const SweepoutParams& p, std::vector<NamedValue>* terms = nullptr,
                        ConeConvention conv = ConeConvention::fold_from_vertical, double* actual = nullptr);

StepProfile step_area_profile(int step, const SweepoutParams& p, const std::vector<double>& t_grid);

struct InversionResult {
    int g = 1;
    double R = 0.0;
    double max_area = 0.0;
    double margin = 0.0;
    int argmax_step = 0;
    double argmax_t = 0.0;  // concatenated parameter in [0, 5/6]
    std::vector<StepProfile> steps;
    std::vector<double> continuity_gaps;  // uncharged |Sigma_i(1)| vs |Sigma_{i+1}(0)|
    double expected_margin_floor = 0.0;   // min(delta2/2, eta2/4, C h^2)
    bool pass = false;
};

InversionResult inversion_max_area(const SweepoutParams& p, int resolution = 200);

// Left edge (R = .2 partial cone openings), right edge (R = 5 ellipsoid inner
// bodies and capped-graph end states).
std::vector<StepProfile> edge_variant_profiles(const SweepoutParams& left, const SweepoutParams& right,
                                               int resolution = 50);

double squeeze_translation_gap(double lambda_cap, double lambda_prime);

enum class Admissibility { neckpinch_sphere, formula_only };

int riemann_hurwitz_genus(int k1, int k2, int b, int g, Admissibility mode = Admissibility::neckpinch_sphere);

}  // namespace shrinkcert
