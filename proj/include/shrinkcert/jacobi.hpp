#pragma once

#include <functional>
#include <string>
#include <vector>

namespace shrinkcert {

// Radial solutions of phi'' + (1/r - r/2) phi' + phi/2 = 0 in xi = r^2/4:
// phi1 = M(-1/2, 1, xi), phi2 = U(-1/2, 1, xi), combination = phi2 + lambda phi1.
enum class JacobiKind { phi1, phi2, combination };

struct JacobiSolution {
    JacobiKind kind = JacobiKind::phi1;
    double lambda = 0.0;
};

std::string to_string(JacobiKind k);

struct JacobiValue {
    double value = 0.0;
    double d1 = 0.0;  // d/dr
    double d2 = 0.0;  // d^2/dr^2
};

JacobiValue evaluate(const JacobiSolution& sol, double r);

// |phi'' + (1/r - r/2) phi' + phi/2| with analytic derivatives, r in (0, 8].
double stability_residual(const JacobiSolution& sol, double r);
// Same operator in Kummer form: |xi phi_xixi + (1 - xi) phi_xi + phi/2|.
double kummer_residual(const JacobiSolution& sol, double xi);
// Residual with Richardson-extrapolated central differences (step 1e-5 r).
double stability_residual_fd(const JacobiSolution& sol, double r);

struct ZeroBracket {
    double lo = 0.0;
    double hi = 0.0;
    double root = 0.0;
    double residual = 0.0;
};

ZeroBracket find_zero(const std::function<double(double)>& f, double lo, double hi, double width = 1e-12);
ZeroBracket find_zero(const JacobiSolution& sol, double lo, double hi, double width = 1e-12);
// r1 (zero of phi1) and r2 (zero of phi2), bracketed by sign scans.
ZeroBracket phi1_zero(double width = 1e-12);
ZeroBracket phi2_zero(double width = 1e-12);

struct Phi1ShapeReport {
    bool pass = false;
    double value_at_0 = 0.0;
    int grid_points = 0;
    double max_first_derivative = 0.0;   // should be < 0
    double max_second_derivative = 0.0;  // should be < 0
    std::vector<double> violations;
    double r_check = 8.0;
    double leading_ratio = 0.0;  // phi1 / (-4 r^{-3} e^{r^2/4} / sqrt(pi))
    double series_ratio = 0.0;   // phi1 / full large-xi asymptotic series
    bool leading_within_5pct = false;
    bool series_within_5pct = false;
};

Phi1ShapeReport verify_phi1_shape(int grid_points = 4000);

// Large-xi asymptotic series of M(-1/2, 1, xi), truncated at its smallest term.
double phi1_asymptotic_series(double xi);

struct SignCertificate {
    std::string subject;  // "lambda", "+phi1", "-phi2", ...
    double lambda = 0.0;
    double log_r_negative = 0.0;  // natural log of the radius where the value is negative
    double value_negative = 0.0;
    double r_positive = 0.0;
    double value_positive = 0.0;
    std::string method;
    bool certified = false;
};

struct NoPositiveRadialReport {
    bool pass = false;
    double r1 = 0.0;
    double r2 = 0.0;
    int phi2_sign_changes = 0;
    int sign_grid_points = 0;
    bool phi2_increasing = false;
    double wronskian_max_rel_error = 0.0;
    double wronskian_min = 0.0;
    std::vector<SignCertificate> certificates;
    std::vector<double> failures;
};

// 100 log-spaced positive values in [1e-4, 1e6], their negatives, and 0.
std::vector<double> default_lambda_grid();
NoPositiveRadialReport verify_no_positive_radial(const std::vector<double>& lambdas = default_lambda_grid(),
                                                 int sign_grid_points = 10000);

struct SphereComparison {
    ZeroBracket zero;
    bool before_equator = false;
    double cos_residual = 0.0;  // max |f'' + cot f' + 2 f| for f = cos on the grid
    int steps = 0;
    double eigen_degree = 0.0;  // nu with nu (nu + 1) = 4
};

// J'' + cot(phi) J' + 4 J = 0, J(0) = 1, J'(0) = 0, integrated by adaptive Dormand-Prince.
SphereComparison sphere_profile_first_zero(double tol = 1e-13);

}  // namespace shrinkcert
