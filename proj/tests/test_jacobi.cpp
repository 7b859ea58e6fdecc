#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "shrinkcert/jacobi.hpp"
#include "shrinkcert/optimize.hpp"

using namespace shrinkcert;

namespace {

const JacobiSolution kPhi1{JacobiKind::phi1};
const JacobiSolution kPhi2{JacobiKind::phi2};

long double m_series(long double xi) {
    long double term = 1.0L, sum = 1.0L;
    for (int k = 0; k < 400; ++k) {
        term *= (-0.5L + k) * xi / ((k + 1.0L) * (k + 1.0L));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
    }
    return sum;
}

double u_bessel(double xi) {
    return std::exp(xi / 2) * ((xi - 1) * std::cyl_bessel_k(0.0, xi / 2) + xi * std::cyl_bessel_k(1.0, xi / 2)) /
           (2 * std::sqrt(std::numbers::pi));
}

// P_nu(cos phi) = 2F1(-nu, nu + 1; 1; sin^2(phi / 2)).
double legendre(double nu, double phi) {
    const double s = std::pow(std::sin(phi / 2), 2);
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 2000; ++k) {
        term *= (-nu + k) * (nu + 1 + k) * s / ((k + 1.0) * (k + 1.0));
        sum += term;
        if (std::fabs(term) < 1e-18) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("evaluators match independent oracles") {
    for (double r : linspace(0.05, 8.0, 60)) {
        const double xi = r * r / 4;
        CHECK(evaluate(kPhi1, r).value == doctest::Approx(double(m_series(xi))).epsilon(1e-12));
        CHECK(evaluate(kPhi2, r).value == doctest::Approx(u_bessel(xi)).epsilon(1e-11));
    }
    CHECK(evaluate(kPhi1, 0.0).value == 1.0);
    CHECK_THROWS_AS(evaluate(kPhi2, 0.0), std::domain_error);
    const JacobiSolution c{JacobiKind::combination, 3.0};
    CHECK(evaluate(c, 1.3).value ==
          doctest::Approx(evaluate(kPhi2, 1.3).value + 3 * evaluate(kPhi1, 1.3).value).epsilon(1e-15));
}

TEST_CASE("stability residuals") {
    CHECK(stability_residual(kPhi1, 1.0) < 1e-10);
    CHECK(stability_residual(kPhi2, 2.0) < 1e-10);
    CHECK(stability_residual({JacobiKind::combination, 3.0}, 0.5) < 1e-9);
    for (double r : linspace(0.05, 6.0, 600)) {
        CHECK(stability_residual(kPhi1, r) < 1e-9);
        CHECK(stability_residual(kPhi2, r) < 1e-9);
        // Under xi = r^2/4 the polar operator equals the Kummer one.
        const double xi = r * r / 4;
        CHECK((kummer_residual(kPhi1, xi) < 1e-9) == (stability_residual(kPhi1, r) < 1e-9));
        CHECK(std::fabs(kummer_residual(kPhi1, xi) - stability_residual(kPhi1, r)) < 1e-11);
        CHECK((kummer_residual(kPhi2, xi) < 1e-9) == (stability_residual(kPhi2, r) < 1e-9));
        CHECK(std::fabs(kummer_residual(kPhi2, xi) - stability_residual(kPhi2, r)) < 1e-11);
    }
    for (double r : {0.3, 1.0, 2.5, 5.0}) {
        CHECK(stability_residual_fd(kPhi1, r) < 1e-3 * (1 + std::fabs(evaluate(kPhi1, r).value)));
        CHECK(stability_residual_fd(kPhi2, r) < 1e-3 * (1 + std::fabs(evaluate(kPhi2, r).value)));
    }
    CHECK_THROWS_AS(stability_residual(kPhi1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(stability_residual(kPhi1, 8.5), std::invalid_argument);
}

TEST_CASE("zeros r1 and r2") {
    const ZeroBracket z1 = find_zero(kPhi1, 0.1, 6.0);
    CHECK(z1.hi - z1.lo <= 1e-10);
    CHECK(z1.lo < z1.root);
    CHECK(z1.root < z1.hi);
    const double xi1 = z1.root * z1.root / 4;
    CHECK(xi1 > 1.5);
    CHECK(xi1 < 1.7);
    // Series oracle bisection.
    double lo = 0.1, hi = 6.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (m_series(mid * mid / 4) > 0 ? lo : hi) = mid;
    }
    CHECK(z1.root == doctest::Approx(lo).epsilon(1e-11));

    const ZeroBracket z2 = phi2_zero();
    CHECK(z2.hi - z2.lo <= 1e-10);
    CHECK(z2.root < z1.root);
    lo = 0.1, hi = z1.root;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (u_bessel(mid * mid / 4) < 0 ? lo : hi) = mid;
    }
    CHECK(z2.root == doctest::Approx(lo).epsilon(1e-10));

    CHECK(find_zero([](double r) { return r - 1; }, 0.0, 2.0).root == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(find_zero(kPhi1, 0.1, 1.0), std::domain_error);
}

TEST_CASE("phi1 shape") {
    const Phi1ShapeReport rep = verify_phi1_shape();
    CHECK(rep.value_at_0 == 1.0);
    CHECK(evaluate(kPhi1, 1.0).d1 < 0);
    CHECK(rep.violations.empty());
    CHECK(rep.max_first_derivative < 0);
    CHECK(rep.max_second_derivative < 0);
    // Full asymptotic series agrees tightly; the leading term alone is 18% off at r = 8.
    CHECK(rep.series_ratio == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(rep.leading_ratio == doctest::Approx(1.179).epsilon(1e-3));
    CHECK_FALSE(rep.leading_within_5pct);
    CHECK(rep.pass);
}

TEST_CASE("asymptotic series against the power series at large xi") {
    for (double xi : {20.0, 30.0, 40.0})
        CHECK(phi1_asymptotic_series(xi) == doctest::Approx(double(m_series(xi))).epsilon(1e-6));
    CHECK_THROWS_AS(phi1_asymptotic_series(2.0), std::invalid_argument);
}

TEST_CASE("no positive radial Jacobi field") {
    const std::vector<double> grid = default_lambda_grid();
    REQUIRE(grid.size() == 201);
    CHECK(grid.front() == doctest::Approx(-1e6));
    CHECK(grid.back() == doctest::Approx(1e6));
    const NoPositiveRadialReport rep = verify_no_positive_radial(grid);
    CHECK(rep.pass);
    CHECK(rep.failures.empty());
    CHECK(rep.phi2_sign_changes == 1);
    CHECK(rep.phi2_increasing);
    CHECK(rep.wronskian_max_rel_error < 1e-8);
    CHECK(rep.wronskian_min > 0);
    for (const auto& c : rep.certificates) {
        INFO(c.subject << " " << c.lambda);
        CHECK(c.certified);
        if (c.subject == "lambda") CHECK(c.value_positive == doctest::Approx(evaluate(kPhi2, rep.r1).value));
    }
    const NoPositiveRadialReport small = verify_no_positive_radial({0.0, 1e3, -1.0}, 1000);
    CHECK(small.pass);
    CHECK(small.certificates[2].method == "r=1e-6");
    CHECK(small.certificates[1].method == "log-space");
    CHECK(small.certificates[1].value_negative < 0);
}

TEST_CASE("sphere comparison") {
    const SphereComparison s = sphere_profile_first_zero();
    CHECK(s.cos_residual < 1e-10);
    CHECK(s.zero.root < std::numbers::pi / 2 - 1e-3);
    CHECK(s.before_equator);
    CHECK(s.eigen_degree * (s.eigen_degree + 1) == doctest::Approx(4.0).epsilon(1e-14));
    double lo = 0.5, hi = 1.5;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        (legendre(s.eigen_degree, mid) > 0 ? lo : hi) = mid;
    }
    CHECK(std::fabs(s.zero.root - lo) < 1e-10);
}
