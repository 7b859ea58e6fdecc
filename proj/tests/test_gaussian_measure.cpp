#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "shrinkcert/gaussian_measure.hpp"

using namespace shrinkcert;

namespace {

const double kE = std::numbers::e;
const double kPi = std::numbers::pi;

// Composite Simpson on [a, b] with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

double sphere_offaxis(double R, double d, double tau) {
    if (d == 0.0) return R * R / tau * std::exp(-R * R / (4 * tau));
    return 2.0 * R / d * std::exp(-(R * R + d * d) / (4 * tau)) * std::sinh(R * d / (2 * tau));
}

CompositeSurface single(const Piece& p) { return {{{p, 1, ""}}, "single", {}}; }

}  // namespace

TEST_CASE("Stone values pin the normalization") {
    CHECK(std::fabs(area(Sphere{2.0}).value - 4.0 / kE) < 1e-9);
    CHECK(area(Sphere{2.0}).method == AreaMethod::closed_form);
    CHECK(std::fabs(area_by_quadrature(Sphere{2.0}).value - 4.0 / kE) < 1e-8);
    CHECK(std::fabs(area(Cylinder{std::sqrt(2.0), kInfinity}).value - std::sqrt(2 * kPi / kE)) < 1e-8);
    CHECK(std::fabs(area_by_quadrature(Cylinder{std::sqrt(2.0), kInfinity}).value - std::sqrt(2 * kPi / kE)) < 1e-8);
    CHECK(std::fabs(area(DoubledAnnulus{0.0, kInfinity, 0.0}).value - 2.0) < 1e-15);
    CHECK(std::fabs(area(DoubledCone{0.2, kInfinity, 0.0, 0.0}).value - 2.0 * std::exp(-0.01)) < 1e-14);
}

TEST_CASE("doubled annulus at h = 0 counts both sheets") {
    const double one_sheet = simpson([](double r) { return 0.5 * r * std::exp(-r * r / 4); }, 0.0, 3.0, 2000);
    CHECK(std::fabs(area(DoubledAnnulus{0.0, 3.0, 0.0}).value - 2.0 * one_sheet) < 1e-12);
}

TEST_CASE("closed forms agree with profile quadrature on random draws") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const QuadratureSpec spec;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = 0.05 + 5.0 * u(rng);
        const double b = a + 0.05 + 4.0 * u(rng);
        const double h = 2.0 * u(rng);
        Piece p;
        switch (i % 8) {
            case 0: p = DoubledAnnulus{a, (i % 16 == 0) ? kInfinity : b, h}; break;
            case 1: p = Cylinder{a, (i % 16 == 1) ? kInfinity : b}; break;
            case 2: p = Sphere{a}; break;
            case 3: p = SphericalCaps{a, h}; break;
            case 4: p = DoubledCone{a, kInfinity, 0.0, 0.5 * kPi * u(rng)}; break;
            case 5: p = DoubledCone{a, b, h, 0.0}; break;
            case 6: p = RayTubes{1 + i % 7, 0.01 + 0.2 * u(rng), h, (i % 3 == 0) ? kInfinity : h + b}; break;
            case 7: p = VerticalTubes{1 + i % 5, 0.01 + 0.2 * u(rng), a, b}; break;
        }
        const AreaResult c = area(p, spec);
        const AreaResult q = area_by_quadrature(p, spec);
        REQUIRE(c.method == AreaMethod::closed_form);
        const double rel = std::fabs(c.value - q.value) / std::max(c.value, 1e-300);
        if (c.value > 1e-6) {
            INFO(to_json(p).dump());
            CHECK(rel < 1e-8);
        } else {
            CHECK(std::fabs(c.value - q.value) < 1e-14);
        }
        worst = std::max(worst, rel);
    }
    MESSAGE("worst relative disagreement " << worst);
}

TEST_CASE("infinite cone closed form against an independent Simpson oracle") {
    for (double R : {0.0, 0.2, 1.0, 2.5, 6.0}) {
        for (double phi : {0.1, 0.6, 1.2, 1.5}) {
            const double t = std::tan(phi);
            auto f = [&](double r) { return r * std::exp(-(r * r + t * t * (r - R) * (r - R)) / 4.0); };
            const double ref = simpson(f, R, R + 40.0, 40000) / std::cos(phi);
            CHECK(std::fabs(area(DoubledCone{R, kInfinity, 0.0, phi}).value - ref) < 1e-10);
        }
    }
    // phi -> pi/2 approaches the cylinder
    const double R = 1.3;
    CHECK(std::fabs(area(DoubledCone{R, kInfinity, 0.0, 0.5 * kPi - 1e-9}).value -
                    area(Cylinder{R, kInfinity}).value) < 1e-7);
    CHECK(std::fabs(area(DoubledCone{R, kInfinity, 0.0, 0.5 * kPi}).value - area(Cylinder{R, kInfinity}).value) < 1e-14);
}

TEST_CASE("cone at phi = 0 reduces to the annulus") {
    for (double r1 : {0.0, 0.4, 2.0})
        for (double r2 : {0.5 + r1, 3.0 + r1, kInfinity})
            CHECK(std::fabs(area_by_quadrature(DoubledCone{r1, r2, 0.0, 0.0}).value -
                            area(DoubledAnnulus{r1, r2, 0.0}).value) < 1e-10);
}

TEST_CASE("ellipsoid degenerations") {
    for (double a : {0.5, 2.0, 4.0}) {
        CHECK(std::fabs(area(Ellipsoid{a, 0.0}).value - area(DoubledAnnulus{0.0, a, 0.0}).value) < 1e-8);
        CHECK(std::fabs(area(Ellipsoid{a, a}).value - area(Sphere{a}).value) < 1e-8);
    }
}

TEST_CASE("capped graph branches meet continuously and b = h is a flat sheet") {
    const CappedGraph g{0.5, 3.0, 1.5, 1};
    const RadialProfile prof = lower_to_profile(g);
    REQUIRE(prof.segments.size() == 2);
    double r1, z1, r2, z2;
    prof.segments[0].point(prof.segments[0].theta0, r1, z1);
    prof.segments[1].point(0.0, r2, z2);
    CHECK(std::fabs(r1 - 3.0 * std::sqrt(1.0 - 0.25 / 2.25)) < 1e-14);
    CHECK(std::fabs(r1 - r2) < 1e-14);
    CHECK(std::fabs(z1 - z2) < 1e-14);
    for (double h : {0.0, 0.3, 1.0}) CHECK(std::fabs(area(CappedGraph{h, 4.0, h, 1}).value - std::exp(-h * h / 4)) < 1e-10);
}

TEST_CASE("F functional: scaled sphere, plane, off-axis I0 reduction") {
    for (double R : {0.7, 2.0, 3.1})
        for (double tau : {0.05, 0.5, 1.0, 4.0, 30.0}) {
            FunctionalCenter c;
            c.tau = tau;
            CHECK(std::fabs(f_functional(Sphere{R}, c).value - sphere_offaxis(R, 0.0, tau)) < 1e-10);
        }
    for (double d : {0.0, 0.5, 2.0, 5.0}) {
        FunctionalCenter c;
        c.y = {0.0, 0.0, d};
        CHECK(std::fabs(f_functional(CappedGraph{0.0, 1.0, 0.0, 1}, c).value - std::exp(-d * d / 4)) < 1e-10);
    }
    for (double d : {0.3, 1.0, 2.5, 4.0})
        for (double tau : {0.3, 1.0, 2.0}) {
            FunctionalCenter c;
            c.y = {d, 0.0, 0.0};
            c.tau = tau;
            CHECK(std::fabs(f_functional(Sphere{2.0}, c).value - sphere_offaxis(2.0, d, tau)) < 1e-10);
        }
    CHECK(std::fabs(f_functional(single(Sphere{2.0}), FunctionalCenter{}).value - 4.0 / kE) < 1e-12);
}

TEST_CASE("scaling identity F_{y,tau}(S) = F_{0,1}((S - y)/sqrt(tau)) on random axis centers") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double tau = std::exp(-2.0 + 4.0 * u(rng));
        const double c = -2.0 + 4.0 * u(rng);
        Piece p;
        Piece q;
        const double s = 1.0 / std::sqrt(tau);
        switch (i % 3) {
            case 0: {
                const double R = 0.3 + 3.0 * u(rng);
                p = Sphere{R};
                q = Sphere{R * s};
                break;
            }
            case 1: {
                const double R = 0.3 + 3.0 * u(rng), h = 3.0 * u(rng);
                p = Cylinder{R, h};
                q = Cylinder{R * s, h * s};
                break;
            }
            default: {
                const double a = 0.5 + 3.0 * u(rng), b = a * u(rng);
                p = Ellipsoid{a, b};
                q = Ellipsoid{a * s, b * s};
            }
        }
        FunctionalCenter fc;
        fc.y = {0.0, 0.0, c};
        fc.tau = tau;
        const double lhs = f_functional(p, fc).value;
        const double rhs = profile_functional(translate_vertical(lower_to_profile(q), -c * s), FunctionalCenter{}, {}).value;
        CHECK(std::fabs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("composite area is the weighted sum") {
    CompositeSurface s;
    s.pieces = {{Sphere{2.0}, 1, "a"}, {DoubledAnnulus{0.0, 1.0, 0.5}, 2, "b"}, {Ellipsoid{2.0, 1.0}, 1, "c"}};
    const double expect = area(Sphere{2.0}).value + 2.0 * area(DoubledAnnulus{0.0, 1.0, 0.5}).value +
                          area(Ellipsoid{2.0, 1.0}).value;
    CHECK(area(s).value == expect);
    CHECK(area(s).method == AreaMethod::quadrature);
}

TEST_CASE("entropy of the self-shrinkers sits at the canonical center") {
    const EntropyResult sph = entropy(single(Sphere{2.0}));
    CHECK(std::fabs(sph.value - 4.0 / kE) < 1e-9);
    CHECK(std::fabs(sph.argmax.tau - 1.0) < 1e-3);
    CHECK(std::fabs(sph.argmax.y[2]) < 1e-3);
    CHECK_FALSE(sph.boundary_warning);
    EntropySearch coarse;
    coarse.tau_points = 41;
    coarse.y_points = 9;
    coarse.off_axis_samples = 4;
    const EntropyResult cyl = entropy(single(Cylinder{std::sqrt(2.0), kInfinity}), coarse);
    CHECK(std::fabs(cyl.value - std::sqrt(2 * kPi / kE)) < 1e-8);
    CHECK(std::fabs(cyl.argmax.tau - 1.0) < 1e-3);
    CHECK_FALSE(cyl.boundary_warning);
    CHECK(cyl.off_axis_max <= cyl.value);
    for (double c : {-3.0, 1.0, 2.5}) {
        FunctionalCenter fc;
        fc.y = {0.0, 0.0, c};
        CHECK(std::fabs(f_functional(Cylinder{std::sqrt(2.0), kInfinity}, fc).value - std::sqrt(2 * kPi / kE)) < 1e-9);
    }
}

TEST_CASE("plane functional is 1 at every scale") {
    for (double tau : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
        FunctionalCenter c;
        c.tau = tau;
        CHECK(std::fabs(f_functional(CappedGraph{0.0, 1.0, 0.0, 1}, c).value - 1.0) < 1e-9);
    }
}

TEST_CASE("Gaussian volume") {
    CHECK(gaussian_volume_ball(0.0).value == 0.0);
    const double v = gaussian_volume_ball(kInfinity).value;
    CHECK(std::fabs(v - 0.5445) < 5e-4);
    const double oracle =
        simpson([](double r) { return r * r * std::exp(-3.0 * r * r / 8.0); }, 0.0, 30.0, 30000) / std::sqrt(4 * kPi);
    CHECK(std::fabs(v - oracle) < 1e-12);
    double prev = 0.0;
    for (double R = 0.1; R < 10.0; R += 0.1) {
        const double x = gaussian_volume_ball(R).value;
        CHECK(x > prev);
        prev = x;
    }
    const double rs = gaussian_half_volume_radius();
    CHECK(std::fabs(gaussian_volume_ball(rs).value - 0.5 * v) < 1e-13);
    CHECK(area(Sphere{rs}).value >= 1.0);
}

TEST_CASE("translated pieces lose at least e^{-h^2/4}") {
    const RadialProfile cap = upper_sheet(lower_to_profile(SphericalCaps{1.5, 0.4}));
    const TranslationCheck t = translate_area_bound_check(cap, 1.0);
    CHECK(t.pass);
    CHECK(t.shifted_area < t.bound);
    const TranslationCheck zero = translate_area_bound_check(cap, 0.0);
    CHECK(std::fabs(zero.shifted_area - zero.bound) < 1e-12);
    CHECK_THROWS_AS(translate_area_bound_check(Sphere{1.0}, 0.5), std::domain_error);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double r1 = 3.0 * u(rng);
        const double r2 = (i % 4 == 0) ? kInfinity : r1 + 0.1 + 3.0 * u(rng);
        const RadialProfile ann = upper_sheet(lower_to_profile(DoubledAnnulus{r1, r2, 2.0 * u(rng)}));
        CHECK(translate_area_bound_check(ann, 0.05 + 2.0 * u(rng)).pass);
    }
}

TEST_CASE("monotonicity along s for the exact shrinkers") {
    const std::vector<double> s = [] {
        std::vector<double> v;
        for (int i = 0; i <= 300; ++i) v.push_back(0.01 * i);
        return v;
    }();
    const MonotonicityCheck a = shrinker_monotonicity_check(single(Sphere{2.0}), {1.0, 0.0, 0.0}, 0.0, s);
    CHECK(a.pass);
    CHECK(std::fabs(a.values.front() - 4.0 / kE) < 1e-12);
    const MonotonicityCheck b = shrinker_monotonicity_check(single(Sphere{2.0}), {0.0, 0.0, 1.0}, 0.1, s);
    CHECK(b.pass);
    CHECK(b.max_increase <= 1e-8);
    const MonotonicityCheck c =
        shrinker_monotonicity_check(single(Cylinder{std::sqrt(2.0), kInfinity}), {0.7, 0.0, 0.4}, 0.3, s);
    CHECK(c.pass);
    CHECK_THROWS_AS(shrinker_monotonicity_check(single(Sphere{2.0}), {1.0, 0.0, 0.0}, -1.0, s), std::invalid_argument);
}
