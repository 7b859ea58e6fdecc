#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "shrinkcert/optimize.hpp"
#include "shrinkcert/sweepout.hpp"

using namespace shrinkcert;

namespace {

const double kPi = std::numbers::pi;

double term(const std::vector<NamedValue>& terms, const std::string& name) {
    double v = 0.0;
    for (const auto& t : terms)
        if (t.name == name) v += t.value;
    return v;
}

template <class F>
double simpson(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("measured constants") {
    for (int g : {1, 5, 20}) {
        const SweepoutParams p = select_parameters(g, 1.0);
        // Tube of radius eps about a ray: |x|^2 = rho^2 + eps^2 on the tube.
        const double eps = 1e-8;
        const double tube = (g + 1) * 2 * kPi * eps / (4 * kPi) * std::exp(-eps * eps / 4) *
                            simpson([](double r) { return std::exp(-r * r / 4); }, 0.0, 60.0, 20000);
        CHECK(p.A == doctest::Approx(tube / eps).epsilon(1e-10));
        CHECK(p.B == doctest::Approx(1.5).epsilon(1e-9));
    }
}

TEST_CASE("small capped cylinder stays under B h^2") {
    const SweepoutParams p = select_parameters(1, 1.0);
    for (double h : logspace(1e-6, p.h0, 60)) {
        const double v = area(Cylinder{h, h}).value + area(DoubledAnnulus{0.0, h, h}).value;
        CHECK(v <= p.B * h * h);
    }
}

TEST_CASE("selected parameters satisfy every threshold inequality") {
    for (int g : {1, 5, 20})
        for (double R : {0.2, 1.0, 2.5, 5.0}) {
            const SweepoutParams p = select_parameters(g, R);
            for (const auto& c : check_invariants(p)) {
                INFO(c.name << " lhs=" << c.lhs << " rhs=" << c.rhs);
                CHECK(c.pass);
            }
            CHECK(p.E * p.Omega * p.Omega * std::exp(-p.Omega * p.Omega / 4) <= 0.005);
            CHECK(p.Omega >= R);
            CHECK(p.eps == doctest::Approx(std::pow(p.h, 3)));
        }
    CHECK_THROWS_AS(select_parameters(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(select_parameters(1, 6.0), std::invalid_argument);
}

TEST_CASE("parameter monotonicity") {
    const SweepoutParams p = select_parameters(5, 1.0);
    for (double s : {1.0, 0.5, 0.1, 1e-3, 1e-6}) {
        SweepoutParams q = p;
        q.h1 *= s;
        q.h2 *= s;
        q.h3 *= s;
        q.h4 *= s;
        q.h *= s;
        for (const auto& c : check_invariants(q))
            if (c.name.find("Omega") == std::string::npos && c.name.find("F_h") == std::string::npos) CHECK(c.pass);
    }
    for (double s : {1.0, 1.5, 3.0}) {
        SweepoutParams q = p;
        q.Omega1 *= s;
        q.Omega2 *= s;
        q.Omega *= s;
        for (const auto& c : check_invariants(q))
            if (c.name.rfind("E Omega", 0) == 0) CHECK(c.pass);
    }
}

TEST_CASE("step surfaces at their named endpoints") {
    const SweepoutParams p = select_parameters(3, 1.0);
    const CompositeSurface s1 = step_surface(1, 1.0, p);
    REQUIRE(s1.pieces.size() == 4);
    CHECK(std::get<Sphere>(s1.pieces[0].piece).R == doctest::Approx(1.0));
    CHECK(std::get<Cylinder>(s1.pieces[1].piece).R == doctest::Approx(p.h));
    CHECK(std::get<RayTubes>(s1.pieces[3].piece).eps == doctest::Approx(std::pow(p.h, 3)));
    CHECK(std::get<RayTubes>(s1.pieces[3].piece).count == 4);

    // G(R, 0) is the sphere S(R).
    const CompositeSurface s2 = step_surface(2, 0.0, p);
    CHECK(area(s2.pieces[0].piece).value == doctest::Approx(area(Sphere{1.0}).value).epsilon(1e-14));

    const SweepoutParams q = select_parameters(1, 5.0);
    CHECK(q.r_max() == 4.0);
    const CompositeSurface s4 = step_surface(4, 1.0, q);
    CHECK(std::get<Cylinder>(s4.pieces[0].piece).R == doctest::Approx(4.0));
    CHECK(q.r_necks() == 4.5);

    CHECK_THROWS_AS(step_surface(6, 0.5, p), std::invalid_argument);
    CHECK_THROWS_AS(step_surface(2, 1.5, p), std::invalid_argument);
    CHECK_THROWS_AS(step_surface(5, 0.5, p), std::domain_error);
    CHECK_THROWS_AS(step_surface(3, 0.0, p, ConeConvention::literal_tilt), std::domain_error);
}

TEST_CASE("step 1 area follows the closed-form pieces") {
    const SweepoutParams p = select_parameters(2, 1.5);
    for (double t : {0.1, 0.4, 1.0}) {
        const double R = 1.5 / t, ht = p.h * t, eps = t * p.eps;
        const double expect = R * R * std::exp(-R * R / 4) + ht * std::exp(-ht * ht / 4) * std::sqrt(kPi) * std::erf(ht / 2) +
                              2 * std::exp(-ht * ht / 4) * (1 - std::exp(-ht * ht / 4)) +
                              3 * eps * std::sqrt(kPi) / 2 * std::exp(-eps * eps / 4) * (std::erfc(ht / 2) - std::erfc(R / 2));
        CHECK(charged_area(1, t, p).value == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(charged_area(1, 0.0, p).value == 0.0);
}

TEST_CASE("concatenated profile is continuous and stays below 2") {
    for (int g : {1, 20})
        for (double R : {0.2, 0.9, 3.0, 5.0}) {
            const SweepoutParams p = select_parameters(g, R);
            const InversionResult r = inversion_max_area(p, 60);
            INFO("g=" << g << " R=" << R);
            CHECK(r.pass);
            CHECK(r.max_area < 2.0);
            CHECK(r.margin > 0.0);
            CHECK(r.margin >= r.expected_margin_floor - 1e-12);
            for (double gap : r.continuity_gaps) CHECK(gap < 1e-9);
            CHECK(r.steps[2].max_area < 1.99);
            CHECK(r.steps[3].max_area < 2.0 - p.eta2 / 4);
            for (const auto& s : r.steps) CHECK(s.pass);
        }
}

TEST_CASE("step 5 endpoint is two sheets plus negligible terms") {
    const SweepoutParams p = select_parameters(5, 2.0);
    std::vector<NamedValue> terms;
    const double v = charged_area(5, 1.0, p, &terms).value;
    const double sheets = 2 * std::exp(-p.h * p.h / 4) * (1 - std::exp(-std::pow(p.Omega + p.R - p.h, 2) / 4));
    CHECK(term(terms, "sheets") == doctest::Approx(sheets).epsilon(1e-13));
    CHECK(v <= 2 - p.h * p.h / 4);
    CHECK(v >= sheets);
    CHECK(term(terms, "deduction:sheet_disks_D3") > 0.0);
    CHECK(charged_area(5, 0.5, p).value == doctest::Approx(2 - p.catenoid_C * p.h * p.h));
    CHECK(charged_area(5, 0.5, p).method == AreaMethod::budget);
}

TEST_CASE("edge variants") {
    const SweepoutParams left = select_parameters(1, 0.2);
    const SweepoutParams right = select_parameters(1, 5.0);
    const auto profs = edge_variant_profiles(left, right, 30);
    REQUIRE(profs.size() == 9);
    for (const auto& s : profs) {
        INFO(s.id);
        CHECK(s.pass);
        CHECK(s.max_area < 2.0);
    }
    // sigma = 1, t = 1: the inner body is the sphere of radius r_max.
    const StepProfile& sphere_end = profs[7];
    CHECK(sphere_end.id == "right-edge-ellipsoid-sigma-1");
    CHECK(term(sphere_end.terms.back(), "inner_ellipsoid") ==
          doctest::Approx(16.0 * std::exp(-4.0)).epsilon(1e-9));
    CHECK(0.0365 > 2 * std::exp(-25.0 / 4));
    CHECK(2 * std::exp(-25.0 / 4) == doctest::Approx(0.00386).epsilon(1e-3));
    CHECK_THROWS_AS(edge_variant_profiles(right, right), std::invalid_argument);
}

TEST_CASE("squeeze translation gap") {
    CHECK(squeeze_translation_gap(2.0, 3.0) == doctest::Approx(2 * std::sqrt(std::log(1.5))).epsilon(1e-11));
    CHECK(squeeze_translation_gap(2.0, 3.0) == doctest::Approx(1.274).epsilon(1e-3));
    CHECK(squeeze_translation_gap(1.9, 2.94) == doctest::Approx(2 * std::sqrt(std::log(2.94 / 1.9))).epsilon(1e-11));
    CHECK(squeeze_translation_gap(1.9, 2.94) == doctest::Approx(1.321).epsilon(1e-3));
    CHECK(squeeze_translation_gap(1.0, 1.0 + 1e-10) < 1e-4);
    CHECK_THROWS_AS(squeeze_translation_gap(2.0, 2.0), std::invalid_argument);
}

TEST_CASE("Riemann-Hurwitz table") {
    for (int g = 1; g <= 10; ++g) {
        CHECK(riemann_hurwitz_genus(2, 0, 2, g) == g);
        CHECK(riemann_hurwitz_genus(1, 1, 1, g) == 0);
        CHECK(riemann_hurwitz_genus(4, 0, 1, g, Admissibility::formula_only) == g + 1);
        CHECK_THROWS_AS(riemann_hurwitz_genus(4, 0, 1, g), std::domain_error);
        CHECK_THROWS_AS(riemann_hurwitz_genus(2, 0, 0, g), std::domain_error);
        CHECK_THROWS_AS(riemann_hurwitz_genus(2, 0, 0, g, Admissibility::formula_only), std::domain_error);
    }
    CHECK_THROWS_AS(riemann_hurwitz_genus(-1, 0, 0, 1), std::invalid_argument);
}
