// Acceptance runner: one PASS/FAIL line per criterion. `acceptance N` runs criterion N only.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "shrinkcert/bound_verifier.hpp"
#include "shrinkcert/gaussian_measure.hpp"
#include "shrinkcert/jacobi.hpp"
#include "shrinkcert/optimize.hpp"
#include "shrinkcert/sweepout.hpp"

using namespace shrinkcert;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double arg(const BoundReport& r, const std::string& name) {
    for (const auto& a : r.argmax)
        if (a.name == name) return a.value;
    return NAN;
}

CompositeSurface single(const Piece& p) {
    CompositeSurface s;
    s.pieces.push_back({p, 1, ""});
    return s;
}

Outcome c1() {
    const double e = std::numbers::e, pi = std::numbers::pi;
    const double s_cf = area(Sphere{2.0}).value, s_q = area_by_quadrature(Sphere{2.0}).value;
    const Cylinder cyl{std::numbers::sqrt2, kInfinity};
    const double c_cf = area(cyl).value, c_q = area_by_quadrature(cyl).value;
    const double target = std::sqrt(2 * pi / e);
    const bool ok = std::fabs(s_cf - 4 / e) < 1e-9 && std::fabs(s_q - 4 / e) < 1e-8 &&
                    std::fabs(c_cf - target) < 1e-8 && std::fabs(c_q - target) < 1e-8;
    return {ok, "S(2) closed " + fmt("%.12f", s_cf) + " quad " + fmt("%.12f", s_q) + "; Cyl " + fmt("%.12f", c_cf) +
                    " quad " + fmt("%.12f", c_q)};
}

Outcome c2() {
    const double v = gaussian_volume_ball(kInfinity).value;
    return {std::fabs(v - 0.5445) <= 5e-4, "volume " + fmt("%.10f", v)};
}

Outcome c3() {
    const auto t0 = Clock::now();
    const BoundReport r = verify_capped_cylinders();
    const double dt = seconds_since(t0), R0 = arg(r, "R");
    const bool ok = r.computed_max >= 1.865 && r.computed_max <= 1.869 && R0 >= 1.754 && R0 <= 1.774 && dt < 30;
    return {ok, "max " + fmt("%.8f", r.computed_max) + " at R0 " + fmt("%.6f", R0) + ", " + fmt("%.3f s", dt)};
}

Outcome c4() {
    const BoundReport inf = verify_cones_infinite();
    const BoundReport fin = verify_cones_finite();
    const double R = arg(inf, "R"), phi = arg(inf, "phi");
    const bool ok = inf.computed_max >= 1.978 && inf.computed_max <= 1.982 && std::fabs(R - 0.2) < 1e-6 &&
                    std::fabs(phi) < 1e-6 && fin.computed_max <= 2 + 1e-9;
    return {ok, "max " + fmt("%.8f", inf.computed_max) + " at (" + fmt("%.6f", R) + ", " + fmt("%.6f", phi) +
                    "); finite-cone sample max " + fmt("%.10f", fin.computed_max)};
}

Outcome c5() {
    bool ok = true;
    double worst = -INFINITY;
    for (double R : {0.05, 0.1, 0.2}) {
        const MonotonicityTrace t = verify_cone_monotonicity(R, 50);
        ok = ok && t.derivative.size() == 50;
        for (double d : t.derivative) {
            ok = ok && d < 0;
            worst = std::max(worst, d);
        }
    }
    return {ok, "largest derivative " + fmt("%.6g", worst) + " over 3 x 50 points"};
}

Outcome c6() {
    const BoundReport r = verify_ellipsoids();
    const double closure = r.detail("closure_b0_value");
    const bool ok = r.computed_max <= 1.9365 + 2e-3;
    return {ok, "max over 0 < b <= a <= 4 is " + fmt("%.8f", r.computed_max) + " (limit b -> 0 at a = " +
                    fmt("%.4g", arg(r, "a")) + "); b = 0 closure " + fmt("%.8f", closure) +
                    (r.discrepancy ? " [discrepancy flagged]" : "")};
}

Outcome c7() {
    const auto t0 = Clock::now();
    const std::vector<int> gs{1, 5, 20};
    const std::vector<double> Rs = linspace(0.2, 5.0, 20);
    std::vector<InversionResult> res(gs.size() * Rs.size());
    parallel_for(int(res.size()), default_threads(), [&](int i) {
        res[i] = inversion_max_area(select_parameters(gs[i / Rs.size()], Rs[i % Rs.size()]), 200);
    });
    bool ok = true;
    double worst = 0, min_margin = INFINITY, s3 = 0, s4_excess = -INFINITY;
    for (const auto& r : res) {
        const SweepoutParams p = select_parameters(r.g, r.R);
        ok = ok && r.max_area < 2 && r.margin > 0 && r.steps[2].max_area < 1.99 &&
             r.steps[3].max_area < 2 - p.eta2 / 4;
        worst = std::max(worst, r.max_area);
        min_margin = std::min(min_margin, r.margin);
        s3 = std::max(s3, r.steps[2].max_area);
        s4_excess = std::max(s4_excess, r.steps[3].max_area - (2 - p.eta2 / 4));
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 300;
    return {ok, "60 cells: max " + fmt("%.11f", worst) + ", min margin " + fmt("%.4g", min_margin) +
                    ", step 3 max " + fmt("%.6f", s3) + ", step 4 max - bound " + fmt("%.4g", s4_excess) + ", " +
                    fmt("%.2f s", dt)};
}

Outcome c8() {
    const auto profs = edge_variant_profiles(select_parameters(1, 0.2), select_parameters(1, 5.0));
    bool ok = true;
    double worst = 0;
    int n = 0;
    for (const auto& s : profs)
        if (s.id.rfind("right-edge-ellipsoid", 0) == 0) {
            ++n;
            ok = ok && s.max_area < 2;
            worst = std::max(worst, s.max_area);
        }
    const double tail = 2 * std::exp(-25.0 / 4);
    ok = ok && n > 0 && 0.0365 > tail;
    return {ok, std::to_string(n) + " ellipsoid profiles, max " + fmt("%.6f", worst) + "; 0.0365 > " + fmt("%.5f", tail)};
}

Outcome c9() {
    const JacobiSolution p1{JacobiKind::phi1}, p2{JacobiKind::phi2};
    double res = 0;
    for (double r : linspace(0.05, 6.0, 2000))
        res = std::max({res, stability_residual(p1, r), stability_residual(p2, r)});
    const ZeroBracket z1 = phi1_zero(), z2 = phi2_zero();
    const auto grid = default_lambda_grid();
    const NoPositiveRadialReport npr = verify_no_positive_radial(grid);
    const bool ok = res < 1e-9 && z2.root < z1.root && z1.hi - z1.lo <= 1e-10 && z2.hi - z2.lo <= 1e-10 &&
                    npr.wronskian_max_rel_error < 1e-8 && npr.pass && grid.size() == 201;
    return {ok, "residual " + fmt("%.3g", res) + ", r1 " + fmt("%.12f", z1.root) + ", r2 " + fmt("%.12f", z2.root) +
                    ", Wronskian rel " + fmt("%.3g", npr.wronskian_max_rel_error) + ", " +
                    std::to_string(npr.certificates.size()) + " certificates, " + std::to_string(npr.failures.size()) +
                    " failures"};
}

Outcome c10() {
    const SphereComparison s = sphere_profile_first_zero();
    const bool ok = s.zero.root < std::numbers::pi / 2 - 1e-3 && s.cos_residual < 1e-10;
    return {ok, "phi0 " + fmt("%.12f", s.zero.root) + ", cos residual " + fmt("%.3g", s.cos_residual)};
}

Outcome c11() {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::vector<double> s = linspace(0.0, 3.0, 301);
    bool ok = true;
    double worst = -INFINITY;
    for (const CompositeSurface& surf : {single(Sphere{2.0}), single(Cylinder{std::numbers::sqrt2, kInfinity})})
        for (int i = 0; i < 5; ++i) {
            const std::array<double, 3> y{2 * u(rng) - 1, 0.0, 2 * u(rng) - 1};
            const MonotonicityCheck m = shrinker_monotonicity_check(surf, y, u(rng), s);
            ok = ok && m.pass && m.max_increase <= 1e-8;
            worst = std::max(worst, m.max_increase);
        }
    return {ok, "10 draws, largest grid increase " + fmt("%.3g", worst)};
}

Outcome c12() {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int passed = 0;
    for (int i = 0; i < 100; ++i) {
        Piece piece;
        if (i % 3 == 0) {
            const double r1 = 3 * u(rng);
            piece = DoubledAnnulus{r1, (i % 4 == 0) ? kInfinity : r1 + 0.1 + 3 * u(rng), 2 * u(rng)};
        } else if (i % 3 == 1) {
            piece = SphericalCaps{0.2 + 2.5 * u(rng), 1.5 * u(rng)};
        } else {
            const double r1 = 2 * u(rng);
            piece = DoubledCone{r1, r1 + 0.2 + 3 * u(rng), 1.5 * u(rng), 1.4 * u(rng)};
        }
        passed += translate_area_bound_check(upper_sheet(lower_to_profile(piece)), 0.05 + 2 * u(rng)).pass ? 1 : 0;
    }
    return {passed == 100, std::to_string(passed) + "/100 upper-half pieces"};
}

Outcome c13() {
    bool ok = true;
    for (int g = 1; g <= 10; ++g) {
        ok = ok && riemann_hurwitz_genus(2, 0, 2, g) == g && riemann_hurwitz_genus(1, 1, 1, g) == 0 &&
             riemann_hurwitz_genus(4, 0, 1, g, Admissibility::formula_only) == g + 1;
        bool rejected = false;
        try {
            riemann_hurwitz_genus(2, 0, 0, g);
        } catch (const std::domain_error&) {
            rejected = true;
        }
        ok = ok && rejected;
    }
    return {ok, "g = 1..10"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"normalization pins", c1},
        {"Gaussian volume", c2},
        {"capped cylinders", c3},
        {"infinite cones", c4},
        {"cone monotonicity", c5},
        {"ellipsoids", c6},
        {"sweepout matrix", c7},
        {"edge variants", c8},
        {"Jacobi fields", c9},
        {"sphere comparison", c10},
        {"shrinker monotonicity", c11},
        {"translation bound", c12},
        {"Riemann-Hurwitz table", c13},
    };
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > int(criteria.size())) {
            std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
            return 2;
        }
    }
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && int(i) + 1 != only) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
