#include "shrinkcert/bound_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "shrinkcert/gaussian_measure.hpp"
#include "shrinkcert/optimize.hpp"
#include "shrinkcert/special_functions.hpp"
#include "shrinkcert/surfaces.hpp"

namespace shrinkcert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

using Fn = std::function<double(const std::vector<double>&)>;

struct Scan {
    std::vector<double> x;
    double value = -1.0;
    double grid_value = -1.0;
    std::vector<double> grid_x;
    GridSpec grid;
    int evaluations = 0;
};

// Tensor grid scan, then compass polish from the best node. Slack is half the
// final cell diameter times the slope measured against the final neighbours.
Scan scan_and_polish(const Fn& f, const std::vector<std::vector<double>>& axes, const std::vector<double>& lo,
                     const std::vector<double>& hi, const VerifierOptions& opt, int resolution) {
    const std::size_t dim = axes.size();
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.size();
    std::vector<double> values(total);
    auto node = [&](std::size_t k) {
        std::vector<double> x(dim);
        for (std::size_t d = dim; d-- > 0;) {
            x[d] = axes[d][k % axes[d].size()];
            k /= axes[d].size();
        }
        return x;
    };
    parallel_for(int(total), default_threads(), [&](int k) { values[k] = f(node(std::size_t(k))); });
    std::size_t best = 0;
    for (std::size_t k = 1; k < total; ++k)
        if (values[k] > values[best]) best = k;
    Scan s;
    s.grid_x = node(best);
    s.grid_value = values[best];
    s.evaluations = int(total);
    std::vector<double> step(dim);
    for (std::size_t d = 0; d < dim; ++d)
        step[d] = axes[d].size() > 1 ? (axes[d].back() - axes[d].front()) / double(axes[d].size() - 1) : 0.0;
    int rounds = opt.rounds;
    if (opt.polish_tol > 0.0 && opt.shrink > 0.0 && opt.shrink < 1.0) {
        double coarsest = 0.0;
        for (std::size_t d = 0; d < dim; ++d)
            if (hi[d] > lo[d]) coarsest = std::max(coarsest, step[d] / (hi[d] - lo[d]));
        if (coarsest > 0.0)
            rounds = std::max(rounds, int(std::ceil(std::log(coarsest / opt.polish_tol) / std::log(1.0 / opt.shrink))) + 1);
    }
    const PatternResult pr = pattern_search(f, s.grid_x, step, lo, hi, rounds, opt.shrink);
    s.evaluations += pr.evaluations;
    s.x = pr.x;
    s.value = std::max(pr.value, s.grid_value);
    if (pr.value < s.grid_value) s.x = s.grid_x;
    double diam2 = 0.0;
    double lip = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
        const double st = pr.final_step[d];
        if (st <= 0.0) continue;
        diam2 += st * st;
        for (double sgn : {1.0, -1.0}) {
            std::vector<double> x = s.x;
            x[d] = std::clamp(x[d] + sgn * st, lo[d], hi[d]);
            if (x[d] == s.x[d]) continue;
            lip = std::max(lip, std::fabs(f(x) - s.value) / std::fabs(x[d] - s.x[d]));
            ++s.evaluations;
        }
    }
    s.grid = {resolution, rounds, opt.shrink, std::sqrt(diam2), lip, 0.5 * std::sqrt(diam2) * lip};
    return s;
}

bool on_box_boundary(const std::vector<double>& x, const std::vector<double>& lo, const std::vector<double>& hi,
                     std::size_t d) {
    const double tol = 1e-9 * std::max(1.0, hi[d] - lo[d]);
    return std::fabs(x[d] - lo[d]) < tol || std::fabs(x[d] - hi[d]) < tol;
}

void finish(BoundReport& r) {
    r.margin = r.paper_bound - r.computed_max;
    r.pass = r.computed_max <= r.paper_bound + r.grid.slack;
    r.details.push_back({"upper_with_slack", r.computed_max + r.grid.slack + r.tail_bound});
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

double infinite_cone(double R, double phi) { return area(DoubledCone{R, kInfinity, 0.0, phi}).value; }

}  // namespace

double BoundReport::detail(const std::string& key) const {
    for (const auto& d : details)
        if (d.name == key) return d.value;
    throw std::out_of_range("no detail named " + key);
}

double capped_cylinder_bound(double R, double h) {
    const double s = R * R * std::exp(-0.25 * (R * R + h * h));
    const double c = R * std::exp(-0.25 * R * R) * kSqrtPi * erf(0.5 * h).value;
    return s + c;
}

double ellipsoid_area_formula(double a, double b, const QuadratureSpec& spec) {
    if (!(a > 0.0) || !(b >= 0.0) || b > a) throw std::invalid_argument("ellipsoid needs 0 <= b <= a");
    const double q = (b / a) * (b / a);
    auto f = [&](double t) {
        return a * a * std::exp(-0.25 * a * a + 0.25 * (a * a - b * b) * t * t) * std::sqrt(t * t + q * (1.0 - t * t));
    };
    const QuadResult r = integrate(f, 0.0, 1.0, spec);
    if (!r.converged) throw std::runtime_error("ellipsoid quadrature did not converge");
    return r.value;
}

double capped_graph_area(double h, double a, double b, const QuadratureSpec& spec) {
    if (!(h >= 0.0) || !(a > 0.0) || b < h || b > a) throw std::invalid_argument("capped graph needs 0 <= h <= b <= a");
    if (b == h) return std::exp(-0.25 * h * h);
    const double q = (b / a) * (b / a);
    auto f = [&](double t) {
        return 0.5 * a * a * std::exp(-0.25 * a * a + 0.25 * (a * a - b * b) * t * t) *
               std::sqrt(t * t + q * (1.0 - t * t));
    };
    const QuadResult r = integrate(f, h / b, 1.0, spec);
    if (!r.converged) throw std::runtime_error("capped graph quadrature did not converge");
    const double rj2 = a * a * (1.0 - (h / b) * (h / b));
    return r.value + std::exp(-0.25 * (h * h + rj2));
}

BoundReport verify_capped_cylinders(const VerifierOptions& opt) {
    const int n = opt.resolution > 0 ? opt.resolution : 600;
    const double rmax = 12.0;
    BoundReport r;
    r.name = "capped-cylinders";
    r.paper_bound = 1.867;
    auto F = [](const std::vector<double>& x) { return capped_cylinder_bound(x[0], 2.0 / x[0]); };
    const std::vector<double> lo{rmax / n}, hi{rmax};
    const Scan s = scan_and_polish(F, {linspace(rmax / n, rmax, n)}, lo, hi, opt, n);

    auto sphere_slice = [](const std::vector<double>& x) { return x[0] * x[0] * std::exp(-0.25 * x[0] * x[0]); };
    auto cyl_slice = [](const std::vector<double>& x) { return kSqrtPi * x[0] * std::exp(-0.25 * x[0] * x[0]); };
    const Scan s0 = scan_and_polish(sphere_slice, {linspace(0.0, rmax, n)}, {0.0}, hi, opt, n);
    const Scan sinf = scan_and_polish(cyl_slice, {linspace(0.0, rmax, n)}, {0.0}, hi, opt, n);

    // Two-dimensional scan without the stationarity reduction, as a cross-check.
    const int m = std::max(40, n / 5);
    auto G = [](const std::vector<double>& x) { return capped_cylinder_bound(x[0], x[1]); };
    const Scan s2 = scan_and_polish(G, {linspace(rmax / m, rmax, m), linspace(0.0, rmax, m)}, {rmax / m, 0.0},
                                    {rmax, rmax}, opt, m);

    r.computed_max = std::max({s.value, s0.value, sinf.value});
    r.argmax = {{"R", s.x[0]}, {"h", 2.0 / s.x[0]}};
    r.grid = s.grid;
    // R > 12: G <= (R^2 + sqrt(pi) R) e^{-R^2/4}; h beyond the grid only approaches the cylinder slice.
    r.tail_bound = (rmax * rmax + kSqrtPi * rmax) * std::exp(-0.25 * rmax * rmax);
    r.details = {{"reduced_max", s.value},
                 {"R0", s.x[0]},
                 {"h0", 2.0 / s.x[0]},
                 {"sphere_slice_max", s0.value},
                 {"sphere_slice_argmax", s0.x[0]},
                 {"cylinder_slice_max", sinf.value},
                 {"cylinder_slice_argmax", sinf.x[0]},
                 {"grid2d_max", s2.value},
                 {"grid2d_R", s2.x[0]},
                 {"grid2d_h", s2.x[1]},
                 {"exact_caps_at_argmax",
                  area(Cylinder{s.x[0], 2.0 / s.x[0]}).value + area(SphericalCaps{s.x[0], 2.0 / s.x[0]}).value},
                 {"delta1_measured", 2.0 - r.computed_max}};
    finish(r);
    if (s.value < s0.value || s.value < sinf.value || s2.value > s.value + 1e-9 || on_box_boundary(s.x, lo, hi, 0)) {
        r.pass = false;
        r.note = "maximum not attained at an interior stationary point of the reduced function";
    }
    return r;
}

BoundReport verify_cones_finite(const VerifierOptions& opt) {
    const int n = opt.resolution > 0 ? opt.resolution : 24;
    BoundReport r;
    r.name = "cones-finite";
    r.paper_bound = 2.0;
    const std::vector<double> r1 = linspace(0.0, 12.0, n);
    std::vector<double> widths = logspace(1e-3, 24.0, n);
    widths.push_back(kInfinity);
    const std::vector<double> phis = linspace(0.0, kHalfPi, n);
    const std::size_t nw = widths.size();
    std::vector<double> vals(r1.size() * nw * phis.size(), 0.0);
    parallel_for(int(vals.size()), default_threads(), [&](int k) {
        const std::size_t ip = std::size_t(k) % phis.size();
        const std::size_t iw = (std::size_t(k) / phis.size()) % nw;
        const std::size_t ir = std::size_t(k) / (phis.size() * nw);
        const double a = r1[ir];
        const double b = std::isinf(widths[iw]) ? kInfinity : a + widths[iw];
        const double phi = phis[ip];
        if (phi == kHalfPi && std::isfinite(b)) {
            vals[k] = a > 0.0 ? area(Cylinder{a, b - a}).value : 0.0;
            return;
        }
        vals[k] = area(DoubledCone{a, b, 0.0, phi}, opt.quad).value;
    });
    std::size_t best = 0;
    double finite_max = 0.0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (vals[k] > vals[best]) best = k;
        const std::size_t iw = (k / phis.size()) % nw;
        if (std::isfinite(widths[iw])) finite_max = std::max(finite_max, vals[k]);
    }
    const std::size_t ip = best % phis.size();
    const std::size_t iw = (best / phis.size()) % nw;
    const std::size_t ir = best / (phis.size() * nw);
    r.computed_max = vals[best];
    r.argmax = {{"R1", r1[ir]}, {"R2", std::isinf(widths[iw]) ? kInfinity : r1[ir] + widths[iw]}, {"phi", phis[ip]}};
    r.grid = {n, 0, 0.0, 0.0, 0.0, 0.0};
    r.tail_bound = (2.0 + kSqrtPi * 12.0) * std::exp(-36.0);
    r.details = {{"samples", double(vals.size())},
                 {"finite_R2_max", finite_max},
                 {"at_0.2_inf_0", area(DoubledCone{0.2, kInfinity, 0.0, 0.0}).value},
                 {"at_1_2_pi/4", area(DoubledCone{1.0, 2.0, 0.0, 0.25 * kPi}, opt.quad).value}};
    finish(r);
    r.pass = r.computed_max <= 2.0 + 1e-9;
    r.note = "supremum 2 is attained only in the closure, at (0, inf, 0)";
    return r;
}

BoundReport verify_cones_infinite(const VerifierOptions& opt) {
    const int n = opt.resolution > 0 ? opt.resolution : 120;
    BoundReport r;
    r.name = "cones-infinite";
    r.paper_bound = 2.0 - 0.02;
    auto f = [](const std::vector<double>& x) { return infinite_cone(x[0], x[1]); };
    const std::vector<double> lo{0.2, 0.0}, hi{12.0, kHalfPi};
    const Scan s = scan_and_polish(f, {linspace(0.2, 12.0, n), linspace(0.0, kHalfPi, n)}, lo, hi, opt, n);
    r.computed_max = s.value;
    r.argmax = {{"R", s.x[0]}, {"phi", s.x[1]}};
    r.grid = s.grid;
    r.tail_bound = (2.0 + kSqrtPi * 12.0) * std::exp(-36.0);
    // Closed form versus profile quadrature at the argmax and a spread of interior points.
    double worst = std::fabs(area_by_quadrature(DoubledCone{s.x[0], kInfinity, 0.0, s.x[1]}, opt.quad).value - s.value);
    for (int i = 1; i <= 8; ++i) {
        const double R = 0.2 + 11.8 * i / 9.0;
        const double phi = kHalfPi * i / 9.5;
        worst = std::max(worst, std::fabs(area_by_quadrature(DoubledCone{R, kInfinity, 0.0, phi}, opt.quad).value -
                                          infinite_cone(R, phi)));
    }
    r.details = {{"closed_vs_quadrature", worst},
                 {"cylinder_limit_at_R0", area(Cylinder{s.x[0], kInfinity}).value},
                 {"delta2_largest_admissible", 2.0 - s.value}};
    finish(r);
    const double closure = 2.0 * std::exp(-0.01);
    if (r.computed_max > r.paper_bound && s.value <= closure * (1.0 + 1e-12)) {
        r.discrepancy = true;
        r.note = "sup over R > .2 is the boundary value 2e^{-0.01} = " + fmt(closure) + ", above 2 - 0.02 by " +
                 fmt(closure - r.paper_bound) + "; any delta2 <= " + fmt(2.0 - closure) + " is certified";
    }
    return r;
}

MonotonicityTrace verify_cone_monotonicity(double R, int points) {
    if (!(R > 0.0 && R <= 0.2)) throw std::invalid_argument("cone monotonicity needs 0 < R <= 0.2");
    MonotonicityTrace t;
    t.R = R;
    t.growth_factor = kSqrtPi * R * std::exp(0.25 * R * R);
    t.pass = t.growth_factor <= 0.5;
    const double h = 1e-5;
    auto f = [&](double phi) { return infinite_cone(R, phi); };
    for (int k = 1; k <= points; ++k) {
        const double phi = kHalfPi * double(k) / points;
        double d;
        if (k < points) {
            auto central = [&](double s) { return (f(phi + s) - f(phi - s)) / (2.0 * s); };
            d = (4.0 * central(0.5 * h) - central(h)) / 3.0;
        } else {
            auto backward = [&](double s) { return (f(phi) - f(phi - s)) / s; };
            d = 2.0 * backward(0.5 * h) - backward(h);
        }
        const double bound = 2.0 * std::exp(-0.25 * R * R) * std::sin(phi) * (-1.0 + t.growth_factor);
        t.phi.push_back(phi);
        t.derivative.push_back(d);
        t.analytic_bound.push_back(bound);
        if (!(d < 0.0)) t.pass = false;
    }
    return t;
}

BoundReport verify_translated_cones(const std::vector<double>& h_grid, const VerifierOptions& opt) {
    const int n = opt.resolution > 0 ? opt.resolution : 40;
    BoundReport r;
    r.name = "translated-cones";
    r.paper_bound = 2.0 - 0.02;
    const std::vector<double> rs_hi = linspace(0.2 + 1e-9, 12.0, n);
    const std::vector<double> rs_lo = linspace(0.2 / n, 0.2, std::max(4, n / 4));
    const std::vector<double> phis = linspace(0.0, kHalfPi, std::max(4, n / 2));
    struct Sample {
        double R, phi, h, value, untranslated;
    };
    auto run = [&](const std::vector<double>& rs) {
        std::vector<Sample> out(rs.size() * phis.size() * h_grid.size());
        parallel_for(int(out.size()), default_threads(), [&](int k) {
            const std::size_t ih = std::size_t(k) % h_grid.size();
            const std::size_t ip = (std::size_t(k) / h_grid.size()) % phis.size();
            const std::size_t ir = std::size_t(k) / (h_grid.size() * phis.size());
            const double R = rs[ir], phi = phis[ip], h = h_grid[ih];
            out[k] = {R, phi, h, area(DoubledCone{R, kInfinity, h, phi}, opt.quad).value, infinite_cone(R, phi)};
        });
        return out;
    };
    const std::vector<Sample> hi_samples = run(rs_hi);
    const std::vector<Sample> lo_samples = run(rs_lo);
    double simple_excess = -1.0;
    for (const auto& s : hi_samples) {
        simple_excess = std::max(simple_excess, s.value - std::exp(-0.25 * s.h * s.h) * s.untranslated);
    }
    double disk_excess = -1.0;
    for (const auto& s : lo_samples) {
        disk_excess = std::max(disk_excess, s.value - area(DoubledAnnulus{s.R, kInfinity, s.h}).value);
        simple_excess = std::max(simple_excess, s.value - std::exp(-0.25 * s.h * s.h) * s.untranslated);
    }
    Scan best;
    double best_h = 0.0;
    for (double h : h_grid) {
        auto f = [&](const std::vector<double>& x) { return area(DoubledCone{x[0], kInfinity, h, x[1]}, opt.quad).value; };
        const Scan s = scan_and_polish(f, {rs_hi, phis}, {rs_hi.front(), 0.0}, {12.0, kHalfPi}, opt, n);
        if (s.value > best.value) {
            best = s;
            best_h = h;
        }
    }
    r.computed_max = best.value;
    r.argmax = {{"R", best.x[0]}, {"phi", best.x[1]}, {"h", best_h}};
    r.grid = best.grid;
    r.tail_bound = (2.0 + kSqrtPi * 12.0) * std::exp(-36.0);
    const double spot1 = area(DoubledCone{0.3, kInfinity, 1.0, kPi / 6}, opt.quad).value;
    const double spot2 = area(DoubledCone{0.1, kInfinity, 0.5, kPi / 3}, opt.quad).value;
    r.details = {{"small_R_excess_over_disk", disk_excess},
                 {"translation_factor_excess", simple_excess},
                 {"spot_R.3_h1_pi/6", spot1},
                 {"spot_R.3_h1_pi/6_bound", std::exp(-0.25) * (2.0 - 0.02)},
                 {"spot_R.1_h.5_pi/3", spot2},
                 {"spot_R.1_h.5_pi/3_bound", 2.0 * std::exp(-0.0025) * std::exp(-0.0625)}};
    finish(r);
    const bool side_ok = disk_excess <= 1e-10 && simple_excess <= 1e-10 && spot1 <= std::exp(-0.25) * 1.98 &&
                         spot2 <= 2.0 * std::exp(-0.0025 - 0.0625);
    r.pass = r.pass && side_ok;
    const double closure = 2.0 * std::exp(-0.01);
    if (side_ok && r.computed_max > r.paper_bound && best.value <= closure * (1.0 + 1e-12)) {
        r.discrepancy = true;
        r.note = "for h near 0 the R > .2 side inherits the untranslated boundary value 2e^{-0.01} = " + fmt(closure) +
                 " > 1.98";
    }
    return r;
}

BoundReport verify_ellipsoids(const VerifierOptions& opt) {
    const int n = opt.resolution > 0 ? opt.resolution : 80;
    BoundReport r;
    r.name = "ellipsoids";
    r.paper_bound = 1.9365;
    // x = (a, b/a); b/a ranges over (0, 1].
    const double s_min = 1e-9;
    auto f = [&](const std::vector<double>& x) { return ellipsoid_area_formula(x[0], x[0] * x[1], opt.quad); };
    const std::vector<double> lo{4.0 / n, s_min}, hi{4.0, 1.0};
    const Scan s = scan_and_polish(f, {linspace(4.0 / n, 4.0, n), linspace(1.0 / n, 1.0, n)}, lo, hi, opt, n);
    const double a0 = s.x[0];
    const double b0 = s.x[0] * s.x[1];
    r.computed_max = s.value;
    r.argmax = {{"a", a0}, {"b", b0}};
    r.grid = s.grid;
    const double closure = 2.0 * (1.0 - std::exp(-4.0));
    // Smallest b with max_{b <= a <= 4} |E(a, b)| <= 1.9365; the area decreases in b along the scan.
    auto max_over_a = [&](double b) {
        double m = 0.0;
        for (double a : linspace(std::max(b, 1e-6), 4.0, 161)) m = std::max(m, ellipsoid_area_formula(a, std::min(a, b), opt.quad));
        return m;
    };
    const double b_star = bisect_threshold([&](double b) { return max_over_a(b) <= r.paper_bound; }, 1e-6, 4.0, 1e-6);
    r.details = {{"closure_b0_value", closure},
                 {"closure_b0_a", 4.0},
                 {"grid_max", s.grid_value},
                 {"profile_quadrature_at_argmax", area(Ellipsoid{a0, b0}, opt.quad).value},
                 {"b_threshold_for_bound", b_star},
                 {"max_over_a_at_b_threshold", max_over_a(b_star)},
                 {"sphere_2_2", ellipsoid_area_formula(2.0, 2.0, opt.quad)},
                 {"delta3_measured", 2.0 - s.value},
                 {"two_minus_delta3", 2.0 - 0.0365}};
    finish(r);
    if (on_box_boundary(s.x, lo, hi, 0) && std::fabs(s.x[0] - 4.0) > 1e-9) r.pass = false;
    if (!r.pass) {
        r.discrepancy = true;
        r.note = "sup over 0 < b <= a <= 4 is approached as b -> 0 at a = 4 and equals the doubled-disk value " +
                 fmt(closure) + "; the bound 1.9365 holds only for b >= " + fmt(b_star) + ", while 2 - 0.0365 = 1.9635 holds throughout";
    }
    return r;
}

BoundReport verify_capped_graphs(const VerifierOptions& opt) {
    const int n = opt.resolution > 0 ? opt.resolution : 24;
    BoundReport r;
    r.name = "capped-graphs";
    r.paper_bound = 1.0;  // |z+| + h^2/4 <= 1
    const std::vector<double> as = linspace(3.0, 8.0, std::max(3, n / 2));
    const std::vector<double> hs = linspace(0.0, 1.0, std::max(3, n / 2));
    const int nb = n + 1;
    struct Row {
        double a, h;
        std::vector<double> values;
    };
    std::vector<Row> rows(as.size() * hs.size());
    parallel_for(int(rows.size()), default_threads(), [&](int k) {
        Row& row = rows[k];
        row.a = as[std::size_t(k) / hs.size()];
        row.h = hs[std::size_t(k) % hs.size()];
        for (double b : linspace(row.h, row.a, nb)) row.values.push_back(capped_graph_area(row.h, row.a, b, opt.quad));
    });
    double worst = -1e300, worst_a = 0, worst_h = 0, corrected = -1e300;
    int non_monotone = 0;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            const double v = row.values[i] + 0.25 * row.h * row.h;
            if (v > worst) {
                worst = v;
                worst_a = row.a;
                worst_h = row.h;
            }
            corrected = std::max(corrected, row.values[i] - std::exp(-0.25 * row.h * row.h));
            if (i > 0 && row.values[i] > row.values[i - 1] + 1e-12) ++non_monotone;
        }
    }
    r.computed_max = worst;
    r.argmax = {{"a", worst_a}, {"h", worst_h}, {"b", worst_h}};
    r.grid = {n, 0, 0.0, 0.0, 0.0, 1e-10};
    const double dual = area(CappedGraph{0.5, 3.0, 1.5, 1}, opt.quad).value;
    r.details = {{"max_excess_over_1_minus_h2/4", worst - 1.0},
                 {"max_excess_over_exp(-h^2/4)", corrected},
                 {"non_monotone_steps", double(non_monotone)},
                 {"h0_a3_b3", capped_graph_area(0.0, 3.0, 3.0, opt.quad)},
                 {"formula_vs_profile_a3_h.5_b1.5", std::fabs(capped_graph_area(0.5, 3.0, 1.5, opt.quad) - dual)}};
    finish(r);
    const bool corrected_ok = non_monotone == 0 && corrected <= 1e-10;
    if (!r.pass && corrected_ok) {
        r.discrepancy = true;
        r.note = "at b = h the graph is the flat sheet of area e^{-h^2/4} > 1 - h^2/4; monotone decrease in b holds "
                 "and e^{-h^2/4} is the bound that survives";
    }
    if (!corrected_ok) {
        r.pass = false;
        r.discrepancy = false;
        r.note = "monotone decrease in b failed on the scan";
    }
    return r;
}

std::vector<std::string> bound_names() {
    return {"capped-cylinders", "cones-finite", "cones-infinite", "cone-monotonicity",
            "translated-cones", "ellipsoids",   "capped-graphs"};
}

std::vector<BoundReport> verify_bounds(const std::string& name, const VerifierOptions& opt) {
    std::vector<BoundReport> out;
    const bool all = name == "all";
    bool known = all;
    auto want = [&](const char* n) {
        const bool w = all || name == n;
        known = known || w;
        return w;
    };
    if (want("capped-cylinders")) out.push_back(verify_capped_cylinders(opt));
    if (want("cones-finite")) out.push_back(verify_cones_finite(opt));
    if (want("cones-infinite")) out.push_back(verify_cones_infinite(opt));
    if (want("cone-monotonicity")) {
        for (double R : {0.05, 0.1, 0.2}) {
            const MonotonicityTrace t = verify_cone_monotonicity(R, 50);
            BoundReport b;
            b.name = "cone-monotonicity";
            b.paper_bound = 0.0;
            std::size_t k = 0;
            for (std::size_t i = 1; i < t.derivative.size(); ++i)
                if (t.derivative[i] > t.derivative[k]) k = i;
            b.computed_max = t.derivative[k];
            b.argmax = {{"R", R}, {"phi", t.phi[k]}};
            b.grid = {int(t.phi.size()), 0, 0.0, 0.0, 0.0, 0.0};
            double bound_gap = -1e300;
            for (std::size_t i = 0; i < t.derivative.size(); ++i)
                bound_gap = std::max(bound_gap, t.derivative[i] - t.analytic_bound[i]);
            b.details = {{"growth_factor", t.growth_factor}, {"max_derivative_minus_analytic_bound", bound_gap}};
            b.margin = -b.computed_max;
            b.pass = t.pass;
            out.push_back(b);
        }
    }
    if (want("translated-cones")) out.push_back(verify_translated_cones({0.0, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0}, opt));
    if (want("ellipsoids")) out.push_back(verify_ellipsoids(opt));
    if (want("capped-graphs")) out.push_back(verify_capped_graphs(opt));
    if (!known) throw std::invalid_argument("unknown bound " + name);
    return out;
}

}  // namespace shrinkcert
