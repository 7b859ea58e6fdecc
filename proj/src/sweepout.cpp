#include "shrinkcert/sweepout.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "shrinkcert/optimize.hpp"

namespace shrinkcert {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
const double kSphereEntropy = 4.0 / std::numbers::e;

double largest_satisfying(const std::function<bool(double)>& ok, double lo, double hi) {
    if (ok(hi)) return hi;
    if (!ok(lo)) throw std::runtime_error("threshold inequality infeasible on the search interval");
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

double smallest_satisfying(const std::function<bool(double)>& ok, double lo, double hi) {
    if (ok(lo)) return lo;
    if (!ok(hi)) throw std::runtime_error("threshold inequality infeasible on the search interval");
    for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

double ends_weight(double Omega) { return Omega * Omega * std::exp(-0.25 * Omega * Omega); }

double small_capped_cylinder(double h) {
    return area(Cylinder{h, h}).value + area(DoubledAnnulus{0.0, h, h}).value;
}

// Small disk of radius eps cut from a surface at distance rho from the origin.
double disk_area(double eps, double rho) { return 0.25 * eps * eps * std::exp(-0.25 * rho * rho); }

void add(CompositeSurface& s, const Piece& piece, const std::string& role) { s.pieces.push_back({piece, 1, role}); }

void add_tubes(CompositeSurface& s, const SweepoutParams& p, double eps, double rho_in, double rho_out) {
    add(s, RayTubes{p.g + 1, eps, rho_in, rho_out}, "ray_tubes");
    s.deductions.push_back({"inner_disks_D1", (p.g + 1) * disk_area(eps, rho_in)});
    s.deductions.push_back({"outer_disks_D2", (p.g + 1) * disk_area(eps, rho_out)});
}

void require_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("step parameter t must lie in [0, 1]");
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

double SweepoutParams::r_max() const { return std::max(0.5 * R, R - 1.0); }
double SweepoutParams::r_necks() const { return 0.5 * (R + r_max()); }
double SweepoutParams::ends_budget() const { return E * ends_weight(Omega); }

SweepoutParams select_parameters(int g, double R, const SweepoutTargets& tg) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    if (!(R >= 0.2 - 1e-12 && R <= 5.0 + 1e-12)) throw std::invalid_argument("R must lie in [.2, 5]");
    if (!(tg.catenoid_C > 0.0 && tg.catenoid_C < 0.25)) throw std::invalid_argument("catenoid C must lie in (0, 1/4)");
    SweepoutParams p;
    p.g = g;
    p.R = R;
    p.catenoid_C = tg.catenoid_C;
    p.eta1 = tg.eta1;
    p.eta2 = tg.eta2;
    p.iota = tg.iota;
    p.delta1 = tg.delta1;
    p.delta2 = tg.delta2;
    p.delta3 = tg.delta3;
    p.h0 = tg.h0;
    p.h_c = tg.h_c;

    const double eps_probe = 1e-8;
    p.A = area(RayTubes{g + 1, eps_probe, 0.0, kInfinity}).value / eps_probe;
    for (int k = 0; k <= 40; ++k) {
        const double h = tg.h0 * std::ldexp(1.0, -k);
        p.B = std::max(p.B, small_capped_cylinder(h) / (h * h));
    }
    const double A = p.A, B = p.B;
    const double cap = std::min(tg.h0, 0.1);
    p.h1 = largest_satisfying([&](double h) { return B * h * h + A * h * h * h < 2.0 - kSphereEntropy; }, 0.0, 1.0);
    p.h2 = largest_satisfying([&](double h) { return A * h * h * h + B * h * h <= 0.5 * tg.delta1; }, 0.0, 1.0);
    p.h3 = largest_satisfying([&](double h) { return 5.0 * h + A * h * h * h + B * h * h <= 0.25 * tg.delta2; }, 0.0,
                              1.0);
    p.h4 = largest_satisfying([&](double h) { return A * h * h * h + std::pow(h, 4) / 16.0 <= 0.25 * tg.eta2; }, 0.0,
                              1.0);
    p.h = std::min({tg.h_c, cap, p.h1, p.h2, p.h3, p.h4});
    if (!(p.h > 0.0)) throw std::runtime_error("no admissible h");
    p.eps = std::pow(p.h, 3);
    p.delta_tubes = std::pow(p.h, 3);

    const double omega_lo = std::max(R, 4.0), omega_hi = 30.0;
    QuadratureSpec rel;
    rel.abs_tol = 1e-300;
    for (double Om : linspace(omega_lo, omega_hi, 14))
        for (double t : linspace(0.0, 1.0, 11))
            p.E = std::max(p.E, area(SweptEnds{R, Om, p.h, t}, rel).value / ends_weight(Om));
    const double E = p.E;
    p.Omega1 = smallest_satisfying([&](double w) { return E * ends_weight(w) <= 0.25 * tg.delta2; }, omega_lo, omega_hi);
    p.Omega2 = smallest_satisfying([&](double w) { return E * ends_weight(w) <= 0.25 * tg.eta2; }, omega_lo, omega_hi);
    p.Omega3 = smallest_satisfying([&](double w) { return E * ends_weight(w) <= p.eps; }, omega_lo, omega_hi);
    p.Omega = std::max({R, omega_lo, p.Omega1, p.Omega2, p.Omega3});

    p.F = area(VerticalTubes{g + 1, eps_probe, p.r_necks(), p.h}).value / eps_probe;
    return p;
}

std::vector<InequalityCheck> check_invariants(const SweepoutParams& p) {
    std::vector<InequalityCheck> out;
    auto le = [&](const std::string& name, double lhs, double rhs) { out.push_back({name, lhs, rhs, lhs <= rhs}); };
    auto lt = [&](const std::string& name, double lhs, double rhs) { out.push_back({name, lhs, rhs, lhs < rhs}); };
    const double A = p.A, B = p.B;
    le("h <= min(h_c, h0, h1, h2, h3, h4, .1)", p.h, std::min({p.h_c, p.h0, p.h1, p.h2, p.h3, p.h4, 0.1}));
    le("max(R, Omega1, Omega2, Omega3) <= Omega", std::max({p.R, p.Omega1, p.Omega2, p.Omega3}), p.Omega);
    lt("B h1^2 + A h1^3 < 2 - 4/e", B * p.h1 * p.h1 + A * std::pow(p.h1, 3), 2.0 - kSphereEntropy);
    le("A h2^3 + B h2^2 <= delta1/2", A * std::pow(p.h2, 3) + B * p.h2 * p.h2, 0.5 * p.delta1);
    le("E Omega1^2 e^{-Omega1^2/4} <= delta2/4", p.E * ends_weight(p.Omega1), 0.25 * p.delta2);
    le("5 h3 + A h3^3 + B h3^2 <= delta2/4", 5.0 * p.h3 + A * std::pow(p.h3, 3) + B * p.h3 * p.h3, 0.25 * p.delta2);
    le("A h4^3 + h4^4/16 <= eta2/4", A * std::pow(p.h4, 3) + std::pow(p.h4, 4) / 16.0, 0.25 * p.eta2);
    le("E Omega2^2 e^{-Omega2^2/4} <= eta2/4", p.E * ends_weight(p.Omega2), 0.25 * p.eta2);
    le("E Omega^2 e^{-Omega^2/4} <= h^3", p.ends_budget(), std::pow(p.h, 3));
    le("|F_h(h)| <= B h^2", small_capped_cylinder(p.h), B * p.h * p.h);
    lt("0 < C < 1/4", p.catenoid_C, 0.25);
    return out;
}

bool params_valid(const SweepoutParams& p) {
    const auto checks = check_invariants(p);
    return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.pass; });
}

CompositeSurface step_surface(int step, double t, const SweepoutParams& p, ConeConvention conv) {
    require_t(t);
    CompositeSurface s;
    s.label = "step " + std::to_string(step) + " t=" + fmt(t);
    const double h = p.h, R = p.R, Om = p.Omega, L = p.Omega - p.h;
    switch (step) {
        case 1: {
            if (t == 0.0) {
                s.label += " (rays, zero area)";
                return s;
            }
            add(s, Sphere{R / t}, "outer_sphere");
            add(s, Cylinder{h * t, h * t}, "inner_cylinder");
            add(s, DoubledAnnulus{0.0, h * t, h * t}, "inner_disks");
            add_tubes(s, p, t * p.eps, h * t, R / t);
            return s;
        }
        case 2:
            if (t > 0.0) add(s, Cylinder{R, Om * t}, "outer_cylinder");
            add(s, SphericalCaps{R, Om * t}, "outer_caps");
            add(s, Cylinder{h, h}, "inner_cylinder");
            add(s, DoubledAnnulus{0.0, h, h}, "inner_disks");
            add_tubes(s, p, p.eps, h, R);
            return s;
        case 3: {
            if (conv == ConeConvention::literal_tilt) {
                if (t == 0.0 || t == 1.0)
                    throw std::domain_error("literal tilt is degenerate at the step endpoints");
                add(s, DoubledCone{R, R + std::sin(t * kHalfPi) * L, h, t * kHalfPi}, "cone");
                add(s, Cylinder{R, h}, "collar");
            } else if (t == 0.0) {
                add(s, Cylinder{R, Om}, "outer_cylinder");
            } else {
                add(s, DoubledCone{R, R + std::sin(t * kHalfPi) * L, h, (1.0 - t) * kHalfPi}, "cone");
                add(s, Cylinder{R, h}, "collar");
            }
            add(s, SweptEnds{R, Om, h, t}, "ends");
            add(s, Cylinder{h, h}, "inner_cylinder");
            add(s, DoubledAnnulus{0.0, h, h}, "inner_disks");
            add_tubes(s, p, p.eps, h, R);
            return s;
        }
        case 4: {
            const double rt = h + t * (p.r_max() - h);
            add(s, Cylinder{rt, h}, "inner_cylinder");
            add(s, DoubledAnnulus{0.0, rt, h}, "inner_disks");
            add(s, DoubledAnnulus{R, R + L, h}, "sheets");
            add(s, SweptEnds{R, Om, h, 1.0}, "ends");
            add(s, Cylinder{R, h}, "collar");
            add_tubes(s, p, p.eps, rt, R);
            return s;
        }
        case 5: {
            if (t == 0.0) {
                CompositeSurface s4 = step_surface(4, 1.0, p);
                s4.label = s.label;
                return s4;
            }
            if (t < 1.0)
                throw std::domain_error("step 5 interior surfaces are not modeled; they are charged 2 - C h^2");
            const double rn = p.r_necks();
            add(s, DoubledAnnulus{0.0, Om + R - h, h}, "sheets");
            add(s, SweptEnds{R, Om, h, 1.0}, "ends");
            add(s, VerticalTubes{p.g + 1, p.delta_tubes, rn, h}, "vertical_tubes");
            s.deductions.push_back(
                {"sheet_disks_D3", 2.0 * (p.g + 1) * disk_area(p.delta_tubes, std::hypot(rn, h))});
            return s;
        }
        default:
            throw std::invalid_argument("step must be 1..5");
    }
}

namespace {

AreaResult charge_surface(const CompositeSurface& s, const SweepoutParams& p, std::vector<NamedValue>* terms,
                          double* actual = nullptr) {
    AreaResult out;
    double uncharged = 0.0;
    bool quad = false;
    for (const auto& term : s.pieces) {
        const AreaResult a = area(term.piece);
        quad = quad || a.method != AreaMethod::closed_form;
        double charge = a.value;
        if (std::holds_alternative<SweptEnds>(term.piece)) {
            charge = std::max(a.value, p.ends_budget());
            if (terms) terms->push_back({"ends_actual", a.value});
        }
        out.value += term.multiplicity * charge;
        uncharged += term.multiplicity * a.value;
        out.error_bound += term.multiplicity * a.error_bound;
        if (terms) terms->push_back({term.role, term.multiplicity * charge});
    }
    if (terms)
        for (const auto& d : s.deductions) terms->push_back({"deduction:" + d.label, d.area});
    out.method = quad ? AreaMethod::quadrature : AreaMethod::closed_form;
    if (actual) *actual = uncharged;
    return out;
}

}  // namespace

AreaResult charged_area(int step, double t, const SweepoutParams& p, std::vector<NamedValue>* terms,
                        ConeConvention conv, double* actual) {
    require_t(t);
    if (step == 1 && t == 0.0) {
        if (terms) terms->push_back({"rays", 0.0});
        if (actual) *actual = 0.0;
        return AreaResult{};
    }
    if (step == 5 && t > 0.0 && t < 1.0) {
        AreaResult r;
        r.value = 2.0 - p.catenoid_C * p.h * p.h;
        r.method = AreaMethod::budget;
        r.inequality = "catenoid estimate sup = 2 - C h^2";
        if (terms) terms->push_back({"catenoid_budget", r.value});
        if (actual) *actual = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    return charge_surface(step_surface(step, t, p, conv), p, terms, actual);
}

namespace {

struct Sample {
    AreaResult area;
    double actual = 0.0;
    std::vector<NamedValue> terms;
};

using Evaluator = std::function<AreaResult(double, std::vector<NamedValue>*, double*)>;

void summarize(StepProfile& prof) {
    prof.max_area = -1.0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < prof.areas.size(); ++i) {
        if (prof.areas[i].value > prof.max_area) {
            prof.max_area = prof.areas[i].value;
            k = i;
        }
        if (prof.offending_t < 0.0 && !(prof.areas[i].value < prof.bound)) prof.offending_t = prof.t_grid[i];
    }
    prof.argmax_t = prof.t_grid.empty() ? 0.0 : prof.t_grid[k];
    if (!prof.terms.empty()) prof.budget_breakdown = prof.terms[k];
    prof.margin = prof.bound - prof.max_area;
    prof.pass = prof.max_area < prof.bound;
}

StepProfile sample_profile(const std::string& id, int step, const std::vector<double>& t_grid,
                           const Evaluator& eval) {
    StepProfile prof;
    prof.id = id;
    prof.step = step;
    prof.t_grid = t_grid;
    std::vector<Sample> samples(t_grid.size());
    parallel_for(int(t_grid.size()), default_threads(), [&](int i) {
        samples[i].area = eval(t_grid[i], &samples[i].terms, &samples[i].actual);
    });
    for (auto& s : samples) {
        prof.areas.push_back(s.area);
        prof.surface_areas.push_back(s.actual);
        prof.terms.push_back(std::move(s.terms));
    }
    return prof;
}

}  // namespace

StepProfile step_area_profile(int step, const SweepoutParams& p, const std::vector<double>& t_grid) {
    if (step < 1 || step > 5) throw std::invalid_argument("step must be 1..5");
    for (double t : t_grid) require_t(t);
    StepProfile prof = sample_profile("step" + std::to_string(step), step, t_grid,
                                      [&](double t, std::vector<NamedValue>* terms, double* actual) {
                                          return charged_area(step, t, p, terms,
                                                              ConeConvention::fold_from_vertical, actual);
                                      });
    const double h = p.h;
    switch (step) {
        case 1:
            prof.bound = 2.0;
            prof.bound_label = "2";
            break;
        case 2:
            prof.bound = 2.0 - 0.5 * p.delta1;
            prof.bound_label = "2 - delta1/2";
            break;
        case 3:
            prof.bound = 2.0 - 0.5 * p.delta2;
            prof.bound_label = "2 - delta2/2";
            break;
        case 4:
            prof.bound = 2.0 - 0.25 * p.eta2;
            prof.bound_label = "2 - eta2/4";
            break;
        case 5:
            prof.bound = 2.0;
            prof.bound_label = "2 (interior charged 2 - C h^2)";
            break;
    }
    summarize(prof);
    if (step == 1) {
        const double chain = kSphereEntropy + p.B * h * h + p.A * h * h * h;
        prof.checks.push_back({"chain_bound_4/e+Bh^2+Ah^3", chain});
        prof.pass = prof.pass && prof.max_area <= chain;
    }
    if (step == 3) {
        for (double t : t_grid) {
            double v = std::numeric_limits<double>::quiet_NaN();
            if (t > 0.0 && t < 1.0) v = charged_area(3, t, p, nullptr, ConeConvention::literal_tilt).value;
            prof.literal_tilt_areas.push_back(v);
        }
    }
    if (step == 4) {
        const double gap = area(DoubledAnnulus{p.r_max(), p.R, 0.0}).value;
        prof.checks.push_back({"inf_t |D(r_t, R)|", gap});
        prof.checks.push_back({"eta2", p.eta2});
    }
    if (step == 5) {
        const double end = charged_area(5, 1.0, p).value;
        const double end_bound = 2.0 - 0.25 * h * h;
        prof.checks.push_back({"final_endpoint", end});
        prof.checks.push_back({"final_endpoint_bound_2-h^2/4", end_bound});
        prof.pass = prof.pass && end <= end_bound;
    }
    return prof;
}

InversionResult inversion_max_area(const SweepoutParams& p, int resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    InversionResult r;
    r.g = p.g;
    r.R = p.R;
    const std::vector<double> grid = linspace(0.0, 1.0, resolution);
    r.max_area = -1.0;
    r.pass = true;
    for (int step = 1; step <= 5; ++step) {
        r.steps.push_back(step_area_profile(step, p, grid));
        const StepProfile& s = r.steps.back();
        r.pass = r.pass && s.pass;
        if (s.max_area > r.max_area) {
            r.max_area = s.max_area;
            r.argmax_step = step;
            r.argmax_t = (step - 1 + s.argmax_t) / 6.0;
        }
    }
    for (std::size_t i = 0; i + 1 < r.steps.size(); ++i) {
        const double gap = std::fabs(r.steps[i].surface_areas.back() - r.steps[i + 1].surface_areas.front());
        r.continuity_gaps.push_back(gap);
        r.pass = r.pass && gap < 1e-9;
    }
    r.margin = 2.0 - r.max_area;
    r.expected_margin_floor = std::min({0.5 * p.delta2, 0.25 * p.eta2, p.catenoid_C * p.h * p.h});
    r.pass = r.pass && r.max_area < 2.0 && r.margin > 0.0;
    return r;
}

std::vector<StepProfile> edge_variant_profiles(const SweepoutParams& left, const SweepoutParams& right,
                                               int resolution) {
    if (std::fabs(left.R - 0.2) > 1e-12) throw std::invalid_argument("left edge parameters need R = .2");
    if (std::fabs(right.R - 5.0) > 1e-12) throw std::invalid_argument("right edge parameters need R = 5");
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    std::vector<StepProfile> out;

    // Left edge: the cone stops at a partial opening lambda, then step 4 runs with it left in place.
    {
        const SweepoutParams& p = left;
        const double h = p.h, R = p.R, L = p.Omega - p.h;
        const double disk_budget = area(DoubledAnnulus{R, kInfinity, h}).value;
        for (double lambda : {0.25, 0.5, 0.75}) {
            std::vector<double> grid = linspace(0.0, 2.0, 2 * resolution - 1);
            auto eval = [&](double u, std::vector<NamedValue>* terms, double* actual) {
                if (u <= 1.0) return charged_area(3, lambda * u, p, terms, ConeConvention::fold_from_vertical, actual);
                const double t = u - 1.0;
                const double rt = h + t * (p.r_max() - h);
                CompositeSurface s;
                add(s, Cylinder{rt, h}, "inner_cylinder");
                add(s, DoubledAnnulus{0.0, rt, h}, "inner_disks");
                add(s, DoubledCone{R, R + std::sin(lambda * kHalfPi) * L, h, (1.0 - lambda) * kHalfPi}, "cone");
                add(s, SweptEnds{R, p.Omega, h, lambda}, "ends");
                add(s, Cylinder{R, h}, "collar");
                add_tubes(s, p, p.eps, rt, R);
                return charge_surface(s, p, terms, actual);
            };
            StepProfile prof = sample_profile("left-edge-lambda-" + fmt(lambda), 3, grid, eval);
            prof.bound = 2.0;
            prof.bound_label = "2";
            summarize(prof);
            double cone_excess = -kInfinity;
            for (double u : linspace(1.0 / resolution, 1.0, resolution)) {
                const double tt = lambda * u;
                const double cone =
                    area(DoubledCone{R, R + std::sin(tt * kHalfPi) * L, h, (1.0 - tt) * kHalfPi}).value;
                cone_excess = std::max(cone_excess, cone - disk_budget);
            }
            prof.checks.push_back({"disk_budget_|D(.2,inf,h)|", disk_budget});
            prof.checks.push_back({"max_cone_minus_disk_budget", cone_excess});
            prof.pass = prof.pass && cone_excess <= 0.0;
            out.push_back(std::move(prof));
        }
    }

    // Right edge: ellipsoid inner bodies E(r_t, h + sigma (r_t - h)).
    {
        const SweepoutParams& p = right;
        const double h = p.h, R = p.R, L = p.Omega - p.h;
        const double margin_identity = p.delta3 - 2.0 * std::exp(-25.0 / 4.0);
        const double chain = 2.0 - p.delta3 + 2.0 * std::exp(-25.0 / 4.0) + 5.0 * h + p.A * h * h * h + p.ends_budget();
        for (double sigma : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            auto eval = [&](double t, std::vector<NamedValue>* terms, double* actual) {
                const double rt = h + t * (p.r_max() - h);
                CompositeSurface s;
                add(s, Ellipsoid{rt, h + sigma * (rt - h)}, "inner_ellipsoid");
                add(s, DoubledAnnulus{R, R + L, h}, "sheets");
                add(s, SweptEnds{R, p.Omega, h, 1.0}, "ends");
                add(s, Cylinder{R, h}, "collar");
                add_tubes(s, p, p.eps, rt, R);
                return charge_surface(s, p, terms, actual);
            };
            StepProfile prof = sample_profile("right-edge-ellipsoid-sigma-" + fmt(sigma), 4,
                                              linspace(0.0, 1.0, resolution), eval);
            prof.bound = 2.0;
            prof.bound_label = "2";
            summarize(prof);
            prof.checks.push_back({"chain_2-delta3+2e^{-25/4}+5h+Ah^3+ends", chain});
            prof.checks.push_back({"delta3-2e^{-25/4}", margin_identity});
            prof.pass = prof.pass && prof.max_area <= chain && margin_identity > 0.0;
            out.push_back(std::move(prof));
        }

        // End states of step 5 on the graphs z_{h,4,b}, b from h to 4; the graph is taken out to infinity.
        auto eval = [&](double s, std::vector<NamedValue>* terms, double* actual) {
            const double b = h + s * (4.0 - h);
            CompositeSurface c;
            add(c, CappedGraph{h, 4.0, b, 2}, "capped_graphs");
            add(c, SweptEnds{R, p.Omega, h, 1.0}, "ends");
            add(c, VerticalTubes{p.g + 1, p.delta_tubes, p.r_necks(), h}, "vertical_tubes");
            c.deductions.push_back(
                {"sheet_disks_D3", 2.0 * (p.g + 1) * disk_area(p.delta_tubes, std::hypot(p.r_necks(), h))});
            return charge_surface(c, p, terms, actual);
        };
        StepProfile prof = sample_profile("right-edge-capped-graphs", 5, linspace(0.0, 1.0, resolution), eval);
        prof.bound = 2.0;
        prof.bound_label = "2";
        summarize(prof);
        out.push_back(std::move(prof));
    }
    return out;
}

double squeeze_translation_gap(double lambda_cap, double lambda_prime) {
    if (!(lambda_cap > 0.0) || !(lambda_prime > lambda_cap))
        throw std::invalid_argument("need 0 < lambda < lambda'");
    const double upper = 2.0 * std::sqrt(std::log(lambda_prime / lambda_cap)) + 1.0;
    return bisect_threshold(
        [&](double rho) { return lambda_prime * std::exp(-0.25 * rho * rho) < lambda_cap; }, 0.0, upper, 1e-13);
}

int riemann_hurwitz_genus(int k1, int k2, int b, int g, Admissibility mode) {
    if (k1 < 0 || k2 < 0 || b < 0) throw std::invalid_argument("intersection data must be nonnegative");
    if (g < 1) throw std::invalid_argument("genus must be positive");
    if (mode == Admissibility::neckpinch_sphere && !((k1 % 2 == k2 % 2) && (k2 % 2 == b % 2)))
        throw std::domain_error("parity of the intersection data does not match");
    const int k = k1 + k2;
    const long twice = long(k) - long(g) * (4 - 2 * b - k) - 2;
    if (twice % 2 != 0) throw std::domain_error("formula gives a non-integral genus");
    if (twice < 0) throw std::domain_error("formula gives a negative genus");
    return int(twice / 2);
}

}  // namespace shrinkcert
