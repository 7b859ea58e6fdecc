#include "shrinkcert/gaussian_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "shrinkcert/optimize.hpp"
#include "shrinkcert/special_functions.hpp"

namespace shrinkcert {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// e^{-a} - e^{-b} for 0 <= a <= b, b possibly infinite.
double exp_diff(double a, double b) {
    if (std::isinf(b)) return std::exp(-a);
    return -std::exp(-a) * std::expm1(-(b - a));
}

AreaResult closed(double value, double rel = 16.0 * kEps, double extra = 0.0) {
    AreaResult r;
    r.value = value;
    r.error_bound = rel * std::fabs(value) + extra;
    r.method = AreaMethod::closed_form;
    return r;
}

double annulus_area(double r_in, double r_out, double h) {
    return 2.0 * std::exp(-0.25 * h * h) * exp_diff(0.25 * r_in * r_in, 0.25 * r_out * r_out);
}

// erf(hi/2) - erf(lo/2) for 0 <= lo < hi <= inf, with its error.
FnValue erf_window(double lo, double hi) {
    const FnValue a = erfc(0.5 * lo);
    const FnValue b = std::isinf(hi) ? FnValue{0.0, 0.0} : erfc(0.5 * hi);
    return {a.value - b.value, a.abs_error_bound + b.abs_error_bound};
}

bool closed_form_available(const Piece& piece) {
    return std::visit(overloaded{
                          [](const DoubledAnnulus&) { return true; },
                          [](const Cylinder&) { return true; },
                          [](const Sphere&) { return true; },
                          [](const SphericalCaps&) { return true; },
                          [](const DoubledCone& p) {
                              return p.phi == 0.0 || (std::isinf(p.r_outer) && (p.h == 0.0 || p.phi == kHalfPi));
                          },
                          [](const Ellipsoid&) { return false; },
                          [](const CappedGraph&) { return false; },
                          [](const RayTubes&) { return true; },
                          [](const VerticalTubes&) { return true; },
                          [](const SweptEnds& p) { return p.t == 0.0; },
                      },
                      piece);
}

AreaResult closed_form_area(const Piece& piece) {
    return std::visit(
        overloaded{
            [](const DoubledAnnulus& p) { return closed(annulus_area(p.r_inner, p.r_outer, p.h)); },
            [](const Cylinder& p) {
                const FnValue e = erf(0.5 * p.h);
                const double pre = p.R * std::exp(-0.25 * p.R * p.R) * kSqrtPi;
                return closed(pre * e.value, 16.0 * kEps, pre * e.abs_error_bound);
            },
            [](const Sphere& p) { return closed(p.R * p.R * std::exp(-0.25 * p.R * p.R)); },
            [](const SphericalCaps& p) {
                const double base = std::exp(-0.25 * (p.R * p.R + p.h * p.h));
                if (p.h == 0.0) return closed(p.R * p.R * base);
                return closed(2.0 * p.R / p.h * base * -std::expm1(-0.5 * p.h * p.R));
            },
            [](const DoubledCone& p) {
                if (p.phi == 0.0) return closed(annulus_area(p.r_inner, p.r_outer, p.h));
                const double R = p.r_inner;
                if (p.phi == kHalfPi) {
                    const FnValue c = erfc(0.5 * p.h);
                    const double pre = R * std::exp(-0.25 * R * R) * kSqrtPi;
                    return closed(pre * c.value, 16.0 * kEps, pre * c.abs_error_bound);
                }
                const double c = std::cos(p.phi);
                const double s = std::sin(p.phi);
                const FnValue tail = erfc(0.5 * R * c);
                const double pre = kSqrtPi * R * s * s * std::exp(-0.25 * R * R * s * s);
                const double v = 2.0 * c * std::exp(-0.25 * R * R) + pre * tail.value;
                return closed(v, 32.0 * kEps, pre * tail.abs_error_bound);
            },
            [](const Ellipsoid&) -> AreaResult { throw std::logic_error("no closed form"); },
            [](const CappedGraph&) -> AreaResult { throw std::logic_error("no closed form"); },
            [](const RayTubes& p) {
                const FnValue w = erf_window(p.rho_in, p.rho_out);
                const double pre = p.count * p.eps * 0.5 * kSqrtPi * std::exp(-0.25 * p.eps * p.eps);
                return closed(pre * w.value, 16.0 * kEps, pre * w.abs_error_bound);
            },
            [](const VerticalTubes& p) {
                const double x = 0.5 * p.ring_radius * p.delta;
                const FnValue i0 = bessel_i0_scaled(x);
                const FnValue e = erf(0.5 * p.half_height);
                const double d = p.ring_radius - p.delta;
                const double pre = p.count * p.delta * kSqrtPi * std::exp(-0.25 * d * d);
                return closed(pre * i0.value * e.value, 16.0 * kEps,
                              pre * (i0.abs_error_bound * e.value + i0.value * e.abs_error_bound));
            },
            [](const SweptEnds& p) {
                const double base = std::exp(-0.25 * (p.R * p.R + p.Omega * p.Omega));
                return closed(2.0 * p.R / p.Omega * base * -std::expm1(-0.5 * p.Omega * p.R));
            },
        },
        piece);
}

struct CenterInFrame {
    double axial;
    double offset;
};

CenterInFrame center_in_frame(const ProfileSegment& s, const FunctionalCenter& c) {
    const double off_axis = std::hypot(c.y[0], c.y[1]);
    if (s.frame == AxisFrame::horizontal_ray) {
        if (off_axis != 0.0) throw std::invalid_argument("ray-tube pieces support centers on the z-axis only");
        return {0.0, std::fabs(c.y[2])};
    }
    if (s.axis_offset != 0.0) {
        if (off_axis != 0.0) throw std::invalid_argument("offset tube pieces support centers on the z-axis only");
        return {c.y[2], s.axis_offset};
    }
    return {c.y[2], off_axis};
}

// Ring weight: (1/(4 pi tau)) int_0^{2pi} e^{-|x-y|^2/(4 tau)} r dtheta.
inline double ring_weight(double r, double z, double ca, double cd, double tau) {
    const double dr = r - cd;
    const double dz = z - ca;
    double w = r / (2.0 * tau) * std::exp(-(dr * dr + dz * dz) / (4.0 * tau));
    if (cd != 0.0 && w != 0.0) w *= bessel_i0_scaled(r * cd / (2.0 * tau)).value;
    return w;
}

AreaResult segment_functional(const ProfileSegment& s, const FunctionalCenter& c, const QuadratureSpec& spec,
                              int segment_count) {
    const CenterInFrame cf = center_in_frame(s, c);
    const double tau = c.tau;
    const double u0 = s.u_begin();
    const double u1 = s.u_end();
    AreaResult out;
    out.method = AreaMethod::quadrature;
    if (!(u1 > u0)) return out;
    auto f = [&](double u) {
        double r, z;
        s.point(u, r, z);
        const double sp = s.speed(u);
        double w = ring_weight(r, z, cf.axial, cf.offset, tau);
        if (s.mirror) w += ring_weight(r, -z, cf.axial, cf.offset, tau);
        return sp * w;
    };
    const double extent =
        s.curve == CurveKind::line ? s.length : (u1 - u0) * std::max(std::fabs(s.ar), std::fabs(s.bz));
    const int n_init = std::clamp(int(std::ceil(extent / std::sqrt(tau))), 1, 64);
    std::vector<double> cuts;
    for (int i = 1; i < n_init; ++i) cuts.push_back(u0 + (u1 - u0) * double(i) / n_init);
    // Split at the sampled point nearest the center so narrow kernels are not skipped.
    const int samples = 64;
    double best = std::numeric_limits<double>::infinity();
    double best_u = u0;
    for (int i = 0; i <= samples; ++i) {
        const double u = u0 + (u1 - u0) * double(i) / samples;
        double r, z;
        s.point(u, r, z);
        for (double zz : {z, s.mirror ? -z : z}) {
            const double d = std::hypot(r - cf.offset, zz - cf.axial);
            if (d < best) {
                best = d;
                best_u = u;
            }
        }
    }
    cuts.push_back(best_u);
    QuadratureSpec local = spec;
    local.abs_tol = spec.abs_tol / std::max(1, segment_count);
    const QuadResult q = integrate(f, u0, u1, local, cuts);
    out.value = q.value * s.multiplicity;
    out.error_bound = q.error * s.multiplicity + s.tail_bound;
    out.converged = q.converged;
    return out;
}

TruncationRule rule_for(const FunctionalCenter& c, const QuadratureSpec& spec) {
    TruncationRule r;
    r.threshold = spec.truncation_threshold;
    r.tau = c.tau;
    r.center_norm = std::sqrt(c.y[0] * c.y[0] + c.y[1] * c.y[1] + c.y[2] * c.y[2]);
    return r;
}

void validate(const FunctionalCenter& c) {
    if (!(c.tau > 0.0) || !std::isfinite(c.tau)) throw std::invalid_argument("tau must be positive");
    for (double v : c.y)
        if (!std::isfinite(v)) throw std::invalid_argument("center must be finite");
}

bool canonical(const FunctionalCenter& c) { return c.tau == 1.0 && c.y[0] == 0.0 && c.y[1] == 0.0 && c.y[2] == 0.0; }

}  // namespace

std::string to_string(AreaMethod m) {
    switch (m) {
        case AreaMethod::closed_form: return "closed_form";
        case AreaMethod::quadrature: return "quadrature";
        case AreaMethod::budget: return "budget";
    }
    return "unknown";
}

AreaResult profile_functional(const RadialProfile& profile, const FunctionalCenter& center, const QuadratureSpec& spec) {
    validate(spec);
    validate(center);
    AreaResult out;
    out.method = AreaMethod::quadrature;
    const int n = int(profile.segments.size());
    for (const auto& s : profile.segments) {
        const AreaResult r = segment_functional(s, center, spec, n);
        out.value += r.value;
        out.error_bound += r.error_bound;
        out.converged = out.converged && r.converged;
    }
    if (!out.converged)
        throw std::runtime_error("quadrature did not converge: partial value " + std::to_string(out.value) +
                                 ", error " + std::to_string(out.error_bound) + " above tolerance");
    return out;
}

AreaResult area_by_quadrature(const Piece& piece, const QuadratureSpec& spec) {
    const FunctionalCenter c;
    return profile_functional(lower_to_profile(piece, rule_for(c, spec)), c, spec);
}

AreaResult area(const Piece& piece, const QuadratureSpec& spec) {
    validate(piece);
    if (closed_form_available(piece)) return closed_form_area(piece);
    if (const auto* e = std::get_if<SweptEnds>(&piece)) {
        // Caps in closed form, the swept arc by quadrature.
        AreaResult caps = closed_form_area(SweptEnds{e->R, e->Omega, e->h, 0.0});
        RadialProfile prof = lower_to_profile(piece, rule_for(FunctionalCenter{}, spec));
        prof.segments.erase(prof.segments.begin());
        AreaResult arc = profile_functional(prof, FunctionalCenter{}, spec);
        arc.value += caps.value;
        arc.error_bound += caps.error_bound;
        return arc;
    }
    return area_by_quadrature(piece, spec);
}

AreaResult area(const CompositeSurface& surface, const QuadratureSpec& spec) {
    validate(surface);
    AreaResult out;
    bool any_quad = false;
    for (const auto& term : surface.pieces) {
        const AreaResult r = area(term.piece, spec);
        out.value += term.multiplicity * r.value;
        out.error_bound += term.multiplicity * r.error_bound;
        any_quad = any_quad || r.method != AreaMethod::closed_form;
    }
    out.method = any_quad ? AreaMethod::quadrature : AreaMethod::closed_form;
    return out;
}

AreaResult f_functional(const Piece& piece, const FunctionalCenter& center, const QuadratureSpec& spec) {
    validate(center);
    if (canonical(center)) return area(piece, spec);
    return profile_functional(lower_to_profile(piece, rule_for(center, spec)), center, spec);
}

AreaResult f_functional(const CompositeSurface& surface, const FunctionalCenter& center, const QuadratureSpec& spec) {
    validate(surface);
    AreaResult out;
    out.method = canonical(center) ? AreaMethod::closed_form : AreaMethod::quadrature;
    for (const auto& term : surface.pieces) {
        const AreaResult r = f_functional(term.piece, center, spec);
        out.value += term.multiplicity * r.value;
        out.error_bound += term.multiplicity * r.error_bound;
        if (r.method != AreaMethod::closed_form) out.method = AreaMethod::quadrature;
    }
    return out;
}

EntropyResult entropy(const CompositeSurface& surface, const EntropySearch& search, const QuadratureSpec& spec) {
    validate(surface);
    if (search.tau_points < 2 || search.y_points < 1 || !(search.tau_min > 0.0) || !(search.tau_max > search.tau_min))
        throw std::invalid_argument("invalid entropy search grid");
    EntropyResult res;
    const std::vector<double> taus = logspace(search.tau_min, search.tau_max, search.tau_points);
    const std::vector<double> ys = linspace(search.y_min, search.y_max, search.y_points);
    const int nt = int(taus.size());
    const int ny = int(ys.size());
    std::vector<double> grid(std::size_t(nt) * ny);
    parallel_for(nt * ny, default_threads(), [&](int k) {
        const int i = k / ny;
        const int j = k % ny;
        FunctionalCenter c;
        c.tau = taus[i];
        c.y[2] = ys[j];
        grid[k] = f_functional(surface, c, spec).value;
    });
    res.evaluations = nt * ny;
    double vmax = -1.0;
    for (double v : grid) vmax = std::max(vmax, v);
    // Among near-ties take the node closest to the middle of the grid.
    int best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    const double tie = 1e-12 * std::max(1.0, vmax);
    for (int k = 0; k < nt * ny; ++k) {
        if (grid[k] < vmax - tie) continue;
        const double di = (k / ny) - 0.5 * (nt - 1);
        const double dj = (k % ny) - 0.5 * (ny - 1);
        const double d = di * di / double(nt * nt) + dj * dj / double(std::max(1, ny * ny));
        if (d < best_dist) {
            best_dist = d;
            best = k;
        }
    }
    const int bi = best / ny;
    const int bj = best % ny;
    res.boundary_warning = (bi == 0 || bi == nt - 1 || (ny > 1 && (bj == 0 || bj == ny - 1)));

    const double dlog = (std::log(search.tau_max) - std::log(search.tau_min)) / (nt - 1);
    const double dy = ny > 1 ? (search.y_max - search.y_min) / (ny - 1) : 0.0;
    auto objective = [&](const std::vector<double>& x) {
        FunctionalCenter c;
        c.tau = std::exp(x[0]);
        c.y[2] = x[1];
        return f_functional(surface, c, spec).value;
    };
    std::vector<double> x0{std::log(taus[bi]), ys[bj]};
    std::vector<double> step{dlog, dy > 0 ? dy : 0.0};
    std::vector<double> lo{std::log(search.tau_min), search.y_min};
    std::vector<double> hi{std::log(search.tau_max), search.y_max};
    const PatternResult pr = pattern_search(objective, x0, step, lo, hi, search.rounds, search.shrink);
    res.evaluations += pr.evaluations;
    res.value = std::max(pr.value, grid[best]);
    res.argmax.tau = std::exp(pr.x[0]);
    res.argmax.y = {0.0, 0.0, pr.x[1]};

    if (search.off_axis_samples > 0) {
        const double reach = std::max(std::fabs(search.y_min), std::fabs(search.y_max));
        for (int k = 1; k <= search.off_axis_samples; ++k) {
            FunctionalCenter c = res.argmax;
            c.y[0] = reach * double(k) / search.off_axis_samples;
            const double v = f_functional(surface, c, spec).value;
            ++res.evaluations;
            res.off_axis_max = std::max(res.off_axis_max, v);
        }
        if (res.off_axis_max > res.value) res.boundary_warning = true;
    }
    return res;
}

AreaResult gaussian_volume_ball(double R) {
    if (!(R >= 0.0)) throw std::invalid_argument("radius must be >= 0");
    const double beta = 3.0 / 8.0;
    const double pre = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    const double full = kSqrtPi / (4.0 * beta * std::sqrt(beta));
    if (std::isinf(R)) return closed(pre * full);
    if (R == 0.0) return closed(0.0);
    const FnValue e = erf(std::sqrt(beta) * R);
    const double v = pre * (full * e.value - R / (2.0 * beta) * std::exp(-beta * R * R));
    return closed(v, 64.0 * kEps, pre * full * e.abs_error_bound);
}

double gaussian_half_volume_radius() {
    const double half = 0.5 * gaussian_volume_ball(kInfinity).value;
    return bisect([&](double R) { return gaussian_volume_ball(R).value - half; }, 0.0, 20.0, 1e-14).root;
}

TranslationCheck translate_area_bound_check(const RadialProfile& upper, double h, const QuadratureSpec& spec) {
    if (!(h >= 0.0)) throw std::invalid_argument("shift must be >= 0");
    if (upper.z_min() < -1e-14) throw std::domain_error("translation bound needs a profile inside z >= 0");
    const FunctionalCenter c;
    const AreaResult base = profile_functional(upper, c, spec);
    const AreaResult moved = profile_functional(translate_vertical(upper, h), c, spec);
    TranslationCheck t;
    t.shift = h;
    t.shifted_area = moved.value;
    const double k = std::exp(-0.25 * h * h);
    t.bound = k * base.value;
    t.slack = moved.error_bound + k * base.error_bound;
    t.pass = t.shifted_area <= t.bound + t.slack;
    return t;
}

TranslationCheck translate_area_bound_check(const Piece& piece, double h, const QuadratureSpec& spec) {
    TruncationRule r;
    r.threshold = spec.truncation_threshold;
    return translate_area_bound_check(lower_to_profile(piece, r), h, spec);
}

MonotonicityCheck shrinker_monotonicity_check(const CompositeSurface& shrinker, const std::array<double, 3>& y,
                                              double a, const std::vector<double>& s_grid, double tol,
                                              const QuadratureSpec& spec) {
    MonotonicityCheck m;
    m.s = s_grid;
    m.values.resize(s_grid.size());
    for (double s : s_grid)
        if (!(1.0 + a * s * s > 0.0)) throw std::invalid_argument("1 + a s^2 must stay positive on the grid");
    parallel_for(int(s_grid.size()), default_threads(), [&](int i) {
        const double s = s_grid[i];
        FunctionalCenter c;
        c.y = {s * y[0], s * y[1], s * y[2]};
        c.tau = 1.0 + a * s * s;
        m.values[i] = f_functional(shrinker, c, spec).value;
    });
    m.max_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < m.values.size(); ++i) {
        const double inc = m.values[i + 1] - m.values[i];
        m.max_increase = std::max(m.max_increase, inc);
        if (inc > tol && m.first_violation < 0) m.first_violation = int(i);
    }
    if (m.values.size() < 2) m.max_increase = 0.0;
    m.pass = m.first_violation < 0;
    return m;
}

}  // namespace shrinkcert
