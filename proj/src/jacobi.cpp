#include "shrinkcert/jacobi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "shrinkcert/optimize.hpp"
#include "shrinkcert/special_functions.hpp"

namespace shrinkcert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kEuler = 0.57721566490153286061;
// U(-1/2, 1, xi) ~ (ln xi + kLogShift) / (2 sqrt(pi)) as xi -> 0.
const double kLogShift = 2.0 + kEuler - 2.0 * std::numbers::ln2;

struct XiDerivs {
    double f, fx, fxx;
};

XiDerivs in_xi(const JacobiSolution& sol, double xi) {
    XiDerivs m{0, 0, 0}, u{0, 0, 0};
    if (sol.kind != JacobiKind::phi2)
        m = {kummer_m(-0.5, 1.0, xi).value, kummer_m_prime(-0.5, 1.0, xi).value,
             kummer_m_second(-0.5, 1.0, xi).value};
    if (sol.kind != JacobiKind::phi1)
        u = {tricomi_u_half(xi).value, tricomi_u_half_prime(xi).value, tricomi_u_half_second(xi).value};
    switch (sol.kind) {
        case JacobiKind::phi1:
            return m;
        case JacobiKind::phi2:
            return u;
        case JacobiKind::combination:
            return {u.f + sol.lambda * m.f, u.fx + sol.lambda * m.fx, u.fxx + sol.lambda * m.fxx};
    }
    return m;
}

void require_r(double r) {
    if (!(r > 0.0 && r <= 8.0)) throw std::invalid_argument("radius must lie in (0, 8]");
}

double value_at(const JacobiSolution& sol, double r) { return evaluate(sol, r).value; }

}  // namespace

std::string to_string(JacobiKind k) {
    switch (k) {
        case JacobiKind::phi1:
            return "phi1";
        case JacobiKind::phi2:
            return "phi2";
        case JacobiKind::combination:
            return "combination";
    }
    return "?";
}

JacobiValue evaluate(const JacobiSolution& sol, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("radius must be nonnegative");
    if (r == 0.0) {
        if (sol.kind != JacobiKind::phi1) throw std::domain_error("phi2 is singular at r = 0");
        return {1.0, 0.0, -0.25};
    }
    const double xi = 0.25 * r * r;
    const XiDerivs d = in_xi(sol, xi);
    return {d.f, 0.5 * r * d.fx, xi * d.fxx + 0.5 * d.fx};
}

double stability_residual(const JacobiSolution& sol, double r) {
    require_r(r);
    const JacobiValue v = evaluate(sol, r);
    return std::fabs(v.d2 + (1.0 / r - 0.5 * r) * v.d1 + 0.5 * v.value);
}

double kummer_residual(const JacobiSolution& sol, double xi) {
    if (!(xi > 0.0 && xi <= 16.0)) throw std::invalid_argument("xi must lie in (0, 16]");
    const XiDerivs d = in_xi(sol, xi);
    return std::fabs(xi * d.fxx + (1.0 - xi) * d.fx + 0.5 * d.f);
}

double stability_residual_fd(const JacobiSolution& sol, double r) {
    require_r(r);
    const double h = 1e-5 * r;
    auto f = [&](double x) { return value_at(sol, x); };
    auto d1 = [&](double s) { return (f(r + s) - f(r - s)) / (2.0 * s); };
    auto d2 = [&](double s) { return (f(r + s) - 2.0 * f(r) + f(r - s)) / (s * s); };
    const double fp = (4.0 * d1(0.5 * h) - d1(h)) / 3.0;
    const double fpp = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
    return std::fabs(fpp + (1.0 / r - 0.5 * r) * fp + 0.5 * f(r));
}

ZeroBracket find_zero(const std::function<double(double)>& f, double lo, double hi, double width) {
    const Bracket b = bisect(f, lo, hi, width);
    return {b.lo, b.hi, b.root, b.residual};
}

ZeroBracket find_zero(const JacobiSolution& sol, double lo, double hi, double width) {
    return find_zero([&](double r) { return value_at(sol, r); }, lo, hi, width);
}

namespace {

ZeroBracket first_sign_change(const JacobiSolution& sol, double lo, double hi, int n, double width) {
    const std::vector<double> grid = linspace(lo, hi, n);
    double prev = value_at(sol, grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur = value_at(sol, grid[i]);
        if ((prev < 0.0) != (cur < 0.0)) return find_zero(sol, grid[i - 1], grid[i], width);
        prev = cur;
    }
    throw std::runtime_error("no sign change found for " + to_string(sol.kind));
}

}  // namespace

ZeroBracket phi1_zero(double width) { return first_sign_change({JacobiKind::phi1}, 0.1, 6.0, 600, width); }

ZeroBracket phi2_zero(double width) {
    const ZeroBracket z1 = phi1_zero(width);
    return first_sign_change({JacobiKind::phi2}, 1e-6, z1.root, 600, width);
}

double phi1_asymptotic_series(double xi) {
    if (!(xi >= 10.0)) throw std::invalid_argument("asymptotic series needs xi >= 10");
    // M(a, b, xi) ~ Gamma(b)/Gamma(a) e^xi xi^{a-b} sum (b-a)_k (1-a)_k / k! xi^{-k}; the
    // companion term carries cos(pi a) = 0 and drops out.
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 400; ++k) {
        const double next = term * (1.5 + k) * (1.5 + k) / ((k + 1.0) * xi);
        if (std::fabs(next) >= std::fabs(term)) break;
        term = next;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return -std::exp(xi) * std::pow(xi, -1.5) * sum / (2.0 * kSqrtPi);
}

Phi1ShapeReport verify_phi1_shape(int grid_points) {
    Phi1ShapeReport rep;
    const JacobiSolution s{JacobiKind::phi1};
    rep.value_at_0 = evaluate(s, 0.0).value;
    const double r1 = phi1_zero().root;
    const double top = r1 + 2.0;
    rep.grid_points = grid_points;
    rep.max_first_derivative = -std::numeric_limits<double>::infinity();
    rep.max_second_derivative = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= grid_points; ++k) {
        const double r = top * k / grid_points;
        const JacobiValue v = evaluate(s, r);
        rep.max_first_derivative = std::max(rep.max_first_derivative, v.d1);
        rep.max_second_derivative = std::max(rep.max_second_derivative, v.d2);
        if (!(v.d1 < 0.0) || !(v.d2 < 0.0)) rep.violations.push_back(r);
    }
    const double r = rep.r_check;
    const double xi = 0.25 * r * r;
    const double phi = evaluate(s, r).value;
    rep.leading_ratio = phi / (-4.0 * std::pow(r, -3.0) * std::exp(xi) / kSqrtPi);
    rep.series_ratio = phi / phi1_asymptotic_series(xi);
    rep.leading_within_5pct = std::fabs(rep.leading_ratio - 1.0) <= 0.05;
    rep.series_within_5pct = std::fabs(rep.series_ratio - 1.0) <= 0.05;
    rep.pass = rep.value_at_0 == 1.0 && rep.violations.empty() && rep.series_within_5pct;
    return rep;
}

std::vector<double> default_lambda_grid() {
    std::vector<double> out;
    const std::vector<double> pos = logspace(1e-4, 1e6, 100);
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
    out.push_back(0.0);
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

NoPositiveRadialReport verify_no_positive_radial(const std::vector<double>& lambdas, int sign_grid_points) {
    NoPositiveRadialReport rep;
    const ZeroBracket z1 = phi1_zero();
    const ZeroBracket z2 = phi2_zero();
    rep.r1 = z1.root;
    rep.r2 = z2.root;
    const double r1 = z1.root;

    std::vector<SignCertificate> certs(lambdas.size());
    parallel_for(int(lambdas.size()), default_threads(), [&](int i) {
        const double lam = lambdas[i];
        const JacobiSolution s{JacobiKind::combination, lam};
        SignCertificate& c = certs[i];
        c.subject = "lambda";
        c.lambda = lam;
        c.r_positive = r1;
        c.value_positive = value_at(s, r1);
        const double r_small = 1e-6;
        c.log_r_negative = std::log(r_small);
        c.value_negative = value_at(s, r_small);
        c.method = "r=1e-6";
        if (!(c.value_negative < 0.0)) {
            // Push xi down until the logarithm beats lambda, with phi1 = 1 + O(xi) there.
            const double log_xi = -kLogShift - 2.0 * kSqrtPi * std::max(lam, 0.0) - 10.0;
            const double xi = std::exp(log_xi);
            c.value_negative = tricomi_u_half_small(log_xi).value + lam * kummer_m(-0.5, 1.0, xi).value;
            c.log_r_negative = 0.5 * (log_xi + std::log(4.0));
            c.method = "log-space";
        }
        c.certified = c.value_positive > 0.0 && c.value_negative < 0.0;
    });
    rep.certificates = certs;

    const JacobiSolution p1{JacobiKind::phi1}, p2{JacobiKind::phi2};
    for (double sign : {1.0, -1.0}) {
        SignCertificate a;
        a.subject = sign > 0 ? "+phi1" : "-phi1";
        a.log_r_negative = std::log(sign > 0 ? r1 + 1.0 : 1e-6);
        a.value_negative = sign * value_at(p1, std::exp(a.log_r_negative));
        a.r_positive = sign > 0 ? 1e-6 : r1 + 1.0;
        a.value_positive = sign * value_at(p1, a.r_positive);
        a.method = "zero r1";
        a.certified = a.value_positive > 0.0 && a.value_negative < 0.0;
        rep.certificates.push_back(a);

        SignCertificate b;
        b.subject = sign > 0 ? "+phi2" : "-phi2";
        b.log_r_negative = std::log(sign > 0 ? 0.5 * rep.r2 : r1);
        b.value_negative = sign * value_at(p2, std::exp(b.log_r_negative));
        b.r_positive = sign > 0 ? r1 : 0.5 * rep.r2;
        b.value_positive = sign * value_at(p2, b.r_positive);
        b.method = "zero r2";
        b.certified = b.value_positive > 0.0 && b.value_negative < 0.0;
        rep.certificates.push_back(b);
    }
    for (const auto& c : rep.certificates)
        if (!c.certified) rep.failures.push_back(c.lambda);

    rep.sign_grid_points = sign_grid_points;
    rep.phi2_increasing = true;
    double prev = 0.0;
    for (int k = 1; k <= sign_grid_points; ++k) {
        const double r = 8.0 * k / sign_grid_points;
        const JacobiValue v = evaluate(p2, r);
        if (k > 1 && (prev < 0.0) != (v.value < 0.0)) ++rep.phi2_sign_changes;
        if (!(v.d1 > 0.0)) rep.phi2_increasing = false;
        prev = v.value;
    }

    rep.wronskian_min = std::numeric_limits<double>::infinity();
    for (double xi : linspace(0.5, 20.0, 400)) {
        const double w = kummer_m(-0.5, 1.0, xi).value * tricomi_u_half_prime(xi).value -
                         kummer_m_prime(-0.5, 1.0, xi).value * tricomi_u_half(xi).value;
        const double exact = std::exp(xi) / (2.0 * kSqrtPi * xi);
        rep.wronskian_max_rel_error = std::max(rep.wronskian_max_rel_error, std::fabs(w / exact - 1.0));
        rep.wronskian_min = std::min(rep.wronskian_min, w);
    }
    rep.pass = rep.failures.empty() && rep.phi2_sign_changes == 1 && rep.phi2_increasing && rep.r2 < rep.r1 &&
               rep.wronskian_min > 0.0 && rep.wronskian_max_rel_error < 1e-8;
    return rep;
}

namespace {

using State = std::array<double, 2>;

State sphere_rhs(double phi, const State& y) { return {y[1], -std::cos(phi) / std::sin(phi) * y[1] - 4.0 * y[0]}; }

// One Dormand-Prince step; returns the fifth-order state and writes the embedded error.
State dp_step(double x, const State& y, double h, State* err) {
    static constexpr double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static constexpr double a[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
    static constexpr double b5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
    static constexpr double b4[7] = {5179.0 / 57600,     0.0,           7571.0 / 16695, 393.0 / 640,
                                     -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};
    std::array<State, 7> k;
    for (int s = 0; s < 7; ++s) {
        State ys = y;
        for (int j = 0; j < s; ++j)
            for (int d = 0; d < 2; ++d) ys[d] += h * a[s][j] * k[j][d];
        k[s] = sphere_rhs(x + c[s] * h, ys);
    }
    State out = y, e{0.0, 0.0};
    for (int s = 0; s < 7; ++s)
        for (int d = 0; d < 2; ++d) {
            out[d] += h * b5[s] * k[s][d];
            e[d] += h * (b5[s] - b4[s]) * k[s][d];
        }
    if (err) *err = e;
    return out;
}

}  // namespace

SphereComparison sphere_profile_first_zero(double tol) {
    SphereComparison out;
    out.eigen_degree = 0.5 * (-1.0 + std::sqrt(17.0));
    // Series start off the pole: J = 1 - phi^2 + (5/24) phi^4 + O(phi^6).
    double x = 1e-3;
    State y{1.0 - x * x + 5.0 / 24.0 * std::pow(x, 4), -2.0 * x + 5.0 / 6.0 * std::pow(x, 3)};
    double h = 1e-3;
    const double stop = 0.99 * kPi;
    bool found = false;
    while (x < stop && out.steps < 100000) {
        h = std::min(h, stop - x);
        State err;
        const State next = dp_step(x, y, h, &err);
        double norm = 0.0;
        for (int d = 0; d < 2; ++d) norm = std::max(norm, std::fabs(err[d]) / (tol + tol * std::fabs(y[d])));
        if (norm > 1.0) {
            h *= std::max(0.2, 0.9 * std::pow(norm, -0.2));
            continue;
        }
        ++out.steps;
        if ((y[0] > 0.0) != (next[0] > 0.0)) {
            double lo = 0.0, hi = h;
            for (int i = 0; i < 100 && hi - lo > 1e-15; ++i) {
                const double mid = 0.5 * (lo + hi);
                ((dp_step(x, y, mid, nullptr)[0] > 0.0) == (y[0] > 0.0) ? lo : hi) = mid;
            }
            out.zero.lo = x + lo;
            out.zero.hi = x + hi;
            out.zero.root = x + 0.5 * (lo + hi);
            out.zero.residual = dp_step(x, y, 0.5 * (lo + hi), nullptr)[0];
            found = true;
            break;
        }
        x += h;
        y = next;
        h *= std::min(5.0, 0.9 * std::pow(std::max(norm, 1e-10), -0.2));
    }
    if (!found) throw std::runtime_error("sphere comparison: no zero before the south pole");
    out.before_equator = out.zero.root < 0.5 * kPi - 1e-3;
    for (double phi : linspace(0.01, kPi - 0.01, 400)) {
        const double f = std::cos(phi), fp = -std::sin(phi), fpp = -std::cos(phi);
        out.cos_residual = std::max(out.cos_residual, std::fabs(fpp + std::cos(phi) / std::sin(phi) * fp + 2.0 * f));
    }
    return out;
}

}  // namespace shrinkcert
