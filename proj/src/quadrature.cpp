#include "shrinkcert/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace shrinkcert {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const {
        if (error != o.error) return error < o.error;
        return a > o.a;
    }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double value = resk * h;
    const double err = std::fabs((resk - resg) * h) +
                       50.0 * std::numeric_limits<double>::epsilon() * std::fabs(resabs * h);
    if (!std::isfinite(value)) throw std::runtime_error("integrand is not finite on the panel");
    return {a, b, value, err};
}

}  // namespace

void validate(const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) throw std::invalid_argument("quadrature tolerances must be positive");
    if (spec.max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be positive");
    if (!(spec.truncation_threshold > 0.0) || !(spec.truncation_threshold < 1.0))
        throw std::invalid_argument("truncation_threshold must lie in (0,1)");
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec,
                     const std::vector<double>& breakpoints) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("integrate needs a finite interval");
    QuadResult out;
    if (a == b) return out;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::vector<double> cuts{a};
    for (double p : breakpoints)
        if (p > a && p < b) cuts.push_back(p);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<Panel> heap;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = gk15(f, cuts[i], cuts[i + 1]);
        out.evaluations += 15;
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }
    int panels = int(heap.size());
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) {
        if (panels >= spec.max_subdivisions) {
            out.converged = false;
            break;
        }
        Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            out.converged = false;
            break;
        }
        heap.pop();
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // Re-sum from the panels so drift from the running updates cannot leak in.
    double sum = 0.0;
    double err = 0.0;
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const Panel& p : all) {
        sum += p.value;
        err += p.error;
    }
    out.value = sign * sum;
    out.error = err;
    return out;
}

}  // namespace shrinkcert
