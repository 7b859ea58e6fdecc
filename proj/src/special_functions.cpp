#include "shrinkcert/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace shrinkcert {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kEuler = std::numbers::egamma;
constexpr double kSqrtPi = 1.7724538509055160273;

// e^{-x^2} (2/sqrt(pi)) sum 2^n x^{2n+1} / (1*3*...*(2n+1)); every term positive.
FnValue erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    int n = 0;
    while (true) {
        ++n;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    const double ratio = 2.0 * x2 / (2.0 * n + 3.0);
    const double tail = ratio < 1.0 ? term * ratio / (1.0 - ratio) : term;
    const double scale = std::exp(-x2) * 2.0 / kSqrtPi;
    const double value = scale * sum;
    return {value, scale * tail + (n + 6) * kEps * value};
}

// erfc for x >= 2.5 by the Laplace continued fraction, modified Lentz.
FnValue erfc_cf(double x) {
    const double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    int k = 0;
    double delta = 0.0;
    for (k = 1; k < 5000; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = x + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    if (k >= 5000) throw std::runtime_error("erfc continued fraction did not converge");
    const double value = std::exp(-x * x) / (kSqrtPi * f);
    return {value, value * (std::fabs(delta - 1.0) + 8.0 * kEps + 2.0 * kEps * std::sqrt(double(k)))};
}

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
    x -= 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    const double t = x + kLanczosG + 0.5;
    const double half = std::pow(t, 0.5 * (x + 0.5));
    return std::sqrt(2.0 * kPi) * half * std::exp(-t) * half * a;
}

struct SmallI {
    double i0, i1, i0_abs, i1_abs;
    int terms;
};

SmallI i_series(double x) {
    const double y = 0.25 * x * x;
    double t0 = 1.0;
    double t1 = 1.0;
    double s0 = 1.0;
    double s1 = 1.0;
    int k = 0;
    while (true) {
        ++k;
        t0 *= y / (double(k) * k);
        t1 *= y / (double(k) * (k + 1));
        s0 += t0;
        s1 += t1;
        if (t0 < 1e-17 * s0 && t1 < 1e-17 * s1) break;
    }
    const double q = y / ((k + 1.0) * (k + 1.0));
    const double tail = q < 1.0 ? 1.0 / (1.0 - q) : 2.0;
    return {s0, 0.5 * x * s1, t0 * q * tail + (k + 2) * kEps * s0, 0.5 * x * (t1 * q * tail + (k + 2) * kEps * s1), k};
}

// Large-x asymptotic series for e^{-x} I0(x) sqrt(2 pi x).
FnValue i0_asymptotic_sum(double x) {
    double term = 1.0;
    double sum = 1.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if (next > term) break;
        term = next;
        sum += term;
        last = term;
        if (term < 1e-17 * sum) break;
    }
    return {sum, last + 4.0 * kEps * sum + sum * std::exp(-2.0 * x)};
}

// K0, K1 series for 0 < x <= 2.
void k_series(double x, FnValue& k0, FnValue& k1) {
    const SmallI si = i_series(x);
    const double y = 0.25 * x * x;
    const double lg = std::log(0.5 * x);
    double harmonic = 0.0;
    double t0 = 1.0;
    double sum0 = 0.0;
    double abs0 = 0.0;
    double t1 = 1.0;
    double sum1 = -2.0 * kEuler + 1.0;
    double abs1 = std::fabs(sum1);
    for (int k = 1; k < 200; ++k) {
        harmonic += 1.0 / k;
        t0 *= y / (double(k) * k);
        t1 *= y / (double(k) * (k + 1));
        const double c0 = t0 * harmonic;
        const double c1 = t1 * (-2.0 * kEuler + 2.0 * harmonic + 1.0 / (k + 1.0));
        sum0 += c0;
        abs0 += std::fabs(c0);
        sum1 += c1;
        abs1 += std::fabs(c1);
        if (std::fabs(c0) < 1e-18 * std::fabs(sum0) && std::fabs(c1) < 1e-18 * std::fabs(sum1)) break;
    }
    const double v0 = -(lg + kEuler) * si.i0 + sum0;
    const double e0 = std::fabs(lg + kEuler) * (si.i0_abs + 2.0 * kEps * si.i0) + 8.0 * kEps * (abs0 + std::fabs(v0));
    const double v1 = 1.0 / x + lg * si.i1 - 0.25 * x * sum1;
    const double e1 = std::fabs(lg) * (si.i1_abs + 2.0 * kEps * si.i1) + 0.25 * x * 8.0 * kEps * abs1 +
                      8.0 * kEps * (1.0 / x + std::fabs(v1));
    k0 = {v0, e0};
    k1 = {v1, e1};
}

// Scaled K0, K1 for x > 2 by Steed's continued fraction (Temme's CF2).
void k_cf2_scaled(double x, FnValue& k0, FnValue& k1) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 1;
    for (; i < 10000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < 1e-17) break;
    }
    if (i >= 10000) throw std::runtime_error("bessel_k continued fraction did not converge");
    h *= a1;
    const double v0 = std::sqrt(kPi / (2.0 * x)) / s;
    const double v1 = v0 * (x + 0.5 - h) / x;
    const double rel = (16.0 + std::sqrt(double(i))) * kEps;
    k0 = {v0, rel * v0};
    k1 = {v1, 2.0 * rel * v1};
}

FnValue k_asymptotic_scaled(int order, double x) {
    const double mu = 4.0 * order * order;
    double term = 1.0;
    double sum = 1.0;
    double next_abs = 0.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        next_abs = std::fabs(next);
        if (next_abs > std::fabs(term) || next_abs < 1e-17 * std::fabs(sum)) break;
        term = next;
        sum += term;
    }
    const double pre = std::sqrt(kPi / (2.0 * x));
    return {pre * sum, pre * (next_abs + 4.0 * kEps * std::fabs(sum))};
}

void k_pair_scaled(double x, FnValue& k0, FnValue& k1) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k requires x > 0");
    if (x <= 2.0) {
        k_series(x, k0, k1);
        const double ex = std::exp(x);
        k0 = {k0.value * ex, k0.abs_error_bound * ex + kEps * std::fabs(k0.value) * ex};
        k1 = {k1.value * ex, k1.abs_error_bound * ex + kEps * std::fabs(k1.value) * ex};
    } else if (x < 30.0) {
        k_cf2_scaled(x, k0, k1);
    } else {
        k0 = k_asymptotic_scaled(0, x);
        k1 = k_asymptotic_scaled(1, x);
    }
}

double digamma_half_shift(double a, int k) {
    // psi(a + k) for a = -1/2 via psi(-1/2) = 2 - gamma - 2 ln 2 and upward recurrence.
    double v = 2.0 - kEuler - 2.0 * std::numbers::ln2;
    for (int j = 0; j < k; ++j) v += 1.0 / (a + j);
    return v;
}

}  // namespace

FnValue erf(double x) {
    if (!std::isfinite(x)) {
        if (std::isnan(x)) throw std::domain_error("erf of NaN");
        return {x > 0 ? 1.0 : -1.0, 0.0};
    }
    const double ax = std::fabs(x);
    if (ax == 0.0) return {0.0, 0.0};
    FnValue r;
    if (ax <= 2.5) {
        r = erf_series(ax);
    } else {
        const FnValue c = erfc_cf(ax);
        r = {1.0 - c.value, c.abs_error_bound + kEps};
    }
    if (x < 0) r.value = -r.value;
    return r;
}

FnValue erfc(double x) {
    if (std::isnan(x)) throw std::domain_error("erfc of NaN");
    if (x == std::numeric_limits<double>::infinity()) return {0.0, 0.0};
    if (x == -std::numeric_limits<double>::infinity()) return {2.0, 0.0};
    if (x >= 2.5) return erfc_cf(x);
    if (x <= -2.5) {
        const FnValue c = erfc_cf(-x);
        return {2.0 - c.value, c.abs_error_bound + 2.0 * kEps};
    }
    const FnValue e = erf(x);
    return {1.0 - e.value, e.abs_error_bound + kEps};
}

FnValue gamma(double x) {
    if (std::isnan(x)) throw std::domain_error("gamma of NaN");
    if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("gamma pole at " + std::to_string(x));
    if (x > 171.6) throw std::overflow_error("gamma overflows");
    if (x < 0.5) {
        const double s = std::sin(kPi * x);
        const double g = lanczos_gamma(1.0 - x);
        const double value = kPi / (s * g);
        const double xr = x - std::round(x);
        const double rel = 4e-15 * (2.0 - x) + kEps * kPi * std::fabs(x) / std::max(std::fabs(std::sin(kPi * xr)), 1e-300);
        return {value, rel * std::fabs(value)};
    }
    const double value = lanczos_gamma(x);
    return {value, (3e-15 + 2.0 * kEps * x) * std::fabs(value)};
}

FnValue bessel_i0(double x) {
    if (!(x >= 0.0)) throw std::domain_error("bessel_i0 requires x >= 0");
    if (x <= 20.0) {
        const SmallI s = i_series(x);
        return {s.i0, s.i0_abs};
    }
    const FnValue a = i0_asymptotic_sum(x);
    const double pre = std::exp(x) / std::sqrt(2.0 * kPi * x);
    return {pre * a.value, pre * a.abs_error_bound + 4.0 * kEps * x * pre * a.value};
}

FnValue bessel_i0_scaled(double x) {
    if (!(x >= 0.0)) throw std::domain_error("bessel_i0 requires x >= 0");
    if (x <= 20.0) {
        const SmallI s = i_series(x);
        const double ex = std::exp(-x);
        return {s.i0 * ex, s.i0_abs * ex + 2.0 * kEps * s.i0 * ex};
    }
    const FnValue a = i0_asymptotic_sum(x);
    const double pre = 1.0 / std::sqrt(2.0 * kPi * x);
    return {pre * a.value, pre * a.abs_error_bound + 2.0 * kEps * pre * a.value};
}

FnValue bessel_k_scaled(int order, double x) {
    if (order != 0 && order != 1) throw std::domain_error("bessel_k order must be 0 or 1");
    FnValue k0, k1;
    k_pair_scaled(x, k0, k1);
    return order == 0 ? k0 : k1;
}

FnValue bessel_k(int order, double x) {
    if (order != 0 && order != 1) throw std::domain_error("bessel_k order must be 0 or 1");
    if (!(x > 0.0)) throw std::domain_error("bessel_k requires x > 0");
    if (x <= 2.0) {
        FnValue k0, k1;
        k_series(x, k0, k1);
        return order == 0 ? k0 : k1;
    }
    const FnValue s = bessel_k_scaled(order, x);
    const double em = std::exp(-x);
    return {s.value * em, s.abs_error_bound * em + 4.0 * kEps * x * s.value * em};
}

FnValue kummer_m(double a, double b, double xi) {
    if (!(b > 0.0)) throw std::domain_error("kummer_m requires b > 0");
    if (!(xi >= 0.0)) throw std::domain_error("kummer_m requires xi >= 0");
    if (xi > 700.0) throw std::overflow_error("kummer_m: e^xi growth exceeds double range");
    double term = 1.0;
    double sum = 1.0;
    double abs_sum = 1.0;
    double running_max = 1.0;
    int small_run = 0;
    int k = 0;
    for (k = 1; k < 100000; ++k) {
        term *= (a + k - 1.0) / ((b + k - 1.0) * k) * xi;
        sum += term;
        abs_sum += std::fabs(term);
        if (!std::isfinite(sum)) throw std::overflow_error("kummer_m series overflowed");
        running_max = std::max(running_max, std::fabs(sum));
        if (std::fabs(term) < 1e-17 * running_max) {
            if (++small_run == 3) break;
        } else {
            small_run = 0;
        }
    }
    if (k >= 100000) throw std::runtime_error("kummer_m series did not terminate");
    const double ratio = std::fabs((a + k) / ((b + k) * (k + 1.0)) * xi);
    const double tail = ratio < 0.5 ? 2.0 * std::fabs(term) : std::fabs(term) * 1e3;
    return {sum, tail + (4.0 + std::sqrt(double(k))) * kEps * abs_sum};
}

FnValue kummer_m_prime(double a, double b, double xi) {
    const FnValue m = kummer_m(a + 1.0, b + 1.0, xi);
    const double c = a / b;
    return {c * m.value, std::fabs(c) * m.abs_error_bound};
}

FnValue kummer_m_second(double a, double b, double xi) {
    const FnValue m = kummer_m(a + 2.0, b + 2.0, xi);
    const double c = a * (a + 1.0) / (b * (b + 1.0));
    return {c * m.value, std::fabs(c) * m.abs_error_bound};
}

FnValue tricomi_u_half(double xi) {
    if (!(xi > 0.0)) throw std::domain_error("tricomi_u_half requires xi > 0");
    FnValue k0, k1;
    k_pair_scaled(0.5 * xi, k0, k1);
    const double norm = 1.0 / (2.0 * kSqrtPi);
    const double value = ((xi - 1.0) * k0.value + xi * k1.value) * norm;
    const double err = (std::fabs(xi - 1.0) * k0.abs_error_bound + xi * k1.abs_error_bound +
                        4.0 * kEps * (std::fabs(xi - 1.0) * k0.value + xi * k1.value)) * norm;
    return {value, err};
}

FnValue tricomi_u_half_prime(double xi) {
    if (!(xi > 0.0)) throw std::domain_error("tricomi_u_half requires xi > 0");
    FnValue k0, k1;
    k_pair_scaled(0.5 * xi, k0, k1);
    const double norm = 1.0 / (4.0 * kSqrtPi);
    return {(k0.value + k1.value) * norm,
            (k0.abs_error_bound + k1.abs_error_bound + 2.0 * kEps * (k0.value + k1.value)) * norm};
}

FnValue tricomi_u_half_second(double xi) {
    if (!(xi > 0.0)) throw std::domain_error("tricomi_u_half requires xi > 0");
    FnValue k0, k1;
    k_pair_scaled(0.5 * xi, k0, k1);
    const double norm = 1.0 / (4.0 * kSqrtPi * xi);
    return {-k1.value * norm, (k1.abs_error_bound + 2.0 * kEps * k1.value) * norm};
}

FnValue tricomi_u_half_small(double log_xi) {
    if (!(log_xi <= 0.0)) throw std::domain_error("tricomi_u_half_small requires xi <= 1");
    const double a = -0.5;
    const double xi = std::exp(log_xi);
    double coef = 1.0;  // (a)_k xi^k / (k!)^2
    double harmonic = 0.0;
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            coef *= (a + k - 1.0) * xi / (double(k) * k);
            harmonic += 1.0 / k;
        }
        const double bracket = log_xi + digamma_half_shift(a, k) - 2.0 * (harmonic - kEuler);
        const double term = coef * bracket;
        sum += term;
        abs_sum += std::fabs(term);
        if (k > 0 && std::fabs(term) < 1e-18 * std::fabs(sum)) break;
        if (coef == 0.0) break;
    }
    const double norm = 1.0 / (2.0 * kSqrtPi);
    return {sum * norm, 8.0 * kEps * (abs_sum + std::fabs(log_xi)) * norm};
}

}  // namespace shrinkcert
