#pragma once

namespace shrinkcert {

struct FnValue {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

FnValue erf(double x);
FnValue erfc(double x);

// Throws std::domain_error at the poles 0, -1, -2, ...
FnValue gamma(double x);

FnValue bessel_i0(double x);
// e^{-x} I0(x), finite for all x >= 0.
FnValue bessel_i0_scaled(double x);

FnValue bessel_k(int order, double x);
// e^{x} K_order(x).
FnValue bessel_k_scaled(int order, double x);

// M(a, b, xi) by its power series. Throws std::overflow_error once the
// e^xi growth of the series cannot be represented.
FnValue kummer_m(double a, double b, double xi);
// d/dxi M(a, b, xi) = (a/b) M(a+1, b+1, xi)
FnValue kummer_m_prime(double a, double b, double xi);
FnValue kummer_m_second(double a, double b, double xi);

// U(-1/2, 1, xi) = e^{xi/2}((xi-1)K0(xi/2) + xi K1(xi/2)) / (2 sqrt(pi))
FnValue tricomi_u_half(double xi);
FnValue tricomi_u_half_prime(double xi);
FnValue tricomi_u_half_second(double xi);

// U(-1/2, 1, xi) for tiny xi given only log(xi): the logarithmic series
// keeps working after xi itself underflows. Valid for log_xi <= 0.
FnValue tricomi_u_half_small(double log_xi);

}  // namespace shrinkcert
