#pragma once

#include "logint/constant_expr.hpp"
#include "logint/exact.hpp"

#include <span>
#include <vector>

namespace logint::basis {

// Integer remainder polynomial of the closed form for
// int_0^b ln t (1+t)^{-n} dt: degree n-3, positive coefficients, built by
//   R_2 = 0,  R_{n+2}(b) = n(1+b) R_{n+1}(b) + (n-1)! ((1+b)^n - 1)/b.
struct RemainderPoly {
    int index = 0;
    std::vector<BigInt> coeffs;  // ascending powers of b; empty for index 2
    double eval(double b) const;
};
RemainderPoly remainder_poly(int n);  // 2 <= n <= 64

// Coefficient of b^j in R_n(b)/(n-2)!; closed form C(n-2, j+1) * H_{j+1}.
Rational remainder_coeff(int n, int j);  // n >= 3, 0 <= j <= n-3

// int_0^b ln t / (1+t)^m dt
double log_linear_int(int m, double b);
// same value through the remainder-polynomial recurrence (independent path)
double log_linear_int_recur(int m, double b);  // m >= 2
// int_0^inf ln t / (1+t)^m dt = -H_{m-2}/(m-1), m >= 2
Rational log_linear_halfline(int m);

// int_a^1 s^{n-1} ln(1-s) ds, 0 <= a < 1
double log1m_power_int(int n, double a);
// the a = 0 value as an exact rational: -(1/n^2 + |s(n,2)|/n!)
Rational log1m_power_int_zero(int n);

// int_0^x dt/(1+t^2)^{n+1}: explicit sum, two-term recurrence, and the
// double-factorial antiderivative form (three independent paths)
double quad_kernel_int(int n, double x);
double quad_kernel_int_recur(int n, double x);
double quad_kernel_int_dblfact(int n, double x);

// Solve 2n z_n - (2n-1) z_{n-1} = r_n given z_0 and r_1..r_N:
//   z_n = (z_0 + sum_{k<=n} lambda_k r_k/(2k)) / lambda_n,
//   lambda_j = 4^j / C(2j,j).
std::vector<double> solve_wallis_recurrence(double z0, std::span<const double> r);

// int_0^x ln t dt/(1+t^2)^{n+1}: closed form, recurrence, and series
double log_quad_kernel_int(int n, double x);
double log_quad_kernel_int_recur(int n, double x);
double log_quad_kernel_int_series(int n, double x, double tol = 1e-13);  // 0 < x < 1

// int_0^b ln t dt/(t^2+a^2)^{n+1}
double log_quad_int(int n, double a, double b);

// rational part of the quad kernel antiderivative:
//   p_j(x) = sum_{k=1..j} 4^k/(2k C(2k,k)) * x/(1+x^2)^k, p_0 = 0
double kernel_rational_part(int j, double x);
Rational kernel_rational_part_one(int n);  // p_n(1), exact

// int_0^inf dt/(1+t^2)^{n+1} = wallis_coeff(n) * pi
Rational wallis_coeff(int n);

// int_0^inf ln x dx/(1+x^2)^{n+1} = -(pi/2^{2n+1}) C(2n,n) sum_{k<=n} 1/(2k-1)
ConstantExpr log_quad_halfline(int n);
// real-order version via Gamma/digamma, beta > 1/2
double log_quad_halfline_real(double beta);
// int_0^inf ln x dx/(a^2 + b^2 x^2)^{n+1}
double log_quad_halfline_scaled(int n, double a, double b);

// int_0^x of ln sin, ln cos, ln tan on (0, pi/2]
double logsin_int(double x);
double logcos_int(double x);
double logtan_int(double x);
// int_0^x t cot t dt = x ln sin x - logsin_int(x)
double tcot_int(double x);

// int_0^b t^k ln t dt = b^{k+1}/(k+1) (ln b - 1/(k+1))
double power_log_int(int k, double b);

// real-argument helpers (recurrence shift to >= 10 + asymptotic series);
// only log_quad_halfline_real needs them
double digamma_real(double x);
double log_gamma_real(double x);

struct BasisValue {
    double value = 0.0;
    std::vector<std::pair<std::string, double>> trace;
};

}  // namespace logint::basis
