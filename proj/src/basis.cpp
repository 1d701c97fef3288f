#include "logint/basis.hpp"

#include "logint/specfun.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace logint::basis {

using specfun::kLn2;
using specfun::kPi;

namespace {

constexpr int kIndexMax = 64;

double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// lambda_j = 4^j / C(2j,j), the homogeneous solution of the Wallis recurrence
Rational wallis_lambda(int j) {
    return Rational(BigInt(1) << (2 * j), binomial(2 * j, j));
}

// coefficient (1/j!) |s(j+1,2)| of the Stirling closed forms
Rational stirling_coeff(int j) {
    return Rational(specfun::stirling1_unsigned(j + 1, 2), factorial(j));
}

}  // namespace

// ------------------------------------------------------- remainder polynomial

RemainderPoly remainder_poly(int n) {
    if (n < 2) throw std::domain_error("remainder_poly: index must be >= 2");
    if (n > kIndexMax)
        throw CapacityError("remainder_poly: index exceeds capacity " +
                            std::to_string(kIndexMax));
    std::vector<BigInt> cur;  // R_2 = 0
    BigInt mfact = 1;         // (m-1)! running
    for (int m = 1; m + 2 <= n; ++m) {
        // next = m*(1+b)*cur + (m-1)! * sum_{k=1..m} C(m,k) b^{k-1}
        std::vector<BigInt> next(std::max<size_t>(cur.size() + 1, m), BigInt(0));
        for (size_t i = 0; i < cur.size(); ++i) {
            next[i] += m * cur[i];
            next[i + 1] += m * cur[i];
        }
        for (int k = 1; k <= m; ++k) next[k - 1] += mfact * binomial(m, k);
        while (!next.empty() && next.back() == 0) next.pop_back();
        cur = std::move(next);
        mfact *= m;
    }
    return RemainderPoly{n, std::move(cur)};
}

double RemainderPoly::eval(double b) const {
    double r = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * b + to_double(*it);
    return r;
}

Rational remainder_coeff(int n, int j) {
    if (n < 3 || j < 0 || j > n - 3)
        throw std::domain_error("remainder_coeff: index out of range");
    if (n > kIndexMax)
        throw CapacityError("remainder_coeff: index exceeds capacity " +
                            std::to_string(kIndexMax));
    // (-1)^j/(j+1)! C(n-2, j+1) s(j+2,2) in unsigned form
    return Rational(binomial(n - 2, j + 1) * specfun::stirling1_unsigned(j + 2, 2),
                    factorial(j + 1));
}

// ------------------------------------------------------------ linear pole

double log_linear_int(int m, double b) {
    if (m < 1) throw std::domain_error("log_linear_int: m must be >= 1");
    if (!(b > 0)) throw std::domain_error("log_linear_int: b must be > 0");
    if (m == 1) return std::log(b) * std::log1p(b) + specfun::dilog(-b);
    if (m > kIndexMax + 1)
        throw CapacityError("log_linear_int: m exceeds capacity " + std::to_string(kIndexMax + 1));
    const int n = m - 1;
    const double p = std::pow(1.0 + b, n);
    double sum = 0.0;
    double bj = 1.0;
    for (int j = 1; j <= n - 1; ++j) {
        bj *= b;
        sum += to_double(binomial(n - 1, j) * stirling_coeff(j)) * bj;
    }
    return (1.0 - 1.0 / p) * std::log(b) / n - std::log1p(b) / n -
           sum * (1.0 + b) / (n * p);
}

double log_linear_int_recur(int m, double b) {
    if (m < 2) throw std::domain_error("log_linear_int_recur: m must be >= 2");
    if (!(b > 0)) throw std::domain_error("log_linear_int_recur: b must be > 0");
    const RemainderPoly t = remainder_poly(m);
    const double pw = std::pow(1.0 + b, m - 1);
    const double x_part = (pw - 1.0) / (m - 1) * std::log(b);
    const double y_part = -pw / (m - 1) * std::log1p(b);
    const double z_part = -b * (1.0 + b) * t.eval(b) / to_double(factorial(m - 1));
    return (x_part + y_part + z_part) / pw;
}

Rational log_linear_halfline(int m) {
    if (m < 2) throw std::domain_error("log_linear_halfline: m must be >= 2 for convergence");
    return -harmonic_number(m - 2) / (m - 1);
}

// ------------------------------------------------------------- log(1-s) moments

double log1m_power_int(int n, double a) {
    if (n < 1) throw std::domain_error("log1m_power_int: n must be >= 1");
    if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("log1m_power_int: a must be in [0,1)");
    if (n > kIndexMax)
        throw CapacityError("log1m_power_int: n exceeds capacity " + std::to_string(kIndexMax));
    const double an = std::pow(a, n);
    const double head = (1.0 - an) / (static_cast<double>(n) * n) * (n * std::log1p(-a) - 1.0);
    double sum = 0.0;
    for (int j = 1; j <= n - 1; ++j)
        sum += to_double(binomial(n - 1, j) * stirling_coeff(j)) * ipow(a, n - 1 - j) *
               ipow(1.0 - a, j);
    return head - sum / n;
}

Rational log1m_power_int_zero(int n) {
    if (n < 1) throw std::domain_error("log1m_power_int_zero: n must be >= 1");
    if (n > kIndexMax)
        throw CapacityError("log1m_power_int_zero: n exceeds capacity " +
                            std::to_string(kIndexMax));
    return -(Rational(1, BigInt(n) * n) +
             Rational(specfun::stirling1_unsigned(n, 2), factorial(n)));
}

// ------------------------------------------------------------- quad kernel

double quad_kernel_int(int n, double x) {
    if (n < 0) throw std::domain_error("quad_kernel_int: n must be >= 0");
    const double q = 1.0 / (x * x + 1.0);
    double sum = std::atan(x);
    double qj = 1.0;
    for (int j = 1; j <= n; ++j) {
        qj *= q;
        sum += to_double(wallis_lambda(j) / (2 * j)) * x * qj;
    }
    return to_double(Rational(binomial(2 * n, n), BigInt(1) << (2 * n))) * sum;
}

double quad_kernel_int_recur(int n, double x) {
    if (n < 0) throw std::domain_error("quad_kernel_int_recur: n must be >= 0");
    double f = std::atan(x);
    const double q = 1.0 / (x * x + 1.0);
    double qk = 1.0;
    for (int k = 1; k <= n; ++k) {
        qk *= q;
        f = ((2.0 * k - 1.0) * f + x * qk) / (2.0 * k);
    }
    return f;
}

double quad_kernel_int_dblfact(int n, double x) {
    if (n < 0) throw std::domain_error("quad_kernel_int_dblfact: n must be >= 0");
    const double q = 1.0 / (x * x + 1.0);
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        const Rational c =
            Rational(double_factorial(2 * n + 1) * factorial(n - k),
                     double_factorial(2 * n - 2 * k + 1) * (BigInt(1) << k) * factorial(n));
        sum += to_double(c) * ipow(q, n + 1 - k);
    }
    const Rational d = Rational(double_factorial(2 * n - 1), (BigInt(1) << n) * factorial(n));
    return x / (2.0 * n + 1.0) * sum + to_double(d) * std::atan(x);
}

std::vector<double> solve_wallis_recurrence(double z0, std::span<const double> r) {
    std::vector<double> z(r.size() + 1);
    z[0] = z0;
    double acc = z0;
    for (size_t n = 1; n <= r.size(); ++n) {
        if (!std::isfinite(r[n - 1]))
            throw std::domain_error("solve_wallis_recurrence: inhomogeneous term not finite");
        const double lam = to_double(wallis_lambda(static_cast<int>(n)));
        acc += lam * r[n - 1] / (2.0 * n);
        z[n] = acc / lam;
    }
    return z;
}

// --------------------------------------------------------- log x quad kernel

double kernel_rational_part(int j, double x) {
    if (j < 0) throw std::domain_error("kernel_rational_part: index must be >= 0");
    const double q = 1.0 / (1.0 + x * x);
    double sum = 0.0;
    double qk = 1.0;
    for (int k = 1; k <= j; ++k) {
        qk *= q;
        sum += to_double(wallis_lambda(k) / (2 * k)) * x * qk;
    }
    return sum;
}

Rational kernel_rational_part_one(int n) {
    if (n < 0) throw std::domain_error("kernel_rational_part_one: index must be >= 0");
    Rational s = 0;
    for (int j = 1; j <= n; ++j) s += Rational(BigInt(1) << j, 2 * j * binomial(2 * j, j));
    return s;
}

double log_quad_kernel_int(int n, double x) {
    if (n < 0) throw std::domain_error("log_quad_kernel_int: n must be >= 0");
    if (!(x > 0)) throw std::domain_error("log_quad_kernel_int: x must be > 0");
    const double lnx = std::log(x);
    const double g0 = lnx * std::atan(x) - specfun::ti2(x);
    double bracket = g0 + kernel_rational_part(n, x) * lnx;
    for (int k = 1; k <= n; ++k)
        bracket -= (std::atan(x) + kernel_rational_part(k - 1, x)) / (2.0 * k - 1.0);
    return to_double(Rational(binomial(2 * n, n), BigInt(1) << (2 * n))) * bracket;
}

double log_quad_kernel_int_recur(int n, double x) {
    if (n < 0) throw std::domain_error("log_quad_kernel_int_recur: n must be >= 0");
    if (!(x > 0)) throw std::domain_error("log_quad_kernel_int_recur: x must be > 0");
    const double lnx = std::log(x);
    double g = lnx * std::atan(x) - specfun::ti2(x);
    double f_prev = std::atan(x);
    const double q = 1.0 / (x * x + 1.0);
    double qk = 1.0;
    for (int k = 1; k <= n; ++k) {
        qk *= q;
        const double f = ((2.0 * k - 1.0) * f_prev + x * qk) / (2.0 * k);
        const double rhs = 2.0 * k * lnx * f - ((2.0 * k - 1.0) * lnx + 1.0) * f_prev;
        g = ((2.0 * k - 1.0) * g + rhs) / (2.0 * k);
        f_prev = f;
    }
    return g;
}

double log_quad_kernel_int_series(int n, double x, double tol) {
    if (n < 0) throw std::domain_error("log_quad_kernel_int_series: n must be >= 0");
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("log_quad_kernel_int_series: series requires 0 < x < 1");
    // The terms peak around k ~ n/(1-x^2) before decaying, so the sum is
    // accumulated in quad precision; output stays binary64.
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    const Quad xq(x);
    const Quad lnx = log(xq);
    const Quad x2 = xq * xq;
    Quad binom(1);  // C(n+k, k)
    Quad xpow = xq;
    Quad sum(0);
    const double stop = std::max(tol, 1e-16) * 1e-2;
    for (int k = 0; k < 1000000; ++k) {
        const Quad m(2 * k + 1);
        const Quad term = binom * xpow * (lnx - 1 / m) / m;
        sum += (k % 2 ? -term : term);
        const double ratio = static_cast<double>((Quad(n + k + 1) / (k + 1)) * x2);
        if (ratio < 1.0 &&
            static_cast<double>(abs(term)) <
                stop * std::max(1.0, static_cast<double>(abs(sum))))
            break;
        binom *= Quad(n + k + 1);
        binom /= Quad(k + 1);
        xpow *= x2;
    }
    return static_cast<double>(sum);
}

double log_quad_int(int n, double a, double b) {
    if (!(a > 0) || !(b > 0)) throw std::domain_error("log_quad_int: a and b must be > 0");
    const double x = b / a;
    return std::pow(a, -2 * n - 1) *
           (std::log(a) * quad_kernel_int(n, x) + log_quad_kernel_int(n, x));
}

// ----------------------------------------------------------- half-line family

Rational wallis_coeff(int n) {
    if (n < 0) throw std::domain_error("wallis_coeff: n must be >= 0");
    return Rational(binomial(2 * n, n), BigInt(1) << (2 * n + 1));
}

ConstantExpr log_quad_halfline(int n) {
    if (n < 0) throw std::domain_error("log_quad_halfline: n must be >= 0");
    Rational odd = 0;
    for (int k = 1; k <= n; ++k) odd += Rational(1, 2 * k - 1);
    return ConstantExpr::atom(Atom::Pi, -wallis_coeff(n) * odd);
}

double log_quad_halfline_real(double beta) {
    if (!(beta > 0.5))
        throw std::domain_error("log_quad_halfline_real: divergent for beta <= 1/2");
    const double ratio = std::exp(log_gamma_real(beta - 0.5) - log_gamma_real(beta));
    return std::sqrt(kPi) * ratio * (digamma_real(0.5) - digamma_real(beta - 0.5)) / 4.0;
}

double log_quad_halfline_scaled(int n, double a, double b) {
    if (n < 0) throw std::domain_error("log_quad_halfline_scaled: n must be >= 0");
    if (!(a > 0) || !(b > 0))
        throw std::domain_error("log_quad_halfline_scaled: a and b must be > 0");
    const double c = a / b;
    Rational odd = 0;
    for (int k = 1; k <= n; ++k) odd += Rational(1, 2 * k - 1);
    const double unit = kPi / ipow(2.0 * c, 2 * n + 1) * to_double(binomial(2 * n, n)) *
                        (std::log(c) - to_double(odd));
    return unit / ipow(b, 2 * n + 2);
}

// ------------------------------------------------------------- trigonometric

namespace {
void check_trig_domain(double x, const char* who) {
    if (!(x > 0.0) || x > 0.5 * kPi + 1e-15)
        throw std::domain_error(std::string(who) + ": argument must lie in (0, pi/2]");
}
}  // namespace

double logsin_int(double x) {
    check_trig_domain(x, "logsin_int");
    return -x * kLn2 - 0.5 * specfun::clausen2(2.0 * x);
}

double logcos_int(double x) {
    check_trig_domain(x, "logcos_int");
    return -x * kLn2 + 0.5 * specfun::clausen2(kPi - 2.0 * x);
}

double logtan_int(double x) {
    check_trig_domain(x, "logtan_int");
    return logsin_int(x) - logcos_int(x);
}

double tcot_int(double x) {
    check_trig_domain(x, "tcot_int");
    return x * std::log(std::sin(x)) - logsin_int(x);
}

double power_log_int(int k, double b) {
    if (k < 0) throw std::domain_error("power_log_int: k must be >= 0");
    if (!(b > 0)) throw std::domain_error("power_log_int: b must be > 0");
    const double kk = k + 1.0;
    return std::pow(b, kk) / kk * (std::log(b) - 1.0 / kk);
}

// ----------------------------------------------------- real gamma/digamma

namespace {
// B_2 .. B_14
constexpr double kBernoulli[] = {1.0 / 6,  -1.0 / 30,    1.0 / 42, -1.0 / 30,
                                 5.0 / 66, -691.0 / 2730, 7.0 / 6};
}

double digamma_real(double x) {
    if (!(x > 0)) throw std::domain_error("digamma_real: argument must be > 0");
    double r = 0.0;
    while (x < 10.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double p = inv2;
    r += std::log(x) - 0.5 / x;
    for (int k = 0; k < 7; ++k) {
        r -= kBernoulli[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return r;
}

double log_gamma_real(double x) {
    if (!(x > 0)) throw std::domain_error("log_gamma_real: argument must be > 0");
    double r = 0.0;
    while (x < 10.0) {
        r -= std::log(x);
        x += 1.0;
    }
    r += (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi);
    const double inv2 = 1.0 / (x * x);
    double p = 1.0 / x;
    for (int k = 0; k < 7; ++k) {
        r += kBernoulli[k] / ((2.0 * (k + 1)) * (2.0 * (k + 1) - 1.0)) * p;
        p *= inv2;
    }
    return r;
}

}  // namespace logint::basis
