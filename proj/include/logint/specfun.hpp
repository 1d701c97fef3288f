#pragma once

#include "logint/constant_expr.hpp"
#include "logint/exact.hpp"

#include <functional>
#include <string>
#include <vector>

namespace logint::specfun {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kEulerGamma = 0.57721566490153286061;

inline constexpr int kStirlingMax = 64;

// Triangular table of unsigned Stirling numbers of the first kind c(n,k),
// 1 <= k <= n <= kStirlingMax, built once from
//   c(1,1) = 1,  c(n+1,k) = c(n,k-1) + n*c(n,k).
class StirlingTable {
public:
    static const StirlingTable& instance();
    // c(n,k); 0 for k < 1 or k > n. Throws CapacityError for n > kStirlingMax.
    const BigInt& unsigned_first(int n, int k) const;

private:
    StirlingTable();
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_;
};

Rational harmonic(int n);                 // H_n = sum_{k=1..n} 1/k
BigInt stirling1_unsigned(int n, int k);  // c(n,k) = |s(n,k)|

// Gamma(n + 1/2) = coeff * sqrt(pi), coeff = (2n)!/(4^n n!).
struct HalfGammaValue {
    Rational coeff;
    double value() const;
};
HalfGammaValue gamma_half(int n);

// psi(n + 1/2) = -gamma - 2 ln 2 + 2 H_{2n} - H_n, exact over {1, ln2, gamma}.
ConstantExpr digamma_half(int n);

double dilog(double x);     // Li_2(x), x <= 1
double ti2(double x);       // inverse tangent integral Ti_2(x), x >= 0
double clausen2(double theta);
double lobachevsky(double x);  // -int_0^x ln cos, 0 <= x <= pi/2

double catalan_constant();

struct NamedConstant {
    std::string name;
    ConstantExpr symbolic;
    double value;
};
// pi, ln2, gamma, G, zeta2 = pi^2/6, alt_zeta2 = pi^2/12, odd_zeta2 = pi^2/8
const std::vector<NamedConstant>& constants();

// Accelerated sum of sum_{k>=0} (-1)^k a(k) for positive, eventually
// totally monotone a: direct summation of the head plus repeated pairwise
// averaging of the tail's partial sums.
double alternating_sum(const std::function<double(int)>& a, int n_direct = 16,
                       int n_accel = 48);

}  // namespace logint::specfun
