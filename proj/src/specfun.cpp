#include "logint/specfun.hpp"

#include "logint/oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace logint::specfun {

namespace {
constexpr double kPiSqOver6 = kPi * kPi / 6.0;
}

// ---------------------------------------------------------------- Stirling

StirlingTable::StirlingTable() : zero_(0) {
    rows_.resize(kStirlingMax + 1);
    rows_[1] = {BigInt(1)};
    for (int n = 2; n <= kStirlingMax; ++n) {
        rows_[n].resize(n);
        for (int k = 1; k <= n; ++k) {
            const BigInt& left = (k >= 2) ? rows_[n - 1][k - 2] : zero_;
            const BigInt& same = (k <= n - 1) ? rows_[n - 1][k - 1] : zero_;
            rows_[n][k - 1] = left + (n - 1) * same;
        }
    }
}

const StirlingTable& StirlingTable::instance() {
    static const StirlingTable table;
    return table;
}

const BigInt& StirlingTable::unsigned_first(int n, int k) const {
    if (n < 1) throw std::domain_error("stirling1_unsigned: n must be >= 1");
    if (n > kStirlingMax)
        throw CapacityError("stirling1_unsigned: n exceeds table capacity " +
                            std::to_string(kStirlingMax));
    if (k < 1 || k > n) return zero_;
    return rows_[n][k - 1];
}

BigInt stirling1_unsigned(int n, int k) { return StirlingTable::instance().unsigned_first(n, k); }

Rational harmonic(int n) { return harmonic_number(n); }

// ------------------------------------------------------------- half-integer

HalfGammaValue gamma_half(int n) {
    if (n < 0) throw std::domain_error("gamma_half: n must be >= 0");
    Rational c(factorial(2 * n), factorial(n));
    c /= Rational(BigInt(1) << (2 * n));
    return HalfGammaValue{c};
}

double HalfGammaValue::value() const { return to_double(coeff) * std::sqrt(kPi); }

ConstantExpr digamma_half(int n) {
    if (n < 0) throw std::domain_error("digamma_half: n must be >= 0");
    ConstantExpr e = ConstantExpr::atom(Atom::EulerGamma, -1) + ConstantExpr::atom(Atom::Ln2, -2);
    e += ConstantExpr::atom(Atom::One, 2 * harmonic(2 * n) - harmonic(n));
    return e;
}

// ----------------------------------------------------------- series helpers

double alternating_sum(const std::function<double(int)>& a, int n_direct, int n_accel) {
    double head = 0.0;
    double sign = 1.0;
    for (int k = 0; k < n_direct; ++k) {
        head += sign * a(k);
        sign = -sign;
    }
    // Partial sums of the tail, then repeated pairwise averaging.
    std::vector<double> s(n_accel);
    double acc = 0.0;
    double tsign = 1.0;
    for (int j = 0; j < n_accel; ++j) {
        acc += tsign * a(n_direct + j);
        tsign = -tsign;
        s[j] = acc;
    }
    for (int len = n_accel - 1; len >= 1; --len)
        for (int i = 0; i < len; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    return head + sign * s[0];
}

double catalan_constant() {
    static const double g =
        alternating_sum([](int k) { return 1.0 / ((2.0 * k + 1) * (2.0 * k + 1)); });
    return g;
}

// ------------------------------------------------------------------- dilog

namespace {

// power series, |x| <= 1/2
double dilog_series(double x) {
    double term = x, sum = x;
    for (int k = 2; k < 80; ++k) {
        term *= x;
        const double add = term / (static_cast<double>(k) * k);
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

double dilog(double x) {
    if (x > 1.0) throw std::domain_error("dilog: argument must be <= 1");
    if (x == 1.0) return kPiSqOver6;
    if (x == 0.0) return 0.0;
    if (x < -1.0) {
        // inversion: Li2(-t) + Li2(-1/t) = -pi^2/6 - ln^2(t)/2, t > 1
        const double lt = std::log(-x);
        return -kPiSqOver6 - 0.5 * lt * lt - dilog(1.0 / x);
    }
    if (x > 0.5) {
        // reflection: Li2(x) + Li2(1-x) = pi^2/6 - ln x ln(1-x)
        return kPiSqOver6 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
    }
    if (x < -0.5) {
        // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, maps [-1,-1/2) to (1/3,1/2]
        const double l = std::log1p(-x);
        return -dilog_series(x / (x - 1.0)) - 0.5 * l * l;
    }
    return dilog_series(x);
}

// --------------------------------------------------------------------- Ti2

double ti2(double x) {
    if (x < 0.0) throw std::domain_error("ti2: argument must be >= 0");
    if (x == 0.0) return 0.0;
    if (x > 1.0) return ti2(1.0 / x) + 0.5 * kPi * std::log(x);
    if (x > 0.8) {
        // terms decay too slowly for direct summation near 1
        return alternating_sum([x](int k) {
            const double m = 2.0 * k + 1;
            return std::pow(x, m) / (m * m);
        });
    }
    const double x2 = x * x;
    double num = x, sum = x;
    for (int k = 1; k < 120; ++k) {
        num *= x2;
        const double m = 2.0 * k + 1;
        const double add = (k % 2 ? -num : num) / (m * m);
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

// ------------------------------------------------------ Clausen/Lobachevsky

namespace {

// Cl2 on [0, pi] by tanh-sinh quadrature of -int_0^theta ln(2 sin(t/2)) dt.
// The raw sine series converges far too slowly for 1e-12.
double clausen2_principal(double theta) {
    if (theta == 0.0) return 0.0;
    auto f = [](double, double dlo, double) { return -std::log(2.0 * std::sin(0.5 * dlo)); };
    const auto r = oracle::integrate(oracle::Integrand(f), oracle::Interval::finite(0.0, theta),
                                     1e-13);
    return r.value;
}

}  // namespace

double clausen2(double theta) {
    const double two_pi = 2.0 * kPi;
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    double sign = 1.0;
    if (t > kPi) {
        t = two_pi - t;
        sign = -1.0;
    }
    static std::map<double, double> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(t);
        if (it != cache.end()) return sign * it->second;
    }
    const double v = clausen2_principal(t);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(t, v);
    return sign * v;
}

double lobachevsky(double x) {
    if (x < 0.0 || x > 0.5 * kPi + 1e-15)
        throw std::domain_error("lobachevsky: argument must lie in [0, pi/2]");
    return x * kLn2 - 0.5 * clausen2(kPi - 2.0 * x);
}

// --------------------------------------------------------------- constants

const std::vector<NamedConstant>& constants() {
    static const std::vector<NamedConstant> table = [] {
        std::vector<NamedConstant> v;
        v.push_back({"pi", ConstantExpr::atom(Atom::Pi), kPi});
        v.push_back({"ln2", ConstantExpr::atom(Atom::Ln2), kLn2});
        v.push_back({"gamma", ConstantExpr::atom(Atom::EulerGamma), kEulerGamma});
        v.push_back({"G", ConstantExpr::atom(Atom::Catalan), catalan_constant()});
        v.push_back({"zeta2", ConstantExpr::atom(Atom::PiSq, Rational(1, 6)), kPi * kPi / 6.0});
        v.push_back(
            {"alt_zeta2", ConstantExpr::atom(Atom::PiSq, Rational(1, 12)), kPi * kPi / 12.0});
        v.push_back(
            {"odd_zeta2", ConstantExpr::atom(Atom::PiSq, Rational(1, 8)), kPi * kPi / 8.0});
        return v;
    }();
    return table;
}

}  // namespace logint::specfun
