#include "logint/catalog.hpp"

#include "logint/basis.hpp"
#include "logint/specfun.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>

namespace logint::catalog {

using oracle::Integrand;
using oracle::Interval;
using oracle::QuadratureResult;
using specfun::kLn2;
using specfun::kPi;

namespace {

double param(const ParamMap& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw std::domain_error("missing parameter '" + key + "'");
    return it->second;
}

int int_param(const ParamMap& m, const std::string& key, int min_value = 0) {
    const double v = param(m, key);
    const int n = static_cast<int>(std::lround(v));
    if (v != n || n < min_value)
        throw std::domain_error("parameter '" + key + "' must be an integer >= " +
                                std::to_string(min_value));
    return n;
}

double pos_param(const ParamMap& m, const std::string& key) {
    const double v = param(m, key);
    if (!(v > 0)) throw std::domain_error("parameter '" + key + "' must be > 0");
    return v;
}

ConstantExpr ce(Atom a, const Rational& r) { return ConstantExpr::atom(a, r); }
ConstantExpr ce(Atom a, const Rational& r, Atom b, const Rational& s) {
    return ConstantExpr::atom(a, r) + ConstantExpr::atom(b, s);
}

// quadrature-backed numeric routes
auto num_finite(Integrand f, double lo, double hi) {
    return [f = std::move(f), lo, hi](const ParamMap&, double tol) {
        return oracle::integrate(f, Interval::finite(lo, hi), tol);
    };
}
auto num_halfline(Integrand f, double lo = 0.0) {
    return [f = std::move(f), lo](const ParamMap&, double tol) {
        return oracle::integrate(f, Interval::half_line(lo), tol);
    };
}

// reference-value "numeric" route for the formula-check entries
QuadratureResult reference_value(double v) {
    QuadratureResult r;
    r.value = v;
    r.err_estimate = 1e-13;
    r.n_evals = 1;
    r.converged = true;
    return r;
}

// ln x on [0,1] written against whichever endpoint is nearer
double ln01(double x, double dhi) { return x < 0.5 ? std::log(x) : std::log1p(-dhi); }

// natural order: digit runs compare numerically, so "4.231.9" < "4.231.11"
bool natural_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            size_t ia = i, jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
            const std::string na = a.substr(i, ia - i), nb = b.substr(j, jb - j);
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = ia;
            j = jb;
        } else {
            if (da != db) return da;  // digits sort before letters
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() < b.size();
}

std::vector<CatalogEntry> build();

}  // namespace

ParamMap CatalogEntry::defaults() const {
    ParamMap m;
    for (const auto& p : params) m[p.name] = p.default_value;
    return m;
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> reg = [] {
        std::vector<CatalogEntry> v = build();
        std::sort(v.begin(), v.end(),
                  [](const CatalogEntry& a, const CatalogEntry& b) {
                      return natural_less(a.id, b.id);
                  });
        return v;
    }();
    return reg;
}

const CatalogEntry& lookup(const std::string& id) {
    for (const auto& e : entries())
        if (e.id == id) return e;
    throw UnknownEntryError("unknown catalog entry '" + id + "'");
}

namespace {

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> v;
    const double G = specfun::catalan_constant();

    auto add = [&v](CatalogEntry e) { v.push_back(std::move(e)); };

    // ---- series / elementary families ------------------------------------

    add({"4.291.1",
         "int_0^1 ln(1+x)/x dx",
         {},
         ce(Atom::PiSq, {1, 12}),
         [](const ParamMap&) { return kPi * kPi / 12.0; },
         num_finite([](double x, double, double) { return std::log1p(x) / x; }, 0, 1),
         {},
         {}});

    add({"4.291.2",
         "int_0^1 ln(1-x)/x dx",
         {},
         ce(Atom::PiSq, {-1, 6}),
         [](const ParamMap&) { return -kPi * kPi / 6.0; },
         num_finite(
             [](double x, double, double dhi) {
                 return (x < 0.5 ? std::log1p(-x) : std::log(dhi)) / x;
             },
             0, 1),
         {},
         {}});

    add({"4.223.1",
         "int_0^inf ln(1+e^-t) dt",
         {},
         ce(Atom::PiSq, {1, 12}),
         [](const ParamMap&) { return kPi * kPi / 12.0; },
         num_halfline([](double t, double, double) { return std::log1p(std::exp(-t)); }),
         {},
         {}});

    add({"4.223.2",
         "int_0^inf ln(1-e^-t) dt",
         {},
         ce(Atom::PiSq, {-1, 6}),
         [](const ParamMap&) { return -kPi * kPi / 6.0; },
         num_halfline([](double t, double, double) { return std::log(-std::expm1(-t)); }),
         {},
         {}});

    // ---- single pole on the negative axis --------------------------------

    add({"4.231.1",
         "int_0^1 ln x/(1+x) dx",
         {},
         ce(Atom::PiSq, {-1, 12}),
         [](const ParamMap&) { return -kPi * kPi / 12.0; },
         num_finite([](double x, double, double dhi) { return ln01(x, dhi) / (1.0 + x); }, 0, 1),
         {},
         {}});

    add({"4.231.2",
         "int_0^1 ln x/(1-x) dx",
         {},
         ce(Atom::PiSq, {-1, 6}),
         [](const ParamMap&) { return -kPi * kPi / 6.0; },
         num_finite(
             [](double x, double, double dhi) {
                 return x < 0.5 ? std::log(x) / (1.0 - x) : std::log1p(-dhi) / dhi;
             },
             0, 1),
         {},
         {}});

    add({"4.231.3",
         "int_0^1 x ln x/(1-x) dx",
         {},
         ce(Atom::One, 1, Atom::PiSq, {-1, 6}),
         [](const ParamMap&) { return 1.0 - kPi * kPi / 6.0; },
         num_finite(
             [](double x, double, double dhi) {
                 return x < 0.5 ? x * std::log(x) / (1.0 - x) : x * std::log1p(-dhi) / dhi;
             },
             0, 1),
         {},
         {}});

    add({"4.231.4",
         "int_0^1 (1+x)/(1-x) ln x dx",
         {},
         ce(Atom::One, 1, Atom::PiSq, {-1, 3}),
         [](const ParamMap&) { return 1.0 - kPi * kPi / 3.0; },
         num_finite(
             [](double x, double, double dhi) {
                 const double k = x < 0.5 ? std::log(x) / (1.0 - x) : std::log1p(-dhi) / dhi;
                 return (1.0 + x) * k;
             },
             0, 1),
         {},
         {}});

    add({"4.231.19",
         "int_0^1 x ln x/(1+x) dx",
         {},
         ce(Atom::PiSq, {1, 12}, Atom::One, -1),
         [](const ParamMap&) { return kPi * kPi / 12.0 - 1.0; },
         num_finite([](double x, double, double dhi) { return x * ln01(x, dhi) / (1.0 + x); },
                    0, 1),
         ce(Atom::PiSq, {1, 2}, Atom::One, -1),
         "printed value -1 + pi^2/2 fails numeric verification; partial "
         "fractions x/(1+x) = 1 - 1/(1+x) give pi^2/12 - 1"});

    add({"4.231.20",
         "int_0^1 (1-x) ln x/(1+x) dx",
         {},
         ce(Atom::One, 1, Atom::PiSq, {-1, 6}),
         [](const ParamMap&) { return 1.0 - kPi * kPi / 6.0; },
         num_finite(
             [](double x, double, double dhi) {
                 return (x < 0.5 ? (1.0 - x) * std::log(x) : dhi * std::log1p(-dhi)) /
                        (1.0 + x);
             },
             0, 1),
         {},
         {}});

    add({"4.231.13",
         "int_0^1 ln x/(1-x^2) dx",
         {},
         ce(Atom::PiSq, {-1, 8}),
         [](const ParamMap&) { return -kPi * kPi / 8.0; },
         num_finite(
             [](double x, double, double dhi) {
                 return x < 0.5 ? std::log(x) / (1.0 - x * x)
                                : std::log1p(-dhi) / (dhi * (2.0 - dhi));
             },
             0, 1),
         ce(Atom::PiSq, {-1, 48}),
         "printed value -pi^2/48 fails numeric verification; the partial "
         "fractions 1/(1-x^2) = (1/2)/(1-x) + (1/2)/(1+x) give -pi^2/8"});

    add({"4.231.14",
         "int_0^1 x ln x/(1+x^2) dx",
         {},
         ce(Atom::PiSq, {-1, 48}),
         [](const ParamMap&) { return -kPi * kPi / 48.0; },
         num_finite(
             [](double x, double, double dhi) { return x * ln01(x, dhi) / (1.0 + x * x); }, 0,
             1),
         {},
         {}});

    add({"4.231.15",
         "int_0^1 x ln x/(1-x^2) dx",
         {},
         ce(Atom::PiSq, {-1, 24}),
         [](const ParamMap&) { return -kPi * kPi / 24.0; },
         num_finite(
             [](double x, double, double dhi) {
                 return x < 0.5 ? x * std::log(x) / (1.0 - x * x)
                                : x * std::log1p(-dhi) / (dhi * (2.0 - dhi));
             },
             0, 1),
         {},
         {}});

    add({"4.295.11",
         "int_0^1 ln(1-x^2)/x dx",
         {},
         ce(Atom::PiSq, {-1, 12}),
         [](const ParamMap&) { return -kPi * kPi / 12.0; },
         num_finite(
             [](double x, double, double dhi) {
                 return (x < 0.5 ? std::log1p(-x * x) : std::log(dhi * (2.0 - dhi))) / x;
             },
             0, 1),
         {},
         {}});

    // ---- Catalan family ---------------------------------------------------

    add({"4.231.12",
         "int_0^1 ln x/(1+x^2) dx",
         {},
         ce(Atom::Catalan, -1),
         [G](const ParamMap&) { return -G; },
         num_finite([](double x, double, double dhi) { return ln01(x, dhi) / (1.0 + x * x); },
                    0, 1),
         {},
         {}});

    add({"4.231.12b",
         "int_1^inf ln t/(1+t^2) dt",
         {},
         ce(Atom::Catalan, 1),
         [G](const ParamMap&) { return G; },
         num_halfline([](double x, double, double) { return std::log(x) / (1.0 + x * x); },
                      1.0),
         {},
         {}});

    add({"4.531.1",
         "int_0^1 arctan(x)/x dx",
         {},
         ce(Atom::Catalan, 1),
         [G](const ParamMap&) { return G; },
         num_finite([](double x, double, double) { return std::atan(x) / x; }, 0, 1),
         {},
         {}});

    add({"4.521.1",
         "int_0^1 arcsin(u)/u du",
         {},
         ce(Atom::PiLn2, {1, 2}),
         [](const ParamMap&) { return 0.5 * kPi * kLn2; },
         num_finite([](double x, double, double) { return std::asin(x) / x; }, 0, 1),
         {},
         {}});

    add({"4.231.11",
         "int_0^a ln x/(x^2+a^2) dx = pi ln(a)/(4a) - G/a",
         {{"a", 2.0, "a > 0"}},
         ce(Atom::PiLn2, {1, 8}, Atom::Catalan, {-1, 2}),
         [G](const ParamMap& m) {
             const double a = pos_param(m, "a");
             return kPi * std::log(a) / (4.0 * a) - G / a;
         },
         [](const ParamMap& m, double tol) {
             const double a = pos_param(m, "a");
             return oracle::integrate(
                 Integrand([a](double x, double, double) {
                     return std::log(x) / (x * x + a * a);
                 }),
                 Interval::finite(0, a), tol);
         },
         {},
         {}});

    // ---- half-line family -------------------------------------------------

    add({"4.231.7",
         "int_0^inf ln x/(a^2+b^2 x^2)^{n+1} dx",
         {{"n", 1.0, "integer n >= 0"}, {"a", 1.0, "a > 0"}, {"b", 1.0, "b > 0"}},
         ce(Atom::Pi, {-1, 4}),
         [](const ParamMap& m) {
             return basis::log_quad_halfline_scaled(int_param(m, "n"), pos_param(m, "a"),
                                                    pos_param(m, "b"));
         },
         [](const ParamMap& m, double tol) {
             const int n = int_param(m, "n");
             const double a = pos_param(m, "a"), b = pos_param(m, "b");
             return oracle::integrate(
                 Integrand([n, a, b](double x, double, double) {
                     return std::log(x) / std::pow(a * a + b * b * x * x, n + 1);
                 }),
                 Interval::half_line(), tol);
         },
         {},
         {}});

    add({"4.231.8",
         "int_0^inf ln x/(a^2+b^2 x^2) dx = pi/(2ab) ln(a/b)",
         {{"a", 2.0, "a > 0"}, {"b", 1.0, "b > 0"}},
         ce(Atom::PiLn2, {1, 4}),
         [](const ParamMap& m) {
             const double a = pos_param(m, "a"), b = pos_param(m, "b");
             return kPi / (2.0 * a * b) * std::log(a / b);
         },
         [](const ParamMap& m, double tol) {
             const double a = pos_param(m, "a"), b = pos_param(m, "b");
             return oracle::integrate(
                 Integrand([a, b](double x, double, double) {
                     return std::log(x) / (a * a + b * b * x * x);
                 }),
                 Interval::half_line(), tol);
         },
         {},
         {}});

    add({"4.231.9",
         "int_0^inf ln(px)/(q^2+x^2) dx = pi/(2q) ln(pq)",
         {{"p", 1.0, "p > 0"}, {"q", 2.0, "q > 0"}},
         ce(Atom::PiLn2, {1, 4}),
         [](const ParamMap& m) {
             const double p = pos_param(m, "p"), q = pos_param(m, "q");
             return kPi / (2.0 * q) * std::log(p * q);
         },
         [](const ParamMap& m, double tol) {
             const double p = pos_param(m, "p"), q = pos_param(m, "q");
             return oracle::integrate(
                 Integrand([p, q](double x, double, double) {
                     return (std::log(p) + std::log(x)) / (q * q + x * x);
                 }),
                 Interval::half_line(), tol);
         },
         {},
         {}});

    add({"halfline-odd-harmonic",
         "int_0^inf ln x/(c^2+x^2)^{n+1} dx, odd-harmonic closed form",
         {{"n", 2.0, "integer n >= 1"}, {"c", 2.0, "c > 0"}},
         ce(Atom::PiLn2, {3, 512}, Atom::Pi, {-1, 128}),
         [](const ParamMap& m) {
             return basis::log_quad_halfline_scaled(int_param(m, "n", 1), pos_param(m, "c"),
                                                    1.0);
         },
         [](const ParamMap& m, double tol) {
             const int n = int_param(m, "n", 1);
             const double c = pos_param(m, "c");
             return oracle::integrate(
                 Integrand([n, c](double x, double, double) {
                     return std::log(x) / std::pow(c * c + x * x, n + 1);
                 }),
                 Interval::half_line(), tol);
         },
         ce(Atom::PiLn2, {3, 512}, Atom::Pi, {1, 64}),
         "the printed harmonic form carries -H_n + 2H_{2n} = 2*sum 1/(2k-1), "
         "twice the correct subtrahend sum_{k<=n} 1/(2k-1) = H_{2n} - H_n/2"});

    add({"log-quad-unit",
         "int_0^1 ln t/(1+t^2)^{n+1} dt, unit-upper-limit closed form",
         {{"n", 1.0, "integer n >= 0"}},
         ce(Atom::Catalan, {-1, 2}, Atom::Pi, {-1, 8}),
         [G](const ParamMap& m) {
             const int n = int_param(m, "n");
             double bracket = -G;
             for (int k = 1; k <= n; ++k)
                 bracket -= (kPi / 4.0 + to_double(basis::kernel_rational_part_one(k - 1))) /
                            (2.0 * k - 1.0);
             return to_double(Rational(binomial(2 * n, n), BigInt(1) << (2 * n))) * bracket;
         },
         [](const ParamMap& m, double tol) {
             const int n = int_param(m, "n");
             return oracle::integrate(
                 Integrand([n](double x, double, double dhi) {
                     return ln01(x, dhi) / std::pow(1.0 + x * x, n + 1);
                 }),
                 Interval::finite(0, 1), tol);
         },
         ce(Atom::Catalan, {1, 2}, Atom::Pi, {-1, 8}),
         "the printed bracket opens with +G; the n = 0 integral equals -G, "
         "which forces -G (numeric at n=1: -0.8507, printed form gives +0.0653)"});

    add({"digamma-half",
         "psi(n + 1/2) = -gamma - 2 ln 2 + 2 H_{2n} - H_n",
         {{"n", 1.0, "integer n >= 0"}},
         ce(Atom::One, 2) + ce(Atom::EulerGamma, -1) + ce(Atom::Ln2, -2),
         [](const ParamMap& m) { return specfun::digamma_half(int_param(m, "n")).to_float(); },
         [](const ParamMap& m, double) {
             return reference_value(basis::digamma_real(int_param(m, "n") + 0.5));
         },
         ce(Atom::One, -2) + ce(Atom::EulerGamma, -1) + ce(Atom::Ln2, 2),
         "a printed variant reads -gamma + 2 ln 2 - 2 sum 1/(2k-1); both signs "
         "after -gamma are flipped"});

    // ---- trigonometric versions -------------------------------------------

    add({"4.224.1",
         "int_0^x ln sin t dt = L(pi/2 - x) - L(pi/2)",
         {{"x", kPi / 4.0, "0 < x <= pi/2"}},
         ce(Atom::PiLn2, {-1, 4}, Atom::Catalan, {-1, 2}),
         [](const ParamMap& m) {
             const double x = param(m, "x");
             return specfun::lobachevsky(0.5 * kPi - x) - specfun::lobachevsky(0.5 * kPi);
         },
         [](const ParamMap& m, double tol) {
             const double x = param(m, "x");
             return oracle::integrate(
                 Integrand([](double t, double, double) { return std::log(std::sin(t)); }),
                 Interval::finite(0, x), tol);
         },
         {},
         {}});

    add({"4.224.2",
         "int_0^{pi/4} ln sin t dt",
         {},
         ce(Atom::PiLn2, {-1, 4}, Atom::Catalan, {-1, 2}),
         [G](const ParamMap&) { return -0.25 * kPi * kLn2 - 0.5 * G; },
         num_finite([](double t, double, double) { return std::log(std::sin(t)); }, 0,
                    kPi / 4.0),
         {},
         {}});

    add({"4.224.3",
         "int_0^{pi/2} ln sin t dt",
         {},
         ce(Atom::PiLn2, {-1, 2}),
         [](const ParamMap&) { return -0.5 * kPi * kLn2; },
         num_finite([](double t, double, double) { return std::log(std::sin(t)); }, 0,
                    kPi / 2.0),
         {},
         {}});

    add({"4.224.4",
         "Lobachevsky function L(x) = -int_0^x ln cos t dt (entry 8.260)",
         {{"x", kPi / 4.0, "0 <= x <= pi/2"}},
         ce(Atom::PiLn2, {1, 4}, Atom::Catalan, {-1, 2}),
         [](const ParamMap& m) { return specfun::lobachevsky(param(m, "x")); },
         [](const ParamMap& m, double tol) {
             const double x = param(m, "x");
             return oracle::integrate(
                 Integrand([](double t, double, double) { return -std::log(std::cos(t)); }),
                 Interval::finite(0, x), tol);
         },
         {},
         {}});

    add({"4.224.5",
         "int_0^{pi/4} ln cos t dt",
         {},
         ce(Atom::PiLn2, {-1, 4}, Atom::Catalan, {1, 2}),
         [G](const ParamMap&) { return -0.25 * kPi * kLn2 + 0.5 * G; },
         num_finite([](double t, double, double) { return std::log(std::cos(t)); }, 0,
                    kPi / 4.0),
         {},
         {}});

    add({"4.224.6",
         "int_0^{pi/2} ln cos t dt",
         {},
         ce(Atom::PiLn2, {-1, 2}),
         [](const ParamMap&) { return -0.5 * kPi * kLn2; },
         num_finite([](double, double, double dhi) { return std::log(std::sin(dhi)); }, 0,
                    kPi / 2.0),
         {},
         {}});

    add({"4.225.1",
         "int_0^{pi/4} ln(cos x - sin x) dx",
         {},
         ce(Atom::PiLn2, {-1, 8}, Atom::Catalan, {-1, 2}),
         [G](const ParamMap&) { return -0.125 * kPi * kLn2 - 0.5 * G; },
         num_finite(
             [](double, double, double dhi) {
                 // cos x - sin x = sqrt(2) sin(pi/4 - x)
                 return 0.5 * kLn2 + std::log(std::sin(dhi));
             },
             0, kPi / 4.0),
         {},
         {}});

    add({"4.225.2",
         "int_0^{pi/4} ln(cos x + sin x) dx",
         {},
         ce(Atom::PiLn2, {-1, 8}, Atom::Catalan, {1, 2}),
         [G](const ParamMap&) { return -0.125 * kPi * kLn2 + 0.5 * G; },
         num_finite(
             [](double x, double, double) { return std::log(std::cos(x) + std::sin(x)); }, 0,
             kPi / 4.0),
         {},
         {}});

    add({"4.227.1",
         "int_0^u ln tan x dx = L(u) + L(pi/2-u) - (pi/2) ln 2 "
         "(constant printed as +(pi/2) ln 2; the oracle fixes the sign)",
         {{"u", kPi / 4.0, "0 < u < pi/2"}},
         ce(Atom::Catalan, -1),
         [](const ParamMap& m) {
             const double u = param(m, "u");
             return specfun::lobachevsky(u) + specfun::lobachevsky(0.5 * kPi - u) -
                    0.5 * kPi * kLn2;
         },
         [](const ParamMap& m, double tol) {
             const double u = param(m, "u");
             return oracle::integrate(
                 Integrand([](double x, double, double) {
                     return std::log(std::sin(x)) - std::log(std::cos(x));
                 }),
                 Interval::finite(0, u), tol);
         },
         {},
         {}});

    add({"4.227.2",
         "int_0^{pi/4} ln tan t dt",
         {},
         ce(Atom::Catalan, -1),
         [G](const ParamMap&) { return -G; },
         num_finite([](double x, double, double) { return std::log(std::tan(x)); }, 0,
                    kPi / 4.0),
         {},
         {}});

    add({"4.227.3",
         "int_0^{pi/2} ln(a tan t) dt = (pi/2) ln a",
         {{"a", 2.0, "a > 0"}},
         ce(Atom::PiLn2, {1, 2}),
         [](const ParamMap& m) { return 0.5 * kPi * std::log(pos_param(m, "a")); },
         [](const ParamMap& m, double tol) {
             const double a = pos_param(m, "a");
             return oracle::integrate(
                 Integrand([a](double x, double, double dhi) {
                     return std::log(a) + std::log(std::sin(x)) - std::log(std::sin(dhi));
                 }),
                 Interval::finite(0, kPi / 2.0), tol);
         },
         {},
         {}});

    add({"4.227.9",
         "int_0^{pi/4} ln(1 + tan x) dx",
         {},
         ce(Atom::PiLn2, {1, 8}),
         [](const ParamMap&) { return 0.125 * kPi * kLn2; },
         num_finite([](double x, double, double) { return std::log1p(std::tan(x)); }, 0,
                    kPi / 4.0),
         {},
         {}});

    add({"4.227.10",
         "int_0^{pi/2} ln(1 + tan x) dx",
         {},
         ce(Atom::PiLn2, {1, 4}, Atom::Catalan, 1),
         [G](const ParamMap&) { return 0.25 * kPi * kLn2 + G; },
         num_finite(
             [](double x, double, double dhi) {
                 // 1 + tan = (cos + sin)/cos, cos x = sin(dhi)
                 return std::log(std::cos(x) + std::sin(x)) - std::log(std::sin(dhi));
             },
             0, kPi / 2.0),
         {},
         {}});

    add({"4.227.11",
         "int_0^{pi/4} ln(1 - tan x) dx",
         {},
         ce(Atom::PiLn2, {1, 8}, Atom::Catalan, -1),
         [G](const ParamMap&) { return 0.125 * kPi * kLn2 - G; },
         num_finite(
             [](double x, double, double dhi) {
                 // 1 - tan = sqrt(2) sin(pi/4 - x)/cos x
                 return 0.5 * kLn2 + std::log(std::sin(dhi)) - std::log(std::cos(x));
             },
             0, kPi / 4.0),
         {},
         {}});

    add({"4.227.13",
         "int_0^{pi/4} ln(1 + cot x) dx",
         {},
         ce(Atom::PiLn2, {1, 8}, Atom::Catalan, 1),
         [G](const ParamMap&) { return 0.125 * kPi * kLn2 + G; },
         num_finite(
             [](double x, double, double) {
                 return std::log(std::sin(x) + std::cos(x)) - std::log(std::sin(x));
             },
             0, kPi / 4.0),
         {},
         {}});

    add({"4.227.14",
         "int_0^{pi/4} ln(cot x - 1) dx",
         {},
         ce(Atom::PiLn2, {1, 8}),
         [](const ParamMap&) { return 0.125 * kPi * kLn2; },
         num_finite(
             [](double x, double, double dhi) {
                 // cot - 1 = sqrt(2) sin(pi/4 - x)/sin x
                 return 0.5 * kLn2 + std::log(std::sin(dhi)) - std::log(std::sin(x));
             },
             0, kPi / 4.0),
         {},
         {}});

    add({"4.227.15",
         "int_0^{pi/4} ln(tan x + cot x) dx",
         {},
         ce(Atom::PiLn2, {1, 2}),
         [](const ParamMap&) { return 0.5 * kPi * kLn2; },
         num_finite(
             [](double x, double, double) {
                 // tan + cot = 2/sin(2x)
                 return kLn2 - std::log(std::sin(2.0 * x));
             },
             0, kPi / 4.0),
         {},
         {}});

    add({"3.747.7",
         "int_0^{pi/2} t cot t dt",
         {},
         ce(Atom::PiLn2, {1, 2}),
         [](const ParamMap&) { return 0.5 * kPi * kLn2; },
         num_finite(
             [](double x, double, double dhi) {
                 // cos x = sin(dhi) on [0, pi/2]
                 return x * std::sin(dhi) / std::sin(x);
             },
             0, kPi / 2.0),
         {},
         {}});

    add({"4.295.5",
         "int_0^1 ln(1+x^2)/(1+x^2) dx",
         {},
         ce(Atom::PiLn2, {1, 2}, Atom::Catalan, -1),
         [G](const ParamMap&) { return 0.5 * kPi * kLn2 - G; },
         num_finite(
             [](double x, double, double) { return std::log1p(x * x) / (1.0 + x * x); }, 0, 1),
         {},
         {}});

    add({"4.295.6",
         "int_1^inf ln(1+t^2)/(1+t^2) dt",
         {},
         ce(Atom::PiLn2, {1, 2}, Atom::Catalan, 1),
         [G](const ParamMap&) { return 0.5 * kPi * kLn2 + G; },
         num_halfline(
             [](double x, double, double) {
                 if (x > 1e8)
                     return (2.0 * std::log(x) + std::log1p(1.0 / (x * x))) / (1.0 + x * x);
                 return std::log1p(x * x) / (1.0 + x * x);
             },
             1.0),
         {},
         {}});

    // ---- formula-check entry ----------------------------------------------

    add({"2.148.4",
         "int_0^x dt/(1+t^2)^{n+1}, double-factorial antiderivative form",
         {{"n", 1.0, "integer n >= 0"}, {"x", 1.0, "x > 0"}},
         ce(Atom::Pi, {1, 8}, Atom::One, {1, 4}),
         [](const ParamMap& m) {
             return basis::quad_kernel_int_dblfact(int_param(m, "n"), pos_param(m, "x"));
         },
         [](const ParamMap& m, double tol) {
             const int n = int_param(m, "n");
             const double x = pos_param(m, "x");
             return oracle::integrate(
                 Integrand([n](double t, double, double) {
                     return std::pow(1.0 + t * t, -(n + 1));
                 }),
                 Interval::finite(0, x), tol);
         },
         {},
         {}});

    return v;
}

}  // namespace

VerifyReport verify_entry(const std::string& id, const ParamMap& params, double tol) {
    const CatalogEntry& e = lookup(id);
    ParamMap p = e.defaults();
    for (const auto& [k, val] : params) {
        if (!p.count(k))
            throw std::domain_error("entry " + id + " has no parameter '" + k + "'");
        p[k] = val;
    }

    VerifyReport rep;
    rep.id = id;
    rep.erratum_flag = e.erratum_note.has_value();
    if (e.erratum_note) rep.note = *e.erratum_note;
    rep.closed = e.closed_fn(p);
    rep.numeric = e.numeric_fn(p, tol);
    rep.abs_diff = std::fabs(rep.closed - rep.numeric.value);
    if (!rep.numeric.converged) {
        rep.pass = false;
        rep.note = "oracle did not converge (best err estimate " +
                   std::to_string(rep.numeric.err_estimate) + ")";
    } else {
        rep.pass = rep.abs_diff <= std::max(tol, rep.numeric.err_estimate * 10.0);
    }
    if (e.printed_value) {
        // printed variants are registered at the default parameters only
        const bool at_defaults = p == e.defaults();
        if (at_defaults) {
            rep.printed = e.printed_value->to_float();
            rep.printed_diff = std::fabs(*rep.printed - rep.numeric.value);
        }
    }
    return rep;
}

VerifyReport verify_entry(const std::string& id, double tol) {
    return verify_entry(id, {}, tol);
}

VerifySummary verify_all(double tol) {
    VerifySummary s;
    for (const auto& e : entries()) {
        VerifyReport r = verify_entry(e.id, {}, tol);
        if (r.pass)
            ++s.n_pass;
        else
            ++s.n_fail;
        if (r.erratum_flag) ++s.n_errata;
        s.reports.push_back(std::move(r));
    }
    return s;
}

std::string export_json() {
    nlohmann::ordered_json doc;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries()) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["description"] = e.description;
        je["params"] = nlohmann::ordered_json::array();
        for (const auto& p : e.params)
            je["params"].push_back({{"name", p.name}, {"default", p.default_value}});
        nlohmann::ordered_json atoms = nlohmann::ordered_json::object();
        for (const auto& [a, c] : e.closed_form.terms())
            atoms[atom_name(a)] = {numerator(c).convert_to<long long>(),
                                   denominator(c).convert_to<long long>()};
        je["closed_form"] = {{"atoms", atoms}};
        je["printed_differs"] = e.printed_value.has_value();
        if (e.erratum_note)
            je["erratum"] = *e.erratum_note;
        else
            je["erratum"] = nullptr;
        doc["entries"].push_back(std::move(je));
    }
    return doc.dump(2) + "\n";
}

}  // namespace logint::catalog
