#include <doctest.h>

#include "logint/oracle.hpp"
#include "logint/specfun.hpp"

#include <atomic>
#include <cmath>
#include <thread>

using namespace logint;
using specfun::kLn2;
using specfun::kPi;

// G to more digits than a double holds
static const double kCatalanRef = 0.91596559417721901505460351493238411;

TEST_SUITE_BEGIN("specfun");

TEST_CASE("harmonic numbers") {
    CHECK(specfun::harmonic(0) == Rational(0));
    CHECK(specfun::harmonic(2) == Rational(3, 2));
    CHECK(specfun::harmonic(6) == Rational(49, 20));
    CHECK_THROWS_AS(specfun::harmonic(-1), std::domain_error);
}

TEST_CASE("unsigned Stirling numbers of the first kind") {
    CHECK(specfun::stirling1_unsigned(4, 4) == 1);
    CHECK(specfun::stirling1_unsigned(3, 2) == 3);
    CHECK(specfun::stirling1_unsigned(5, 2) == 50);  // (5-1)! H_4 = 24 * 25/12
    CHECK(specfun::stirling1_unsigned(5, 0) == 0);
    CHECK(specfun::stirling1_unsigned(5, 6) == 0);
    CHECK_THROWS_AS(specfun::stirling1_unsigned(65, 2), CapacityError);
    CHECK_THROWS_AS(specfun::stirling1_unsigned(0, 1), std::domain_error);

    // independently recompute one full row from the recurrence
    std::vector<BigInt> row = {BigInt(1)};  // n = 1
    for (int n = 1; n < 12; ++n) {
        std::vector<BigInt> next(n + 1, BigInt(0));
        for (int k = 1; k <= n + 1; ++k) {
            BigInt v = 0;
            if (k >= 2) v += row[k - 2];
            if (k <= n) v += n * row[k - 1];
            next[k - 1] = v;
        }
        row = std::move(next);
    }
    for (int k = 1; k <= 12; ++k) CHECK(specfun::stirling1_unsigned(12, k) == row[k - 1]);
}

TEST_CASE("Stirling c(n,1) and c(n,2) closed forms, full table") {
    for (int n = 1; n <= specfun::kStirlingMax; ++n) {
        CHECK(specfun::stirling1_unsigned(n, n) == 1);
        CHECK(specfun::stirling1_unsigned(n, 1) == factorial(n - 1));
        if (n >= 2) {
            const Rational expect = Rational(factorial(n - 1)) * harmonic_number(n - 1);
            CHECK(Rational(specfun::stirling1_unsigned(n, 2)) == expect);
        }
    }
}

TEST_CASE("Gamma at half integers") {
    CHECK(specfun::gamma_half(0).coeff == Rational(1));
    CHECK(specfun::gamma_half(1).coeff == Rational(1, 2));
    CHECK(specfun::gamma_half(2).coeff == Rational(3, 4));
    CHECK(specfun::gamma_half(0).value() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
}

TEST_CASE("digamma at half integers") {
    const ConstantExpr psi_half =
        ConstantExpr::atom(Atom::EulerGamma, -1) + ConstantExpr::atom(Atom::Ln2, -2);
    CHECK(specfun::digamma_half(0) == psi_half);
    CHECK(specfun::digamma_half(1) == psi_half + ConstantExpr::atom(Atom::One, 2));

    // psi(x+1) - psi(x) = 1/x at x = n + 1/2, exactly at the rational layer
    for (int n = 0; n <= 20; ++n) {
        const ConstantExpr diff = specfun::digamma_half(n + 1) - specfun::digamma_half(n);
        CHECK(diff == ConstantExpr::atom(Atom::One, Rational(2, 2 * n + 1)));
    }
}

TEST_CASE("dilogarithm") {
    CHECK(specfun::dilog(0.0) == 0.0);
    CHECK(specfun::dilog(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
    CHECK(specfun::dilog(-1.0) == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-15));
    // Li2(1/2) = pi^2/12 - ln^2(2)/2
    CHECK(specfun::dilog(0.5) ==
          doctest::Approx(kPi * kPi / 12.0 - 0.5 * kLn2 * kLn2).epsilon(1e-15));
    CHECK_THROWS_AS(specfun::dilog(1.0 + 1e-12), std::domain_error);

    // inversion identity at x = -3
    const double lhs = specfun::dilog(-3.0);
    const double l3 = std::log(3.0);
    CHECK(lhs == doctest::Approx(-kPi * kPi / 6.0 - 0.5 * l3 * l3 - specfun::dilog(-1.0 / 3.0))
                     .epsilon(1e-14));
    // and against the quadrature oracle: int_0^3 ln(1+t)/t dt = -Li2(-3)
    const auto q = oracle::integrate(
        oracle::Integrand([](double t, double, double) { return std::log1p(t) / t; }),
        oracle::Interval::finite(0, 3), 1e-12);
    CHECK(q.converged);
    CHECK(lhs == doctest::Approx(-q.value).epsilon(1e-12));
}

TEST_CASE("inverse tangent integral") {
    CHECK(specfun::ti2(0.0) == 0.0);
    CHECK(specfun::ti2(1.0) ==
          doctest::Approx(specfun::catalan_constant()).epsilon(1e-15));
    CHECK_THROWS_AS(specfun::ti2(-0.1), std::domain_error);

    for (double x : {2.0, 3.0, 10.0})
        CHECK(std::fabs(specfun::ti2(x) - specfun::ti2(1.0 / x) - 0.5 * kPi * std::log(x)) <
              1e-12);

    const auto q = oracle::integrate(
        oracle::Integrand([](double t, double, double) { return std::atan(t) / t; }),
        oracle::Interval::finite(0, 3), 1e-12);
    CHECK(specfun::ti2(3.0) == doctest::Approx(q.value).epsilon(1e-12));

    // continuity across the series/acceleration switch at 0.8
    CHECK(specfun::ti2(0.8 - 1e-9) == doctest::Approx(specfun::ti2(0.8 + 1e-9)).epsilon(1e-8));
}

TEST_CASE("Clausen function") {
    CHECK(specfun::clausen2(0.0) == 0.0);
    CHECK(std::fabs(specfun::clausen2(kPi)) < 1e-12);
    CHECK(specfun::clausen2(0.5 * kPi) ==
          doctest::Approx(specfun::catalan_constant()).epsilon(1e-12));
    // odd, 2pi-periodic
    CHECK(specfun::clausen2(-1.0) == doctest::Approx(-specfun::clausen2(1.0)).epsilon(1e-13));
    CHECK(specfun::clausen2(1.0 + 2.0 * kPi) ==
          doctest::Approx(specfun::clausen2(1.0)).epsilon(1e-13));
}

TEST_CASE("Lobachevsky function") {
    CHECK(specfun::lobachevsky(0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(specfun::lobachevsky(0.5 * kPi) == doctest::Approx(0.5 * kPi * kLn2).epsilon(1e-13));
    CHECK(specfun::lobachevsky(0.25 * kPi) ==
          doctest::Approx(0.25 * kPi * kLn2 - 0.5 * specfun::catalan_constant())
              .epsilon(1e-12));
    CHECK_THROWS_AS(specfun::lobachevsky(-0.1), std::domain_error);
    CHECK_THROWS_AS(specfun::lobachevsky(2.0), std::domain_error);

    // L(x) = -int_0^x ln cos on a 20-point grid
    for (int i = 1; i <= 20; ++i) {
        const double x = (0.5 * kPi - 0.01) * i / 20.0;
        const auto q = oracle::integrate(
            oracle::Integrand([](double t, double, double) { return std::log(std::cos(t)); }),
            oracle::Interval::finite(0, x), 1e-12);
        CHECK(std::fabs(specfun::lobachevsky(x) + q.value) < 1e-9);
    }
}

TEST_CASE("named constants") {
    const auto& cs = specfun::constants();
    auto get = [&cs](const std::string& name) {
        for (const auto& c : cs)
            if (c.name == name) return c;
        FAIL("missing constant ", name);
        return cs.front();
    };
    CHECK(get("zeta2").value == kPi * kPi / 6.0);
    CHECK(get("odd_zeta2").value == kPi * kPi / 8.0);
    CHECK(get("alt_zeta2").value == kPi * kPi / 12.0);
    CHECK(get("zeta2").symbolic.to_string() == "pi^2/6");

    // G from the accelerated series, to full double precision
    CHECK(std::fabs(get("G").value - kCatalanRef) <= 1e-15);

    // cross-checks: Cl2(pi/2) and the quadrature oracle on -int_0^1 ln x/(1+x^2)
    CHECK(std::fabs(get("G").value - specfun::clausen2(0.5 * kPi)) < 1e-12);
    const auto q = oracle::integrate(
        oracle::Integrand(
            [](double x, double, double) { return -std::log(x) / (1.0 + x * x); }),
        oracle::Interval::finite(0, 1), 1e-13);
    CHECK(std::fabs(get("G").value - q.value) < 1e-12);
}

TEST_CASE("alternating zeta partial sums approach pi^2/12") {
    // |sum_{k<=N} (-1)^{k-1}/k^2 - pi^2/12| <= 1/(N+1)^2
    double s = 0.0;
    const int N = 10000;
    for (int k = 1; k <= N; ++k) s += (k % 2 ? 1.0 : -1.0) / (static_cast<double>(k) * k);
    CHECK(std::fabs(s - kPi * kPi / 12.0) <= 1.0 / (static_cast<double>(N + 1) * (N + 1)));
}

TEST_CASE("accelerated alternating summation") {
    // zeta(2) alternating: sum (-1)^k/(k+1)^2 = pi^2/12
    const double v =
        specfun::alternating_sum([](int k) { return 1.0 / ((k + 1.0) * (k + 1.0)); });
    CHECK(v == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-15));
    // ln 2
    const double l = specfun::alternating_sum([](int k) { return 1.0 / (k + 1.0); });
    CHECK(l == doctest::Approx(kLn2).epsilon(1e-15));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("specfun");

TEST_CASE("concurrent use of the cached and table-backed kernels") {
    // serial reference values
    std::vector<double> thetas;
    for (int i = 1; i <= 16; ++i) thetas.push_back(0.19 * i);
    std::vector<double> want;
    for (double t : thetas) want.push_back(specfun::clausen2(t));
    const BigInt s_want = specfun::stirling1_unsigned(40, 17);

    std::atomic<int> mismatches{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([&] {
            for (int rep = 0; rep < 20; ++rep)
                for (size_t i = 0; i < thetas.size(); ++i) {
                    if (specfun::clausen2(thetas[i]) != want[i]) ++mismatches;
                    if (specfun::stirling1_unsigned(40, 17) != s_want) ++mismatches;
                    if (specfun::dilog(-0.25 * static_cast<double>(i)) !=
                        specfun::dilog(-0.25 * static_cast<double>(i)))
                        ++mismatches;
                }
        });
    for (auto& t : workers) t.join();
    CHECK(mismatches.load() == 0);
}

TEST_SUITE_END();
