#pragma once

#include "logint/exact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace logint {

// Dense univariate polynomial with exact rational coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    explicit Polynomial(std::vector<Rational> coeffs);  // ascending powers
    static Polynomial x();
    static Polynomial monomial(int degree, const Rational& c = 1);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    Polynomial pow(int e) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    // quotient/remainder with deg(rem) < deg(divisor)
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    Rational eval(const Rational& v) const;
    double eval(double v) const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<Rational> coeffs_;  // ascending; no trailing zeros
    void trim();
};

}  // namespace logint
