#pragma once

#include "logint/exact.hpp"

#include <map>
#include <string>

namespace logint {

// The closed forms in this project are rational combinations of a fixed
// set of constants. Keeping them exact until the final to_float() makes
// equality checks and erratum comparisons unambiguous.
enum class Atom { One, Pi, PiSq, Ln2, PiLn2, Catalan, EulerGamma };

class ConstantExpr {
public:
    ConstantExpr() = default;

    static ConstantExpr atom(Atom a, const Rational& coeff = 1);
    static ConstantExpr rational(const Rational& r) { return atom(Atom::One, r); }

    ConstantExpr& operator+=(const ConstantExpr& o);
    ConstantExpr& operator-=(const ConstantExpr& o);
    friend ConstantExpr operator+(ConstantExpr a, const ConstantExpr& b) { return a += b; }
    friend ConstantExpr operator-(ConstantExpr a, const ConstantExpr& b) { return a -= b; }
    ConstantExpr operator-() const;
    ConstantExpr scaled(const Rational& f) const;

    bool operator==(const ConstantExpr& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Atom, Rational>& terms() const { return terms_; }
    Rational coeff(Atom a) const;

    // Deterministic: atoms are summed in fixed enum order with fixed
    // binary64 atom values.
    double to_float() const;

    // e.g. "-pi^2/12", "pi*ln2/4 + G", "2 - gamma - 2*ln2"
    std::string to_string() const;

private:
    std::map<Atom, Rational> terms_;  // zero coefficients are never stored
    void put(Atom a, const Rational& c);
};

const char* atom_name(Atom a);   // "1", "pi", "pi^2", "ln2", "pi*ln2", "G", "gamma"
double atom_value(Atom a);

}  // namespace logint
