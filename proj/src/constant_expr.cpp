#include "logint/constant_expr.hpp"

#include "logint/specfun.hpp"

#include <sstream>

namespace logint {

ConstantExpr ConstantExpr::atom(Atom a, const Rational& coeff) {
    ConstantExpr e;
    e.put(a, coeff);
    return e;
}

void ConstantExpr::put(Atom a, const Rational& c) {
    if (c == 0) {
        terms_.erase(a);
    } else {
        terms_[a] = c;
    }
}

ConstantExpr& ConstantExpr::operator+=(const ConstantExpr& o) {
    for (const auto& [a, c] : o.terms_) put(a, coeff(a) + c);
    return *this;
}

ConstantExpr& ConstantExpr::operator-=(const ConstantExpr& o) {
    for (const auto& [a, c] : o.terms_) put(a, coeff(a) - c);
    return *this;
}

ConstantExpr ConstantExpr::operator-() const { return scaled(-1); }

ConstantExpr ConstantExpr::scaled(const Rational& f) const {
    ConstantExpr e;
    if (f == 0) return e;
    for (const auto& [a, c] : terms_) e.terms_[a] = c * f;
    return e;
}

Rational ConstantExpr::coeff(Atom a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

double ConstantExpr::to_float() const {
    double v = 0.0;
    for (const auto& [a, c] : terms_) v += to_double(c) * atom_value(a);
    return v;
}

const char* atom_name(Atom a) {
    switch (a) {
        case Atom::One: return "1";
        case Atom::Pi: return "pi";
        case Atom::PiSq: return "pi^2";
        case Atom::Ln2: return "ln2";
        case Atom::PiLn2: return "pi*ln2";
        case Atom::Catalan: return "G";
        case Atom::EulerGamma: return "gamma";
    }
    return "?";
}

double atom_value(Atom a) {
    switch (a) {
        case Atom::One: return 1.0;
        case Atom::Pi: return specfun::kPi;
        case Atom::PiSq: return specfun::kPi * specfun::kPi;
        case Atom::Ln2: return specfun::kLn2;
        case Atom::PiLn2: return specfun::kPi * specfun::kLn2;
        case Atom::Catalan: return specfun::catalan_constant();
        case Atom::EulerGamma: return specfun::kEulerGamma;
    }
    return 0.0;
}

std::string ConstantExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const BigInt num = numerator(mag), den = denominator(mag);
        if (a == Atom::One) {
            os << num;
            if (den != 1) os << "/" << den;
        } else {
            if (num != 1) os << num << "*";
            os << atom_name(a);
            if (den != 1) os << "/" << den;
        }
    }
    return os.str();
}

}  // namespace logint
