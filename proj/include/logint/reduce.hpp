#pragma once

#include "logint/basis.hpp"
#include "logint/polynomial.hpp"

#include <string>
#include <vector>

namespace logint::reduce {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    size_t position;
};

// Raised for denominator factors whose poles land on [0, inf) or are not of
// the (x+a) / (x^2+a^2) shape with rational a > 0.
class UnsupportedPoleError : public std::domain_error {
public:
    UnsupportedPoleError(const std::string& what, std::string which)
        : std::domain_error(what), factor(std::move(which)) {}
    std::string factor;
};

class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct LinearFactor {
    Rational a;  // (x + a)^mult, a > 0
    int mult;
};
struct QuadFactor {
    Rational a;  // (x^2 + a^2)^mult, a > 0
    int mult;
};

struct RationalIntegrand {
    Polynomial numerator;
    std::vector<LinearFactor> linear_factors;  // sorted by a, merged
    std::vector<QuadFactor> quad_factors;      // sorted by a, merged
    bool has_log = false;

    Polynomial denominator() const;
    // numerically stable evaluation of numerator/denominator (* ln x)
    double eval(double x) const;
};

// Grammar:  expr := term "/" denom
//           term := poly | poly "*" "ln(x)" | "ln(x)"
//           denom := factor {"*" factor}
//           factor := "(" poly ")" ["^" int]
// with integer/rational coefficients; whitespace insignificant.
RationalIntegrand parse_integrand(const std::string& text);

struct LinearTerm {
    Rational a;
    int k;  // coeff/(x+a)^k
    Rational coeff;
};
struct QuadTerm {
    Rational a;
    int k;  // (p x + q)/(x^2+a^2)^k
    Rational p, q;
};

struct PartialFractionForm {
    Polynomial poly_part;
    std::vector<LinearTerm> linear_terms;
    std::vector<QuadTerm> quad_terms;
    bool has_log = false;

    // exact recombination over the given factor lists; used by tests
    Polynomial recombine(const std::vector<LinearFactor>& lin,
                         const std::vector<QuadFactor>& quad) const;
};

PartialFractionForm partial_fractions(const RationalIntegrand& r);

struct Upper {
    bool infinite = false;
    double b = 0.0;
    static Upper finite(double b);
    static Upper inf();
};

enum class CallKind { H1, H2, PolyLogPiece, ElementaryRational, ElementaryArctan, ElementaryLog };

struct BasisTerm {
    double weight;
    CallKind kind;
    std::string name;  // human-readable call, e.g. "log_linear_int(m=2, b=1/2)"
    double value;      // unweighted value of the call
};

struct BasisCombination {
    std::vector<BasisTerm> terms;
    Upper upper;
};

BasisCombination reduce_to_basis(const PartialFractionForm& pf, const Upper& upper);

basis::BasisValue evaluate_combination(const BasisCombination& bc);

std::string explain(const BasisCombination& bc);

}  // namespace logint::reduce
