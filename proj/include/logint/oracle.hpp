#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace logint::oracle {

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = std::numeric_limits<double>::infinity();  // absolute
    int n_evals = 0;
    bool converged = false;
};

struct Interval {
    enum class Kind { Finite, HalfLine };
    Kind kind = Kind::Finite;
    double lo = 0.0;
    double hi = 0.0;                 // ignored for HalfLine
    std::vector<double> splits;      // interior split points, strictly increasing

    static Interval finite(double lo, double hi);
    static Interval half_line(double lo = 0.0);  // [lo, +inf)
    Interval with_splits(std::vector<double> pts) const;
};

// Integrands receive the abscissa plus its distance to each end of the
// active panel (dist_hi is +inf on an unbounded panel). The distances are
// exact where x itself has rounded into an endpoint, which is what keeps
// log-singular factors like ln(1-x) evaluable at tanh-sinh nodes.
using Integrand = std::function<double(double x, double dist_lo, double dist_hi)>;

QuadratureResult integrate(const Integrand& f, const Interval& iv, double tol);

// Adapter for integrands that only need the abscissa.
inline QuadratureResult integrate(const std::function<double(double)>& f,
                                  const Interval& iv, double tol) {
    return integrate(Integrand([&f](double x, double, double) { return f(x); }), iv, tol);
}

}  // namespace logint::oracle
