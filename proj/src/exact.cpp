#include "logint/exact.hpp"

#include <sstream>

namespace logint {

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt double_factorial(int n) {
    if (n < -1) throw std::domain_error("double_factorial: argument < -1");
    BigInt f = 1;
    for (int i = n; i >= 2; i -= 2) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return c;
}

Rational harmonic_number(int n) {
    if (n < 0) throw std::domain_error("harmonic_number: negative argument");
    Rational h = 0;
    for (int k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace logint
