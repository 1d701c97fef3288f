#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace logint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

BigInt factorial(int n);
BigInt double_factorial(int n);       // n!!, with (-1)!! = 0!! = 1
BigInt binomial(int n, int k);        // 0 outside 0 <= k <= n
Rational harmonic_number(int n);      // sum_{k=1..n} 1/k

std::string to_string(const Rational& r);

// Thrown when a request exceeds a precomputed table's fixed capacity.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace logint
