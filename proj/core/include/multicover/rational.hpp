#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace multicover {

// Exact arithmetic for degree averages, LP certificates and bound formulas.
// Floating approximations happen only at report time.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// "p/q" with q omitted when 1.
std::string rational_to_string(const Rational& r);

// Accepts "p", "p/q" and plain decimals like "0.5".
Rational rational_from_string(const std::string& s);

inline Rational make_rational(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }

}  // namespace multicover
