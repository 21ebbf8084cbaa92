#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cnh {

// All theorem sums, bounds and exact resistances are arbitrary-precision
// rationals. boost::multiprecision keeps them canonical: lowest terms,
// denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Canonical "p/q" rendering. The denominator is always printed, so integer
// values come out as "3/1"; reports never contain floating point.
inline std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

}  // namespace cnh
