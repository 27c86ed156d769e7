#pragma once

// Exact scalar type used everywhere: arbitrary-precision rationals backed by
// GMP, with the NumTraits glue that lets Eigen dense types run over them.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <string>

#include "syzimp/errors.hpp"

namespace syzimp {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline int rat_sign(const Rational& r) { return r.sign(); }

// Canonical text rendering: "p" when the denominator is 1, else "p/q".
inline std::string render_rational(const Rational& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

// gcd/lcm on the integer parts, used by content computations.
inline Integer int_gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}
inline Integer int_lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return a / int_gcd(a, b) * b;
}

}  // namespace syzimp
