#pragma once

// Polynomials in the target coordinates x, y, z(, w): sparse term maps keyed
// by the canonical graded-lex order, so begin() is always the leading term
// and iteration order is the rendering order.

#include <array>
#include <map>
#include <span>
#include <string>

#include "syzimp/form.hpp"
#include "syzimp/rational.hpp"
#include "syzimp/ring.hpp"

namespace syzimp {

struct TargetPoly {
  TargetKind kind = TargetKind::none;
  std::map<TMono, Rational, TMonoOrder> terms;  // nonzero coefficients only

  bool is_zero() const { return terms.empty(); }
  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Rational coeff(const TMono& m) const;
  Rational leading_coeff() const;
};

TargetPoly tp_zero(TargetKind k);
TargetPoly tp_const(TargetKind k, const Rational& c);
TargetPoly tp_var(TargetKind k, int var);
TargetPoly tp_monomial(TargetKind k, const TMono& m, const Rational& c);

bool operator==(const TargetPoly& f, const TargetPoly& g);
TargetPoly operator+(const TargetPoly& f, const TargetPoly& g);
TargetPoly operator-(const TargetPoly& f, const TargetPoly& g);
TargetPoly operator-(const TargetPoly& f);
TargetPoly operator*(const Rational& c, const TargetPoly& f);
TargetPoly operator*(const TargetPoly& f, const TargetPoly& g);
TargetPoly tp_pow(const TargetPoly& f, int e);

// Exact quotient f / g; throws InternalError when g does not divide f.
TargetPoly divide_exact(const TargetPoly& f, const TargetPoly& g);

TargetPoly derivative(const TargetPoly& f, int var);

Rational eval(const TargetPoly& f, const std::array<Rational, 4>& point);

// f = lambda * F with F having coprime integer coefficients and positive
// leading coefficient; the zero polynomial is rejected.
struct Normalized {
  TargetPoly f;
  Rational lambda;
};
Normalized normalize(const TargetPoly& f);

// Ring substitution x -> gens[0], y -> gens[1], ...; f must be homogeneous
// and the generators equigraded, so the image lands in a single degree.
Form substitute(const TargetPoly& f, std::span<const Form> gens);

// gcd up to a rational unit (primitive pseudo-remainder sequences, contents
// managed recursively); gcd(f, 0) = f, gcd(0, 0) = 0.
TargetPoly gcd_target(const TargetPoly& f, const TargetPoly& g);

std::string render(const TargetPoly& f);

}  // namespace syzimp
