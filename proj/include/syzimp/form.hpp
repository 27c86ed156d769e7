#pragma once

// Homogeneous forms over a parameter ring, stored as dense coefficient
// vectors against the canonical monomial order of their degree.

#include <span>
#include <string>
#include <vector>

#include "syzimp/rational.hpp"
#include "syzimp/ring.hpp"
#include "syzimp/rng.hpp"

namespace syzimp {

struct Form {
  RingCtx ctx;
  Deg deg;
  Vec coeffs;  // size mono_count(ctx.kind, deg)

  bool is_zero() const { return coeffs.size() == 0 || coeffs.isZero(); }
  Rational coeff(const Mono& m) const {
    return coeffs(mono_index(ctx.kind, deg, m));
  }
};

Form zero_form(RingCtx ctx, Deg deg);
Form monomial_form(RingCtx ctx, const Mono& m, const Rational& c = Rational(1));

bool operator==(const Form& f, const Form& g);
Form operator+(const Form& f, const Form& g);
Form operator-(const Form& f, const Form& g);
Form operator-(const Form& f);
Form operator*(const Rational& c, const Form& f);
Form operator*(const Form& f, const Form& g);

// Value at a point; the point has var_count(ctx.kind) coordinates, in
// variable-list order.
Rational eval(const Form& f, std::span<const Rational> point);

// Canonical text rendering ("-2*s^2*t^2*u + t^2*u^3"), terms in canonical
// monomial order; the zero form renders as "0".
std::string render(const Form& f);

// One signed term of a rendering; shared by all polynomial renderers.
std::string render_term(const Rational& c, const std::string& mono_str,
                        bool first);

// Exact gcd of binary forms, monic (leading coefficient 1, where "leading"
// is the first term in canonical order).  gcd(f, 0) = monic f; both zero is
// an error.
Form gcd_binary(const Form& f, const Form& g);
Form gcd_binary_many(std::span<const Form> forms);

// Restriction of a ternary or bihomogeneous form to the pencil
// (vars) = s*P + t*Q, as a binary form: the workhorse behind the
// probabilistic common-factor check.
Form restrict_to_pencil(const Form& f, std::span<const Rational> p,
                        std::span<const Rational> q);

// Common-factor screening.  Binary lists are decided exactly; ternary and
// bihomogeneous lists are restricted to seeded random pencils: a constant
// pencil gcd certifies coprimality, and a common factor forces every pencil
// gcd to be nonconstant, so repeated failures make a common factor
// overwhelmingly likely.  Returns true when coprimality was certified.
bool certified_coprime(std::span<const Form> gens,
                       std::uint64_t seed = kDefaultSeed);

}  // namespace syzimp
