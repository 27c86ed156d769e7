#pragma once

// Text input for polynomials.  Grammar (whitespace insignificant):
//
//   poly   := [sign] term (sign term)*
//   term   := coef ('*' factor)*  |  factor ('*' factor)*
//   factor := var ['^' nat]
//   coef   := nat ['/' nat]
//
// Variables are the single-letter names of the ring at hand.  The renderers
// in form.hpp / tpoly.hpp emit exactly this grammar, so rendering and
// re-parsing round-trips.

#include <optional>
#include <string>

#include "syzimp/form.hpp"
#include "syzimp/tpoly.hpp"

namespace syzimp {

// Parse a homogeneous form of the given degree; throws ParseError for
// malformed text, PreconditionError for inhomogeneous input or a degree
// mismatch.  With no expected degree, the (homogeneous) degree is inferred.
Form parse_form(const std::string& text, RingCtx ctx,
                std::optional<Deg> expected = std::nullopt);

// Parse a target-coordinate polynomial (homogeneity not required).
TargetPoly parse_target(const std::string& text, TargetKind kind);

Rational parse_rational(const std::string& text);

}  // namespace syzimp
