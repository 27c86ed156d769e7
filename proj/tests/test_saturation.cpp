#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "syzimp/errors.hpp"
#include "syzimp/parse.hpp"
#include "syzimp/syzygy.hpp"

using namespace syzimp;

namespace {

const RingCtx kTer{RingKind::ternary, TargetKind::none};

std::vector<Form> cuspidal_triple() {
  return {parse_form("s^2*u + s*t^2", kTer), parse_form("s*t*u + 2*t^3", kTer),
          parse_form("t^2*u + s^3", kTer)};
}

}  // namespace

TEST_CASE("saturation of a basepoint-free ideal is the whole ring") {
  const std::vector<Form> gens = {parse_form("s^2", kTer),
                                  parse_form("t^2", kTer),
                                  parse_form("u^2", kTer)};
  REQUIRE(hilbert_dim(gens, Deg{4, 0}) == 0);  // basepoint-free certificate
  for (int d = 0; d <= 4; ++d) {
    const auto piece = saturation_piece(gens, Deg{d, 0});
    CHECK(static_cast<int>(piece.size()) == mono_count(RingKind::ternary, Deg{d, 0}));
  }
}

TEST_CASE("a saturated complete intersection equals its saturation degreewise") {
  const std::vector<Form> gens = {parse_form("s^2", kTer),
                                  parse_form("t^2", kTer),
                                  parse_form("s^2 + t^2", kTer)};
  CHECK(is_saturated_up_to(gens, 6));
  for (int d = 2; d <= 5; ++d) {
    const auto piece = saturation_piece(gens, Deg{d, 0});
    const int ideal_dim =
        mono_count(RingKind::ternary, Deg{d, 0}) - hilbert_dim(gens, Deg{d, 0});
    CHECK(static_cast<int>(piece.size()) == ideal_dim);
  }
}

TEST_CASE("the cuspidal triple is not saturated and the gap holds the handwritten syzygy") {
  const std::vector<Form> gens = cuspidal_triple();
  CHECK(!is_saturated_up_to(gens, 6));

  // All three components of the non-Koszul degree-5 syzygy vanish at the
  // basepoint, i.e. lie inside the degree-5 saturation piece.
  const Form a = parse_form("t^2*u^3 - 2*s^2*t^2*u", kTer);
  const Form b = parse_form("-s*t*u^3 + s^3*t*u", kTer);
  const Form c = parse_form("s*t^2*u^2", kTer);

  const auto piece = saturation_piece(gens, Deg{5, 0});
  SpanBuilder<Rational> span;
  for (const Form& f : piece) span.add(f.coeffs);
  CHECK(span.contains(a.coeffs));
  CHECK(span.contains(b.coeffs));
  CHECK(span.contains(c.coeffs));

  CHECK(vanishes_at_basepoints(gens, a));
  CHECK(vanishes_at_basepoints(gens, b));
  CHECK(vanishes_at_basepoints(gens, c));
}

TEST_CASE("the cuspidal gap opens in degree 2, below the generator degree") {
  // In the chart u = 1 the generators reduce to g1 = s^2 + s*t^2,
  // g2 = s*t + 2*t^3, g3 = t^2 + s^3, and eliminating gives
  // s^2 * (1 - 2*s^4) = g1 - t*g2 + (2*t^2 - 2*s^3)*g3, a unit multiple of
  // s^2 at the basepoint.  So s^2, s*t, t^2 all sit in the saturation in
  // degree 2 even though the ideal itself has no forms below degree 3.
  const std::vector<Form> gens = cuspidal_triple();
  const auto piece = saturation_piece(gens, Deg{2, 0});
  REQUIRE(piece.size() == 3);
  SpanBuilder<Rational> span;
  for (const Form& f : piece) span.add(f.coeffs);
  CHECK(span.contains(parse_form("s^2", kTer).coeffs));
  CHECK(span.contains(parse_form("s*t", kTer).coeffs));
  CHECK(span.contains(parse_form("t^2", kTer).coeffs));
  CHECK(!span.contains(parse_form("u^2", kTer).coeffs));
  CHECK(!span.contains(parse_form("s*u", kTer).coeffs));
}

TEST_CASE("vanishing at basepoints separates local behavior at (0:0:1)") {
  const std::vector<Form> gens = cuspidal_triple();
  // The scheme is supported where s and t vanish, so powers of u survive.
  CHECK(!vanishes_at_basepoints(gens, parse_form("u^5", kTer)));
  CHECK(!vanishes_at_basepoints(gens, parse_form("t*u^4", kTer)));
  // Ideal members vanish trivially.
  CHECK(vanishes_at_basepoints(gens, parse_form("u^2", kTer) * gens[0]));
  // The point is a triple structure on (0:0:1); s^5 dies on all of it.
  CHECK(vanishes_at_basepoints(gens, parse_form("s^5", kTer)));
}

TEST_CASE("the coordinate-cubic quadruple is saturated") {
  const std::vector<Form> gens = {
      parse_form("s^3", kTer), parse_form("s^2*t", kTer),
      parse_form("s*t^2", kTer), parse_form("t^3", kTer)};
  CHECK(is_saturated_up_to(gens, 6));
}

TEST_CASE("a too-small stabilization window raises rather than truncating") {
  const std::vector<Form> gens = cuspidal_triple();
  CHECK_THROWS_AS(saturation_piece(gens, Deg{4, 0}, 1), HypothesisError);
}
