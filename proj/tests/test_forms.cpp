#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "syzimp/errors.hpp"
#include "syzimp/form.hpp"
#include "syzimp/parse.hpp"

using namespace syzimp;
using syzimp::testing::random_form;

namespace {
const RingCtx kBin{RingKind::binary, TargetKind::none};
const RingCtx kTer{RingKind::ternary, TargetKind::none};
const RingCtx kBih{RingKind::bihom, TargetKind::none};

Form bin(const std::string& text, std::optional<Deg> d = std::nullopt) {
  return parse_form(text, kBin, d);
}
Form ter(const std::string& text, std::optional<Deg> d = std::nullopt) {
  return parse_form(text, kTer, d);
}
Form bih(const std::string& text, std::optional<Deg> d = std::nullopt) {
  return parse_form(text, kBih, d);
}
}  // namespace

TEST_CASE("monomial bases are enumerated in the canonical orders") {
  // binary, degree 2: s^2, s*t, t^2
  const auto b2 = monomials(RingKind::binary, Deg{2, 0});
  REQUIRE(b2.size() == 3);
  CHECK(b2[0] == Mono{2, 0, 0, 0});
  CHECK(b2[1] == Mono{1, 1, 0, 0});
  CHECK(b2[2] == Mono{0, 2, 0, 0});

  // ternary, degree 1: s, t, u
  const auto t1 = monomials(RingKind::ternary, Deg{1, 0});
  REQUIRE(t1.size() == 3);
  CHECK(t1[0] == Mono{1, 0, 0, 0});
  CHECK(t1[1] == Mono{0, 1, 0, 0});
  CHECK(t1[2] == Mono{0, 0, 1, 0});

  // bihomogeneous (1,1): s*t, s*v, u*t, u*v   (exponents stored as s,u,t,v)
  const auto b11 = monomials(RingKind::bihom, Deg{1, 1});
  REQUIRE(b11.size() == 4);
  CHECK(b11[0] == Mono{1, 0, 1, 0});
  CHECK(b11[1] == Mono{1, 0, 0, 1});
  CHECK(b11[2] == Mono{0, 1, 1, 0});
  CHECK(b11[3] == Mono{0, 1, 0, 1});

  CHECK(mono_count(RingKind::ternary, Deg{2, 0}) == 6);
  CHECK(mono_count(RingKind::bihom, Deg{2, 3}) == 12);
}

TEST_CASE("products of forms expand exactly") {
  CHECK(render(bin("s") * bin("t")) == "s*t");
  CHECK(render(bin("s+t") * bin("s-t")) == "s^2 - t^2");
  CHECK(render(ter("s^2*u+s*t^2") * ter("t^2*u")) == "s^2*t^2*u^2 + s*t^4*u");
}

TEST_CASE("arithmetic satisfies the ring axioms on random forms") {
  Rng rng(kDefaultSeed);
  for (const RingCtx& ctx : {kBin, kTer, kBih}) {
    for (int trial = 0; trial < 8; ++trial) {
      const Deg d1 = ctx.kind == RingKind::bihom ? Deg{1, 1} : Deg{2, 0};
      const Deg d2 = ctx.kind == RingKind::bihom ? Deg{1, 2} : Deg{1, 0};
      const Form f = random_form(rng, ctx, d1);
      const Form g = random_form(rng, ctx, d2);
      const Form h = random_form(rng, ctx, d2);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
    }
  }
}

TEST_CASE("binary gcd handles monomials, coprime pairs, and Euclid steps") {
  std::array<Form, 2> m{bin("s^2*t"), bin("s*t^2")};
  CHECK(render(gcd_binary(m[0], m[1])) == "s*t");

  CHECK(render(gcd_binary(bin("s^2"), bin("t^2"))) == "1");

  CHECK(render(gcd_binary(bin("s^4-t^4"), bin("s^2-t^2"))) == "s^2 - t^2");

  // Folding over a triple, and the monic normalization.
  std::array<Form, 3> triple{bin("2*s^3-2*s*t^2"), bin("4*s^2*t+4*s*t^2"),
                             bin("6*s^2*t")};
  CHECK(render(gcd_binary_many(triple)) == "s");

  CHECK_THROWS_AS(gcd_binary(zero_form(kBin, Deg{1, 0}), zero_form(kBin, Deg{1, 0})),
                  PreconditionError);
}

TEST_CASE("evaluation plugs points into forms") {
  const Form f = bin("s^2+t^2");
  const std::array<Rational, 2> pt{2, 3};
  CHECK(eval(f, pt) == 13);

  const Form g = ter("s*t*u");
  const std::array<Rational, 3> pt3{Rational(1, 2), 4, 3};
  CHECK(eval(g, pt3) == 6);
}

TEST_CASE("render and parse round-trip random forms bit-exactly") {
  Rng rng(kDefaultSeed + 7);
  for (const RingCtx& ctx : {kBin, kTer, kBih}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Deg d = ctx.kind == RingKind::bihom ? Deg{2, 1} : Deg{3, 0};
      const Form f = random_form(rng, ctx, d);
      const Form back = parse_form(render(f), ctx, d);
      CHECK(back == f);
    }
  }
}

TEST_CASE("coprimality certification") {
  // Exact for binary input.
  std::array<Form, 3> conic{bin("s^2"), bin("s*t"), bin("t^2")};
  CHECK(certified_coprime(conic));
  std::array<Form, 3> shared{bin("s^2"), bin("s*t"), bin("2*s^2+s*t")};
  CHECK_FALSE(certified_coprime(shared));

  // Probabilistic (seeded) for ternary and bihomogeneous input.
  std::array<Form, 3> regular{ter("s^2"), ter("t^2"), ter("u^2")};
  CHECK(certified_coprime(regular));
  std::array<Form, 3> common{ter("s*u"), ter("s*t"), ter("s^2")};
  CHECK_FALSE(certified_coprime(common));
  std::array<Form, 4> segre{bih("s*t"), bih("s*v"), bih("u*t"), bih("u*v")};
  CHECK(certified_coprime(segre));
}
