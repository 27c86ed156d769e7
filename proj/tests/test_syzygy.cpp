#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "syzimp/errors.hpp"
#include "syzimp/parse.hpp"
#include "syzimp/syzygy.hpp"

using namespace syzimp;
using syzimp::testing::flatten_syzygy;
using syzimp::testing::random_coprime_triple;

namespace {

const RingCtx kBin{RingKind::binary, TargetKind::none};
const RingCtx kTer{RingKind::ternary, TargetKind::none};

std::vector<Form> conic_gens() {
  return {parse_form("s^2", kBin), parse_form("s*t", kBin),
          parse_form("t^2", kBin)};
}

// Three ternary cubics with a single basepoint at (0:0:1) and a degree-5
// syzygy that is not Koszul.
std::vector<Form> cuspidal_triple() {
  return {parse_form("s^2*u + s*t^2", kTer), parse_form("s*t*u + 2*t^3", kTer),
          parse_form("t^2*u + s^3", kTer)};
}

SyzygyVector non_koszul_syzygy(const std::vector<Form>& gens) {
  return make_syzygy(gens, {parse_form("t^2*u^3 - 2*s^2*t^2*u", kTer),
                            parse_form("-s*t*u^3 + s^3*t*u", kTer),
                            parse_form("s*t^2*u^2", kTer)});
}

}  // namespace

TEST_CASE("mult_map lays out generator-major columns") {
  const std::vector<Form> gens = conic_gens();
  const Mat m = mult_map(gens, Deg{1, 0});
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 6);
  Mat expected(4, 6);
  expected << 1, 0, 0, 0, 0, 0,
              0, 1, 1, 0, 0, 0,
              0, 0, 0, 1, 1, 0,
              0, 0, 0, 0, 0, 1;
  CHECK(syzimp::testing::same_matrix(m, expected));
}

TEST_CASE("mult_map of the bilinear coordinate monomials is the identity") {
  const RingCtx ctx{RingKind::bihom, TargetKind::none};
  const std::vector<Form> gens = {
      parse_form("s*t", ctx), parse_form("s*v", ctx), parse_form("u*t", ctx),
      parse_form("u*v", ctx)};
  const Mat m = mult_map(gens, Deg{0, 0});
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 4);
  CHECK(syzimp::testing::same_matrix(m, Mat(Mat::Identity(4, 4))));
}

TEST_CASE("a regular sequence has no low-degree syzygies") {
  const std::vector<Form> gens = {parse_form("s^2", kTer),
                                  parse_form("t^2", kTer),
                                  parse_form("u^2", kTer)};
  CHECK(syzygies(gens, Deg{1, 0}).empty());
  // Degree 2 is where the pairwise eliminations start.
  CHECK(syzygies(gens, Deg{2, 0}).size() == 3);
}

TEST_CASE("the canonical syzygy basis contains a known handwritten syzygy") {
  const std::vector<Form> gens = cuspidal_triple();
  const SyzygyVector known = non_koszul_syzygy(gens);
  CHECK(is_syzygy(gens, known.comps));

  const std::vector<SyzygyVector> basis = syzygies(gens, Deg{5, 0});
  REQUIRE(!basis.empty());
  SpanBuilder<Rational> span;
  for (const SyzygyVector& v : basis) span.add(flatten_syzygy(v));
  CHECK(span.contains(flatten_syzygy(known)));
}

TEST_CASE("make_syzygy rejects non-syzygies") {
  const std::vector<Form> gens = conic_gens();
  CHECK_THROWS_AS(
      make_syzygy(gens, {parse_form("s", kBin), parse_form("t", kBin),
                         parse_form("s", kBin)}),
      InternalError);
  CHECK(!is_syzygy(gens, std::vector<Form>{parse_form("s", kBin),
                                           parse_form("t", kBin),
                                           parse_form("s", kBin)}));
}

TEST_CASE("mu_basis of the standard conic parametrization") {
  const MuBasis mb = mu_basis(conic_gens());
  CHECK(mb.mu == 1);
  CHECK(render(mb.p.comps[0]) == "-t");
  CHECK(render(mb.p.comps[1]) == "s");
  CHECK(render(mb.p.comps[2]) == "0");
  CHECK(render(mb.q.comps[0]) == "0");
  CHECK(render(mb.q.comps[1]) == "-t");
  CHECK(render(mb.q.comps[2]) == "s");
}

TEST_CASE("mu_basis of a quartic with a balanced split") {
  const std::vector<Form> gens = {parse_form("s^4", kBin),
                                  parse_form("s^2*t^2", kBin),
                                  parse_form("t^4", kBin)};
  const MuBasis mb = mu_basis(gens);
  CHECK(mb.mu == 2);
  CHECK(mb.p.deg == Deg{2, 0});
  CHECK(mb.q.deg == Deg{2, 0});
  CHECK(render(mb.p.comps[0]) == "-t^2");
  CHECK(render(mb.p.comps[1]) == "s^2");
  CHECK(render(mb.p.comps[2]) == "0");
  CHECK(render(mb.q.comps[0]) == "0");
  CHECK(render(mb.q.comps[1]) == "-t^2");
  CHECK(render(mb.q.comps[2]) == "s^2");
  CHECK(is_syzygy(gens, mb.p.comps));
  CHECK(is_syzygy(gens, mb.q.comps));
}

TEST_CASE("mu_basis demands a coprime triple") {
  const std::vector<Form> gens = {parse_form("s^2", kBin),
                                  parse_form("s*t", kBin),
                                  parse_form("s^2 + s*t", kBin)};
  CHECK_THROWS_AS(mu_basis(gens), PreconditionError);
}

TEST_CASE("syzygies one below the generator degree number exactly n and are spanned by the mu-basis") {
  Rng rng(kDefaultSeed);
  for (int n = 2; n <= 6; ++n) {
    const std::vector<Form> gens = random_coprime_triple(rng, n, TargetKind::none);
    const std::vector<SyzygyVector> basis = syzygies(gens, Deg{n - 1, 0});
    CHECK(static_cast<int>(basis.size()) == n);

    const MuBasis mb = mu_basis(gens);
    CHECK(mb.mu + mb.q.deg.a == n);  // degrees split the generator degree

    // Monomial multiples of p and q up to degree n-1 span the whole space.
    SpanBuilder<Rational> span;
    int offered = 0;
    for (const SyzygyVector* g : {&mb.p, &mb.q}) {
      const int up = (n - 1) - g->deg.a;
      for (const Mono& m : monomials(RingKind::binary, Deg{up, 0})) {
        const Form mono = monomial_form(gens[0].ctx, m);
        std::vector<Form> comps;
        for (const Form& c : g->comps) comps.push_back(mono * c);
        span.add(flatten_syzygy(make_syzygy(gens, comps)));
        ++offered;
      }
    }
    CHECK(offered == n);
    CHECK(span.rank() == n);
    for (const SyzygyVector& v : basis) CHECK(span.contains(flatten_syzygy(v)));
  }
}

TEST_CASE("koszul_witness recovers the cofactors of an elementary relation") {
  const std::vector<Form> gens = {parse_form("s^2", kTer),
                                  parse_form("t^2", kTer),
                                  parse_form("u^2", kTer)};
  const SyzygyVector syz = make_syzygy(
      gens, {parse_form("t^2", kTer), parse_form("-s^2", kTer),
             zero_form(kTer, Deg{2, 0})});
  const auto w = koszul_witness(gens, syz);
  REQUIRE(w.has_value());
  CHECK(render(w->h1) == "0");
  CHECK(render(w->h2) == "1");
  CHECK(render(w->h3) == "0");
}

TEST_CASE("koszul_witness gives the zero syzygy the zero witness") {
  const std::vector<Form> gens = {parse_form("s^2", kTer),
                                  parse_form("t^2", kTer),
                                  parse_form("u^2", kTer)};
  const SyzygyVector syz = make_syzygy(
      gens, {zero_form(kTer, Deg{2, 0}), zero_form(kTer, Deg{2, 0}),
             zero_form(kTer, Deg{2, 0})});
  const auto w = koszul_witness(gens, syz);
  REQUIRE(w.has_value());
  CHECK(w->h1.is_zero());
  CHECK(w->h2.is_zero());
  CHECK(w->h3.is_zero());
}

TEST_CASE("koszul_witness reports the handwritten degree-5 syzygy as non-Koszul") {
  const std::vector<Form> gens = cuspidal_triple();
  const SyzygyVector syz = non_koszul_syzygy(gens);
  CHECK(!koszul_witness(gens, syz).has_value());
}

TEST_CASE("hilbert_dim counts the graded quotient") {
  const std::vector<Form> conic = conic_gens();
  CHECK(hilbert_dim(conic, Deg{1, 0}) == 2);
  CHECK(hilbert_dim(conic, Deg{2, 0}) == 0);
  CHECK(hilbert_dim(conic, Deg{3, 0}) == 0);

  // The cuspidal triple has one basepoint of multiplicity three, so the
  // quotient dimension stabilizes at 3.
  const std::vector<Form> c5 = cuspidal_triple();
  CHECK(hilbert_dim(c5, Deg{3, 0}) == 7);
  CHECK(hilbert_dim(c5, Deg{4, 0}) == 6);
  CHECK(hilbert_dim(c5, Deg{8, 0}) == 3);
  CHECK(hilbert_dim(c5, Deg{12, 0}) == 3);
}

TEST_CASE("ideal_membership decides graded pieces") {
  const std::vector<Form> conic = conic_gens();
  CHECK(ideal_membership(parse_form("s^2*t", kBin), conic));
  CHECK(ideal_membership(zero_form(kBin, Deg{3, 0}), conic));

  const std::vector<Form> partial = {parse_form("s^2", kBin),
                                     parse_form("s*t", kBin)};
  CHECK(!ideal_membership(parse_form("t^3", kBin), partial));
  CHECK(ideal_membership(parse_form("s^3 + s^2*t", kBin), partial));
}
