#include "syzimp/basepoints.hpp"

#include <algorithm>
#include <numeric>

#include "syzimp/errors.hpp"
#include "syzimp/linalg.hpp"
#include "syzimp/ring.hpp"

namespace syzimp {

namespace {

// Flattens the components of a syzygy vector on a quadruple into one
// coefficient vector (4 stacked blocks) for span arithmetic.
Vec flatten(const SyzygyVector& v) {
  const Eigen::Index block = v.comps[0].coeffs.size();
  Vec out(4 * block);
  for (int i = 0; i < 4; ++i) out.segment(i * block, block) = v.comps[i].coeffs;
  return out;
}

// dim R_d for the ternary ring, zero when d < 0.
int ternary_dim(int d) {
  if (d < 0) return 0;
  return mono_count(RingKind::ternary, Deg{d, 0});
}

// Verifies dim (R/I)_d == dim R_d - 4 dim R_{d-n} + sum_i dim R_{d-n-mu_i}
// for all d <= 3n, the Hilbert-function consequence of the length-one free
// resolution with shifts n + mu_i.
bool hilbert_identity_holds(std::span<const Form> gens, const std::array<int, 3>& mu) {
  const int n = gens[0].deg.a;
  for (int d = 0; d <= 3 * n; ++d) {
    int expected = ternary_dim(d) - 4 * ternary_dim(d - n);
    for (int i = 0; i < 3; ++i) expected += ternary_dim(d - n - mu[i]);
    if (hilbert_dim(gens, Deg{d, 0}) != expected) return false;
  }
  return true;
}

// Checks that monomial multiples of the candidate generators span the full
// syzygy space in each degree d <= dmax.
bool spans_degreewise(std::span<const Form> gens, const std::vector<SyzygyVector>& basis,
                      int dmax) {
  const RingCtx& ctx = gens[0].ctx;
  const int n = gens[0].deg.a;
  for (int d = 1; d <= dmax; ++d) {
    const int syz_dim =
        4 * mono_count(ctx.kind, Deg{d, 0}) - rank(mult_map(gens, Deg{d, 0}));
    SpanBuilder<Rational> span;
    for (const SyzygyVector& g : basis) {
      const int e = g.deg.a;
      if (e > d) continue;
      for (const Mono& m : monomials(ctx.kind, Deg{d - e, 0})) {
        Form mf = monomial_form(ctx, m);
        SyzygyVector mult{Deg{d, 0}, {}};
        mult.comps.reserve(4);
        for (const Form& comp : g.comps) mult.comps.push_back(mf * comp);
        span.add(flatten(mult));
      }
    }
    if (span.rank() != syz_dim) return false;
  }
  return true;
}

// Determinant of a 3x3 matrix of forms by cofactor expansion.
Form det3(const std::array<std::array<const Form*, 3>, 3>& m) {
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return *m[r0][c0] * *m[r1][c1] - *m[r0][c1] * *m[r1][c0];
  };
  return *m[0][0] * minor2(1, 2, 1, 2) - *m[0][1] * minor2(1, 2, 0, 2) +
         *m[0][2] * minor2(1, 2, 0, 1);
}

}  // namespace

std::optional<StrongMuBasis> strong_mu_basis(std::span<const Form> gens) {
  require_equigraded(gens);
  if (gens.size() != 4)
    throw PreconditionError("strong_mu_basis expects four generators");
  const RingCtx& ctx = gens[0].ctx;
  if (ctx.kind != RingKind::ternary)
    throw PreconditionError("strong_mu_basis expects ternary generators");
  const int n = gens[0].deg.a;

  std::vector<SyzygyVector> found;
  for (int d = 1; d <= n - 1 && (int)found.size() <= 3; ++d) {
    SpanBuilder<Rational> known;
    for (const SyzygyVector& g : found) {
      for (const Mono& m : monomials(ctx.kind, Deg{d - g.deg.a, 0})) {
        Form mf = monomial_form(ctx, m);
        SyzygyVector mult{Deg{d, 0}, {}};
        for (const Form& comp : g.comps) mult.comps.push_back(mf * comp);
        known.add(flatten(mult));
      }
    }
    for (const SyzygyVector& v : syzygies(gens, Deg{d, 0})) {
      if (known.add(flatten(v))) {
        found.push_back(v);
        if ((int)found.size() > 3) break;
      }
    }
  }

  if (found.size() != 3) return std::nullopt;
  std::array<int, 3> mu{found[0].deg.a, found[1].deg.a, found[2].deg.a};
  if (mu[0] + mu[1] + mu[2] != n) return std::nullopt;
  internal_check(std::is_sorted(mu.begin(), mu.end()),
                 "degreewise search must yield ascending generator degrees");
  if (!hilbert_identity_holds(gens, mu)) return std::nullopt;
  if (!spans_degreewise(gens, found, 2 * (n - 1))) return std::nullopt;
  return StrongMuBasis{mu, std::move(found)};
}

bool hilbert_burch_check(const StrongMuBasis& smb, std::span<const Form> gens) {
  require_equigraded(gens);
  if (gens.size() != 4)
    throw PreconditionError("hilbert_burch_check expects four generators");
  internal_check(smb.vectors.size() == 3, "strong mu-basis must hold three vectors");

  // Signed maximal minors of the 4x3 matrix whose columns are the vectors:
  // delta_i = (-1)^i * det(matrix with row i deleted).
  std::array<Form, 4> delta;
  for (int skip = 0; skip < 4; ++skip) {
    std::array<std::array<const Form*, 3>, 3> m{};
    int r = 0;
    for (int row = 0; row < 4; ++row) {
      if (row == skip) continue;
      for (int col = 0; col < 3; ++col) m[r][col] = &smb.vectors[col].comps[row];
      ++r;
    }
    Form d = det3(m);
    delta[skip] = (skip % 2 == 0) ? d : -d;
  }

  // The minors must reproduce the generators up to one common scalar.
  Rational lambda = 0;
  for (int i = 0; i < 4 && lambda == 0; ++i) {
    if (gens[i].is_zero() || delta[i].is_zero()) continue;
    for (Eigen::Index j = 0; j < gens[i].coeffs.size(); ++j) {
      if (gens[i].coeffs(j) != 0) {
        lambda = delta[i].coeffs(j) / gens[i].coeffs(j);
        break;
      }
    }
  }
  if (lambda == 0) return false;
  for (int i = 0; i < 4; ++i) {
    if (!(delta[i] == lambda * gens[i])) return false;
  }
  return true;
}

Numerology strong_mu_numerology(const std::array<int, 3>& mu) {
  for (int m : mu) {
    if (m < 1) throw PreconditionError("mu entries must be positive");
  }
  Numerology out;
  out.n = mu[0] + mu[1] + mu[2];
  out.surface_degree = mu[0] * mu[1] + mu[0] * mu[2] + mu[1] * mu[2];
  out.basepoint_sum = out.n * out.n - out.surface_degree;
  out.bound_ok = 3 * out.basepoint_sum >= 2 * out.n * out.n;
  return out;
}

int degree_formula(const BasepointData& bp) {
  if (bp.n < 1) throw PreconditionError("parametrization degree must be positive");
  if (bp.deg_phi < 1) throw PreconditionError("generic map degree must be positive");
  long long sum = 0;
  for (int e : bp.multiplicities) {
    if (e < 1) throw PreconditionError("basepoint multiplicities must be positive");
    sum += e;
  }
  const long long numerator = (long long)bp.n * bp.n - sum;
  if (numerator <= 0)
    throw PreconditionError("multiplicities exceed the available degree n^2");
  if (numerator % bp.deg_phi != 0)
    throw PreconditionError("deg_phi does not divide n^2 minus the multiplicity sum");
  return (int)(numerator / bp.deg_phi);
}

}  // namespace syzimp
