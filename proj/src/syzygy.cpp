#include "syzimp/syzygy.hpp"

#include <algorithm>
#include <string>

#include "syzimp/errors.hpp"

namespace syzimp {

void require_equigraded(std::span<const Form> gens) {
  if (gens.empty()) throw PreconditionError("no generators given");
  for (const Form& g : gens) {
    if (g.ctx != gens[0].ctx || g.deg != gens[0].deg)
      throw PreconditionError("generators must share one ring and degree");
    if (g.is_zero()) throw PreconditionError("zero generator");
  }
}

Mat mult_map(std::span<const Form> gens, Deg source) {
  require_equigraded(gens);
  const RingKind kind = gens[0].ctx.kind;
  const Deg target = source + gens[0].deg;
  const int rows = mono_count(kind, target);
  const auto src_monos = monomials(kind, source);
  const int k = static_cast<int>(gens.size());
  Mat m = Mat::Zero(rows, k * static_cast<int>(src_monos.size()));
  const auto gen_monos = monomials(kind, gens[0].deg);
  for (int g = 0; g < k; ++g)
    for (std::size_t j = 0; j < src_monos.size(); ++j) {
      const int col = g * static_cast<int>(src_monos.size()) +
                      static_cast<int>(j);
      for (std::size_t i = 0; i < gen_monos.size(); ++i) {
        if (gens[g].coeffs(static_cast<int>(i)) == 0) continue;
        Mono prod = gen_monos[i];
        for (int v = 0; v < 4; ++v) prod[v] += src_monos[j][v];
        m(mono_index(kind, target, prod), col) +=
            gens[g].coeffs(static_cast<int>(i));
      }
    }
  return m;
}

SyzygyVector make_syzygy(std::span<const Form> gens, std::vector<Form> comps) {
  internal_check(gens.size() == comps.size(), "syzygy arity mismatch");
  internal_check(is_syzygy(gens, comps), "candidate is not a syzygy");
  return {comps[0].deg, std::move(comps)};
}

bool is_syzygy(std::span<const Form> gens, std::span<const Form> comps) {
  if (gens.size() != comps.size() || gens.empty()) return false;
  Form sum = zero_form(gens[0].ctx, comps[0].deg + gens[0].deg);
  for (std::size_t i = 0; i < gens.size(); ++i)
    sum = sum + comps[i] * gens[i];
  return sum.is_zero();
}

std::vector<SyzygyVector> syzygies(std::span<const Form> gens, Deg d) {
  require_equigraded(gens);
  const RingCtx ctx = gens[0].ctx;
  const int nm = mono_count(ctx.kind, d);
  std::vector<SyzygyVector> out;
  if (nm == 0) return out;
  for (const Vec& v : kernel_basis(mult_map(gens, d))) {
    std::vector<Form> comps;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Form f = zero_form(ctx, d);
      f.coeffs = v.segment(static_cast<int>(g) * nm, nm);
      comps.push_back(std::move(f));
    }
    out.push_back(make_syzygy(gens, std::move(comps)));
  }
  return out;
}

MuBasis mu_basis(std::span<const Form> gens) {
  require_equigraded(gens);
  if (gens.size() != 3 || gens[0].ctx.kind != RingKind::binary)
    throw PreconditionError("mu_basis expects a binary triple");
  if (gcd_binary_many(gens).deg.a != 0)
    throw PreconditionError("generators share a common factor");
  const int n = gens[0].deg.a;

  int mu = -1;
  std::vector<SyzygyVector> low;
  for (int d = 0; d <= n; ++d) {
    low = syzygies(gens, {d, 0});
    if (!low.empty()) {
      mu = d;
      break;
    }
  }
  internal_check(mu >= 0 && mu <= n - mu, "no syzygy in degrees <= n/2");
  SyzygyVector p = low[0];

  // q: the first canonical kernel vector at degree n - mu that is not a
  // monomial multiple of p.
  const Deg qd{n - mu, 0};
  const int nm = mono_count(RingKind::binary, qd);
  SpanBuilder<Rational> known;
  for (const Mono& m : monomials(RingKind::binary, {n - 2 * mu, 0})) {
    const Form mono = monomial_form(gens[0].ctx, m);
    Vec stacked(3 * nm);
    for (int g = 0; g < 3; ++g)
      stacked.segment(g * nm, nm) = (mono * p.comps[g]).coeffs;
    known.add(std::move(stacked));
  }
  std::optional<SyzygyVector> q;
  for (const SyzygyVector& cand : syzygies(gens, qd)) {
    Vec stacked(3 * nm);
    for (int g = 0; g < 3; ++g)
      stacked.segment(g * nm, nm) = cand.comps[g].coeffs;
    if (known.add(std::move(stacked))) {
      q = cand;
      break;
    }
  }
  internal_check(q.has_value(), "no complementary syzygy at degree n - mu");

  internal_check(
      static_cast<int>(syzygies(gens, {n - 1, 0}).size()) == n,
      "syzygy space at degree n - 1 does not have dimension n");
  return {mu, std::move(p), std::move(*q)};
}

std::optional<KoszulWitness> koszul_witness(std::span<const Form> gens,
                                            const SyzygyVector& syz) {
  require_equigraded(gens);
  if (gens.size() != 3) throw PreconditionError("koszul_witness expects a triple");
  if (!is_syzygy(gens, syz.comps))
    throw PreconditionError("input vector is not a syzygy on the generators");
  const RingCtx ctx = gens[0].ctx;
  const int n = gens[0].deg.a;
  const int m = syz.deg.a;
  const Deg hdeg{m - n, 0};
  const bool zero_syz = syz.comps[0].is_zero() && syz.comps[1].is_zero() &&
                        syz.comps[2].is_zero();
  if (zero_syz)
    return KoszulWitness{zero_form(ctx, hdeg), zero_form(ctx, hdeg),
                         zero_form(ctx, hdeg)};
  if (m < n) return std::nullopt;

  const int k = mono_count(ctx.kind, hdeg);
  const int t = mono_count(ctx.kind, syz.deg);
  auto mult_by = [&](const Form& f) { return mult_map({&f, 1}, hdeg); };
  const Mat ma = mult_by(gens[0]), mb = mult_by(gens[1]), mc = mult_by(gens[2]);

  Mat sys = Mat::Zero(3 * t, 3 * k);
  sys.block(0, 0, t, k) = mc;
  sys.block(0, k, t, k) = mb;
  sys.block(t, k, t, k) = -ma;
  sys.block(t, 2 * k, t, k) = mc;
  sys.block(2 * t, 0, t, k) = -ma;
  sys.block(2 * t, 2 * k, t, k) = -mb;
  Vec rhs(3 * t);
  rhs.segment(0, t) = syz.comps[0].coeffs;
  rhs.segment(t, t) = syz.comps[1].coeffs;
  rhs.segment(2 * t, t) = syz.comps[2].coeffs;

  auto sol = solve_particular(sys, rhs);
  if (!sol) return std::nullopt;
  auto piece = [&](int i) {
    Form h = zero_form(ctx, hdeg);
    h.coeffs = sol->segment(i * k, k);
    return h;
  };
  KoszulWitness w{piece(0), piece(1), piece(2)};
  internal_check(
      syz.comps[0] == w.h1 * gens[2] + w.h2 * gens[1] &&
          syz.comps[1] == w.h3 * gens[2] - w.h2 * gens[0] &&
          syz.comps[2] == -(w.h1 * gens[0]) - w.h3 * gens[1],
      "koszul witness verification failed");
  return w;
}

int hilbert_dim(std::span<const Form> gens, Deg d) {
  require_equigraded(gens);
  const int full = mono_count(gens[0].ctx.kind, d);
  if (full == 0) return 0;
  return full - rank(mult_map(gens, d - gens[0].deg));
}

bool ideal_membership(const Form& f, std::span<const Form> gens) {
  require_equigraded(gens);
  internal_check(f.ctx == gens[0].ctx, "membership across rings");
  if (f.is_zero()) return true;
  return solve_particular(mult_map(gens, f.deg - gens[0].deg), f.coeffs)
      .has_value();
}

std::vector<Form> saturation_piece(std::span<const Form> gens, Deg d, int cap) {
  require_equigraded(gens);
  const RingCtx ctx = gens[0].ctx;
  const Deg n = gens[0].deg;
  if (cap < 0) cap = 4 * (n.a + n.b);
  const int dim_rd = mono_count(ctx.kind, d);

  auto to_forms = [&](const std::vector<Vec>& vecs) {
    std::vector<Form> out;
    for (const Vec& v : vecs) {
      Form f = zero_form(ctx, d);
      f.coeffs = v;
      out.push_back(std::move(f));
    }
    return out;
  };

  // (I : m^b)_d = { f : f * mu in I_{d + b} for every monomial mu of degree
  // b }.  These pieces grow with b, their union is the saturation piece, and
  // consecutive agreement certifies stabilization only once the membership
  // tests land past the top socle degree 3(n-1) of a complete intersection of
  // three degree-n forms: below that, the degreewise chain can plateau and
  // then grow again (e.g. (s^2, t^2, u^2) in degree 2 at powers 0 and 1).
  const int b_start = std::max(1, (3 * (n.a + n.b) - 2) - (d.a + d.b));

  std::vector<Vec> current;
  for (int b = b_start; b <= cap; ++b) {
    const Deg db = d + Deg{b, 0};
    std::vector<Vec> left = kernel_basis(Mat(mult_map(gens, db - n).transpose()));
    std::vector<Vec> next;
    if (left.empty()) {
      next.reserve(dim_rd);
      for (int i = 0; i < dim_rd; ++i) {
        Vec e = Vec::Zero(dim_rd);
        e(i) = 1;
        next.push_back(std::move(e));
      }
    } else {
      Mat constraints(static_cast<int>(left.size()) *
                          mono_count(ctx.kind, {b, 0}),
                      dim_rd);
      int row = 0;
      for (const Mono& mu : monomials(ctx.kind, {b, 0})) {
        const Form mono = monomial_form(ctx, mu);
        Mat mm = mult_map({&mono, 1}, d);
        for (const Vec& w : left)
          constraints.row(row++) = w.transpose() * mm;
      }
      std::vector<Vec> kb = kernel_basis(constraints);
      next = std::move(kb);
    }
    // The pieces are nested, so hitting the full space settles the chain at
    // any power; otherwise accept the first consecutive agreement.
    if (static_cast<int>(next.size()) == dim_rd) return to_forms(next);
    if (b > b_start && next.size() == current.size()) return to_forms(next);
    current = std::move(next);
  }
  throw HypothesisError(
      "saturation chain did not stabilize within the window (cap " +
      std::to_string(cap) + ")");
}

bool vanishes_at_basepoints(std::span<const Form> gens, const Form& f) {
  internal_check(f.ctx == gens[0].ctx, "saturation test across rings");
  if (f.is_zero()) return true;
  SpanBuilder<Rational> span;
  for (const Form& g : saturation_piece(gens, f.deg)) span.add(g.coeffs);
  return span.contains(f.coeffs);
}

bool is_saturated_up_to(std::span<const Form> gens, int dmax) {
  require_equigraded(gens);
  if (gens[0].ctx.kind == RingKind::bihom)
    throw PreconditionError("saturation comparison uses total degrees");
  for (int d = 0; d <= dmax; ++d) {
    const int ideal_dim =
        mono_count(gens[0].ctx.kind, {d, 0}) - hilbert_dim(gens, {d, 0});
    const int sat_dim =
        static_cast<int>(saturation_piece(gens, {d, 0}).size());
    if (ideal_dim != sat_dim) return false;
  }
  return true;
}

}  // namespace syzimp
