#include "syzimp/implicitize.hpp"

#include <algorithm>
#include <string>

#include "syzimp/errors.hpp"
#include "syzimp/linalg.hpp"

namespace syzimp {

namespace {

struct TpOps {
  TargetPoly mul(const TargetPoly& a, const TargetPoly& b) const { return a * b; }
  TargetPoly sub(const TargetPoly& a, const TargetPoly& b) const { return a - b; }
  TargetPoly div(const TargetPoly& a, const TargetPoly& b) const {
    return divide_exact(a, b);
  }
  bool is_zero(const TargetPoly& a) const { return a.is_zero(); }
  TargetPoly zero() const { return tp_zero(kind); }
  TargetKind kind;
};

TargetKind target_of(std::span<const Form> gens) {
  TargetKind k = gens[0].ctx.target;
  if (k == TargetKind::none)
    throw PreconditionError("generators carry no target coordinates");
  return k;
}

// The ten degree-2 target monomials in canonical order pair up with the
// generator products a^2, ab, ac, ad, b^2, bc, bd, c^2, cd, d^2.
std::vector<Form> quadric_products(std::span<const Form> gens) {
  std::vector<Form> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      out.push_back(gens[i] * gens[j]);
  return out;
}

// Positions of the products x * (x, y, z, w), y * (...), ... inside the
// canonical degree-2 monomial list: used to spread a moving plane's four
// components into ten quadric slots.
constexpr int kVarTimesQuad[4][4] = {
    {0, 1, 2, 3},  // x * (x, y, z, w)
    {1, 4, 5, 6},  // y * (x, y, z, w)
    {2, 5, 7, 8},  // z * (x, y, z, w)
    {3, 6, 8, 9},  // w * (x, y, z, w)
};

}  // namespace

MovingMatrix curve_matrix(std::span<const Form> gens) {
  require_equigraded(gens);
  if (gens.size() != 3 || gens[0].ctx.kind != RingKind::binary)
    throw PreconditionError("curve_matrix expects a binary triple");
  if (gcd_binary_many(gens).deg.a != 0)
    throw PreconditionError("generators share a common factor");
  const TargetKind tk = target_of(gens);
  const int n = gens[0].deg.a;
  std::vector<SyzygyVector> basis = syzygies(gens, {n - 1, 0});
  internal_check(static_cast<int>(basis.size()) == n,
                 "moving-line basis does not have n elements");

  MovingMatrix m;
  m.size = n;
  m.entries.assign(static_cast<std::size_t>(n) * n, tp_zero(tk));
  m.row_kinds.assign(n, RowKind::linear);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) {
      // Column j carries the monomial s^j t^{n-1-j}, which sits at
      // canonical coefficient index n-1-j.
      const int idx = n - 1 - j;
      TargetPoly e = tp_zero(tk);
      for (int v = 0; v < 3; ++v) {
        const Rational c = basis[r].comps[v].coeffs(idx);
        if (c != 0) e = e + c * tp_var(tk, v);
      }
      m.at(r, j) = std::move(e);
    }
  return m;
}

TargetPoly moving_det(const MovingMatrix& m) {
  internal_check(m.size > 0 && m.entries.size() ==
                     static_cast<std::size_t>(m.size) * m.size,
                 "malformed moving matrix");
  TargetKind kind = TargetKind::none;
  for (const TargetPoly& e : m.entries)
    if (e.kind != TargetKind::none) {
      kind = e.kind;
      break;
    }
  internal_check(kind != TargetKind::none, "moving matrix without a target ring");
  return bareiss_determinant(m.entries, m.size, TpOps{kind});
}

PowerSplit radical_power_split(const TargetPoly& det) {
  internal_check(!det.is_zero(), "cannot split the zero polynomial");
  auto fallback = [&] {
    Normalized nrm = normalize(det);
    return PowerSplit{nrm.f, 1, nrm.lambda};
  };
  TargetPoly g = det;
  for (int v = 0; v < var_count(det.kind); ++v)
    g = gcd_target(g, derivative(det, v));
  if (g.is_zero() || g.total_degree() <= 0) {
    // Radical equals det itself (already squarefree).
    Normalized nrm = normalize(det);
    return {nrm.f, 1, nrm.lambda};
  }
  TargetPoly rad = divide_exact(det, g);
  Normalized nrm = normalize(rad);
  const int fd = nrm.f.total_degree();
  if (fd <= 0 || det.total_degree() % fd != 0) return fallback();
  const int d = det.total_degree() / fd;
  TargetPoly expanded = tp_pow(nrm.f, d);
  Rational lambda = det.leading_coeff() / expanded.leading_coeff();
  if (!(lambda * expanded == det)) return fallback();
  return {nrm.f, d, lambda};
}

ImplicitResult implicitize_curve(std::span<const Form> gens) {
  MovingMatrix m = curve_matrix(gens);
  const int n = gens[0].deg.a;
  TargetPoly det = moving_det(m);
  internal_check(!det.is_zero(),
                 "moving-line determinant vanished for a coprime triple");
  internal_check(det.total_degree() == n, "determinant degree is not n");
  PowerSplit split = radical_power_split(det);
  internal_check(substitute(split.f, gens).is_zero(),
                 "implicit equation does not vanish on the parametrization");
  ImplicitResult res;
  res.det_poly = std::move(det);
  res.f = split.f;
  res.d = split.d;
  res.lambda = split.lambda;
  res.matrix_size = n;
  res.rows_linear = n;
  res.rows_quadric = 0;
  return res;
}

TargetPoly mu_resultant(const SyzygyVector& p, const SyzygyVector& q) {
  internal_check(p.comps.size() == 3 && q.comps.size() == 3,
                 "mu_resultant expects moving lines");
  const TargetKind tk = p.comps[0].ctx.target == TargetKind::none
                            ? TargetKind::p2
                            : p.comps[0].ctx.target;
  const int d1 = p.deg.a, d2 = q.deg.a;
  const int n = d1 + d2;
  internal_check(n > 0, "resultant of two constant moving lines");

  // Moving-line coefficients: index i of each component is s^{d-i} t^i, so
  // the usual Sylvester layout reads the canonical coefficients in order.
  auto line_coeff = [&](const SyzygyVector& l, int i) {
    TargetPoly e = tp_zero(tk);
    for (int v = 0; v < 3; ++v) {
      const Rational c = l.comps[v].coeffs(i);
      if (c != 0) e = e + c * tp_var(tk, v);
    }
    return e;
  };

  MovingMatrix syl;
  syl.size = n;
  syl.entries.assign(static_cast<std::size_t>(n) * n, tp_zero(tk));
  syl.row_kinds.assign(n, RowKind::linear);
  for (int r = 0; r < d2; ++r)
    for (int i = 0; i <= d1; ++i) syl.at(r, r + i) = line_coeff(p, i);
  for (int r = 0; r < d1; ++r)
    for (int i = 0; i <= d2; ++i) syl.at(d2 + r, r + i) = line_coeff(q, i);
  return moving_det(syl);
}

// ---- surfaces -----------------------------------------------------------

namespace {

// Stack the components of a kernel vector (k blocks of length nm) into the
// flat coefficient vector used for span bookkeeping.
Vec flat(const SyzygyVector& s) {
  const int nm = static_cast<int>(s.comps[0].coeffs.size());
  Vec v(static_cast<int>(s.comps.size()) * nm);
  for (std::size_t g = 0; g < s.comps.size(); ++g)
    v.segment(static_cast<int>(g) * nm, nm) = s.comps[g].coeffs;
  return v;
}

// The ten-block vector of var * plane, used to span the reducible moving
// quadrics coming from the moving planes.
Vec var_times_plane(const SyzygyVector& plane, int var) {
  const int nm = static_cast<int>(plane.comps[0].coeffs.size());
  Vec v = Vec::Zero(10 * nm);
  for (int c = 0; c < 4; ++c)
    v.segment(kVarTimesQuad[var][c] * nm, nm) = plane.comps[c].coeffs;
  return v;
}

MovingMatrix build_rows(TargetKind tk, Deg coldeg, RingKind kind,
                        const std::vector<SyzygyVector>& planes,
                        const std::vector<SyzygyVector>& quadrics) {
  const int cols = mono_count(kind, coldeg);
  const int rows = static_cast<int>(planes.size() + quadrics.size());
  internal_check(rows == cols, "moving matrix is not square");
  const auto quad_monos = target_monomials(tk, 2);
  MovingMatrix m;
  m.size = cols;
  m.entries.assign(static_cast<std::size_t>(cols) * cols, tp_zero(tk));
  m.row_kinds.assign(cols, RowKind::linear);
  int r = 0;
  for (const SyzygyVector& p : planes) {
    for (int c = 0; c < cols; ++c) {
      TargetPoly e = tp_zero(tk);
      for (int v = 0; v < 4; ++v) {
        const Rational cv = p.comps[v].coeffs(c);
        if (cv != 0) e = e + cv * tp_var(tk, v);
      }
      m.at(r, c) = std::move(e);
    }
    m.row_kinds[r++] = RowKind::linear;
  }
  for (const SyzygyVector& q : quadrics) {
    for (int c = 0; c < cols; ++c) {
      TargetPoly e = tp_zero(tk);
      for (int b = 0; b < 10; ++b) {
        const Rational cb = q.comps[b].coeffs(c);
        if (cb != 0) e = e + tp_monomial(tk, quad_monos[b], cb);
      }
      m.at(r, c) = std::move(e);
    }
    m.row_kinds[r++] = RowKind::quadric;
  }
  return m;
}

void require_surface_gens(std::span<const Form> gens, RingKind kind) {
  require_equigraded(gens);
  if (gens.size() != 4 || gens[0].ctx.kind != kind)
    throw PreconditionError("surface implicitization expects a quadruple in the "
                            "expected parameter ring");
  if (target_of(gens) != TargetKind::p3)
    throw PreconditionError("surface generators must target x, y, z, w");
  const Deg d = gens[0].deg;
  if (d.a < 1 || (kind == RingKind::bihom && d.b < 1))
    throw PreconditionError("surface generators must have positive degree");
}

}  // namespace

AssembledM assemble_M_tp(std::span<const Form> gens, std::uint64_t seed) {
  require_surface_gens(gens, RingKind::bihom);
  const Deg bd = gens[0].deg;
  const int mn = bd.a * bd.b;
  const Deg src{bd.a - 1, bd.b - 1};
  AssembledM out;
  out.coprime_certified = certified_coprime(gens, seed);

  std::vector<SyzygyVector> mp = syzygies(gens, src);
  out.mp_kernel_dim = static_cast<int>(mp.size());
  if (!mp.empty())
    throw HypothesisError(
        "moving-plane map is singular (kernel dimension " +
        std::to_string(mp.size()) +
        "): the quadruple has basepoints; the basepoint-free assembly does "
        "not apply");

  std::vector<Form> prods = quadric_products(gens);
  std::vector<SyzygyVector> mq = syzygies(prods, src);
  out.mq_kernel_dim = static_cast<int>(mq.size());
  if (out.mq_kernel_dim != mn)
    throw HypothesisError("moving-quadric kernel has dimension " +
                          std::to_string(mq.size()) + ", expected " +
                          std::to_string(mn));
  out.m = build_rows(TargetKind::p3, src, RingKind::bihom, {}, mq);
  return out;
}

AssembledM assemble_M_tri(std::span<const Form> gens, std::uint64_t seed) {
  require_surface_gens(gens, RingKind::ternary);
  const int n = gens[0].deg.a;
  const Deg src{n - 1, 0};
  AssembledM out;
  out.coprime_certified = certified_coprime(gens, seed);

  std::vector<SyzygyVector> planes = syzygies(gens, src);
  out.mp_kernel_dim = static_cast<int>(planes.size());
  if (out.mp_kernel_dim != n)
    throw HypothesisError(
        "moving-plane kernel has dimension " + std::to_string(planes.size()) +
        ", expected " + std::to_string(n) +
        (out.mp_kernel_dim > n ? " (basepoints present?)" : ""));

  std::vector<Form> prods = quadric_products(gens);
  std::vector<SyzygyVector> mq = syzygies(prods, src);
  out.mq_kernel_dim = static_cast<int>(mq.size());
  const int expect_mq = (n * n + 7 * n) / 2;
  if (out.mq_kernel_dim != expect_mq)
    throw HypothesisError("moving-quadric kernel has dimension " +
                          std::to_string(mq.size()) + ", expected " +
                          std::to_string(expect_mq));

  // Greedy complement of the reducible quadrics var * plane inside the
  // moving-quadric kernel, everything offered in canonical order.
  SpanBuilder<Rational> span;
  for (const SyzygyVector& p : planes)
    for (int v = 0; v < 4; ++v) span.add(var_times_plane(p, v));
  std::vector<SyzygyVector> picked;
  for (const SyzygyVector& q : mq)
    if (span.add(flat(q))) picked.push_back(q);
  const int expect_quad = (n * n - n) / 2;
  if (static_cast<int>(picked.size()) != expect_quad)
    throw HypothesisError(
        "complement of the reducible moving quadrics has dimension " +
        std::to_string(picked.size()) + ", expected " +
        std::to_string(expect_quad));
  out.m = build_rows(TargetKind::p3, src, RingKind::ternary, planes, picked);
  return out;
}

AssembledM assemble_M_tp_one_bp(std::span<const Form> gens,
                                std::uint64_t seed) {
  require_surface_gens(gens, RingKind::bihom);
  const Deg bd = gens[0].deg;
  const int mn = bd.a * bd.b;
  const Deg src{bd.a - 1, bd.b - 1};
  AssembledM out;
  out.coprime_certified = certified_coprime(gens, seed);

  std::vector<SyzygyVector> planes = syzygies(gens, src);
  out.mp_kernel_dim = static_cast<int>(planes.size());
  if (out.mp_kernel_dim == 0)
    throw PreconditionError(
        "moving-plane map is nonsingular: no basepoint, use the "
        "basepoint-free assembly");
  if (out.mp_kernel_dim != 1)
    throw HypothesisError("moving-plane kernel has dimension " +
                          std::to_string(planes.size()) +
                          ", expected 1 for a single simple basepoint");

  std::vector<Form> prods = quadric_products(gens);
  std::vector<SyzygyVector> mq = syzygies(prods, src);
  out.mq_kernel_dim = static_cast<int>(mq.size());
  if (out.mq_kernel_dim != mn + 3)
    throw HypothesisError("moving-quadric kernel has dimension " +
                          std::to_string(mq.size()) + ", expected " +
                          std::to_string(mn + 3));

  SpanBuilder<Rational> span;
  for (int v = 0; v < 4; ++v) span.add(var_times_plane(planes[0], v));
  std::vector<SyzygyVector> picked;
  for (const SyzygyVector& q : mq)
    if (span.add(flat(q))) picked.push_back(q);
  if (static_cast<int>(picked.size()) != mn - 1)
    throw HypothesisError(
        "complement of the reducible moving quadrics has dimension " +
        std::to_string(picked.size()) + ", expected " + std::to_string(mn - 1));
  out.m = build_rows(TargetKind::p3, src, RingKind::bihom, planes, picked);
  return out;
}

ImplicitResult implicitize_surface(SurfaceKind kind, std::span<const Form> gens,
                                   std::uint64_t seed) {
  AssembledM am;
  int expected_degree = 0;
  switch (kind) {
    case SurfaceKind::tensor:
      am = assemble_M_tp(gens, seed);
      expected_degree = 2 * gens[0].deg.a * gens[0].deg.b;
      break;
    case SurfaceKind::triangular:
      am = assemble_M_tri(gens, seed);
      expected_degree = gens[0].deg.a * gens[0].deg.a;
      break;
    case SurfaceKind::tensor_one_bp:
      am = assemble_M_tp_one_bp(gens, seed);
      expected_degree = 2 * gens[0].deg.a * gens[0].deg.b - 1;
      break;
  }
  TargetPoly det = moving_det(am.m);
  if (det.is_zero())
    throw HypothesisError(
        "moving determinant is identically zero (degenerate parametrization "
        "or failed genericity hypothesis)");
  internal_check(det.total_degree() == expected_degree,
                 "moving determinant has unexpected degree");
  PowerSplit split = radical_power_split(det);
  internal_check(substitute(split.f, gens).is_zero(),
                 "implicit equation does not vanish on the parametrization");

  ImplicitResult res;
  res.det_poly = std::move(det);
  res.f = split.f;
  res.d = split.d;
  res.lambda = split.lambda;
  res.matrix_size = am.m.size;
  for (RowKind rk : am.m.row_kinds)
    (rk == RowKind::linear ? res.rows_linear : res.rows_quadric) += 1;
  res.mp_kernel_dim = am.mp_kernel_dim;
  res.mq_kernel_dim = am.mq_kernel_dim;
  res.coprime_certified = am.coprime_certified;
  return res;
}

DandreaResult dandrea_ratio(std::span<const Form> gens, std::uint64_t seed) {
  require_surface_gens(gens, RingKind::bihom);
  const Deg bd = gens[0].deg;
  const Deg src{bd.a - 1, bd.b - 1};
  Rng rng(seed);

  auto change_coords = [&]() {
    // Random invertible 4x4 over the rationals, small integer entries.
    while (true) {
      Mat t(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = Rational(rng.int_in(-5, 5));
      if (determinant(t) != 0) return t;
    }
  };
  auto recombine = [&](const Mat& t) {
    std::vector<Form> out;
    for (int i = 0; i < 4; ++i) {
      Form g = zero_form(gens[0].ctx, bd);
      for (int j = 0; j < 4; ++j) g = g + t(i, j) * gens[j];
      out.push_back(std::move(g));
    }
    return out;
  };

  DandreaResult res;
  Rational det_mp, det_mq;
  for (int attempt = 1; attempt <= 5; ++attempt) {
    res.attempts = attempt;
    std::vector<Form> g = recombine(change_coords());
    det_mp = determinant(mult_map(g, src));
    std::vector<Form> prods9 = quadric_products(g);
    prods9.pop_back();  // omit d^2: the 9mn x 9mn square map
    det_mq = determinant(mult_map(prods9, src));
    if (det_mp != 0 && det_mq != 0) {
      res.det_mp = det_mp;
      res.det_mq_prime = det_mq;
      res.ratio = det_mq / (det_mp * det_mp * det_mp);
      return res;
    }
  }
  internal_check(!(det_mp == 0 && det_mq != 0),
                 "determinant identity violated: singular plane map with "
                 "nonsingular quadric map");
  res.det_mp = det_mp;
  res.det_mq_prime = det_mq;
  res.ratio = Rational(0);
  res.mp_singular = det_mp == 0;
  return res;
}

}  // namespace syzimp
