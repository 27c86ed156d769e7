#include "syzimp/form.hpp"

#include <algorithm>

#include "syzimp/errors.hpp"

namespace syzimp {

Form zero_form(RingCtx ctx, Deg deg) {
  return {ctx, deg, Vec::Zero(mono_count(ctx.kind, deg))};
}

Form monomial_form(RingCtx ctx, const Mono& m, const Rational& c) {
  Deg d = mono_degree(ctx.kind, m);
  Form f = zero_form(ctx, d);
  f.coeffs(mono_index(ctx.kind, d, m)) = c;
  return f;
}

static void require_same(const Form& f, const Form& g) {
  internal_check(f.ctx == g.ctx && f.deg == g.deg,
                 "form arithmetic on mismatched rings or degrees");
}

bool operator==(const Form& f, const Form& g) {
  return f.ctx == g.ctx && f.deg == g.deg && f.coeffs == g.coeffs;
}

Form operator+(const Form& f, const Form& g) {
  require_same(f, g);
  return {f.ctx, f.deg, f.coeffs + g.coeffs};
}

Form operator-(const Form& f, const Form& g) {
  require_same(f, g);
  return {f.ctx, f.deg, f.coeffs - g.coeffs};
}

Form operator-(const Form& f) { return {f.ctx, f.deg, -f.coeffs}; }

Form operator*(const Rational& c, const Form& f) {
  return {f.ctx, f.deg, c * f.coeffs};
}

Form operator*(const Form& f, const Form& g) {
  internal_check(f.ctx == g.ctx, "form product across rings");
  Deg d = f.deg + g.deg;
  Form out = zero_form(f.ctx, d);
  const auto mf = monomials(f.ctx.kind, f.deg);
  const auto mg = monomials(g.ctx.kind, g.deg);
  for (int i = 0; i < static_cast<int>(mf.size()); ++i) {
    if (f.coeffs(i) == 0) continue;
    for (int j = 0; j < static_cast<int>(mg.size()); ++j) {
      if (g.coeffs(j) == 0) continue;
      Mono m = mf[i];
      for (int k = 0; k < 4; ++k) m[k] += mg[j][k];
      out.coeffs(mono_index(f.ctx.kind, d, m)) += f.coeffs(i) * g.coeffs(j);
    }
  }
  return out;
}

Rational eval(const Form& f, std::span<const Rational> point) {
  const int nv = var_count(f.ctx.kind);
  internal_check(static_cast<int>(point.size()) == nv,
                 "evaluation point has wrong arity");
  Rational total(0);
  const auto ms = monomials(f.ctx.kind, f.deg);
  for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
    if (f.coeffs(i) == 0) continue;
    Rational term = f.coeffs(i);
    for (int v = 0; v < nv; ++v)
      for (int e = 0; e < ms[i][v]; ++e) term *= point[v];
    total += term;
  }
  return total;
}

std::string render_term(const Rational& c, const std::string& mono_str,
                        bool first) {
  std::string out;
  bool neg = c < 0;
  Rational mag = neg ? Rational(-c) : c;
  if (first)
    out = neg ? "-" : "";
  else
    out = neg ? " - " : " + ";
  if (mono_str.empty()) {
    out += render_rational(mag);
  } else {
    if (mag != 1) out += render_rational(mag) + "*";
    out += mono_str;
  }
  return out;
}

static std::string mono_string(const Mono& m,
                               const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

std::string render(const Form& f) {
  const auto ms = monomials(f.ctx.kind, f.deg);
  const auto& names = var_names(f.ctx.kind);
  std::string out;
  for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
    if (f.coeffs(i) == 0) continue;
    out += render_term(f.coeffs(i), mono_string(ms[i], names), out.empty());
  }
  return out.empty() ? "0" : out;
}

// ---- binary gcd ---------------------------------------------------------

namespace {

// Dense univariate polynomial in one variable, lowest degree first.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational inv = Rational(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

// Remainder of a modulo b; b must be nonzero and trimmed.
UPoly rem(UPoly a, const UPoly& b) {
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();  // leading term cancels exactly
    trim(a);
  }
  return a;
}

UPoly gcd_uni(UPoly a, UPoly b) {
  a = monic(std::move(a));
  b = monic(std::move(b));
  while (!b.empty()) {
    UPoly r = monic(rem(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

Form gcd_binary(const Form& f, const Form& g) {
  internal_check(f.ctx.kind == RingKind::binary && g.ctx.kind == RingKind::binary,
                 "gcd_binary needs binary forms");
  auto make_monic = [](const Form& h) {
    for (int i = 0; i < h.coeffs.size(); ++i)
      if (h.coeffs(i) != 0) return (Rational(1) / h.coeffs(i)) * h;
    return h;
  };
  if (f.is_zero() && g.is_zero())
    throw PreconditionError("gcd of two zero forms is undefined");
  if (f.is_zero()) return make_monic(g);
  if (g.is_zero()) return make_monic(f);

  // Coefficient index i holds the monomial s^{d-i} t^i, so the t-adic
  // valuation is the first nonzero index.  Split off the common t-power,
  // dehomogenize at t = 1 (s-powers survive that), run Euclid, and
  // rehomogenize the result.
  auto t_val = [](const Form& h) {
    for (int i = 0; i < h.coeffs.size(); ++i)
      if (h.coeffs(i) != 0) return i;
    return 0;
  };
  int at = std::min(t_val(f), t_val(g));
  auto dehom = [](const Form& h) {
    UPoly p(h.deg.a + 1);
    for (int i = 0; i <= h.deg.a; ++i) p[h.deg.a - i] = h.coeffs(i);
    trim(p);
    return p;
  };
  UPoly u = gcd_uni(dehom(f), dehom(g));
  int e = static_cast<int>(u.size()) - 1;
  Form h = zero_form(f.ctx, {e + at, 0});
  for (int j = 0; j <= e; ++j) {
    // s^j from the univariate gcd, padded with t to total degree e + at.
    h.coeffs(mono_index(RingKind::binary, h.deg, {j, e + at - j, 0, 0})) = u[j];
  }
  return make_monic(h);
}

Form gcd_binary_many(std::span<const Form> forms) {
  internal_check(!forms.empty(), "gcd of an empty list");
  Form g = forms[0];
  for (std::size_t i = 1; i < forms.size(); ++i) {
    if (g.is_zero() && forms[i].is_zero()) continue;
    g = gcd_binary(g, forms[i]);
    if (!g.is_zero() && g.deg.a == 0) break;  // already constant
  }
  if (g.is_zero()) throw PreconditionError("gcd of all-zero forms is undefined");
  return g;
}

Form restrict_to_pencil(const Form& f, std::span<const Rational> p,
                        std::span<const Rational> q) {
  const int nv = var_count(f.ctx.kind);
  internal_check(static_cast<int>(p.size()) == nv &&
                     static_cast<int>(q.size()) == nv,
                 "pencil points have wrong arity");
  RingCtx bin{RingKind::binary, f.ctx.target};
  int total = f.deg.a + (f.ctx.kind == RingKind::bihom ? f.deg.b : 0);
  Form out = zero_form(bin, {total, 0});
  const auto ms = monomials(f.ctx.kind, f.deg);
  for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
    if (f.coeffs(i) == 0) continue;
    Form term = monomial_form(bin, {0, 0, 0, 0}, f.coeffs(i));
    for (int v = 0; v < nv; ++v) {
      if (ms[i][v] == 0) continue;
      Form lin = zero_form(bin, {1, 0});
      lin.coeffs(0) = p[v];
      lin.coeffs(1) = q[v];
      for (int e = 0; e < ms[i][v]; ++e) term = term * lin;
    }
    out = out + term;
  }
  return out;
}

bool certified_coprime(std::span<const Form> gens, std::uint64_t seed) {
  internal_check(!gens.empty(), "coprimality check on an empty list");
  if (gens[0].ctx.kind == RingKind::binary) {
    Form g = gcd_binary_many(gens);
    return g.deg.a == 0;
  }
  const int nv = var_count(gens[0].ctx.kind);
  Rng rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> p(nv), q(nv);
    for (int v = 0; v < nv; ++v) p[v] = rng.rational(9);
    for (int v = 0; v < nv; ++v) q[v] = rng.rational(9);
    std::vector<Form> restricted;
    bool degenerate = false;
    for (const Form& f : gens) {
      Form r = restrict_to_pencil(f, p, q);
      if (r.is_zero()) degenerate = true;
      restricted.push_back(std::move(r));
    }
    if (degenerate) continue;  // the pencil landed inside a zero set
    Form g = gcd_binary_many(restricted);
    if (g.deg.a == 0) return true;
  }
  return false;
}

}  // namespace syzimp
