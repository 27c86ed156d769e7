#include "syzimp/tpoly.hpp"

#include <algorithm>
#include <vector>

#include "syzimp/errors.hpp"

namespace syzimp {

namespace {
int tdeg(const TMono& m) { return m[0] + m[1] + m[2] + m[3]; }
}  // namespace

int TargetPoly::total_degree() const {
  if (terms.empty()) return -1;
  return tdeg(terms.begin()->first);  // graded order: leading term is maximal
}

bool TargetPoly::is_homogeneous() const {
  if (terms.empty()) return true;
  int d = tdeg(terms.begin()->first);
  return tdeg(terms.rbegin()->first) == d;
}

Rational TargetPoly::coeff(const TMono& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

Rational TargetPoly::leading_coeff() const {
  internal_check(!terms.empty(), "leading coefficient of zero");
  return terms.begin()->second;
}

TargetPoly tp_zero(TargetKind k) { return {k, {}}; }

TargetPoly tp_const(TargetKind k, const Rational& c) {
  TargetPoly f{k, {}};
  if (c != 0) f.terms[{0, 0, 0, 0}] = c;
  return f;
}

TargetPoly tp_var(TargetKind k, int var) {
  internal_check(var >= 0 && var < var_count(k), "target variable out of range");
  TMono m{0, 0, 0, 0};
  m[var] = 1;
  return {k, {{m, Rational(1)}}};
}

TargetPoly tp_monomial(TargetKind k, const TMono& m, const Rational& c) {
  TargetPoly f{k, {}};
  if (c != 0) f.terms[m] = c;
  return f;
}

bool operator==(const TargetPoly& f, const TargetPoly& g) {
  return f.kind == g.kind && f.terms == g.terms;
}

static void add_term(TargetPoly& f, const TMono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = f.terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) f.terms.erase(it);
  }
}

TargetPoly operator+(const TargetPoly& f, const TargetPoly& g) {
  internal_check(f.kind == g.kind, "target arithmetic across rings");
  TargetPoly out = f;
  for (const auto& [m, c] : g.terms) add_term(out, m, c);
  return out;
}

TargetPoly operator-(const TargetPoly& f, const TargetPoly& g) {
  internal_check(f.kind == g.kind, "target arithmetic across rings");
  TargetPoly out = f;
  for (const auto& [m, c] : g.terms) add_term(out, m, -c);
  return out;
}

TargetPoly operator-(const TargetPoly& f) {
  TargetPoly out{f.kind, {}};
  for (const auto& [m, c] : f.terms) out.terms[m] = -c;
  return out;
}

TargetPoly operator*(const Rational& c, const TargetPoly& f) {
  TargetPoly out{f.kind, {}};
  if (c == 0) return out;
  for (const auto& [m, fc] : f.terms) out.terms[m] = c * fc;
  return out;
}

TargetPoly operator*(const TargetPoly& f, const TargetPoly& g) {
  internal_check(f.kind == g.kind, "target arithmetic across rings");
  TargetPoly out{f.kind, {}};
  for (const auto& [mf, cf] : f.terms)
    for (const auto& [mg, cg] : g.terms) {
      TMono m{mf[0] + mg[0], mf[1] + mg[1], mf[2] + mg[2], mf[3] + mg[3]};
      add_term(out, m, cf * cg);
    }
  return out;
}

TargetPoly tp_pow(const TargetPoly& f, int e) {
  internal_check(e >= 0, "negative power");
  TargetPoly out = tp_const(f.kind, Rational(1));
  for (int i = 0; i < e; ++i) out = out * f;
  return out;
}

TargetPoly divide_exact(const TargetPoly& f, const TargetPoly& g) {
  internal_check(f.kind == g.kind, "target arithmetic across rings");
  internal_check(!g.is_zero(), "division by zero polynomial");
  TargetPoly q = tp_zero(f.kind);
  TargetPoly r = f;
  const TMono& gm = g.terms.begin()->first;
  const Rational& gc = g.terms.begin()->second;
  while (!r.is_zero()) {
    const TMono& rm = r.terms.begin()->first;
    TMono t{rm[0] - gm[0], rm[1] - gm[1], rm[2] - gm[2], rm[3] - gm[3]};
    if (t[0] < 0 || t[1] < 0 || t[2] < 0 || t[3] < 0)
      throw InternalError("inexact polynomial division");
    Rational tc = r.terms.begin()->second / gc;
    TargetPoly step = tp_monomial(f.kind, t, tc);
    q = q + step;
    r = r - step * g;
  }
  return q;
}

TargetPoly derivative(const TargetPoly& f, int var) {
  TargetPoly out{f.kind, {}};
  for (const auto& [m, c] : f.terms) {
    if (m[var] == 0) continue;
    TMono d = m;
    d[var] -= 1;
    add_term(out, d, c * m[var]);
  }
  return out;
}

Rational eval(const TargetPoly& f, const std::array<Rational, 4>& point) {
  Rational total(0);
  for (const auto& [m, c] : f.terms) {
    Rational term = c;
    for (int v = 0; v < 4; ++v)
      for (int e = 0; e < m[v]; ++e) term *= point[v];
    total += term;
  }
  return total;
}

Normalized normalize(const TargetPoly& f) {
  if (f.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : f.terms) {
    num_gcd = int_gcd(num_gcd, rat_num(c));
    den_lcm = int_lcm(den_lcm, rat_den(c));
  }
  if (num_gcd < 0) num_gcd = -num_gcd;
  Rational lambda(num_gcd, den_lcm);
  if (f.leading_coeff() < 0) lambda = -lambda;
  return {(Rational(1) / lambda) * f, lambda};
}

Form substitute(const TargetPoly& f, std::span<const Form> gens) {
  internal_check(!gens.empty(), "substitution without generators");
  internal_check(f.is_homogeneous(), "substitution needs a homogeneous input");
  internal_check(static_cast<int>(gens.size()) == var_count(f.kind),
                 "substitution arity mismatch");
  RingCtx ctx = gens[0].ctx;
  Deg gdeg = gens[0].deg;
  for (const Form& g : gens)
    internal_check(g.ctx == ctx && g.deg == gdeg, "generators not equigraded");
  int d = std::max(f.total_degree(), 0);
  Form out = zero_form(ctx, gdeg.scaled(d));
  if (f.is_zero()) return out;

  // Cache generator powers: exponents are small and reused across terms.
  std::vector<std::vector<Form>> pow(gens.size());
  for (std::size_t v = 0; v < gens.size(); ++v)
    pow[v].push_back(monomial_form(ctx, {0, 0, 0, 0}));  // degree-0 unit
  auto power = [&](std::size_t v, int e) -> const Form& {
    while (static_cast<int>(pow[v].size()) <= e)
      pow[v].push_back(pow[v].back() * gens[v]);
    return pow[v][e];
  };
  for (const auto& [m, c] : f.terms) {
    Form term = monomial_form(ctx, {0, 0, 0, 0}, c);
    for (std::size_t v = 0; v < gens.size(); ++v)
      if (m[v] > 0) term = term * power(v, m[v]);
    out = out + term;
  }
  return out;
}

// ---- gcd ----------------------------------------------------------------

namespace {

int deg_in(const TargetPoly& f, int v) {
  int d = -1;
  for (const auto& [m, c] : f.terms) d = std::max(d, m[v]);
  return d;
}

int top_var(const TargetPoly& f, const TargetPoly& g) {
  for (int v = 3; v >= 0; --v)
    if (deg_in(f, v) > 0 || deg_in(g, v) > 0) return v;
  return -1;
}

// Coefficients of f viewed as a polynomial in variable v, low to high.
std::vector<TargetPoly> coeffs_in(const TargetPoly& f, int v) {
  std::vector<TargetPoly> out(static_cast<std::size_t>(deg_in(f, v)) + 1,
                              tp_zero(f.kind));
  for (const auto& [m, c] : f.terms) {
    TMono stripped = m;
    stripped[v] = 0;
    add_term(out[m[v]], stripped, c);
  }
  return out;
}

TargetPoly from_coeffs(const std::vector<TargetPoly>& cs, int v, TargetKind k) {
  TargetPoly out = tp_zero(k);
  for (std::size_t e = 0; e < cs.size(); ++e) {
    for (const auto& [m, c] : cs[e].terms) {
      TMono lifted = m;
      lifted[v] = static_cast<int>(e);
      add_term(out, lifted, c);
    }
  }
  return out;
}

TargetPoly content_in(const TargetPoly& f, int v) {
  TargetPoly cont = tp_zero(f.kind);
  for (const TargetPoly& c : coeffs_in(f, v))
    if (!c.is_zero()) cont = gcd_target(cont, c);
  return cont;
}

}  // namespace

TargetPoly gcd_target(const TargetPoly& f, const TargetPoly& g) {
  internal_check(f.kind == g.kind, "gcd across rings");
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  int v = top_var(f, g);
  if (v < 0) return tp_const(f.kind, Rational(1));  // nonzero constants

  TargetPoly cf = content_in(f, v);
  TargetPoly cg = content_in(g, v);
  TargetPoly cont = gcd_target(cf, cg);
  TargetPoly a = divide_exact(f, cf);
  TargetPoly b = divide_exact(g, cg);
  if (deg_in(a, v) < deg_in(b, v)) std::swap(a, b);

  // Primitive pseudo-remainder sequence in v.
  while (!b.is_zero()) {
    // r := lc(b)^k * a  mod  b   (fraction-free remainder in v)
    std::vector<TargetPoly> ca = coeffs_in(a, v);
    std::vector<TargetPoly> cb = coeffs_in(b, v);
    const TargetPoly& lcb = cb.back();
    while (ca.size() >= cb.size()) {
      TargetPoly lca = ca.back();
      std::size_t shift = ca.size() - cb.size();
      for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = lcb * ca[i];
      for (std::size_t i = 0; i < cb.size(); ++i)
        ca[shift + i] = ca[shift + i] - lca * cb[i];
      ca.pop_back();  // leading coefficient cancels exactly
      while (!ca.empty() && ca.back().is_zero()) ca.pop_back();
    }
    TargetPoly r = from_coeffs(ca, v, f.kind);
    if (!r.is_zero()) r = divide_exact(r, content_in(r, v));
    a = std::move(b);
    b = std::move(r);
  }
  if (deg_in(a, v) > 0) a = divide_exact(a, content_in(a, v));
  return cont * a;
}

std::string render(const TargetPoly& f) {
  const auto& names = var_names(f.kind == TargetKind::none ? TargetKind::p3
                                                           : f.kind);
  std::string out;
  for (const auto& [m, c] : f.terms) {
    std::string mono;
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    out += render_term(c, mono, out.empty());
  }
  return out.empty() ? "0" : out;
}

}  // namespace syzimp
