#pragma once

// Parameter rings and target coordinate rings, with their canonical monomial
// orders.  Everything downstream (coefficient vectors, matrix columns, text
// rendering) is pinned to the orders fixed here:
//
//   binary  R = k[s,t]          monomials of degree d listed by descending
//                               s-power: s^d, s^{d-1} t, ..., t^d
//   ternary R = k[s,t,u]        graded lex with s > t > u
//   bihom   R = k[s,u; t,v]     bidegree (d1,d2); descending s-power (outer)
//                               by descending t-power (inner)
//   target  k[x,y,z(,w)]        graded lex with x > y > z > w

#include <array>
#include <string>
#include <vector>

#include "syzimp/errors.hpp"

namespace syzimp {

enum class RingKind { binary, ternary, bihom };
enum class TargetKind { none, p2, p3 };

// Degree of a form: 'a' alone for binary/ternary, (a, b) for bihom.
struct Deg {
  int a = 0;
  int b = 0;

  friend bool operator==(const Deg&, const Deg&) = default;
  Deg operator+(const Deg& o) const { return {a + o.a, b + o.b}; }
  Deg operator-(const Deg& o) const { return {a - o.a, b - o.b}; }
  Deg scaled(int k) const { return {a * k, b * k}; }
  // A degree in which no monomials live (used for empty map sources).
  bool empty() const { return a < 0 || b < 0; }
};

struct RingCtx {
  RingKind kind = RingKind::binary;
  TargetKind target = TargetKind::none;

  friend bool operator==(const RingCtx&, const RingCtx&) = default;
};

inline int var_count(RingKind k) {
  switch (k) {
    case RingKind::binary: return 2;
    case RingKind::ternary: return 3;
    case RingKind::bihom: return 4;
  }
  return 0;
}

inline int var_count(TargetKind k) {
  switch (k) {
    case TargetKind::none: return 0;
    case TargetKind::p2: return 3;
    case TargetKind::p3: return 4;
  }
  return 0;
}

// Exponent vectors.  Parameter monomials use slots in variable-list order:
// binary (s,t), ternary (s,t,u), bihom (s,u,t,v); unused slots stay 0.
using Mono = std::array<int, 4>;

const std::vector<std::string>& var_names(RingKind k);
const std::vector<std::string>& var_names(TargetKind k);

// Number of monomials of the given degree (0 for negative degrees).
int mono_count(RingKind k, Deg d);

// All monomials of the given degree in canonical order.
std::vector<Mono> monomials(RingKind k, Deg d);

// Index of a monomial inside monomials(k, d); the monomial must have the
// right total degree.
int mono_index(RingKind k, Deg d, const Mono& m);

Deg mono_degree(RingKind k, const Mono& m);

// ---- target side ------------------------------------------------------

using TMono = std::array<int, 4>;  // exponents of (x, y, z, w)

// Graded lex with x > y > z > w, biggest first (so it can order std::map
// with the leading term at begin()).
struct TMonoOrder {
  bool operator()(const TMono& p, const TMono& q) const {
    int dp = p[0] + p[1] + p[2] + p[3];
    int dq = q[0] + q[1] + q[2] + q[3];
    if (dp != dq) return dp > dq;
    for (int i = 0; i < 4; ++i)
      if (p[i] != q[i]) return p[i] > q[i];
    return false;
  }
};

// All target monomials of total degree d in canonical (descending) order.
std::vector<TMono> target_monomials(TargetKind k, int d);

}  // namespace syzimp
