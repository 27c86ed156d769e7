#pragma once

// Shared helpers for the unit tests and the acceptance suite: a brute-force
// determinant oracle, seeded random generators for forms and matrices, and
// small exact-comparison utilities.

#include <vector>

#include "syzimp/form.hpp"
#include "syzimp/linalg.hpp"
#include "syzimp/rng.hpp"
#include "syzimp/syzygy.hpp"

namespace syzimp::testing {

// Naive cofactor expansion along the first row; the independent oracle for
// determinant values up to 5x5.
inline Rational cofactor_det(const Mat& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Mat sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index sc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, sc++) = m(r, c);
      }
    }
    const Rational term = m(0, j) * cofactor_det(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

inline bool same_matrix(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

inline Mat random_int_matrix(Rng& rng, int rows, int cols, int mag = 5) {
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = rng.int_in(-mag, mag);
  return m;
}

inline Form random_form(Rng& rng, const RingCtx& ctx, Deg d, int mag = 4) {
  Form f = zero_form(ctx, d);
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i)
    f.coeffs(i) = rng.int_in(-mag, mag);
  return f;
}

inline Form random_nonzero_form(Rng& rng, const RingCtx& ctx, Deg d, int mag = 4) {
  for (;;) {
    Form f = random_form(rng, ctx, d, mag);
    if (!f.is_zero()) return f;
  }
}

// Random coprime binary triple of degree n (exact gcd certificate).
inline std::vector<Form> random_coprime_triple(Rng& rng, int n,
                                               TargetKind target = TargetKind::p2) {
  const RingCtx ctx{RingKind::binary, target};
  for (;;) {
    std::vector<Form> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(random_nonzero_form(rng, ctx, Deg{n, 0}));
    if (gcd_binary_many(gens).deg.a == 0) return gens;
  }
}

// Random ternary triple of degree n that is certified basepoint-free (full
// graded piece at the Koszul socle bound 3n-2), hence a regular sequence.
inline std::vector<Form> random_regular_sequence(Rng& rng, int n) {
  const RingCtx ctx{RingKind::ternary, TargetKind::none};
  for (;;) {
    std::vector<Form> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(random_nonzero_form(rng, ctx, Deg{n, 0}));
    if (hilbert_dim(gens, Deg{3 * n - 2, 0}) == 0) return gens;
  }
}

// Random ternary quadruple of degree n certified basepoint-free.
inline std::vector<Form> random_basepoint_free_quadruple(Rng& rng, int n) {
  const RingCtx ctx{RingKind::ternary, TargetKind::none};
  for (;;) {
    std::vector<Form> gens;
    for (int i = 0; i < 4; ++i)
      gens.push_back(random_nonzero_form(rng, ctx, Deg{n, 0}));
    if (hilbert_dim(gens, Deg{3 * n - 2, 0}) == 0) return gens;
  }
}

// Stacks the components of a syzygy vector into one coefficient vector.
inline Vec flatten_syzygy(const SyzygyVector& v) {
  const Eigen::Index block = v.comps[0].coeffs.size();
  Vec out(static_cast<Eigen::Index>(v.comps.size()) * block);
  for (std::size_t i = 0; i < v.comps.size(); ++i)
    out.segment(static_cast<Eigen::Index>(i) * block, block) = v.comps[i].coeffs;
  return out;
}

// Canonical basis of the subspace of degree-d syzygies all of whose
// components lie at the basepoints (i.e. in the saturation).  Returned as
// verified syzygy vectors.
inline std::vector<SyzygyVector> vanishing_syzygy_basis(std::span<const Form> gens,
                                                        int d) {
  const RingCtx& ctx = gens[0].ctx;
  const std::vector<SyzygyVector> basis = syzygies(gens, Deg{d, 0});
  if (basis.empty()) return {};
  const std::vector<Form> sat = saturation_piece(gens, Deg{d, 0});

  // Left annihilator of the saturation piece: w with w^T S = 0.
  const int dim = mono_count(ctx.kind, Deg{d, 0});
  Mat smat(dim, static_cast<Eigen::Index>(sat.size()));
  for (std::size_t j = 0; j < sat.size(); ++j) smat.col(j) = sat[j].coeffs;
  const std::vector<Vec> left = kernel_basis(Mat(smat.transpose()));

  const std::size_t arity = gens.size();
  Mat constraints(static_cast<Eigen::Index>(left.size() * arity),
                  static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Eigen::Index row = 0;
    for (std::size_t comp = 0; comp < arity; ++comp)
      for (const Vec& w : left)
        constraints(row++, static_cast<Eigen::Index>(b)) =
            w.dot(basis[b].comps[comp].coeffs);
  }

  std::vector<SyzygyVector> out;
  for (const Vec& combo : kernel_basis(constraints)) {
    std::vector<Form> comps;
    for (std::size_t c = 0; c < arity; ++c) {
      Form acc = zero_form(ctx, Deg{d, 0});
      for (std::size_t b = 0; b < basis.size(); ++b)
        acc = acc + combo(static_cast<Eigen::Index>(b)) * basis[b].comps[c];
      comps.push_back(acc);
    }
    out.push_back(make_syzygy(gens, comps));
  }
  return out;
}

}  // namespace syzimp::testing
