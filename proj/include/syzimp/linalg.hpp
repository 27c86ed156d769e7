#pragma once

// Exact dense linear algebra over a field scalar (instantiated with
// Rational).  Pivoting is fully deterministic — leftmost pivot column,
// topmost usable row — so reduced forms, kernel bases and particular
// solutions are canonical: the same input always yields the same output.

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "syzimp/errors.hpp"

namespace syzimp {

template <class S>
struct RrefResult {
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> R;
  std::vector<int> pivots;  // pivot column of row 0, 1, ... in order
};

template <class S>
RrefResult<S> rref(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      S f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
int rank(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

// Canonical kernel basis: one vector per free column, taken in ascending
// column order; the free coordinate is set to 1 and pivot coordinates are
// read off the reduced form.
template <class S>
std::vector<Eigen::Matrix<S, Eigen::Dynamic, 1>> kernel_basis(
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
  using VecS = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  const int cols = static_cast<int>(m.cols());
  RrefResult<S> red = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : red.pivots) is_pivot[c] = true;
  std::vector<VecS> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    VecS v = VecS::Zero(cols);
    v(f) = S(1);
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
      v(red.pivots[r]) = -red.R(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Canonical particular solution of A x = b (free coordinates set to 0),
// or nullopt when the system is inconsistent.
template <class S>
std::optional<Eigen::Matrix<S, Eigen::Dynamic, 1>> solve_particular(
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<S, Eigen::Dynamic, 1>& b) {
  using MatS = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  using VecS = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  const int cols = static_cast<int>(a.cols());
  MatS aug(a.rows(), cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  RrefResult<S> red = rref(aug);
  for (int c : red.pivots)
    if (c == cols) return std::nullopt;
  VecS x = VecS::Zero(cols);
  for (std::size_t r = 0; r < red.pivots.size(); ++r)
    x(red.pivots[r]) = red.R(static_cast<int>(r), cols);
  return x;
}

// ---- fraction-free determinant ----------------------------------------
//
// Bareiss elimination works over any integral domain as long as the exact
// divisions it prescribes are available; the same routine therefore serves
// both rational matrices and matrices of polynomials.  Ops must provide
// mul(a,b), sub(a,b), div(a,b) (exact), is_zero(a) and zero().

template <class R, class Ops>
R bareiss_determinant(std::vector<R> m, int n, const Ops& ops) {
  if (n == 0) throw InternalError("determinant of an empty matrix");
  bool negate = false;
  R prev{};
  bool have_prev = false;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!ops.is_zero(m[i * n + k])) {
        piv = i;
        break;
      }
    if (piv < 0) return ops.zero();
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m[piv * n + j], m[k * n + j]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R t = ops.sub(ops.mul(m[k * n + k], m[i * n + j]),
                      ops.mul(m[i * n + k], m[k * n + j]));
        m[i * n + j] = have_prev ? ops.div(t, prev) : std::move(t);
      }
      m[i * n + k] = ops.zero();
    }
    prev = m[k * n + k];
    have_prev = true;
  }
  R det = m[(n - 1) * n + (n - 1)];
  if (negate) det = ops.sub(ops.zero(), det);
  return det;
}

template <class S>
struct FieldOps {
  S mul(const S& a, const S& b) const { return a * b; }
  S sub(const S& a, const S& b) const { return a - b; }
  S div(const S& a, const S& b) const { return a / b; }
  bool is_zero(const S& a) const { return a == 0; }
  S zero() const { return S(0); }
};

template <class S>
S determinant(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
  if (m.rows() != m.cols())
    throw PreconditionError("determinant requires a square matrix");
  const int n = static_cast<int>(m.rows());
  std::vector<S> grid(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) grid[i * n + j] = m(i, j);
  return bareiss_determinant(std::move(grid), n, FieldOps<S>{});
}

// ---- incremental span tracking -----------------------------------------
//
// Maintains a row space in reduced form; add() reports whether the vector
// enlarged the span.  Used for greedy complement selection, where rows must
// be offered in canonical order to keep the result deterministic.

template <class S>
class SpanBuilder {
public:
  using VecS = Eigen::Matrix<S, Eigen::Dynamic, 1>;

  // Returns true when v was independent of the current span (and absorbed).
  bool add(VecS v) {
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return false;
    S inv = S(1) / v(p);
    v *= inv;
    rows_.emplace_back(p, std::move(v));
    return true;
  }

  bool contains(VecS v) const {
    reduce(v);
    return first_nonzero(v) < 0;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

private:
  void reduce(VecS& v) const {
    for (const auto& [p, row] : rows_) {
      if (v(p) == 0) continue;
      S f = v(p);
      v -= f * row;
    }
  }

  static int first_nonzero(const VecS& v) {
    for (int i = 0; i < v.size(); ++i)
      if (v(i) != 0) return i;
    return -1;
  }

  std::vector<std::pair<int, VecS>> rows_;
};

}  // namespace syzimp
