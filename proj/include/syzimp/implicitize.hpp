#pragma once

// Implicit equations from syzygies.  Curves use a square matrix of moving
// lines; surfaces use moving planes and moving quadrics.  In every case the
// determinant of the assembled matrix is lambda * F^d for the implicit
// equation F, and that identity is verified by expansion before returning.

#include <cstdint>
#include <span>
#include <vector>

#include "syzimp/rng.hpp"
#include "syzimp/syzygy.hpp"
#include "syzimp/tpoly.hpp"

namespace syzimp {

enum class RowKind { linear, quadric };

struct MovingMatrix {
  int size = 0;
  std::vector<TargetPoly> entries;  // row-major, size * size
  std::vector<RowKind> row_kinds;   // one per row

  TargetPoly& at(int i, int j) { return entries[i * size + j]; }
  const TargetPoly& at(int i, int j) const { return entries[i * size + j]; }
};

struct ImplicitResult {
  TargetPoly det_poly;  // raw determinant of the moving matrix
  TargetPoly f;         // normalized radical: det_poly = lambda * f^d
  int d = 1;
  Rational lambda;
  int matrix_size = 0;
  int rows_linear = 0;
  int rows_quadric = 0;
  int mp_kernel_dim = -1;  // surfaces: moving-plane kernel dimension
  int mq_kernel_dim = -1;  // surfaces: moving-quadric kernel dimension
  bool coprime_certified = true;
};

// Square matrix of the degree n-1 moving lines of a coprime binary triple:
// row per syzygy basis vector, column j carrying the monomial s^j t^{n-1-j}.
MovingMatrix curve_matrix(std::span<const Form> gens);

// Determinant over the polynomial ring (fraction-free elimination; entries
// stay polynomials throughout).
TargetPoly moving_det(const MovingMatrix& m);

// Split det = lambda * f^d with f the normalized radical; when det is not a
// perfect power of its radical, falls back to f = normalize(det), d = 1.
// The returned triple always satisfies the identity exactly.
struct PowerSplit {
  TargetPoly f;
  int d = 1;
  Rational lambda;
};
PowerSplit radical_power_split(const TargetPoly& det);

ImplicitResult implicitize_curve(std::span<const Form> gens);

// Sylvester resultant of the two mu-basis moving lines (a TargetPoly of
// degree mu + (n - mu) = n in x, y, z).
TargetPoly mu_resultant(const SyzygyVector& p, const SyzygyVector& q);

struct AssembledM {
  MovingMatrix m;
  int mp_kernel_dim = 0;
  int mq_kernel_dim = 0;
  bool coprime_certified = true;
};

// Tensor-product surfaces, bidegree (m,n), basepoint-free: mn x mn matrix of
// moving quadrics.  HypothesisError when the moving-plane map is singular
// (basepoints) or the moving-quadric kernel misses dimension mn.
AssembledM assemble_M_tp(std::span<const Form> gens,
                         std::uint64_t seed = kDefaultSeed);

// Triangular surfaces, degree n, basepoint-free: n moving planes plus a
// complement of (n^2-n)/2 moving quadrics, (n^2+n)/2 square.
AssembledM assemble_M_tri(std::span<const Form> gens,
                          std::uint64_t seed = kDefaultSeed);

// Tensor-product surfaces with exactly one basepoint: one moving plane plus
// mn-1 moving quadrics, mn square.  A basepoint-free input is a
// precondition error; unexpected kernel dimensions are hypothesis errors.
AssembledM assemble_M_tp_one_bp(std::span<const Form> gens,
                                std::uint64_t seed = kDefaultSeed);

enum class SurfaceKind { tensor, triangular, tensor_one_bp };

ImplicitResult implicitize_surface(SurfaceKind kind, std::span<const Form> gens,
                                   std::uint64_t seed = kDefaultSeed);

// Determinant identity linking the two square surface maps: for a bidegree
// (m,n) quadruple after a random invertible coordinate change, det MQ' (the
// 9mn x 9mn map omitting the d^2 products) equals Res(a,b,c) * (det MP)^3,
// so ratio = det MQ' / (det MP)^3 recovers the resultant.  Singular MP after
// all retries marks the result mp_singular with ratio 0.
struct DandreaResult {
  Rational det_mq_prime;
  Rational det_mp;
  Rational ratio;
  bool mp_singular = false;
  int attempts = 0;
};
DandreaResult dandrea_ratio(std::span<const Form> gens,
                            std::uint64_t seed = kDefaultSeed);

}  // namespace syzimp
