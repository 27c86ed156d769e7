#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "syzimp/form.hpp"
#include "syzimp/syzygy.hpp"

namespace syzimp {

// A free generating triple for the syzygy module of a ternary quadruple
// (a,b,c,d) of degree n: three vectors of degrees mu[0] <= mu[1] <= mu[2]
// with mu[0]+mu[1]+mu[2] == n.  Vectors are stored in ascending degree.
struct StrongMuBasis {
  std::array<int, 3> mu{};
  std::vector<SyzygyVector> vectors;  // exactly 3
};

// Searches degrees 1..n-1 for minimal syzygy generators (degreewise kernels
// modulo monomial multiples of generators already found).  Returns a basis
// iff exactly three generators are found, their degrees sum to n, the
// free-resolution Hilbert identity
//   dim (R/I)_d = dim R_d - 4 dim R_{d-n} + sum_i dim R_{d-n-mu_i}
// holds for all d <= 3n, and the three vectors span the syzygy module
// degreewise up to degree 2(n-1).  Returns nullopt otherwise.
std::optional<StrongMuBasis> strong_mu_basis(std::span<const Form> gens);

// Computes the four signed 3x3 minors of the 4x3 matrix whose columns are
// the basis vectors and tests whether they reproduce (a,b,c,d) up to a
// single common nonzero scalar.
bool hilbert_burch_check(const StrongMuBasis& smb, std::span<const Form> gens);

// Numerical consequences of a strong mu-basis with n = mu1+mu2+mu3:
// the image surface has degree mu1*mu2 + mu1*mu3 + mu2*mu3 and the
// basepoint multiplicities sum to n^2 minus that degree; the sum is
// always at least 2n^2/3 (bound_ok records the exact integer check).
struct Numerology {
  int n = 0;
  int surface_degree = 0;
  int basepoint_sum = 0;
  bool bound_ok = false;
};

Numerology strong_mu_numerology(const std::array<int, 3>& mu);

// Degree bookkeeping for a degree-n ternary parametrization with known
// basepoint multiplicities and generic map degree deg_phi:
//   deg_phi * deg(S) = n^2 - sum(multiplicities).
struct BasepointData {
  std::vector<int> multiplicities;
  int n = 0;
  int deg_phi = 1;
};

// Returns (n^2 - sum)/deg_phi; throws PreconditionError when the data is
// inconsistent (nonpositive numerator or non-divisibility).
int degree_formula(const BasepointData& bp);

}  // namespace syzimp
