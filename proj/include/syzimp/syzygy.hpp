#pragma once

// Syzygies of equigraded generator lists: the kernel pieces of the
// multiplication maps R_d^k -> R_{d+n}, computed degree by degree with
// canonical bases, plus the saturation/basepoint machinery built on them.

#include <optional>
#include <span>
#include <vector>

#include "syzimp/form.hpp"
#include "syzimp/linalg.hpp"

namespace syzimp {

// A vector (A_1, ..., A_k) of forms of one degree with sum A_i * g_i = 0.
struct SyzygyVector {
  Deg deg;                  // common degree of the components
  std::vector<Form> comps;  // one per generator
};

// Matrix of (f_1, ..., f_k) . : R_source^k -> R_{source + n} against the
// canonical monomial bases; columns are generator-major (all monomial
// multiples of f_1 first, then f_2, ...).  An empty source degree gives a
// matrix with zero columns.
Mat mult_map(std::span<const Form> gens, Deg source);

// Canonical basis of the syzygies of the given component degree.
std::vector<SyzygyVector> syzygies(std::span<const Form> gens, Deg d);

// Wraps components into a verified SyzygyVector (InternalError when the
// defining identity fails: callers pass kernel output here).
SyzygyVector make_syzygy(std::span<const Form> gens, std::vector<Form> comps);

// Is (comps) . (gens) = 0?  The validation half of make_syzygy, for
// externally supplied candidate syzygies.
bool is_syzygy(std::span<const Form> gens, std::span<const Form> comps);

// mu-basis of a coprime binary triple of degree n: p of the minimal syzygy
// degree mu, q of degree n - mu, chosen canonically (first kernel vector,
// and the first kernel vector independent of the monomial multiples of p).
struct MuBasis {
  int mu = 0;
  SyzygyVector p, q;
};
MuBasis mu_basis(std::span<const Form> gens);

// Koszul membership for a syzygy (A,B,C) on a ternary triple (a,b,c):
// cofactors (h1,h2,h3) with A = h1 c + h2 b, B = -h2 a + h3 c,
// C = -h1 a - h3 b, or nullopt when the syzygy is not Koszul.  The zero
// syzygy gets the zero witness.
struct KoszulWitness {
  Form h1, h2, h3;
};
std::optional<KoszulWitness> koszul_witness(std::span<const Form> gens,
                                            const SyzygyVector& syz);

// dim_k (R / I)_d for I generated by the (equigraded) gens.
int hilbert_dim(std::span<const Form> gens, Deg d);

// Does f lie in the ideal piece I_{deg f}?
bool ideal_membership(const Form& f, std::span<const Form> gens);

// Degree-d piece of the saturation (I : m^infinity), computed as the
// stabilizing chain (I : m^B)_d for B = 0, 1, ...: stop when two successive
// pieces agree; exceeding the window cap (default 4 * total degree of the
// generators) raises HypothesisError rather than silently truncating.
std::vector<Form> saturation_piece(std::span<const Form> gens, Deg d,
                                   int cap = -1);

// Does f vanish on the basepoint scheme, i.e. lie in sat(I)_{deg f}?
bool vanishes_at_basepoints(std::span<const Form> gens, const Form& f);

// Compare I_d with sat(I)_d for every total degree d <= dmax.
bool is_saturated_up_to(std::span<const Form> gens, int dmax);

// Shared precondition: nonempty, equigraded, nonzero generators.
void require_equigraded(std::span<const Form> gens);

}  // namespace syzimp
