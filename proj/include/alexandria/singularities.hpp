#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alexandria/cycmod.hpp"

namespace alexandria {

// x_1^{a_1} + ... + x_r^{a_r} at the origin; every exponent >= 2.
struct BrieskornSing {
  std::vector<long> exponents;
};

// Characteristic polynomial supplied directly.
struct ExplicitPolySing {
  LaurentPoly poly;
};

// Unibranched plane-curve point with a single characteristic pair (m, k),
// gcd(m, k) = 1 and k <= m.
struct CharPairSing {
  long m = 2;
  long k = 1;
};

// delta ordinary nodes and kappa ordinary cusps.
struct NodalCuspidalSing {
  long delta = 0;
  long kappa = 0;
};

using SingularityDescriptor =
    std::variant<BrieskornSing, ExplicitPolySing, CharPairSing,
                 NodalCuspidalSing>;

void validate(const SingularityDescriptor& s);

// ALEXANDRIA_MAX_MILNOR, default 10^6: cap on eigenvalue enumeration size.
long max_milnor_cap();

// Monodromy eigenvalues of the Brieskorn singularity are products of
// nontrivial a_i-th roots of unity. Counted exactly by convolving residue
// counting measures over Z/lcm; returns order-of-unity -> multiplicity.
std::map<unsigned long, long> brieskorn_eigenvalue_counts(
    const std::vector<long>& exponents);
LaurentPoly brieskorn_charpoly(const std::vector<long>& exponents);
// The semisimple module with the eigenvalues above.
CycModule brieskorn_module(const std::vector<long>& exponents);

LaurentPoly local_polynomial(const SingularityDescriptor& s);
CyclotomicFactorization local_polynomial_factored(
    const SingularityDescriptor& s);

// Nodes and cusps expand to individual points; other kinds are one point.
std::vector<SingularityDescriptor> expand_points(
    const SingularityDescriptor& s);

// Hypersurface cut out by a sum of powers of generic forms,
// g_{D/d_1}^{d_1} + ... + g_{D/d_{n+1}}^{d_{n+1}} = 0 with D the product of
// the exponents. It has D^n isolated singularities, each of the Brieskorn
// type of the exponent tuple, and the module of the complement equals the
// Brieskorn module.
struct FamilyDescription {
  long n = 1;
  std::vector<long> exponents;
  long degree = 1;
  BigInt singular_count;
  SingularityDescriptor local_type;
  CycModule module;
  std::string equation_shape;
};

FamilyDescription power_sum_family(const std::vector<long>& exponents);

struct JoinResult {
  CycModule module;
  std::vector<std::string> notes;
};

// Join of two hypersurfaces of a common degree: the module of the join is
// the tensor product with the deck generator acting diagonally. Warns when
// the supplied degrees differ, and surfaces any (t-1)-summands of the
// result, since geometric inputs with vanishing relative homology at
// infinity exclude them.
JoinResult thom_sebastiani_join(const CycModule& a, const CycModule& b,
                                std::optional<long> degree_a = std::nullopt,
                                std::optional<long> degree_b = std::nullopt);

}  // namespace alexandria
