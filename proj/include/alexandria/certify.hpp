#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alexandria/singularities.hpp"

namespace alexandria {

// Description of a hypersurface of degree d in projective (n+1)-space with
// isolated singularities, its behavior at infinity, and the geometric
// hypotheses the caller vouches for (they are not decidable from this data).
struct GlobalHypersurface {
  long n = 1;
  long degree = 1;
  bool transversal_at_infinity = false;
  std::vector<SingularityDescriptor> singularities;
  std::vector<SingularityDescriptor> infinity_singularities;
  // caller-supplied order bound coming from the link at infinity
  std::optional<LaurentPoly> infinity_poly;
  // an ample resolution with normal crossings exists
  bool asserts_ample_resolution = false;
  // the relative cohomology of the hypersurface against its section at
  // infinity vanishes in the critical degree
  bool asserts_h_vanishing = false;
};

void validate(const GlobalHypersurface& h);

struct DivisibilityReport {
  LaurentPoly product_bound;
  // false: the bound carries an extra unspecified power of (t-1)
  bool slack_stripped = false;
  std::optional<LaurentPoly> infinity_bound;
  LaurentPoly combined_bound;
  bool semisimple_required = false;
  bool roots_restricted_to_d = false;
  bool one_not_root = false;
  std::vector<std::string> notes;
};

bool operator==(const DivisibilityReport& a, const DivisibilityReport& b);

// Bound on the order of the module of the complement from local data and
// behavior at infinity. Every applied constraint appends a note.
DivisibilityReport divisibility_report(const GlobalHypersurface& h);

// True iff every local polynomial is nonzero at 1 (the hypersurface is then
// a rational-homology manifold).
bool q_manifold_check(const std::vector<SingularityDescriptor>& sings);

enum class CertStatus { Vanishes, Inconclusive };
std::string to_string(CertStatus s);

// Vanishes only under the caller's ampleness assertion combined with either
// the relative-cohomology assertion or the rational-homology-manifold check;
// never claims nonvanishing.
CertStatus vanishing_certificate(const GlobalHypersurface& h);

// 4*delta + 6*kappa < d^2
bool nodal_cuspidal_abelian(long d, long delta, long kappa);

struct ChainStep {
  long quotient = 0;
  long divisor = 0;
  long remainder = 0;
  long long drop = 0;  // quotient * divisor^2
};

struct ResolutionChain {
  long m = 1;
  long k = 1;
  std::vector<ChainStep> steps;
  long long total_drop = 0;  // always equals m*k
};

// Quotient/remainder chain of the Euclidean algorithm for a coprime pair,
// with the self-intersection drop of each blow-up step.
ResolutionChain euclidean_chain(long m, long k);

struct CharPairCriterion {
  bool abelian = false;  // d^2 > m*k
  ResolutionChain chain;
  bool caveat = true;  // standing; see caveat_text
  std::string caveat_text;
};

CharPairCriterion char_pair_abelian(long d, long m, long k);

// Covariants modulo t^degree - 1: the passage from the affine invariant to
// the projective one.
CycModule projective_from_affine(const CycModule& m, long degree);

}  // namespace alexandria
