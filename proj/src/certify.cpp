#include "alexandria/certify.hpp"

#include <algorithm>
#include <numeric>

namespace alexandria {

void validate(const GlobalHypersurface& h) {
  if (h.n < 1) throw ValidationError("dimension n must be at least 1");
  if (h.degree < 1) throw ValidationError("degree must be at least 1");
  for (const auto& s : h.singularities) validate(s);
  for (const auto& s : h.infinity_singularities) validate(s);
  if (h.infinity_poly && h.infinity_poly->is_zero())
    throw ValidationError("polynomial at infinity must be nonzero");
}

bool operator==(const DivisibilityReport& a, const DivisibilityReport& b) {
  return a.product_bound == b.product_bound &&
         a.slack_stripped == b.slack_stripped &&
         a.infinity_bound == b.infinity_bound &&
         a.combined_bound == b.combined_bound &&
         a.semisimple_required == b.semisimple_required &&
         a.roots_restricted_to_d == b.roots_restricted_to_d &&
         a.one_not_root == b.one_not_root && a.notes == b.notes;
}

bool q_manifold_check(const std::vector<SingularityDescriptor>& sings) {
  for (const auto& s : sings)
    for (const auto& point : expand_points(s))
      if (sgn(local_polynomial(point).eval_one()) == 0) return false;
  return true;
}

DivisibilityReport divisibility_report(const GlobalHypersurface& h) {
  validate(h);
  DivisibilityReport rep;

  std::map<unsigned long, unsigned long> product_factors;
  LaurentPoly residual = LaurentPoly::one();
  std::vector<SingularityDescriptor> all = h.singularities;
  all.insert(all.end(), h.infinity_singularities.begin(),
             h.infinity_singularities.end());
  for (const auto& s : all) {
    CyclotomicFactorization f = local_polynomial_factored(s);
    for (const auto& [q, m] : f.factors) product_factors[q] += m;
    residual *= f.residual;
  }
  {
    LaurentPoly prod = residual;
    for (const auto& [q, m] : product_factors) prod *= pow(cyclotomic(q), m);
    rep.product_bound = prod.canonical();
  }
  rep.notes.push_back(
      "the order divides the product of the local polynomials of all "
      "singularities, affine and at infinity, times an unspecified power of "
      "(t-1)");

  if (h.asserts_h_vanishing) {
    rep.slack_stripped = true;
    rep.notes.push_back(
        "asserted vanishing of the relative cohomology at infinity: the "
        "unspecified (t-1) power is dropped");
  }

  bool q_manifold = q_manifold_check(all);
  if (!h.asserts_h_vanishing && q_manifold) {
    rep.slack_stripped = true;
    rep.notes.push_back(
        "every local polynomial is nonzero at 1, so the hypersurface and its "
        "section at infinity are rational-homology manifolds and the "
        "relative cohomology at infinity vanishes; the unspecified (t-1) "
        "power is dropped");
  }

  std::map<unsigned long, unsigned long> combined_factors = product_factors;
  LaurentPoly combined_residual = residual;

  if (h.transversal_at_infinity) {
    rep.semisimple_required = true;
    rep.roots_restricted_to_d = true;
    if (!rep.slack_stripped) {
      rep.slack_stripped = true;
      rep.notes.push_back(
          "transversal at infinity: the module is semisimple, so the "
          "unspecified (t-1) power is dropped");
    }
    for (auto it = combined_factors.begin(); it != combined_factors.end();)
      if (static_cast<unsigned long>(h.degree) % it->first != 0)
        it = combined_factors.erase(it);
      else
        ++it;
    combined_residual = LaurentPoly::one();
    rep.notes.push_back(
        "transversal at infinity: every root of the order is a root of unity "
        "of degree d = " +
        std::to_string(h.degree) +
        "; non-cyclotomic factors and cyclotomic factors of order not "
        "dividing d are removed");
  }

  rep.one_not_root = h.asserts_h_vanishing || q_manifold;
  if (rep.one_not_root) {
    combined_factors.erase(1);
    rep.notes.push_back(
        "1 is not a root of the order; all (t-1) factors are removed from "
        "the combined bound");
  }

  LaurentPoly combined = combined_residual;
  for (const auto& [q, m] : combined_factors) combined *= pow(cyclotomic(q), m);
  combined = combined.canonical();

  if (h.infinity_poly) {
    rep.infinity_bound = h.infinity_poly->canonical();
    combined = combined.is_zero() ? LaurentPoly()
                                  : gcd(combined, *rep.infinity_bound);
    rep.notes.push_back(
        "the order divides the supplied polynomial at infinity; the combined "
        "bound is the gcd with it");
  }
  rep.combined_bound = combined.canonical();
  return rep;
}

std::string to_string(CertStatus s) {
  return s == CertStatus::Vanishes ? "vanishes" : "inconclusive";
}

CertStatus vanishing_certificate(const GlobalHypersurface& h) {
  validate(h);
  if (!h.asserts_ample_resolution) return CertStatus::Inconclusive;
  if (h.asserts_h_vanishing) return CertStatus::Vanishes;
  std::vector<SingularityDescriptor> all = h.singularities;
  all.insert(all.end(), h.infinity_singularities.begin(),
             h.infinity_singularities.end());
  if (q_manifold_check(all)) return CertStatus::Vanishes;
  return CertStatus::Inconclusive;
}

bool nodal_cuspidal_abelian(long d, long delta, long kappa) {
  if (d < 1) throw ValidationError("degree must be at least 1");
  if (delta < 0 || kappa < 0)
    throw ValidationError("node and cusp counts must be non-negative");
  return 4 * delta + 6 * kappa < d * d;
}

ResolutionChain euclidean_chain(long m, long k) {
  if (k < 1 || m < k)
    throw PreconditionError("euclidean chain requires 1 <= k <= m");
  if (std::gcd(m, k) != 1)
    throw PreconditionError(
        "euclidean chain requires a coprime pair (one branch)");
  ResolutionChain chain;
  chain.m = m;
  chain.k = k;
  long prev = m, cur = k;
  while (cur != 0) {
    ChainStep step;
    step.quotient = prev / cur;
    step.divisor = cur;
    step.remainder = prev % cur;
    step.drop = static_cast<long long>(step.quotient) * cur * cur;
    chain.steps.push_back(step);
    chain.total_drop += step.drop;
    prev = cur;
    cur = step.remainder;
  }
  if (chain.total_drop != static_cast<long long>(m) * k)
    throw PreconditionError("internal: drop total does not telescope to m*k");
  return chain;
}

CharPairCriterion char_pair_abelian(long d, long m, long k) {
  if (d < 1) throw ValidationError("degree must be at least 1");
  CharPairCriterion out;
  out.chain = euclidean_chain(m, k);
  out.abelian = static_cast<long long>(d) * d > static_cast<long long>(m) * k;
  out.caveat = true;
  out.caveat_text =
      "the single-characteristic-pair criterion is reported as stated; it is "
      "known to be too strong for some small degrees, so conclusions drawn "
      "from it carry this caveat";
  return out;
}

CycModule projective_from_affine(const CycModule& m, long degree) {
  if (degree < 1) throw ValidationError("degree must be at least 1");
  if (!m.is_torsion()) throw NotTorsionError(m.free_rank());
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c[0] = -1;
  c[static_cast<std::size_t>(degree)] = 1;
  return covariants_mod(m, LaurentPoly(std::move(c), 0));
}

}  // namespace alexandria
