#include "alexandria/singularities.hpp"

#include <cstdlib>
#include <numeric>

namespace alexandria {

namespace {

constexpr long kDefaultMilnorCap = 1000000;
constexpr long kLcmCap = 10000000;

void validate_exponents(const std::vector<long>& exponents) {
  if (exponents.empty())
    throw ValidationError("at least one exponent is required");
  for (long a : exponents)
    if (a < 2) throw ValidationError("exponents must be at least 2");
}

}  // namespace

long max_milnor_cap() {
  if (const char* env = std::getenv("ALEXANDRIA_MAX_MILNOR")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw ValidationError("ALEXANDRIA_MAX_MILNOR must be a positive integer");
  }
  return kDefaultMilnorCap;
}

void validate(const SingularityDescriptor& s) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BrieskornSing>) {
          validate_exponents(v.exponents);
        } else if constexpr (std::is_same_v<T, ExplicitPolySing>) {
          if (v.poly.is_zero())
            throw ValidationError("explicit local polynomial must be nonzero");
        } else if constexpr (std::is_same_v<T, CharPairSing>) {
          if (v.k < 1 || v.m < v.k)
            throw ValidationError("characteristic pair requires 1 <= k <= m");
          if (std::gcd(v.m, v.k) != 1)
            throw ValidationError(
                "characteristic pair must be coprime (one branch)");
        } else if constexpr (std::is_same_v<T, NodalCuspidalSing>) {
          if (v.delta < 0 || v.kappa < 0)
            throw ValidationError("node and cusp counts must be non-negative");
        }
      },
      s);
}

std::map<unsigned long, long> brieskorn_eigenvalue_counts(
    const std::vector<long>& exponents) {
  validate_exponents(exponents);
  long cap = max_milnor_cap();
  long long milnor = 1;
  for (long a : exponents) {
    milnor *= (a - 1);
    if (milnor > cap)
      throw ValidationError(
          "Milnor number exceeds the enumeration cap (ALEXANDRIA_MAX_MILNOR)");
  }
  long long lcm = 1;
  for (long a : exponents) {
    lcm = std::lcm(lcm, static_cast<long long>(a));
    if (lcm > kLcmCap)
      throw ValidationError("least common multiple of the exponents is too large");
  }
  const std::size_t L = static_cast<std::size_t>(lcm);
  // start from the counting measure of nontrivial a_1-th roots of unity
  std::vector<long long> counts(L, 0);
  {
    std::size_t step = L / static_cast<std::size_t>(exponents[0]);
    for (long j = 1; j < exponents[0]; ++j)
      counts[step * static_cast<std::size_t>(j)] = 1;
  }
  // convolve with (uniform on the a-th root subgroup) - (delta at 0):
  // coset sums make each pass linear in L
  for (std::size_t idx = 1; idx < exponents.size(); ++idx) {
    std::size_t a = static_cast<std::size_t>(exponents[idx]);
    std::size_t step = L / a;
    std::vector<long long> coset(step, 0);
    for (std::size_t r = 0; r < L; ++r) coset[r % step] += counts[r];
    for (std::size_t r = 0; r < L; ++r) counts[r] = coset[r % step] - counts[r];
  }
  std::map<unsigned long, long> out;
  long long total = 0;
  for (std::size_t r = 0; r < L; ++r) {
    total += counts[r];
    if (counts[r] < 0)
      throw PreconditionError("internal: negative eigenvalue count");
    if (counts[r] == 0) continue;
    unsigned long q = static_cast<unsigned long>(
        L / std::gcd(static_cast<unsigned long>(L), static_cast<unsigned long>(r)));
    auto [it, inserted] = out.try_emplace(q, counts[r]);
    if (!inserted && it->second != counts[r])
      throw PreconditionError("internal: eigenvalue multiset not Galois stable");
  }
  if (total != milnor)
    throw PreconditionError("internal: eigenvalue count does not match the Milnor number");
  // per-order multiplicity, each primitive root counted once
  return out;
}

LaurentPoly brieskorn_charpoly(const std::vector<long>& exponents) {
  std::map<unsigned long, long> counts = brieskorn_eigenvalue_counts(exponents);
  LaurentPoly out = LaurentPoly::one();
  for (const auto& [q, m] : counts)
    out *= pow(cyclotomic(q), static_cast<unsigned long>(m));
  return out.canonical();
}

CycModule brieskorn_module(const std::vector<long>& exponents) {
  std::map<unsigned long, long> counts = brieskorn_eigenvalue_counts(exponents);
  std::vector<PrimaryComponent> prim;
  for (const auto& [q, m] : counts)
    for (long i = 0; i < m; ++i)
      prim.push_back(make_cyclotomic_primary(q, 1));
  return CycModule::torsion(std::move(prim));
}

CyclotomicFactorization local_polynomial_factored(
    const SingularityDescriptor& s) {
  validate(s);
  CyclotomicFactorization out;
  out.residual = LaurentPoly::one();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BrieskornSing>) {
          for (const auto& [q, m] : brieskorn_eigenvalue_counts(v.exponents))
            out.factors[q] = static_cast<unsigned long>(m);
        } else if constexpr (std::is_same_v<T, ExplicitPolySing>) {
          out = factor_cyclotomic(v.poly);
        } else if constexpr (std::is_same_v<T, CharPairSing>) {
          if (v.k >= 2)
            for (const auto& [q, m] : brieskorn_eigenvalue_counts({v.m, v.k}))
              out.factors[q] = static_cast<unsigned long>(m);
          // k = 1: smooth branch, trivial polynomial
        } else if constexpr (std::is_same_v<T, NodalCuspidalSing>) {
          if (v.delta > 0) out.factors[1] = static_cast<unsigned long>(v.delta);
          if (v.kappa > 0) out.factors[6] = static_cast<unsigned long>(v.kappa);
        }
      },
      s);
  return out;
}

LaurentPoly local_polynomial(const SingularityDescriptor& s) {
  return local_polynomial_factored(s).reconstruct();
}

std::vector<SingularityDescriptor> expand_points(
    const SingularityDescriptor& s) {
  validate(s);
  if (const auto* nc = std::get_if<NodalCuspidalSing>(&s)) {
    std::vector<SingularityDescriptor> out;
    out.reserve(static_cast<std::size_t>(nc->delta + nc->kappa));
    for (long i = 0; i < nc->delta; ++i)
      out.push_back(BrieskornSing{{2, 2}});
    for (long i = 0; i < nc->kappa; ++i)
      out.push_back(BrieskornSing{{2, 3}});
    return out;
  }
  return {s};
}

FamilyDescription power_sum_family(const std::vector<long>& exponents) {
  if (exponents.size() < 2)
    throw ValidationError("the family needs at least two exponents");
  validate_exponents(exponents);
  FamilyDescription f;
  f.exponents = exponents;
  f.n = static_cast<long>(exponents.size()) - 1;
  long long degree = 1;
  for (long a : exponents) {
    degree *= a;
    if (degree > kLcmCap)
      throw ValidationError("family degree is too large");
  }
  f.degree = static_cast<long>(degree);
  BigInt count(static_cast<unsigned long>(f.degree));
  mpz_pow_ui(count.get_mpz_t(), count.get_mpz_t(),
             static_cast<unsigned long>(f.n));
  f.singular_count = count;
  f.local_type = BrieskornSing{exponents};
  f.module = brieskorn_module(exponents);
  std::string eq;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) eq += " + ";
    eq += "g_" + std::to_string(f.degree / exponents[i]) + "^" +
          std::to_string(exponents[i]);
  }
  eq += " = 0";
  f.equation_shape = eq;
  return f;
}

JoinResult thom_sebastiani_join(const CycModule& a, const CycModule& b,
                                std::optional<long> degree_a,
                                std::optional<long> degree_b) {
  JoinResult out;
  if (degree_a && degree_b && *degree_a != *degree_b)
    out.notes.push_back(
        "warning: join inputs have degrees " + std::to_string(*degree_a) +
        " and " + std::to_string(*degree_b) +
        "; the construction assumes a common degree");
  out.module = tensor_semisimple(a, b);
  long ones = 0;
  for (const auto& c : out.module.primaries())
    if (c.cyclotomic_order && *c.cyclotomic_order == 1) ones += c.power;
  if (ones > 0) {
    std::vector<PrimaryComponent> keep;
    for (const auto& c : out.module.primaries())
      if (!(c.cyclotomic_order && *c.cyclotomic_order == 1)) keep.push_back(c);
    CycModule stripped = CycModule::torsion(std::move(keep));
    out.notes.push_back(
        "note: the tensor product contains " + std::to_string(ones) +
        " summand(s) annihilated by t-1; geometric inputs whose order does "
        "not vanish at 1 exclude these, leaving order " +
        stripped.order().str());
  }
  return out;
}

}  // namespace alexandria
