#include "alexandria/cycmod.hpp"

#include <algorithm>
#include <numeric>

namespace alexandria {

namespace {

bool primary_less(const PrimaryComponent& a, const PrimaryComponent& b) {
  int c = compare(a.p, b.p);
  if (c != 0) return c < 0;
  return a.power < b.power;
}

// all q with phi(q) == d lie below 6d + 64 in the ranges handled here
std::optional<unsigned long> recognize_cyclotomic(const LaurentPoly& monic) {
  if (monic.span() < 1 || !monic.is_integral()) return std::nullopt;
  unsigned long d = static_cast<unsigned long>(monic.span());
  for (unsigned long q = 1; q <= 6 * d + 64; ++q) {
    if (euler_phi(q) != d) continue;
    if (cyclotomic(q) == monic) return q;
  }
  return std::nullopt;
}

std::vector<BigInt> bounded_divisors(const BigInt& value) {
  std::vector<BigInt> out;
  BigInt v = abs(value);
  if (sgn(v) == 0 || v > 1000000000000L) return out;
  long n = v.get_si();
  for (long i = 1; static_cast<long long>(i) * i <= n; ++i) {
    if (n % i == 0) {
      out.emplace_back(i);
      if (i != n / i) out.emplace_back(n / i);
    }
  }
  return out;
}

Rational eval_at(const LaurentPoly& p, const Rational& x) {
  // p has shift 0 here
  Rational acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + p.coeffs()[k];
  return acc;
}

struct RootExtraction {
  std::vector<Rational> roots;
  bool complete = true;  // false when divisor enumeration was infeasible
};

// Splits all rational roots off a squarefree shift-0 polynomial; g is
// replaced by the rootless cofactor.
RootExtraction extract_rational_roots(LaurentPoly& g) {
  RootExtraction out;
  LaurentPoly prim = g.primitive();
  if (prim.span() < 1) return out;
  std::vector<BigInt> ps = bounded_divisors(prim.coeffs().front().get_num());
  std::vector<BigInt> qs = bounded_divisors(prim.coeffs().back().get_num());
  if (ps.empty() || qs.empty()) {
    out.complete = false;
    return out;
  }
  for (const BigInt& pn : ps) {
    for (const BigInt& qd : qs) {
      for (int sign : {1, -1}) {
        Rational cand = make_rational(sign * pn, qd);
        while (g.span() >= 1 && sgn(eval_at(g.canonical(), cand)) == 0) {
          out.roots.push_back(cand);
          LaurentPoly lin = LaurentPoly::t() - LaurentPoly(cand);
          g = exact_div(g, lin);
        }
      }
    }
  }
  return out;
}

}  // namespace

PrimaryComponent make_primary(const LaurentPoly& p, long power) {
  if (p.is_zero() || p.span() < 1)
    throw PreconditionError("primary component requires a nonconstant polynomial");
  if (power < 1) throw PreconditionError("primary power must be positive");
  PrimaryComponent c;
  c.p = p.monic();
  c.power = power;
  c.cyclotomic_order = recognize_cyclotomic(c.p);
  if (c.cyclotomic_order || c.p.span() == 1) {
    c.irreducibility_asserted = false;
  } else if (c.p.span() <= 3) {
    // degree 2 or 3: irreducible over Q iff there is no rational root
    LaurentPoly g = c.p;
    RootExtraction r = extract_rational_roots(g);
    if (!r.roots.empty())
      throw PreconditionError(
          "polynomial of a primary component is reducible: " + p.str());
    c.irreducibility_asserted = !r.complete;
  } else {
    c.irreducibility_asserted = true;
  }
  return c;
}

PrimaryComponent make_cyclotomic_primary(unsigned long q, long power) {
  PrimaryComponent c;
  c.p = cyclotomic(q);
  c.power = power;
  c.cyclotomic_order = q;
  c.irreducibility_asserted = false;
  return c;
}

bool operator==(const PrimaryComponent& a, const PrimaryComponent& b) {
  return a.power == b.power && a.p == b.p;
}

CycModule CycModule::free_module(long rank) {
  if (rank < 0) throw PreconditionError("free rank must be non-negative");
  CycModule m;
  m.free_rank_ = rank;
  return m;
}

CycModule CycModule::torsion(std::vector<PrimaryComponent> primaries) {
  return make(0, std::move(primaries));
}

CycModule CycModule::make(long free_rank,
                          std::vector<PrimaryComponent> primaries) {
  if (free_rank < 0) throw PreconditionError("free rank must be non-negative");
  CycModule m;
  m.free_rank_ = free_rank;
  m.primaries_ = std::move(primaries);
  std::sort(m.primaries_.begin(), m.primaries_.end(), primary_less);
  return m;
}

bool CycModule::is_semisimple() const {
  for (const auto& c : primaries_)
    if (c.power != 1) return false;
  return true;
}

bool CycModule::is_cyclotomic() const {
  for (const auto& c : primaries_)
    if (!c.cyclotomic_order) return false;
  return true;
}

long CycModule::torsion_dimension() const {
  long d = 0;
  for (const auto& c : primaries_) d += c.dimension();
  return d;
}

LaurentPoly CycModule::order() const {
  if (free_rank_ != 0) throw NotTorsionError(free_rank_);
  LaurentPoly out = LaurentPoly::one();
  for (const auto& c : primaries_)
    out *= pow(c.p, static_cast<unsigned long>(c.power));
  return out.canonical();
}

std::map<unsigned long, long> CycModule::eigenvalue_counts() const {
  if (free_rank_ != 0) throw NotTorsionError(free_rank_);
  std::map<unsigned long, long> counts;
  for (const auto& c : primaries_) {
    if (c.power != 1 || !c.cyclotomic_order)
      throw UnsupportedError(
          "eigenvalue counts are defined for semisimple cyclotomic modules");
    counts[*c.cyclotomic_order] += 1;
  }
  return counts;
}

CycModule direct_sum(const CycModule& a, const CycModule& b) {
  std::vector<PrimaryComponent> prim = a.primaries();
  prim.insert(prim.end(), b.primaries().begin(), b.primaries().end());
  return CycModule::make(a.free_rank() + b.free_rank(), std::move(prim));
}

std::vector<PrimaryComponent> primary_decompose(const LaurentPoly& f) {
  if (f.is_zero())
    throw ZeroDivisionError("primary decomposition of the zero polynomial");
  std::vector<PrimaryComponent> out;
  CyclotomicFactorization cf = factor_cyclotomic(f);
  for (const auto& [q, m] : cf.factors)
    out.push_back(make_cyclotomic_primary(q, static_cast<long>(m)));
  if (cf.residual.span() >= 1) {
    for (auto& [g, mult] : squarefree_decompose(cf.residual)) {
      LaurentPoly rest = g;
      RootExtraction r = extract_rational_roots(rest);
      for (const Rational& root : r.roots) {
        LaurentPoly lin = LaurentPoly::t() - LaurentPoly(root);
        out.push_back(make_primary(lin, mult));
      }
      if (rest.span() >= 1) {
        PrimaryComponent c;
        c.p = rest.monic();
        c.power = mult;
        c.cyclotomic_order = std::nullopt;
        // rootless degree <= 3 is irreducible over Q
        c.irreducibility_asserted = rest.span() > 3 || !r.complete;
        out.push_back(c);
      }
    }
  }
  return out;
}

CycModule covariants_mod(const CycModule& m, const LaurentPoly& f) {
  if (f.is_zero())
    throw ZeroDivisionError("covariants modulo the zero polynomial");
  std::vector<PrimaryComponent> out;
  for (const auto& c : m.primaries()) {
    long v = 0;
    LaurentPoly rest = f;
    while (auto quot = try_exact_div(rest, c.p)) {
      ++v;
      rest = *quot;
      if (rest.span() < c.p.span()) break;
    }
    long e = std::min(c.power, v);
    if (e >= 1) {
      PrimaryComponent keep = c;
      keep.power = e;
      out.push_back(keep);
    }
  }
  if (m.free_rank() > 0 && f.span() >= 1) {
    std::vector<PrimaryComponent> cyc = primary_decompose(f);
    for (long i = 0; i < m.free_rank(); ++i)
      out.insert(out.end(), cyc.begin(), cyc.end());
  }
  return CycModule::torsion(std::move(out));
}

CycModule tensor_semisimple(const CycModule& a, const CycModule& b) {
  if (a.is_zero() || b.is_zero()) return CycModule::zero();
  if (!a.is_torsion()) throw NotTorsionError(a.free_rank());
  if (!b.is_torsion()) throw NotTorsionError(b.free_rank());
  if (!a.is_semisimple() || !b.is_semisimple())
    throw UnsupportedError("tensor product requires semisimple modules");
  if (!a.is_cyclotomic() || !b.is_cyclotomic())
    throw UnsupportedError("tensor product requires cyclotomic summands");
  std::map<unsigned long, long> ca = a.eigenvalue_counts();
  std::map<unsigned long, long> cb = b.eigenvalue_counts();
  std::map<unsigned long, long> result;
  for (const auto& [qa, ma] : ca) {
    for (const auto& [qb, mb] : cb) {
      unsigned long L = std::lcm(qa, qb);
      std::map<unsigned long, long> tally;
      for (unsigned long i = 0; i < qa; ++i) {
        if (std::gcd(i, qa) != 1) continue;
        for (unsigned long j = 0; j < qb; ++j) {
          if (std::gcd(j, qb) != 1) continue;
          unsigned long r = (i * (L / qa) + j * (L / qb)) % L;
          tally[L / std::gcd(L, r)] += 1;
        }
      }
      for (const auto& [q, cnt] : tally) {
        unsigned long phi = euler_phi(q);
        if (cnt % static_cast<long>(phi) != 0)
          throw PreconditionError("eigenvalue multiset is not Galois stable");
        result[q] += ma * mb * (cnt / static_cast<long>(phi));
      }
    }
  }
  std::vector<PrimaryComponent> prim;
  for (const auto& [q, mult] : result)
    for (long i = 0; i < mult; ++i)
      prim.push_back(make_cyclotomic_primary(q, 1));
  return CycModule::torsion(std::move(prim));
}

std::vector<LaurentPoly> diagonalize_presentation(
    std::vector<std::vector<LaurentPoly>> rows, std::size_t cols) {
  std::vector<LaurentPoly> diag;
  std::size_t r = rows.size();
  std::size_t k = 0;
  while (k < r && k < cols) {
    // minimal-span nonzero pivot; ties by lowest row then column
    std::size_t pi = r, pj = cols;
    long best = -1;
    for (std::size_t i = k; i < r; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const LaurentPoly& e = rows[i][j];
        if (e.is_zero()) continue;
        if (best < 0 || e.span() < best) {
          best = e.span();
          pi = i;
          pj = j;
        }
      }
    if (best < 0) break;
    std::swap(rows[k], rows[pi]);
    if (pj != k)
      for (std::size_t i = 0; i < r; ++i) std::swap(rows[i][k], rows[i][pj]);
    bool clean = true;
    for (std::size_t i = k + 1; i < r && clean; ++i) {
      if (rows[i][k].is_zero()) continue;
      LaurentPoly q = divmod(rows[i][k], rows[k][k]).quot;
      for (std::size_t j = k; j < cols; ++j)
        rows[i][j] -= q * rows[k][j];
      if (!rows[i][k].is_zero()) clean = false;
    }
    if (!clean) continue;  // smaller-span entry appeared; repivot
    for (std::size_t j = k + 1; j < cols && clean; ++j) {
      if (rows[k][j].is_zero()) continue;
      LaurentPoly q = divmod(rows[k][j], rows[k][k]).quot;
      for (std::size_t i = 0; i < r; ++i)
        rows[i][j] -= q * rows[i][k];
      if (!rows[k][j].is_zero()) clean = false;
    }
    if (!clean) continue;
    diag.push_back(rows[k][k]);
    ++k;
  }
  return diag;
}

CycModule module_from_presentation(const LaurentMatrix& relations) {
  std::size_t cols = relations.cols();
  if (cols == 0)
    throw ValidationError("presentation must have at least one column");
  std::vector<std::vector<LaurentPoly>> rows(relations.rows());
  for (std::size_t i = 0; i < relations.rows(); ++i) {
    rows[i].resize(cols);
    for (std::size_t j = 0; j < cols; ++j) rows[i][j] = relations.at(i, j);
  }
  std::vector<LaurentPoly> diag = diagonalize_presentation(std::move(rows), cols);
  long rank = static_cast<long>(diag.size());
  std::vector<PrimaryComponent> prim;
  for (const LaurentPoly& d : diag) {
    if (d.span() < 1) continue;  // unit: trivial summand
    std::vector<PrimaryComponent> parts = primary_decompose(d);
    prim.insert(prim.end(), parts.begin(), parts.end());
  }
  return CycModule::make(static_cast<long>(cols) - rank, std::move(prim));
}

}  // namespace alexandria
