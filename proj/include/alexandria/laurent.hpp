#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alexandria/errors.hpp"
#include "alexandria/rational.hpp"

namespace alexandria {

// One-variable Laurent polynomial over Q with exact coefficients.
// Coefficients are stored lowest degree first together with the exponent of
// the lowest term; the first and last stored coefficients are nonzero, and
// the zero polynomial stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Rational constant);
  explicit LaurentPoly(long constant);
  LaurentPoly(std::vector<Rational> coeffs, long shift);

  static LaurentPoly one();
  static LaurentPoly t(long exp = 1);
  static LaurentPoly monomial(Rational c, long exp);
  // Signed monomials in t, e.g. "t^2-t+1", "2*t^-1+3", "1/2*t".
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }

  long low_exp() const;
  long high_exp() const;
  // high_exp - low_exp, or -1 for the zero polynomial
  long span() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  long shift() const { return shift_; }
  Rational coeff(long exp) const;
  Rational leading() const;
  bool is_integral() const;
  bool is_monic() const;

  // Representative of the unit orbit {±t^k p}: shift 0, positive leading
  // coefficient. Content is kept.
  LaurentPoly canonical() const;
  // Canonical form scaled to integer coefficients of content 1.
  LaurentPoly primitive() const;
  // Canonical form scaled to leading coefficient 1.
  LaurentPoly monic() const;

  bool unit_equal(const LaurentPoly& other) const;  // equal up to ±t^k
  bool associate(const LaurentPoly& other) const;   // equal up to c·t^k, c in Q*

  Rational eval_one() const;
  LaurentPoly derivative() const;
  LaurentPoly shifted(long k) const;  // multiply by t^k
  LaurentPoly scaled(const Rational& c) const;

  std::string str() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.shift_ == b.shift_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
  long shift_ = 0;
};

// Total order for deterministic containers: by span, then coefficients
// (lowest first), then shift. Returns <0, 0, >0.
int compare(const LaurentPoly& a, const LaurentPoly& b);

struct DivModResult {
  LaurentPoly quot;
  LaurentPoly rem;  // zero, or span(rem) < span(divisor)
};
DivModResult divmod(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a,
                                         const LaurentPoly& b);
// true iff p divides q up to a unit; p must be nonzero
bool divides(const LaurentPoly& p, const LaurentPoly& q);
// Primitive canonical gcd. gcd(p, 0) = primitive(p); gcd(0, 0) is rejected.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& base, unsigned long e);

unsigned long euler_phi(unsigned long q);
// Phi_q: monic, integer coefficients, degree phi(q).
LaurentPoly cyclotomic(unsigned long q);

// (g_i, m_i) with the g_i squarefree, monic and pairwise coprime, and
// f = c · prod g_i^{m_i} for a constant c.
std::vector<std::pair<LaurentPoly, int>> squarefree_decompose(
    const LaurentPoly& f);

struct CyclotomicFactorization {
  std::map<unsigned long, unsigned long> factors;  // q -> multiplicity of Phi_q
  LaurentPoly residual;                            // has no cyclotomic factor
  LaurentPoly reconstruct() const;
};

// Peels off cyclotomic factors by trial division; candidate orders q are
// bounded by phi(q) <= deg of the remaining part. The exact division is
// attempted only after a one-sided test modulo a prime l = 1 (mod q), so
// the result is exact and the scan stays cheap.
CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p);

}  // namespace alexandria
