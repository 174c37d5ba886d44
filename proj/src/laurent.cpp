#include "alexandria/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>

namespace alexandria {

namespace {

Rational rat_zero() { return Rational(0); }

}  // namespace

LaurentPoly::LaurentPoly(Rational constant) {
  if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly::LaurentPoly(std::vector<Rational> coeffs, long shift)
    : coeffs_(std::move(coeffs)), shift_(shift) {
  normalize();
}

LaurentPoly LaurentPoly::one() { return LaurentPoly(1); }

LaurentPoly LaurentPoly::t(long exp) { return monomial(Rational(1), exp); }

LaurentPoly LaurentPoly::monomial(Rational c, long exp) {
  LaurentPoly p;
  if (sgn(c) != 0) {
    p.coeffs_.push_back(std::move(c));
    p.shift_ = exp;
  }
  return p;
}

void LaurentPoly::normalize() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && sgn(coeffs_[lo]) == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    shift_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (hi > lo && sgn(coeffs_[hi - 1]) == 0) --hi;
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<Rational>(coeffs_.begin() + lo, coeffs_.begin() + hi);
    shift_ += static_cast<long>(lo);
  }
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && shift_ == 0 && coeffs_[0] == 1;
}

long LaurentPoly::low_exp() const {
  if (is_zero()) throw PreconditionError("zero polynomial has no exponents");
  return shift_;
}

long LaurentPoly::high_exp() const {
  if (is_zero()) throw PreconditionError("zero polynomial has no exponents");
  return shift_ + static_cast<long>(coeffs_.size()) - 1;
}

long LaurentPoly::span() const {
  return is_zero() ? -1 : static_cast<long>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(long exp) const {
  long idx = exp - shift_;
  if (is_zero() || idx < 0 || idx >= static_cast<long>(coeffs_.size()))
    return rat_zero();
  return coeffs_[static_cast<std::size_t>(idx)];
}

Rational LaurentPoly::leading() const {
  return is_zero() ? rat_zero() : coeffs_.back();
}

bool LaurentPoly::is_integral() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

bool LaurentPoly::is_monic() const {
  return !is_zero() && coeffs_.back() == 1;
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return {};
  LaurentPoly p = *this;
  p.shift_ = 0;
  if (sgn(p.coeffs_.back()) < 0)
    for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::primitive() const {
  if (is_zero()) return {};
  LaurentPoly p = canonical();
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt num_gcd = 0;
  for (const auto& c : p.coeffs_) {
    BigInt scaled_num = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  Rational factor = make_rational(den_lcm, num_gcd);
  for (auto& c : p.coeffs_) c *= factor;
  return p;
}

LaurentPoly LaurentPoly::monic() const {
  if (is_zero()) return {};
  LaurentPoly p = canonical();
  Rational inv = 1 / p.coeffs_.back();
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

bool LaurentPoly::unit_equal(const LaurentPoly& other) const {
  return canonical() == other.canonical();
}

bool LaurentPoly::associate(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return is_zero() == other.is_zero();
  return primitive() == other.primitive();
}

Rational LaurentPoly::eval_one() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::derivative() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.push_back(coeffs_[i] * Rational(shift_ + static_cast<long>(i)));
  return LaurentPoly(std::move(out), shift_ - 1);
}

LaurentPoly LaurentPoly::shifted(long k) const {
  if (is_zero()) return {};
  LaurentPoly p = *this;
  p.shift_ += k;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  long lo = std::min(shift_, rhs.shift_);
  long hi = std::max(high_exp(), rhs.high_exp());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), rat_zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(shift_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(rhs.shift_ - lo) + i] += rhs.coeffs_[i];
  coeffs_ = std::move(out);
  shift_ = lo;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  *this += -rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly out;
  out.shift_ = a.shift_ + b.shift_;
  std::size_t n = a.coeffs_.size(), m = b.coeffs_.size();
  if (a.is_integral() && b.is_integral()) {
    // mpz accumulation avoids per-term rational canonicalization
    std::vector<BigInt> acc(n + m - 1, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
      mpz_srcptr ai = a.coeffs_[i].get_num_mpz_t();
      if (mpz_sgn(ai) == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        mpz_addmul(acc[i + j].get_mpz_t(), ai, b.coeffs_[j].get_num_mpz_t());
    }
    out.coeffs_.reserve(acc.size());
    for (auto& v : acc) out.coeffs_.emplace_back(std::move(v));
  } else {
    std::vector<Rational> acc(n + m - 1, rat_zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        acc[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.coeffs_ = std::move(acc);
  }
  out.normalize();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

int compare(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.span() != b.span()) return a.span() < b.span() ? -1 : 1;
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    int c = cmp(ca[i], cb[i]);
    if (c != 0) return c;
  }
  if (a.shift() != b.shift()) return a.shift() < b.shift() ? -1 : 1;
  return 0;
}

DivModResult divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDivisionError("division by the zero polynomial");
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  // ordinary division after factoring out the lowest powers of t
  long la = a.low_exp(), lb = b.low_exp();
  std::vector<Rational> rem = a.coeffs();
  const std::vector<Rational>& div = b.coeffs();
  long db = static_cast<long>(div.size()) - 1;
  long dr = static_cast<long>(rem.size()) - 1;
  if (dr < db)
    return {LaurentPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(dr - db + 1), rat_zero());
  Rational lead_inv = 1 / div.back();
  for (long k = dr - db; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    if (sgn(c) != 0) {
      quo[static_cast<std::size_t>(k)] = c;
      for (long j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(k + j)] -= c * div[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {LaurentPoly(std::move(quo), la - lb), LaurentPoly(std::move(rem), la)};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  DivModResult d = divmod(a, b);
  if (!d.rem.is_zero())
    throw PreconditionError("exact division has a nonzero remainder");
  return d.quot;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a,
                                         const LaurentPoly& b) {
  DivModResult d = divmod(a, b);
  if (!d.rem.is_zero()) return std::nullopt;
  return d.quot;
}

bool divides(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero())
    throw ZeroDivisionError("divisibility query with zero divisor");
  if (q.is_zero()) return true;
  return divmod(q, p).rem.is_zero();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw ZeroDivisionError("gcd of two zero polynomials");
  LaurentPoly x = a.is_zero() ? LaurentPoly() : a.primitive();
  LaurentPoly y = b.is_zero() ? LaurentPoly() : b.primitive();
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).rem;
    x = std::move(y);
    y = r.is_zero() ? LaurentPoly() : r.primitive();
  }
  return x.primitive();
}

LaurentPoly pow(const LaurentPoly& base, unsigned long e) {
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly sq = base;
  while (e > 0) {
    if (e & 1UL) result *= sq;
    e >>= 1UL;
    if (e > 0) sq *= sq;
  }
  return result;
}

// ---------------------------------------------------------------------------
// text format

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  BigInt read_uint() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start)
      throw ValidationError("polynomial text: expected a number at position " +
                            std::to_string(start));
    return BigInt(std::string(s.substr(start, i - start)), 10);
  }
  long read_int() {
    skip_ws();
    bool neg = eat('-');
    if (!neg) eat('+');
    BigInt v = read_uint();
    if (!v.fits_slong_p())
      throw ValidationError("polynomial text: exponent out of range");
    long x = v.get_si();
    return neg ? -x : x;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Cursor cur{text};
  LaurentPoly acc;
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.eat('-'))
      neg = true;
    else if (cur.eat('+')) {
      if (first)
        throw ValidationError("polynomial text: leading '+' is not allowed");
    } else if (!first) {
      throw ValidationError("polynomial text: expected '+' or '-' between terms");
    }
    Rational c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      BigInt num = cur.read_uint();
      BigInt den = 1;
      if (cur.eat('/')) {
        den = cur.read_uint();
        if (sgn(den) == 0)
          throw ValidationError("polynomial text: zero denominator");
      }
      c = make_rational(num, den);
      have_coeff = true;
    }
    long exp = 0;
    if (cur.eat('*')) {
      if (cur.peek() != 't')
        throw ValidationError("polynomial text: expected 't' after '*'");
    }
    if (cur.peek() == 't') {
      cur.eat('t');
      exp = 1;
      if (cur.eat('^')) exp = cur.read_int();
    } else if (!have_coeff) {
      throw ValidationError("polynomial text: expected a coefficient or 't'");
    }
    if (neg) c = -c;
    acc += monomial(std::move(c), exp);
    first = false;
  }
  if (first) throw ValidationError("polynomial text: empty input");
  return acc;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    long exp = shift_ + static_cast<long>(k);
    bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    Rational mag = neg ? Rational(-c) : c;
    if (exp == 0) {
      out += rational_str(mag);
    } else {
      if (mag != 1) {
        out += rational_str(mag);
        out += '*';
      }
      out += 't';
      if (exp != 1) {
        out += '^';
        out += std::to_string(exp);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// cyclotomic machinery

unsigned long euler_phi(unsigned long q) {
  if (q == 0) throw ValidationError("euler_phi(0)");
  unsigned long result = q;
  unsigned long n = q;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<unsigned long> divisors_of(unsigned long q) {
  std::vector<unsigned long> d;
  for (unsigned long i = 1; i * i <= q; ++i) {
    if (q % i == 0) {
      d.push_back(i);
      if (i != q / i) d.push_back(q / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

LaurentPoly t_power_minus_one(unsigned long n) {
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = -1;
  c[n] = 1;
  return LaurentPoly(std::move(c), 0);
}

std::mutex g_cyclotomic_mutex;
std::map<unsigned long, LaurentPoly> g_cyclotomic_cache;

}  // namespace

LaurentPoly cyclotomic(unsigned long q) {
  if (q == 0) throw ValidationError("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_cyclotomic_mutex);
  auto it = g_cyclotomic_cache.find(q);
  if (it != g_cyclotomic_cache.end()) return it->second;
  for (unsigned long d : divisors_of(q)) {
    if (g_cyclotomic_cache.count(d)) continue;
    LaurentPoly p = t_power_minus_one(d);
    for (unsigned long e : divisors_of(d))
      if (e < d) p = exact_div(p, g_cyclotomic_cache.at(e));
    g_cyclotomic_cache.emplace(d, std::move(p));
  }
  return g_cyclotomic_cache.at(q);
}

// ---------------------------------------------------------------------------
// squarefree decomposition (Yun)

std::vector<std::pair<LaurentPoly, int>> squarefree_decompose(
    const LaurentPoly& f) {
  if (f.is_zero())
    throw ZeroDivisionError("squarefree decomposition of zero");
  std::vector<std::pair<LaurentPoly, int>> out;
  LaurentPoly b = f.monic();
  if (b.span() < 1) return out;
  LaurentPoly fp = b.derivative();
  LaurentPoly a0 = gcd(b, fp).monic();
  b = exact_div(b, a0);
  LaurentPoly c = exact_div(fp, a0);
  LaurentPoly d = c - b.derivative();
  int i = 1;
  while (b.span() > 0) {
    LaurentPoly g = gcd(b, d);
    if (g.span() >= 1) out.emplace_back(g.monic(), i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// cyclotomic factor scan

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1ULL) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1ULL;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  BigInt v(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(v.get_mpz_t(), 30) != 0;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// One-sided divisibility test: if Phi_q divides P over Z then P vanishes at
// every element of order q mod a prime l = 1 (mod q). A nonzero value rules
// the factor out without any exact division.
bool modular_root_check(const std::vector<BigInt>& ints, unsigned long q) {
  u64 l = 0;
  for (u64 k = 1;; ++k) {
    u64 cand = k * static_cast<u64>(q) + 1;
    if (!is_prime_u64(cand)) continue;
    if (mpz_fdiv_ui(ints.back().get_mpz_t(), cand) == 0) continue;
    l = cand;
    break;
  }
  std::vector<u64> qprimes = prime_factors(q);
  u64 zeta = 0;
  for (u64 a = 2;; ++a) {
    u64 z = powmod(a, (l - 1) / q, l);
    if (z == 1) continue;
    bool exact_order = true;
    for (u64 r : qprimes)
      if (powmod(z, q / r, l) == 1) {
        exact_order = false;
        break;
      }
    if (exact_order) {
      zeta = z;
      break;
    }
  }
  u64 value = 0;
  for (std::size_t k = ints.size(); k-- > 0;) {
    value = mulmod(value, zeta, l);
    u64 c = mpz_fdiv_ui(ints[k].get_mpz_t(), l);
    value = (value + c) % l;
  }
  return value == 0;
}

std::vector<BigInt> primitive_ints(const LaurentPoly& p) {
  LaurentPoly prim = p.primitive();
  std::vector<BigInt> out;
  out.reserve(prim.coeffs().size());
  for (const auto& c : prim.coeffs()) out.push_back(c.get_num());
  return out;
}

}  // namespace

LaurentPoly CyclotomicFactorization::reconstruct() const {
  LaurentPoly p = residual;
  for (const auto& [q, m] : factors) p *= pow(cyclotomic(q), m);
  return p.canonical();
}

CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p) {
  if (p.is_zero())
    throw ZeroDivisionError("cyclotomic factorization of the zero polynomial");
  CyclotomicFactorization out;
  LaurentPoly work = p.canonical();
  if (work.span() >= 1) {
    long deg = work.span();
    std::vector<BigInt> ints = primitive_ints(work);
    // q with phi(q) <= deg satisfies q <= 6*deg + 64 in this range
    unsigned long qmax = static_cast<unsigned long>(6 * deg + 64);
    for (unsigned long q = 1; q <= qmax && work.span() >= 1; ++q) {
      unsigned long phi = euler_phi(q);
      if (phi > static_cast<unsigned long>(work.span())) continue;
      if (q > 16 && !modular_root_check(ints, q)) continue;
      const LaurentPoly phi_q = cyclotomic(q);
      bool divided = false;
      while (auto quot = try_exact_div(work, phi_q)) {
        work = quot->canonical();
        ++out.factors[q];
        divided = true;
        if (work.span() < static_cast<long>(phi)) break;
      }
      if (divided && work.span() >= 1) ints = primitive_ints(work);
    }
  }
  out.residual = work.canonical();
  return out;
}

}  // namespace alexandria
