// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "alexandria/certify.hpp"
#include "alexandria/json_io.hpp"
#include "alexandria/pencil.hpp"
#include "alexandria/singularities.hpp"
#include "oracles.hpp"

using namespace alexandria;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

CycModule cyc(std::initializer_list<std::pair<unsigned long, long>> parts) {
  std::vector<PrimaryComponent> prim;
  for (const auto& [q, copies] : parts)
    for (long i = 0; i < copies; ++i)
      prim.push_back(make_cyclotomic_primary(q, 1));
  return CycModule::torsion(std::move(prim));
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

#define REQUIRE_TRUE(cond, msg)                  \
  do {                                           \
    if (!(cond)) return Outcome{false, (msg)};   \
  } while (0)

// 1. local polynomial of the (2,3) point
Outcome criterion1() {
  REQUIRE_TRUE(brieskorn_charpoly({2, 3}) == P("t^2-t+1"),
               "charpoly(2,3) != t^2-t+1");
  return {};
}

// 2. convolution vs brute-force enumeration
Outcome criterion2() {
  long tuples = 0;
  std::vector<long> stack;
  std::function<Outcome(long, long, long)> walk = [&](long from, long lcm,
                                                      long milnor) -> Outcome {
    if (!stack.empty()) {
      auto got = brieskorn_eigenvalue_counts(stack);
      auto want = oracles::brute_force_root_products(stack);
      if (got != want) {
        std::ostringstream ss;
        ss << "mismatch at tuple (";
        for (long a : stack) ss << a << ",";
        ss << ")";
        return Outcome{false, ss.str()};
      }
      ++tuples;
    }
    if (stack.size() >= 4) return {};
    for (long a = from; a <= 60; ++a) {
      long l = std::lcm(lcm, a);
      if (l > 60) continue;
      long m = milnor * (a - 1);
      if (m > 2000) continue;
      stack.push_back(a);
      Outcome r = walk(a, l, m);
      stack.pop_back();
      if (!r.pass) return r;
    }
    return {};
  };
  Outcome r = walk(2, 1, 1);
  if (!r.pass) return r;
  // the all-2 family continues past the length cap
  for (int len = 5; len <= 10; ++len) {
    std::vector<long> twos(static_cast<std::size_t>(len), 2);
    REQUIRE_TRUE(brieskorn_eigenvalue_counts(twos) ==
                     oracles::brute_force_root_products(twos),
                 "mismatch on the all-2 tuple");
  }
  return {true, std::to_string(tuples) + " tuples (length <= 4) + all-2 family"};
}

// 3. degree of the characteristic polynomial
Outcome criterion3() {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> len_dist(1, 4);
  std::uniform_int_distribution<long> exp_dist(2, 60);
  for (int trial = 0; trial < 200; ++trial) {
    long cap = trial < 190 ? 800 : 5000;
    std::vector<long> exps;
    long milnor = 1;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      long a = exp_dist(rng);
      if (milnor * (a - 1) > cap) break;
      exps.push_back(a);
      milnor *= (a - 1);
    }
    if (exps.empty()) exps.push_back(2);
    long expected = 1;
    for (long a : exps) expected *= (a - 1);
    REQUIRE_TRUE(brieskorn_charpoly(exps).span() == expected,
                 "degree law violated");
  }
  return {};
}

// 4. torus-knot closed form
Outcome criterion4() {
  int pairs = 0;
  for (long m = 2; m * 2 <= 400; ++m)
    for (long k = 2; k <= m && m * k <= 400; ++k) {
      if (std::gcd(m, k) != 1) continue;
      if (!(brieskorn_charpoly({m, k}) == oracles::torus_polynomial(m, k))) {
        return Outcome{false, "closed form mismatch at (" +
                                  std::to_string(m) + "," +
                                  std::to_string(k) + ")"};
      }
      ++pairs;
    }
  return {true, std::to_string(pairs) + " coprime pairs"};
}

// 5. tensor product against the eigenvalue-product oracle
Outcome criterion5() {
  CycModule t66 = tensor_semisimple(cyc({{6, 1}}), cyc({{6, 1}}));
  REQUIRE_TRUE(t66 == cyc({{1, 2}, {3, 1}}),
               "tensor of two order-6 lines is not (t-1)+(t-1)+(t^2+t+1)");
  REQUIRE_TRUE(t66.order() == (P("t-1") * P("t-1") * P("t^2+t+1")).canonical(),
               "tensor order mismatch");
  {
    auto want =
        oracles::brute_force_tensor_counts({{6, 1}}, {{6, 1}});
    std::map<unsigned long, long> got;
    for (const auto& [q, copies] : t66.eigenvalue_counts())
      got[q] = copies * static_cast<long>(euler_phi(q));
    REQUIRE_TRUE(got == want, "eigenvalue-product oracle disagrees");
  }
  // the join surfaces the (t-1) summands instead of suppressing them
  JoinResult join = thom_sebastiani_join(cyc({{6, 1}}), cyc({{6, 1}}), 6, 6);
  bool notes_discrepancy = false;
  for (const auto& n : join.notes)
    if (n.find("t-1") != std::string::npos &&
        n.find("t^2+t+1") != std::string::npos)
      notes_discrepancy = true;
  REQUIRE_TRUE(notes_discrepancy,
               "join report does not surface the (t-1)-summand discrepancy");
  // dimension multiplicativity on 200 random pairs
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> n_dist(1, 4);
  std::uniform_int_distribution<unsigned long> q_dist(1, 24);
  auto rand_mod = [&] {
    std::vector<PrimaryComponent> prim;
    int n = n_dist(rng);
    for (int i = 0; i < n; ++i)
      prim.push_back(make_cyclotomic_primary(q_dist(rng), 1));
    return CycModule::torsion(std::move(prim));
  };
  for (int trial = 0; trial < 200; ++trial) {
    CycModule a = rand_mod(), b = rand_mod();
    REQUIRE_TRUE(tensor_semisimple(a, b).torsion_dimension() ==
                     a.torsion_dimension() * b.torsion_dimension(),
                 "tensor dimension not multiplicative");
  }
  return {};
}

// 6. the pencil triple
Outcome criterion6() {
  PencilFiber tangency;
  tangency.word = parse_braid_word(2, "1");
  tangency.type = LocalFiberType::Tangency;
  REQUIRE_TRUE(assemble_pencil(2, {tangency, tangency}, 1).is_zero(),
               "conic pencil does not assemble to zero");
  REQUIRE_TRUE(validate_factorization({tangency.word, tangency.word}),
               "conic factorization failed validation");

  PencilFiber node;
  node.word = parse_braid_word(2, "1,1");
  node.type = LocalFiberType::Node;
  REQUIRE_TRUE(assemble_pencil(2, {node}, 1) == cyc({{1, 1}}),
               "two-lines pencil is not (t-1)");
  REQUIRE_TRUE(validate_factorization({node.word}),
               "two-lines factorization failed validation");

  // cuspidal cubic, generic pencil, derived by root tracking: the word
  // product is the full twist
  std::vector<PencilFiber> cubic;
  {
    PencilFiber f;
    f.word = parse_braid_word(3, "2");
    f.type = LocalFiberType::Tangency;
    cubic.push_back(f);
    f = PencilFiber{};
    f.word = parse_braid_word(3, "1,2,-1");
    f.type = LocalFiberType::Tangency;
    f.position = 2;
    f.conjugator = parse_braid_word(3, "1");
    cubic.push_back(f);
    f = PencilFiber{};
    f.word = parse_braid_word(3, "1,1,1");
    f.type = LocalFiberType::Cusp;
    cubic.push_back(f);
    f = PencilFiber{};
    f.word = parse_braid_word(3, "-1,2,1");
    f.type = LocalFiberType::Tangency;
    f.position = 2;
    f.conjugator = parse_braid_word(3, "-1");
    cubic.push_back(f);
  }
  std::vector<BraidWord> words;
  for (const auto& f : cubic) words.push_back(f.word);
  REQUIRE_TRUE(validate_factorization(words),
               "cuspidal cubic factorization failed validation");
  // the stated expectation, kept as stated: the assembled module should be
  // the trefoil-oracle module (Phi_6)
  CycModule assembled = assemble_pencil(3, cubic, 2);
  // cross-check the oracle itself and the cusp-pencil route that realizes it
  auto row = oracles::fox_row_reduced(oracles::cusp_relator(1), 2);
  LaurentMatrix rel(1, 1);
  rel.at(0, 0) = row[0];
  CycModule trefoil_oracle = module_from_presentation(rel);
  REQUIRE_TRUE(trefoil_oracle == cyc({{6, 1}}),
               "free-calculus oracle is not (t^2-t+1)");
  PencilFiber cusp_only;
  cusp_only.word = parse_braid_word(2, "1,1,1");
  cusp_only.type = LocalFiberType::Cusp;
  REQUIRE_TRUE(assemble_pencil(2, {cusp_only}, 1) == trefoil_oracle,
               "cusp pencil does not reproduce the trefoil module");
  if (!(assembled == trefoil_oracle)) {
    return Outcome{
        false,
        "full-twist-validated cuspidal cubic assembles to " +
            module_to_json(assembled).dump() +
            ", not (t^2-t+1): the stated value is unattainable for any "
            "full-twist factorization (the generic-line module is trivial, "
            "matching the characteristic-pair abelianity bound 9 > 6 and the "
            "degree-3 root restriction); the trefoil module arises from the "
            "non-transversal cusp pencil, which is exercised above"};
  }
  return {};
}

// 7. Burau representation suite
Outcome criterion7() {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      LaurentMatrix a = burau_generator(i, n);
      LaurentMatrix b = burau_generator(i + 1, n);
      REQUIRE_TRUE(a * b * a == b * a * b, "braid relation failed");
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j)
        REQUIRE_TRUE(burau_generator(i, n) * burau_generator(j, n) ==
                         burau_generator(j, n) * burau_generator(i, n),
                     "commutation failed");
      REQUIRE_TRUE(burau_generator(i, n) * burau_generator(-i, n) ==
                       LaurentMatrix::identity(static_cast<std::size_t>(n - 1)),
                   "inverse failed");
    }
  }
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    int strands = 2 + trial % 6;
    std::size_t n = static_cast<std::size_t>(strands - 1);
    BraidWord w;
    w.strands = strands;
    std::uniform_int_distribution<int> idx(1, strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    int len = 1 + trial % 12;
    for (int i = 0; i < len; ++i)
      w.letters.push_back(sign(rng) ? idx(rng) : -idx(rng));
    LaurentMatrix at_one = burau_word(w).eval_one();
    LaurentMatrix char_m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        char_m.at(i, j) =
            (i == j ? LaurentPoly::t() : LaurentPoly()) - at_one.at(i, j);
    LaurentPoly lhs = char_m.determinant().canonical();
    std::vector<int> perm(static_cast<std::size_t>(strands));
    for (int i = 0; i < strands; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int letter : w.letters) {
      int i = (letter > 0 ? letter : -letter) - 1;
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(i + 1)]);
    }
    LaurentPoly rhs = LaurentPoly::one();
    std::vector<bool> used(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (used[i]) continue;
      unsigned long len_cycle = 0;
      std::size_t j = i;
      while (!used[j]) {
        used[j] = true;
        j = static_cast<std::size_t>(perm[j]);
        ++len_cycle;
      }
      rhs *= oracles::ip_to_laurent(oracles::ip_tn_minus_1(len_cycle));
    }
    rhs = exact_div(rhs, P("t-1")).canonical();
    REQUIRE_TRUE(lhs == rhs, "t=1 permutation character mismatch");
  }
  return {};
}

// 8. covariants / projective passage
Outcome criterion8() {
  REQUIRE_TRUE(projective_from_affine(cyc({{6, 1}}), 6) == cyc({{6, 1}}),
               "covariants mod t^6-1 altered the order-6 module");
  REQUIRE_TRUE(projective_from_affine(cyc({{6, 1}}), 5).is_zero(),
               "covariants mod t^5-1 did not kill the order-6 module");
  return {};
}

// 9. family orders divide the certificate bounds
Outcome criterion9() {
  for (long a = 2; a <= 6; ++a)
    for (long b = 2; b <= 6; ++b) {
      FamilyDescription f = power_sum_family({a, b});
      GlobalHypersurface h;
      h.n = 1;
      h.degree = f.degree;
      h.transversal_at_infinity = true;
      for (long i = 0; i < f.degree; ++i)
        h.singularities.push_back(BrieskornSing{{a, b}});
      DivisibilityReport rep = divisibility_report(h);
      REQUIRE_TRUE(divides(f.module.order(), rep.product_bound),
                   "family order does not divide the product bound");
    }
  return {};
}

// 10. euclidean chain totals
Outcome criterion10() {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> m_dist(1, 10000);
  int done = 0;
  while (done < 500) {
    long m = m_dist(rng);
    long k = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m));
    if (k > m || std::gcd(m, k) != 1) continue;
    REQUIRE_TRUE(euclidean_chain(m, k).total_drop ==
                     static_cast<long long>(m) * k,
                 "chain total != m*k");
    ++done;
  }
  return {};
}

// 11. curve criteria arithmetic
Outcome criterion11() {
  REQUIRE_TRUE(!nodal_cuspidal_abelian(6, 0, 6),
               "boundary case 36 < 36 must fail");
  REQUIRE_TRUE(nodal_cuspidal_abelian(6, 0, 5), "30 < 36 must hold");
  CharPairCriterion c = char_pair_abelian(3, 3, 2);
  REQUIRE_TRUE(c.abelian, "9 > 6 must hold");
  REQUIRE_TRUE(c.caveat, "caveat flag must be set");
  return {};
}

// 12. certificate soundness on random inputs
Outcome criterion12() {
  std::mt19937 rng(2023);
  std::uniform_int_distribution<int> n_dist(1, 3);
  std::uniform_int_distribution<long> d_dist(1, 8);
  std::uniform_int_distribution<int> count_dist(0, 3);
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> small(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    GlobalHypersurface h;
    h.n = n_dist(rng);
    h.degree = d_dist(rng);
    h.transversal_at_infinity = coin(rng) == 1;
    h.asserts_ample_resolution = coin(rng) == 1;
    h.asserts_h_vanishing = coin(rng) == 1;
    auto random_sing = [&]() -> SingularityDescriptor {
      switch (kind_dist(rng)) {
        case 0: {
          std::uniform_int_distribution<long> e_dist(2, 5);
          return BrieskornSing{{e_dist(rng), e_dist(rng)}};
        }
        case 1: {
          std::uniform_int_distribution<long> m_dist(2, 7);
          long m = m_dist(rng);
          long k = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m));
          while (std::gcd(m, k) != 1 || k > m)
            k = 1 + static_cast<long>(rng() % static_cast<unsigned long>(m));
          return CharPairSing{m, k};
        }
        case 2:
          return NodalCuspidalSing{small(rng), small(rng)};
        default:
          return ExplicitPolySing{cyclotomic(1 + rng() % 10)};
      }
    };
    int affine = count_dist(rng);
    for (int i = 0; i < affine; ++i) h.singularities.push_back(random_sing());
    int inf = count_dist(rng) / 2;
    for (int i = 0; i < inf; ++i)
      h.infinity_singularities.push_back(random_sing());
    if (coin(rng) == 1) {
      LaurentPoly p = LaurentPoly::one();
      for (int i = 0; i < 3; ++i) p *= cyclotomic(1 + rng() % 8);
      h.infinity_poly = p;
    }
    DivisibilityReport rep = divisibility_report(h);
    REQUIRE_TRUE(divides(rep.combined_bound, rep.product_bound),
                 "combined bound does not divide the product bound");
    if (h.transversal_at_infinity) {
      CyclotomicFactorization f = factor_cyclotomic(rep.combined_bound);
      REQUIRE_TRUE(f.residual.is_one(),
                   "transversal report kept a non-cyclotomic factor");
      for (const auto& [q, mult] : f.factors)
        REQUIRE_TRUE(h.degree % static_cast<long>(q) == 0,
                     "transversal report kept an order not dividing d");
    }
    if (vanishing_certificate(h) == CertStatus::Vanishes)
      REQUIRE_TRUE(h.asserts_ample_resolution,
                   "Vanishes emitted without the ampleness assertion");
  }
  return {};
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Entry> entries = {
      {1, "six-cusp sextic local polynomial", criterion1},
      {2, "eigenvalue counts vs brute-force enumeration", criterion2},
      {3, "degree law on random exponent tuples", criterion3},
      {4, "torus-knot closed form", criterion4},
      {5, "tensor product vs eigenvalue oracle", criterion5},
      {6, "pencil triple (conic, two lines, cuspidal cubic)", criterion6},
      {7, "Burau relation and t=1 permutation suite", criterion7},
      {8, "projective covariants passage", criterion8},
      {9, "family orders divide certificate bounds", criterion9},
      {10, "euclidean chain totals", criterion10},
      {11, "curve criteria arithmetic", criterion11},
      {12, "randomized certificate soundness", criterion12},
  };
  int failures = 0;
  for (const auto& e : entries) {
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = Outcome{false, std::string("exception: ") + ex.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << e.number
              << ": " << e.name;
    if (!o.detail.empty()) std::cout << " — " << o.detail;
    std::cout << "\n";
    if (!o.pass) ++failures;
  }
  if (failures > 0)
    std::cout << failures << " criterion(s) failed\n";
  else
    std::cout << "all criteria passed\n";
  return failures == 0 ? 0 : 1;
}
