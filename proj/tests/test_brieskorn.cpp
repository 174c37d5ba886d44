#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

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

}  // namespace

TEST_CASE("monodromy polynomials of Brieskorn points") {
  CHECK(brieskorn_charpoly({2, 3}) == P("t^2-t+1"));
  CHECK(brieskorn_charpoly({2, 2}) == P("t-1"));
  CHECK(brieskorn_charpoly({5}) == P("1+t+t^2+t^3+t^4"));
  CHECK(brieskorn_charpoly({2, 2, 2}) == P("t+1"));
  CHECK_THROWS_AS(brieskorn_charpoly({}), ValidationError);
  CHECK_THROWS_AS(brieskorn_charpoly({1, 3}), ValidationError);
}

TEST_CASE("Brieskorn modules are semisimple with the same order") {
  CHECK(brieskorn_module({2, 3}) == cyc({{6, 1}}));
  CHECK(brieskorn_module({2, 2}) == cyc({{1, 1}}));
  CHECK(brieskorn_module({3, 3}) == cyc({{1, 2}, {3, 1}}));
  for (auto exps : std::vector<std::vector<long>>{{2, 3}, {4, 6}, {2, 2, 5}}) {
    CycModule m = brieskorn_module(exps);
    CHECK(m.is_semisimple());
    CHECK(m.order() == brieskorn_charpoly(exps));
  }
}

TEST_CASE("convolution agrees with brute-force enumeration") {
  // every exponent multiset with lcm <= 30 and Milnor number <= 400
  int checked = 0;
  for (long a = 2; a <= 30; ++a)
    for (long b = a; b <= 30; ++b) {
      if (std::lcm(a, b) > 30 || (a - 1) * (b - 1) > 400) continue;
      CHECK(brieskorn_eigenvalue_counts({a, b}) ==
            oracles::brute_force_root_products({a, b}));
      ++checked;
      for (long c = b; c <= 12; ++c) {
        if (std::lcm(std::lcm(a, b), c) > 30 ||
            (a - 1) * (b - 1) * (c - 1) > 400)
          continue;
        CHECK(brieskorn_eigenvalue_counts({a, b, c}) ==
              oracles::brute_force_root_products({a, b, c}));
        ++checked;
      }
    }
  CHECK(checked > 100);
}

TEST_CASE("degree law and permutation symmetry") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> len_dist(1, 4);
  std::uniform_int_distribution<long> exp_dist(2, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> exps;
    long milnor = 1;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      long a = exp_dist(rng);
      if (milnor * (a - 1) > 800) break;
      exps.push_back(a);
      milnor *= (a - 1);
    }
    if (exps.empty()) exps.push_back(exp_dist(rng));
    LaurentPoly delta = brieskorn_charpoly(exps);
    long expected = 1;
    for (long a : exps) expected *= (a - 1);
    CHECK(delta.span() == expected);
    std::shuffle(exps.begin(), exps.end(), rng);
    CHECK(brieskorn_charpoly(exps) == delta);
  }
}

TEST_CASE("torus closed form for coprime pairs") {
  for (long m = 2; m <= 12; ++m)
    for (long k = 2; k <= m; ++k) {
      if (std::gcd(m, k) != 1 || m * k > 60) continue;
      CHECK(brieskorn_charpoly({m, k}) == oracles::torus_polynomial(m, k));
    }
}

TEST_CASE("local polynomials per descriptor kind") {
  CHECK(local_polynomial(CharPairSing{3, 2}) == P("t^2-t+1"));
  CHECK(local_polynomial(CharPairSing{5, 1}).is_one());
  CHECK(local_polynomial(ExplicitPolySing{P("t^4-t^2+1")}) == P("t^4-t^2+1"));
  CHECK(local_polynomial(NodalCuspidalSing{1, 0}) == P("t-1"));
  CHECK(local_polynomial(NodalCuspidalSing{2, 1}) ==
        (P("t-1") * P("t-1") * P("t^2-t+1")).canonical());
  CHECK(local_polynomial(BrieskornSing{{2, 3}}) == P("t^2-t+1"));
  CHECK_THROWS_AS(local_polynomial(CharPairSing{4, 2}), ValidationError);
  CHECK_THROWS_AS(local_polynomial(CharPairSing{2, 3}), ValidationError);
  CHECK_THROWS_AS(local_polynomial(NodalCuspidalSing{-1, 0}), ValidationError);
  CHECK_THROWS_AS(local_polynomial(ExplicitPolySing{LaurentPoly()}),
                  ValidationError);
}

TEST_CASE("nodal-cuspidal expansion") {
  auto pts = expand_points(NodalCuspidalSing{2, 1});
  REQUIRE(pts.size() == 3);
  CHECK(local_polynomial(pts[0]) == P("t-1"));
  CHECK(local_polynomial(pts[2]) == P("t^2-t+1"));
  auto self = expand_points(BrieskornSing{{2, 3}});
  REQUIRE(self.size() == 1);
}

TEST_CASE("the power-sum family") {
  FamilyDescription f = power_sum_family({2, 3});
  CHECK(f.n == 1);
  CHECK(f.degree == 6);
  CHECK(f.singular_count == 6);
  CHECK(f.module == cyc({{6, 1}}));
  CHECK(f.equation_shape == "g_3^2 + g_2^3 = 0");

  f = power_sum_family({2, 2});
  CHECK(f.degree == 4);
  CHECK(f.singular_count == 4);
  CHECK(f.module == cyc({{1, 1}}));

  f = power_sum_family({2, 3, 2, 3});
  CHECK(f.n == 3);
  CHECK(f.degree == 36);
  CHECK(f.singular_count == BigInt(36) * 36 * 36);
  CHECK(f.module == brieskorn_module({2, 3, 2, 3}));

  CHECK_THROWS_AS(power_sum_family({5}), ValidationError);
}

TEST_CASE("family generation never alters the module") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<long> exp_dist(2, 6);
  std::uniform_int_distribution<int> len_dist(2, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> exps;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) exps.push_back(exp_dist(rng));
    long milnor = 1;
    for (long a : exps) milnor *= a - 1;
    if (milnor > 2000) continue;
    FamilyDescription f = power_sum_family(exps);
    CHECK(f.module == brieskorn_module(exps));
  }
}

TEST_CASE("join delegates to the tensor product") {
  CycModule sextic = cyc({{6, 1}});
  JoinResult r = thom_sebastiani_join(sextic, sextic, 6, 6);
  CHECK(r.module == cyc({{1, 2}, {3, 1}}));
  // the (t-1) summands are surfaced, not suppressed
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes.back().find("t-1") != std::string::npos);
  CHECK(r.notes.back().find("t^2+t+1") != std::string::npos);

  // bilinearity over direct sums: nine-cusp input gives three copies
  CycModule nine = direct_sum(direct_sum(sextic, sextic), sextic);
  JoinResult r3 = thom_sebastiani_join(nine, sextic);
  CHECK(r3.module == cyc({{1, 6}, {3, 3}}));

  CHECK(thom_sebastiani_join(sextic, CycModule::zero()).module.is_zero());

  JoinResult warned = thom_sebastiani_join(sextic, sextic, 6, 4);
  bool has_warning = false;
  for (const auto& n : warned.notes)
    if (n.find("warning") != std::string::npos) has_warning = true;
  CHECK(has_warning);
}

TEST_CASE("join is associative on semisimple cyclotomic triples") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<unsigned long> q_dist(1, 15);
  std::uniform_int_distribution<int> n_dist(1, 2);
  auto rand_mod = [&] {
    std::vector<PrimaryComponent> prim;
    int n = n_dist(rng);
    for (int i = 0; i < n; ++i)
      prim.push_back(make_cyclotomic_primary(q_dist(rng), 1));
    return CycModule::torsion(std::move(prim));
  };
  for (int trial = 0; trial < 60; ++trial) {
    CycModule a = rand_mod(), b = rand_mod(), c = rand_mod();
    CycModule left =
        thom_sebastiani_join(thom_sebastiani_join(a, b).module, c).module;
    CycModule right =
        thom_sebastiani_join(a, thom_sebastiani_join(b, c).module).module;
    CHECK(left == right);
  }
}

TEST_CASE("the Milnor cap rejects oversized enumerations") {
  setenv("ALEXANDRIA_MAX_MILNOR", "100", 1);
  CHECK_THROWS_AS(brieskorn_charpoly({102, 2}), ValidationError);
  CHECK(brieskorn_charpoly({101, 2}).span() == 100);
  setenv("ALEXANDRIA_MAX_MILNOR", "bogus", 1);
  CHECK_THROWS_AS(brieskorn_charpoly({2, 3}), ValidationError);
  unsetenv("ALEXANDRIA_MAX_MILNOR");
  CHECK(brieskorn_charpoly({2, 3}) == P("t^2-t+1"));
}
