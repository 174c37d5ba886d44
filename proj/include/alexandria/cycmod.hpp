#pragma once

#include <map>
#include <optional>
#include <vector>

#include "alexandria/laurent.hpp"
#include "alexandria/matrix.hpp"

namespace alexandria {

// One cyclic summand Q[t,t^-1]/(p^power) with p monic irreducible.
// Irreducibility is verified structurally for cyclotomic, linear and
// rational-root-free low-degree polynomials; otherwise it is taken on the
// caller's word and flagged.
struct PrimaryComponent {
  LaurentPoly p;
  long power = 1;
  std::optional<unsigned long> cyclotomic_order;
  bool irreducibility_asserted = false;

  long dimension() const { return power * p.span(); }
};

PrimaryComponent make_primary(const LaurentPoly& p, long power);
PrimaryComponent make_cyclotomic_primary(unsigned long q, long power);
bool operator==(const PrimaryComponent& a, const PrimaryComponent& b);

// Finitely generated module over Q[t,t^-1]: a free rank plus a multiset of
// primary torsion summands, kept sorted for deterministic output.
class CycModule {
 public:
  CycModule() = default;

  static CycModule zero() { return {}; }
  static CycModule free_module(long rank);
  static CycModule torsion(std::vector<PrimaryComponent> primaries);
  static CycModule make(long free_rank,
                        std::vector<PrimaryComponent> primaries);

  long free_rank() const { return free_rank_; }
  const std::vector<PrimaryComponent>& primaries() const { return primaries_; }
  bool is_zero() const { return free_rank_ == 0 && primaries_.empty(); }
  bool is_torsion() const { return free_rank_ == 0; }
  bool is_semisimple() const;
  bool is_cyclotomic() const;
  long torsion_dimension() const;

  // Product of the p^power over all summands; 1 for the zero module.
  // Torsion modules only.
  LaurentPoly order() const;

  // q -> number of (Phi_q, 1) summands. Semisimple cyclotomic modules only.
  std::map<unsigned long, long> eigenvalue_counts() const;

  friend bool operator==(const CycModule& a, const CycModule& b) {
    return a.free_rank_ == b.free_rank_ && a.primaries_ == b.primaries_;
  }

 private:
  long free_rank_ = 0;
  std::vector<PrimaryComponent> primaries_;
};

CycModule direct_sum(const CycModule& a, const CycModule& b);

// Primary decomposition of Q[t,t^-1]/(f): cyclotomic factors are split off
// exactly, the residual is split squarefree and by rational roots; remaining
// factors are flagged as caller-asserted irreducible.
std::vector<PrimaryComponent> primary_decompose(const LaurentPoly& f);

// m / (f·m), computed summand by summand.
CycModule covariants_mod(const CycModule& m, const LaurentPoly& f);

// Tensor product over Q with t acting diagonally; defined for torsion
// semisimple modules with cyclotomic summands. Computed on eigenvalue
// multisets by residue arithmetic mod lcm of the orders.
CycModule tensor_semisimple(const CycModule& a, const CycModule& b);

// Cokernel of the stacked relation rows acting on the free module of rank
// cols, via diagonalization by row and column operations with polynomial
// division. Pivots take a minimal-span nonzero entry, ties broken by lowest
// row then column index.
CycModule module_from_presentation(const LaurentMatrix& relations);

std::vector<LaurentPoly> diagonalize_presentation(
    std::vector<std::vector<LaurentPoly>> rows, std::size_t cols);

}  // namespace alexandria
