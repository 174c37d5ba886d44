#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alexandria/cycmod.hpp"

namespace alexandria {

struct BraidWord {
  int strands = 2;
  std::vector<int> letters;  // i or -i, 1 <= i <= strands-1; empty = identity
};

void validate(const BraidWord& w);
// comma-separated signed generator indices, e.g. "1,1,1"; "" is the identity
BraidWord parse_braid_word(int strands, std::string_view text);
std::string braid_word_str(const BraidWord& w);
BraidWord inverse_word(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
// (s_1 s_2 ... s_{n-1})^n, the central full twist
BraidWord full_twist(int strands);

// Reduced Burau representation on (strands-1) basis vectors over Z[t,t^-1].
// Conventions, fixed once: words act by left-to-right matrix products, the
// image of s_1 on two strands is the 1x1 matrix (-t), and substituting t = 1
// gives the reduced permutation representation of the underlying permutation.
LaurentMatrix burau_generator(int letter, int strands);
LaurentMatrix burau_word(const BraidWord& w);

enum class LocalFiberType { Tangency, Node, Cusp };
// local braid exponent of the fiber type: 1, 2, 3
int local_twist_power(LocalFiberType type);
const char* to_string(LocalFiberType type);

// Extra relation rows contributed by a singular fiber of the given type at
// the strand pair (position, position+1), written in the reduced basis.
// These are constants derived once from the local relations
//   tangency: x_i = x_{i+1},  node: [x_i, x_{i+1}] = 1,
//   cusp: x_i x_{i+1} x_i = x_{i+1} x_i x_{i+1}
// by free differential calculus with every generator sent to t.
LaurentMatrix degeneration_block(LocalFiberType type, int strands,
                                 int position);

struct PencilFiber {
  BraidWord word;
  std::optional<LocalFiberType> type;
  // strand pair index; inferred when the word is a power of one generator
  std::optional<int> position;
  // u with word = u · s_position^k · u^{-1}; transports the block rows
  std::optional<BraidWord> conjugator;
  // explicit degeneration rows, for local types beyond the three shipped
  std::optional<LaurentMatrix> block;
};

// Stacks (Burau(word) - I) rows and the degeneration rows of every fiber and
// returns the cokernel. fiber_rank must equal strands - 1.
CycModule assemble_pencil(int strands, const std::vector<PencilFiber>& fibers,
                          int fiber_rank);

// True iff the ordered product of the words equals the full twist.
bool validate_factorization(const std::vector<BraidWord>& words);

// Same stacking contract with caller-supplied monodromy matrices and
// degeneration row blocks.
CycModule assemble_generic(const std::vector<LaurentMatrix>& monodromies,
                           const std::vector<LaurentMatrix>& degenerations,
                           int fiber_rank);

}  // namespace alexandria
