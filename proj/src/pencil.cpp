#include "alexandria/pencil.hpp"

#include <cctype>
#include <cstdlib>

namespace alexandria {

void validate(const BraidWord& w) {
  if (w.strands < 2) throw ValidationError("a braid needs at least 2 strands");
  for (int letter : w.letters) {
    int idx = letter < 0 ? -letter : letter;
    if (idx < 1 || idx > w.strands - 1)
      throw ValidationError("braid letter " + std::to_string(letter) +
                            " out of range for " + std::to_string(w.strands) +
                            " strands");
  }
}

BraidWord parse_braid_word(int strands, std::string_view text) {
  BraidWord w;
  w.strands = strands;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    bool neg = false;
    if (text[i] == '-') {
      neg = true;
      ++i;
    } else if (text[i] == '+') {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) throw ValidationError("braid word: expected an index");
    int v = std::atoi(std::string(text.substr(start, i - start)).c_str());
    w.letters.push_back(neg ? -v : v);
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ',')
        throw ValidationError("braid word: expected ',' between letters");
      ++i;
      skip_ws();
      if (i >= text.size())
        throw ValidationError("braid word: trailing comma");
    }
  }
  validate(w);
  return w;
}

std::string braid_word_str(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  out.letters.reserve(w.letters.size());
  for (std::size_t i = w.letters.size(); i-- > 0;)
    out.letters.push_back(-w.letters[i]);
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw ValidationError("cannot concatenate words on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord full_twist(int strands) {
  BraidWord w;
  w.strands = strands;
  for (int rep = 0; rep < strands; ++rep)
    for (int i = 1; i < strands; ++i) w.letters.push_back(i);
  validate(w);
  return w;
}

LaurentMatrix burau_generator(int letter, int strands) {
  if (strands < 2) throw ValidationError("a braid needs at least 2 strands");
  int i = letter < 0 ? -letter : letter;
  if (letter == 0 || i > strands - 1)
    throw ValidationError("generator index out of range");
  std::size_t n = static_cast<std::size_t>(strands - 1);
  LaurentMatrix m = LaurentMatrix::identity(n);
  // row k holds the image of the basis vector f_{k+1} (row-vector action);
  // s_i sends f_{i-1} -> f_{i-1} + t f_i, f_i -> -t f_i, f_{i+1} -> f_i + f_{i+1}
  std::size_t c = static_cast<std::size_t>(i - 1);
  if (letter > 0) {
    if (c > 0) m.at(c - 1, c) = LaurentPoly::t();
    m.at(c, c) = -LaurentPoly::t();
    if (c + 1 < n) m.at(c + 1, c) = LaurentPoly::one();
  } else {
    if (c > 0) m.at(c - 1, c) = LaurentPoly::one();
    m.at(c, c) = -LaurentPoly::t(-1);
    if (c + 1 < n) m.at(c + 1, c) = LaurentPoly::t(-1);
  }
  return m;
}

LaurentMatrix burau_word(const BraidWord& w) {
  validate(w);
  LaurentMatrix m =
      LaurentMatrix::identity(static_cast<std::size_t>(w.strands - 1));
  for (int letter : w.letters) m = m * burau_generator(letter, w.strands);
  return m;
}

int local_twist_power(LocalFiberType type) {
  switch (type) {
    case LocalFiberType::Tangency:
      return 1;
    case LocalFiberType::Node:
      return 2;
    case LocalFiberType::Cusp:
      return 3;
  }
  throw ValidationError("unknown local fiber type");
}

const char* to_string(LocalFiberType type) {
  switch (type) {
    case LocalFiberType::Tangency:
      return "tangency";
    case LocalFiberType::Node:
      return "node";
    case LocalFiberType::Cusp:
      return "cusp";
  }
  return "unknown";
}

LaurentMatrix degeneration_block(LocalFiberType type, int strands,
                                 int position) {
  if (strands < 2) throw ValidationError("a braid needs at least 2 strands");
  if (position < 1 || position > strands - 1)
    throw ValidationError("degeneration position out of range");
  std::size_t n = static_cast<std::size_t>(strands - 1);
  LaurentMatrix block(1, n);
  LaurentPoly coeff;
  switch (type) {
    case LocalFiberType::Tangency:
      coeff = LaurentPoly::one();
      break;
    case LocalFiberType::Node:
      coeff = LaurentPoly::t() - LaurentPoly::one();
      break;
    case LocalFiberType::Cusp:
      coeff = LaurentPoly::parse("t^2-t+1");
      break;
    default:
      throw ValidationError("unknown local fiber type");
  }
  block.at(0, static_cast<std::size_t>(position - 1)) = coeff;
  return block;
}

namespace {

// the word must consist of k >= 1 copies of one positive generator
std::optional<int> pure_power_position(const BraidWord& w) {
  if (w.letters.empty()) return std::nullopt;
  int first = w.letters.front();
  if (first < 0) return std::nullopt;
  for (int letter : w.letters)
    if (letter != first) return std::nullopt;
  return first;
}

void append_rows(std::vector<std::vector<LaurentPoly>>& rows,
                 const LaurentMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<LaurentPoly> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    rows.push_back(std::move(row));
  }
}

CycModule cokernel_of_rows(std::vector<std::vector<LaurentPoly>> rows,
                           std::size_t cols) {
  LaurentMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = std::move(rows[i][j]);
  return module_from_presentation(m);
}

}  // namespace

CycModule assemble_pencil(int strands, const std::vector<PencilFiber>& fibers,
                          int fiber_rank) {
  if (strands < 2) throw ValidationError("a braid needs at least 2 strands");
  if (fiber_rank != strands - 1)
    throw ValidationError("fiber rank must be strands - 1");
  std::size_t n = static_cast<std::size_t>(fiber_rank);
  std::vector<std::vector<LaurentPoly>> rows;
  for (const PencilFiber& fiber : fibers) {
    validate(fiber.word);
    if (fiber.word.strands != strands)
      throw ValidationError("fiber word strand count mismatch");
    LaurentMatrix gamma = burau_word(fiber.word);
    append_rows(rows, gamma.minus_identity());
    if (fiber.block) {
      if (fiber.type)
        throw ValidationError(
            "a fiber carries either a named local type or an explicit block, "
            "not both");
      if (fiber.block->cols() != n)
        throw ValidationError("explicit degeneration block column mismatch");
      append_rows(rows, *fiber.block);
      continue;
    }
    if (!fiber.type) continue;
    int pos;
    if (fiber.position) {
      pos = *fiber.position;
    } else if (auto inferred = pure_power_position(fiber.word)) {
      pos = *inferred;
    } else {
      throw ValidationError(
          "degeneration position required: the fiber word is not a power of "
          "one generator");
    }
    BraidWord u;
    u.strands = strands;
    if (fiber.conjugator) {
      u = *fiber.conjugator;
      validate(u);
      if (u.strands != strands)
        throw ValidationError("conjugator strand count mismatch");
    }
    // consistency: word = u · s_pos^k · u^{-1} with k set by the type
    BraidWord core;
    core.strands = strands;
    core.letters.assign(
        static_cast<std::size_t>(local_twist_power(*fiber.type)), pos);
    LaurentMatrix expected =
        burau_word(u) * burau_word(core) * burau_word(inverse_word(u));
    if (!(gamma == expected))
      throw ValidationError(
          "fiber word does not match its declared local type at position " +
          std::to_string(pos));
    LaurentMatrix block = degeneration_block(*fiber.type, strands, pos);
    if (!u.letters.empty()) block = block * burau_word(inverse_word(u));
    append_rows(rows, block);
  }
  return cokernel_of_rows(std::move(rows), n);
}

bool validate_factorization(const std::vector<BraidWord>& words) {
  if (words.empty()) throw ValidationError("empty factorization");
  int strands = words.front().strands;
  LaurentMatrix prod =
      LaurentMatrix::identity(static_cast<std::size_t>(strands - 1));
  for (const BraidWord& w : words) {
    validate(w);
    if (w.strands != strands)
      throw ValidationError("factorization mixes strand counts");
    prod = prod * burau_word(w);
  }
  return prod == burau_word(full_twist(strands));
}

CycModule assemble_generic(const std::vector<LaurentMatrix>& monodromies,
                           const std::vector<LaurentMatrix>& degenerations,
                           int fiber_rank) {
  if (fiber_rank < 1) throw ValidationError("fiber rank must be positive");
  std::size_t n = static_cast<std::size_t>(fiber_rank);
  std::vector<std::vector<LaurentPoly>> rows;
  for (const LaurentMatrix& gamma : monodromies) {
    if (!gamma.is_square() || gamma.rows() != n)
      throw ValidationError("monodromy matrix must be square of the fiber rank");
    append_rows(rows, gamma.minus_identity());
  }
  for (const LaurentMatrix& block : degenerations) {
    if (block.cols() != n)
      throw ValidationError("degeneration block column mismatch");
    append_rows(rows, block);
  }
  return cokernel_of_rows(std::move(rows), n);
}

}  // namespace alexandria
