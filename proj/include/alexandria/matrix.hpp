#pragma once

#include <cstddef>
#include <vector>

#include "alexandria/laurent.hpp"

namespace alexandria {

// Dense matrix over the Laurent ring. Zero rows are allowed (a presentation
// with no relations); the column count must be positive.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols);
  static LaurentMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  LaurentPoly& at(std::size_t i, std::size_t j);
  const LaurentPoly& at(std::size_t i, std::size_t j) const;

  LaurentMatrix operator*(const LaurentMatrix& rhs) const;
  LaurentMatrix operator-(const LaurentMatrix& rhs) const;
  bool operator==(const LaurentMatrix& rhs) const;

  LaurentMatrix minus_identity() const;  // square only
  LaurentMatrix eval_one() const;        // substitute t = 1

  // Fraction-free elimination (Bareiss); square only.
  LaurentPoly determinant() const;

  static LaurentMatrix vstack(const LaurentMatrix& top,
                              const LaurentMatrix& bottom);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> a_;
};

}  // namespace alexandria
