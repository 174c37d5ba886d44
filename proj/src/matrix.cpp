#include "alexandria/matrix.hpp"

namespace alexandria {

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {
  if (cols == 0) throw ValidationError("matrix must have at least one column");
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

LaurentPoly& LaurentMatrix::at(std::size_t i, std::size_t j) {
  return a_[i * cols_ + j];
}

const LaurentPoly& LaurentMatrix::at(std::size_t i, std::size_t j) const {
  return a_[i * cols_ + j];
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw ValidationError("matrix product dimension mismatch");
  LaurentMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const LaurentPoly& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const LaurentPoly& bkj = rhs.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ValidationError("matrix difference dimension mismatch");
  LaurentMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

LaurentMatrix LaurentMatrix::minus_identity() const {
  if (!is_square())
    throw ValidationError("minus_identity requires a square matrix");
  LaurentMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    out.at(i, i) -= LaurentPoly::one();
  return out;
}

LaurentMatrix LaurentMatrix::eval_one() const {
  LaurentMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = LaurentPoly(a_[i].eval_one());
  return out;
}

LaurentPoly LaurentMatrix::determinant() const {
  if (!is_square())
    throw ValidationError("determinant requires a square matrix");
  std::size_t n = rows_;
  if (n == 0) return LaurentPoly::one();
  std::vector<LaurentPoly> m = a_;
  auto e = [&](std::size_t i, std::size_t j) -> LaurentPoly& {
    return m[i * n + j];
  };
  bool negate = false;
  LaurentPoly prev = LaurentPoly::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (e(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && e(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(e(k, j), e(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        e(i, j) = exact_div(e(k, k) * e(i, j) - e(i, k) * e(k, j), prev);
    prev = e(k, k);
  }
  LaurentPoly det = e(n - 1, n - 1);
  return negate ? -det : det;
}

LaurentMatrix LaurentMatrix::vstack(const LaurentMatrix& top,
                                    const LaurentMatrix& bottom) {
  if (top.cols_ != bottom.cols_)
    throw ValidationError("vstack column mismatch");
  LaurentMatrix out(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) out.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < bottom.cols_; ++j)
      out.at(top.rows_ + i, j) = bottom.at(i, j);
  return out;
}

}  // namespace alexandria
