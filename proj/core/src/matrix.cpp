#include "conehodge/matrix.hpp"

namespace conehodge {

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw error("matrix product shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return out;
}

std::size_t exact_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  RationalMatrix w = m;
  Rational prev_pivot(1);
  std::size_t rank = 0;
  std::size_t pivot_row = 0;

  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // First nonzero entry works as a pivot in exact arithmetic.
    std::size_t sel = pivot_row;
    while (sel < rows && w.at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(w.at(sel, j), w.at(pivot_row, j));
    }
    const Rational pivot = w.at(pivot_row, col);
    // Bareiss step: w[i][j] <- (w[i][j]*pivot - w[i][col]*w[p][j]) / prev_pivot.
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        w.at(i, j) = (w.at(i, j) * pivot - w.at(i, col) * w.at(pivot_row, j)) / prev_pivot;
      }
      w.at(i, col) = 0;
    }
    prev_pivot = pivot;
    ++pivot_row;
    ++rank;
  }
  return rank;
}

RankProfile rank_profile(const RationalMatrix& m) {
  RankProfile p;
  p.rank = exact_rank(m);
  p.injective = (p.rank == m.cols());
  p.surjective = (p.rank == m.rows());
  return p;
}

}  // namespace conehodge
