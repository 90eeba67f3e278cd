#pragma once

#include <cstddef>
#include <vector>

#include "conehodge/rational.hpp"

namespace conehodge {

// Dense matrix over the rationals. Row-major, zero-initialized. Shapes
// with zero rows or columns are legal and represent maps to or from the
// zero space.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const RationalMatrix& other) const = default;

  // this * other (composition: apply other first).
  RationalMatrix operator*(const RationalMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank by fraction-free (Bareiss) elimination. No pivot-size
// heuristics are needed: any nonzero pivot is exact.
std::size_t exact_rank(const RationalMatrix& m);

struct RankProfile {
  std::size_t rank = 0;
  bool injective = false;   // rank == cols
  bool surjective = false;  // rank == rows
};

RankProfile rank_profile(const RationalMatrix& m);

}  // namespace conehodge
