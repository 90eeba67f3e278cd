#include "doctest.h"

#include <random>

#include "conehodge/matrix.hpp"
#include "conehodge/polynomial.hpp"

using namespace conehodge;

TEST_CASE("rational round trip") {
  CHECK(rational_to_string(rational_from_string("3/4")) == "3/4");
  CHECK(rational_to_string(rational_from_string("-7")) == "-7");
  CHECK(rational_to_string(rational_from_string("6/4")) == "3/2");
  CHECK(rational_from_string("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(rational_from_string("1/0"), error);
  CHECK_THROWS_AS(rational_from_string("a"), error);
  CHECK_THROWS_AS(rational_from_string("1.5"), error);
  CHECK_THROWS_AS(rational_from_string(""), error);
}

TEST_CASE("to_int64 guards") {
  CHECK(to_int64(Rational(41)) == 41);
  CHECK_THROWS_AS(to_int64(Rational(1, 2)), error);
  BigInt huge = 1;
  for (int i = 0; i < 9; ++i) huge *= 1000000000;
  CHECK_THROWS_AS(to_int64(huge), error);
}

TEST_CASE("polynomial evaluation and arithmetic") {
  // (2m + 1)(m - 3)
  const Polynomial p = Polynomial::linear(2, 1) * Polynomial::linear(1, -3);
  CHECK(p.eval_at(3) == 0);
  CHECK(p.eval_at(0) == -3);
  CHECK(p.eval_at(5) == 22);
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((p + p).eval_at(5) == 44);
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
}

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("exact rank on hand matrices") {
  CHECK(exact_rank(from_rows({{1, 1}, {0, 1}})) == 2);
  CHECK(exact_rank(from_rows({{1, 1}})) == 1);
  CHECK(exact_rank(from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})) == 2);
  CHECK(exact_rank(RationalMatrix(0, 3)) == 0);
  CHECK(exact_rank(RationalMatrix(3, 0)) == 0);
  CHECK(exact_rank(from_rows({{0, 0}, {0, 0}})) == 0);

  // A matrix float elimination would misjudge: exact arithmetic keeps
  // the tiny pivot honest.
  RationalMatrix tricky(2, 2);
  tricky.at(0, 0) = Rational(1, 1000000000);
  tricky.at(0, 1) = 1;
  tricky.at(1, 0) = 1;
  tricky.at(1, 1) = Rational(1000000000);
  CHECK(exact_rank(tricky) == 1);
}

TEST_CASE("rank properties on random small matrices") {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> dims(0, 5);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = dims(rng);
    const std::size_t c = dims(rng);
    RationalMatrix m(r, c);
    RationalMatrix transpose(c, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        const int v = entry(rng);
        m.at(i, j) = v;
        transpose.at(j, i) = v;
      }
    }
    const std::size_t rank = exact_rank(m);
    CHECK(rank <= std::min(r, c));
    CHECK(exact_rank(transpose) == rank);
    // Duplicating columns cannot change the rank.
    RationalMatrix doubled(r, 2 * c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        doubled.at(i, j) = m.at(i, j);
        doubled.at(i, c + j) = m.at(i, j);
      }
    }
    CHECK(exact_rank(doubled) == rank);
    // rank(AB) <= min(rank A, rank B) with B = transpose.
    if (c > 0 && r > 0) {
      CHECK(exact_rank(m * transpose) <= rank);
    }
  }
}

TEST_CASE("rank profile conventions on zero-dimensional spaces") {
  const auto empty_source = rank_profile(RationalMatrix(3, 0));
  CHECK(empty_source.rank == 0);
  CHECK(empty_source.injective);
  CHECK_FALSE(empty_source.surjective);
  const auto empty_target = rank_profile(RationalMatrix(0, 3));
  CHECK(empty_target.rank == 0);
  CHECK(empty_target.surjective);
  CHECK_FALSE(empty_target.injective);
}
