#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "conehodge/matrix.hpp"

namespace conehodge {

// Hard limits for the brute-force path. The double complexes grow fast
// with n; these bounds keep every run at desk scale.
struct OracleBudget {
  int max_n = 3;
  std::int64_t max_abs_m = 12;
};

// h^0..h^n of O(k) on P^n, computed by enumerating monomial multidegrees
// u with |u| = k and classifying them (all entries >= 0 contribute to
// h^0, all entries <= -1 contribute to h^n). The binomial identities
// h^0 = C(n+k, n) and h^n = C(-k-1, n) are asserted as postconditions,
// not used for the computation.
std::vector<std::int64_t> line_bundle_cohomology(int n, std::int64_t k);

// One multidegree slice of the Cech double complex of the Koszul-Euler
// resolution 0 -> Omega^p(m) -> Lambda^p E(m) -> ... -> O(m) -> 0 on P^n,
// where E = O(-1)^(n+1).
//
// A basis element of column j = |S| is (S, I): S picks the exterior
// factor e_S of Lambda^j E, I is the Cech index set of the cover
// {x_t != 0}, and the monomial exponent is u = v - sum_{i in S} e_i
// (so that the contraction e_S ox x^u -> sum +- x_i e_{S\i} ox x^u
// preserves v). Admissibility: u_t >= 0 for every t not in I.
//
// Cells are indexed by (col, row) with col = p - |S| (so the resolution
// starts at col 0) and row = |I| - 1. The stored vertical differential
// carries the sign (-1)^col so that horizontal and vertical strictly
// anticommute and their sum is the total differential.
class OracleComplex {
 public:
  using BasisKey = std::pair<unsigned, unsigned>;  // (S mask, I mask)
  using CellId = std::pair<int, int>;              // (col, row)

  // Builds all cells and differentials and verifies d_h^2 = 0, d_v^2 = 0
  // and d_h d_v + d_v d_h = 0 by exact matrix products; throws
  // conehodge::error with diagnostics on any failure.
  static OracleComplex assemble(int n, int p, std::int64_t m, const std::vector<int>& v);

  int n() const { return n_; }
  int p() const { return p_; }
  std::int64_t m() const { return m_; }
  const std::vector<int>& multidegree() const { return v_; }

  const std::vector<BasisKey>& cell_basis(int col, int row) const;
  const RationalMatrix& horizontal(int col, int row) const;
  const RationalMatrix& vertical(int col, int row) const;

  // Dimensions of the cohomology of the total complex in degrees
  // 0..p+n. Entry q equals the contribution of this multidegree to
  // h^q(P^n, Omega^p(m)).
  std::vector<std::int64_t> total_cohomology() const;

 private:
  OracleComplex() = default;
  int n_ = 0;
  int p_ = 0;
  std::int64_t m_ = 0;
  std::vector<int> v_;
  std::map<CellId, std::vector<BasisKey>> cells_;
  std::map<CellId, std::map<BasisKey, int>> index_;
  std::map<CellId, RationalMatrix> d_h_;  // (col,row) -> (col+1,row)
  std::map<CellId, RationalMatrix> d_v_;  // (col,row) -> (col,row+1), sign baked in
};

// The multidegrees that can carry cohomology: v such that for some
// column j and some S with |S| = j, u = v - e_S is coordinatewise >= 0
// or coordinatewise <= -1. Every other multidegree slice has exact
// Cech columns, hence an exact total complex.
std::vector<std::vector<int>> relevant_multidegrees(int n, int p, std::int64_t m);

// h^0..h^n of Omega^p(m) on P^n by assembling the complexes of every
// relevant multidegree and summing exact total-complex ranks.
std::vector<std::int64_t> oracle_hodge_dimension(int n, int p, std::int64_t m,
                                                 const OracleBudget& budget = {});

// Same computation over the union of the relevant multidegrees and the
// full box {|v_i| <= box_radius, |v| = m}. Exists to demonstrate that
// widening the enumeration never changes the answer.
std::vector<std::int64_t> oracle_hodge_dimension_boxed(int n, int p, std::int64_t m,
                                                       int box_radius,
                                                       const OracleBudget& budget = {});

// Matrix-free cross-check: the alternating sum of the oracle's h^q must
// equal sum_j (-1)^(p-j) C(n+1, j) chi(O(m-j)) with chi taken from
// line_bundle_cohomology.
std::int64_t resolution_euler_characteristic(int n, int p, std::int64_t m);

}  // namespace conehodge
