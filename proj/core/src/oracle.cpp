#include "conehodge/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "conehodge/bott.hpp"

namespace conehodge {

namespace {

int popcount(unsigned mask) { return __builtin_popcount(mask); }

// Enumerates nonnegative integer vectors of length len summing to total.
void enumerate_compositions(int len, std::int64_t total,
                            std::vector<int>& scratch,
                            std::vector<std::vector<int>>& out) {
  if (total < 0) return;
  if (static_cast<int>(scratch.size()) == len - 1) {
    scratch.push_back(static_cast<int>(total));
    out.push_back(scratch);
    scratch.pop_back();
    return;
  }
  for (std::int64_t x = 0; x <= total; ++x) {
    scratch.push_back(static_cast<int>(x));
    enumerate_compositions(len, total - x, scratch, out);
    scratch.pop_back();
  }
}

std::vector<std::vector<int>> nonnegative_vectors(int len, std::int64_t total) {
  std::vector<std::vector<int>> out;
  std::vector<int> scratch;
  enumerate_compositions(len, total, scratch, out);
  return out;
}

int koszul_sign(unsigned s_mask, int i) {
  // (-1)^{#{s in S : s < i}}
  unsigned below = s_mask & ((1u << i) - 1u);
  return (popcount(below) % 2 == 0) ? 1 : -1;
}

int cech_sign(unsigned i_mask, int t) {
  // position of t in the sorted I u {t}
  unsigned below = i_mask & ((1u << t) - 1u);
  return (popcount(below) % 2 == 0) ? 1 : -1;
}

void check_budget(int n, std::int64_t m, const OracleBudget& budget) {
  if (n < 0) throw error("oracle: n must be >= 0");
  if (n > budget.max_n || std::abs(m) > budget.max_abs_m) {
    throw error("oracle: budget exceeded (n = " + std::to_string(n) +
                ", m = " + std::to_string(m) + "; limits n <= " +
                std::to_string(budget.max_n) + ", |m| <= " + std::to_string(budget.max_abs_m) + ")");
  }
}

}  // namespace

std::vector<std::int64_t> line_bundle_cohomology(int n, std::int64_t k) {
  if (n < 0) throw error("line_bundle_cohomology: n must be >= 0");
  std::vector<std::int64_t> h(n + 1, 0);

  // u >= 0, |u| = k
  if (k >= 0) h[0] = static_cast<std::int64_t>(nonnegative_vectors(n + 1, k).size());
  // u <= -1, |u| = k: substitute u = -1 - w with w >= 0
  std::int64_t wsum = -k - (n + 1);
  if (wsum >= 0) h[n] += static_cast<std::int64_t>(nonnegative_vectors(n + 1, wsum).size());

  const std::int64_t h0 = (k >= 0) ? to_int64(binomial(n + k, n)) : 0;
  const std::int64_t hn = (k <= -n - 1) ? to_int64(binomial(-k - 1, n)) : 0;
  // For n = 0 both classifications land in the single slot h[0].
  const bool ok = (n == 0) ? (h[0] == h0 + hn) : (h[0] == h0 && h[n] == hn);
  if (!ok) throw error("line_bundle_cohomology: binomial postcondition failed");
  return h;
}

std::vector<std::vector<int>> relevant_multidegrees(int n, int p, std::int64_t m) {
  std::set<std::vector<int>> seen;
  for (int j = 0; j <= p; ++j) {
    for (unsigned s_mask = 0; s_mask < (1u << (n + 1)); ++s_mask) {
      if (popcount(s_mask) != j) continue;
      // v = u + e_S over admissible exponent classes of column j
      const std::int64_t usum = m - j;
      if (usum >= 0) {
        for (const auto& u : nonnegative_vectors(n + 1, usum)) {
          std::vector<int> v = u;
          for (int t = 0; t <= n; ++t) {
            if (s_mask & (1u << t)) ++v[t];
          }
          seen.insert(v);
        }
      }
      const std::int64_t wsum = -usum - (n + 1);
      if (wsum >= 0) {
        for (const auto& w : nonnegative_vectors(n + 1, wsum)) {
          std::vector<int> v(n + 1);
          for (int t = 0; t <= n; ++t) v[t] = -1 - w[t];
          for (int t = 0; t <= n; ++t) {
            if (s_mask & (1u << t)) ++v[t];
          }
          seen.insert(v);
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

OracleComplex OracleComplex::assemble(int n, int p, std::int64_t m, const std::vector<int>& v) {
  if (p < 0 || p > n) throw error("oracle: p out of range");
  if (static_cast<int>(v.size()) != n + 1) throw error("oracle: multidegree length mismatch");

  OracleComplex cx;
  cx.n_ = n;
  cx.p_ = p;
  cx.m_ = m;
  cx.v_ = v;

  // Cells: (S, I) with u = v - e_S admissible over I.
  for (unsigned s_mask = 0; s_mask < (1u << (n + 1)); ++s_mask) {
    const int j = popcount(s_mask);
    if (j > p) continue;
    const int col = p - j;
    std::vector<int> u = v;
    for (int t = 0; t <= n; ++t) {
      if (s_mask & (1u << t)) --u[t];
    }
    for (unsigned i_mask = 1; i_mask < (1u << (n + 1)); ++i_mask) {
      bool ok = true;
      for (int t = 0; t <= n && ok; ++t) {
        if (!(i_mask & (1u << t)) && u[t] < 0) ok = false;
      }
      if (!ok) continue;
      const int row = popcount(i_mask) - 1;
      const CellId id{col, row};
      cx.index_[id][{s_mask, i_mask}] = static_cast<int>(cx.cells_[id].size());
      cx.cells_[id].push_back({s_mask, i_mask});
    }
  }

  auto cell_dim = [&](int col, int row) -> std::size_t {
    auto it = cx.cells_.find({col, row});
    return it == cx.cells_.end() ? 0 : it->second.size();
  };

  // Horizontal differential: Koszul contraction with the Euler field.
  for (int col = 0; col <= p; ++col) {
    for (int row = 0; row <= n; ++row) {
      RationalMatrix mat(cell_dim(col + 1, row), cell_dim(col, row));
      if (mat.cols() > 0 && mat.rows() > 0) {
        const auto& basis = cx.cells_.at({col, row});
        const auto& target_index = cx.index_.at({col + 1, row});
        for (std::size_t b = 0; b < basis.size(); ++b) {
          const auto [s_mask, i_mask] = basis[b];
          for (int i = 0; i <= n; ++i) {
            if (!(s_mask & (1u << i))) continue;
            const BasisKey target{s_mask & ~(1u << i), i_mask};
            auto it = target_index.find(target);
            if (it == target_index.end()) {
              throw error("oracle: contraction left the admissible basis");
            }
            mat.at(it->second, b) = koszul_sign(s_mask, i);
          }
        }
      }
      if (mat.rows() > 0 || mat.cols() > 0) cx.d_h_[{col, row}] = std::move(mat);
    }
  }

  // Vertical differential: Cech alternating restriction, with the total
  // complex sign (-1)^col baked in.
  for (int col = 0; col <= p; ++col) {
    const int colsign = (col % 2 == 0) ? 1 : -1;
    for (int row = 0; row <= n; ++row) {
      RationalMatrix mat(cell_dim(col, row + 1), cell_dim(col, row));
      if (mat.cols() > 0 && mat.rows() > 0) {
        const auto& basis = cx.cells_.at({col, row});
        const auto& target_index = cx.index_.at({col, row + 1});
        for (std::size_t b = 0; b < basis.size(); ++b) {
          const auto [s_mask, i_mask] = basis[b];
          for (int t = 0; t <= n; ++t) {
            if (i_mask & (1u << t)) continue;
            const BasisKey target{s_mask, i_mask | (1u << t)};
            auto it = target_index.find(target);
            if (it == target_index.end()) continue;  // target inadmissible only if source was
            mat.at(it->second, b) = colsign * cech_sign(i_mask, t);
          }
        }
      }
      if (mat.rows() > 0 || mat.cols() > 0) cx.d_v_[{col, row}] = std::move(mat);
    }
  }

  // Internal consistency: both differentials square to zero and
  // anticommute, checked by exact matrix products.
  auto get = [&](const std::map<CellId, RationalMatrix>& store, int col, int row,
                 std::size_t rows, std::size_t cols) -> RationalMatrix {
    auto it = store.find({col, row});
    if (it != store.end()) return it->second;
    return RationalMatrix(rows, cols);
  };
  for (int col = 0; col <= p; ++col) {
    for (int row = 0; row <= n; ++row) {
      const std::size_t d0 = cell_dim(col, row);
      if (d0 == 0) continue;
      const std::size_t dh1 = cell_dim(col + 1, row);
      const std::size_t dh2 = cell_dim(col + 2, row);
      const std::size_t dv1 = cell_dim(col, row + 1);
      const std::size_t dv2 = cell_dim(col, row + 2);
      const std::size_t dhv = cell_dim(col + 1, row + 1);

      auto hh = get(cx.d_h_, col + 1, row, dh2, dh1) * get(cx.d_h_, col, row, dh1, d0);
      if (!hh.is_zero()) throw error("oracle: horizontal d^2 != 0");
      auto vv = get(cx.d_v_, col, row + 1, dv2, dv1) * get(cx.d_v_, col, row, dv1, d0);
      if (!vv.is_zero()) throw error("oracle: vertical d^2 != 0");
      auto vh = get(cx.d_v_, col + 1, row, dhv, dh1) * get(cx.d_h_, col, row, dh1, d0);
      auto hv = get(cx.d_h_, col, row + 1, dhv, dv1) * get(cx.d_v_, col, row, dv1, d0);
      for (std::size_t i = 0; i < dhv; ++i) {
        for (std::size_t jj = 0; jj < d0; ++jj) {
          if (vh.at(i, jj) + hv.at(i, jj) != 0) {
            throw error("oracle: differentials do not anticommute");
          }
        }
      }
    }
  }
  return cx;
}

const std::vector<OracleComplex::BasisKey>& OracleComplex::cell_basis(int col, int row) const {
  static const std::vector<BasisKey> empty;
  auto it = cells_.find({col, row});
  return it == cells_.end() ? empty : it->second;
}

const RationalMatrix& OracleComplex::horizontal(int col, int row) const {
  static const RationalMatrix empty;
  auto it = d_h_.find({col, row});
  return it == d_h_.end() ? empty : it->second;
}

const RationalMatrix& OracleComplex::vertical(int col, int row) const {
  static const RationalMatrix empty;
  auto it = d_v_.find({col, row});
  return it == d_v_.end() ? empty : it->second;
}

std::vector<std::int64_t> OracleComplex::total_cohomology() const {
  const int top = p_ + n_;

  // Offsets of each cell inside the total degree-r space.
  std::vector<std::size_t> total_dim(top + 2, 0);
  std::map<CellId, std::size_t> offset;
  for (int r = 0; r <= top; ++r) {
    std::size_t dim = 0;
    for (int col = 0; col <= p_; ++col) {
      const int row = r - col;
      if (row < 0 || row > n_) continue;
      auto it = cells_.find({col, row});
      if (it == cells_.end()) continue;
      offset[{col, row}] = dim;
      dim += it->second.size();
    }
    total_dim[r] = dim;
  }

  auto total_matrix = [&](int r) -> RationalMatrix {
    RationalMatrix mat(total_dim[r + 1], total_dim[r]);
    if (mat.rows() == 0 || mat.cols() == 0) return mat;
    for (int col = 0; col <= p_; ++col) {
      const int row = r - col;
      if (row < 0 || row > n_) continue;
      auto src = cells_.find({col, row});
      if (src == cells_.end() || src->second.empty()) continue;
      const std::size_t src_off = offset.at({col, row});
      auto place = [&](const RationalMatrix& block, int tcol, int trow) {
        if (block.rows() == 0 || block.cols() == 0) return;
        const std::size_t dst_off = offset.at({tcol, trow});
        for (std::size_t i = 0; i < block.rows(); ++i) {
          for (std::size_t j = 0; j < block.cols(); ++j) {
            mat.at(dst_off + i, src_off + j) = block.at(i, j);
          }
        }
      };
      auto h = d_h_.find({col, row});
      if (h != d_h_.end() && cells_.count({col + 1, row})) place(h->second, col + 1, row);
      auto v = d_v_.find({col, row});
      if (v != d_v_.end() && cells_.count({col, row + 1})) place(v->second, col, row + 1);
    }
    return mat;
  };

  std::vector<std::size_t> ranks(top + 1, 0);
  for (int r = 0; r <= top; ++r) ranks[r] = exact_rank(total_matrix(r));

  std::vector<std::int64_t> h(top + 1, 0);
  for (int r = 0; r <= top; ++r) {
    const std::size_t below = (r == 0) ? 0 : ranks[r - 1];
    h[r] = static_cast<std::int64_t>(total_dim[r]) - static_cast<std::int64_t>(ranks[r]) -
           static_cast<std::int64_t>(below);
    if (h[r] < 0) throw error("oracle: negative cohomology dimension (rank bookkeeping bug)");
  }
  return h;
}

namespace {

std::vector<std::int64_t> sum_over_multidegrees(int n, int p, std::int64_t m,
                                                const std::vector<std::vector<int>>& degrees) {
  std::vector<std::int64_t> h(n + 1, 0);
  for (const auto& v : degrees) {
    auto cx = OracleComplex::assemble(n, p, m, v);
    auto total = cx.total_cohomology();
    for (int r = 0; r < static_cast<int>(total.size()); ++r) {
      if (r <= n) {
        h[r] += total[r];
      } else if (total[r] != 0) {
        throw error("oracle: cohomology above degree n");
      }
    }
  }
  return h;
}

}  // namespace

std::vector<std::int64_t> oracle_hodge_dimension(int n, int p, std::int64_t m,
                                                 const OracleBudget& budget) {
  check_budget(n, m, budget);
  if (p < 0 || p > n) throw error("oracle: p out of range");
  return sum_over_multidegrees(n, p, m, relevant_multidegrees(n, p, m));
}

std::vector<std::int64_t> oracle_hodge_dimension_boxed(int n, int p, std::int64_t m,
                                                       int box_radius,
                                                       const OracleBudget& budget) {
  check_budget(n, m, budget);
  if (p < 0 || p > n) throw error("oracle: p out of range");
  std::set<std::vector<int>> degrees;
  for (const auto& v : relevant_multidegrees(n, p, m)) degrees.insert(v);

  // Every v with |v| = m inside the box, admissible or not.
  std::vector<int> v(n + 1, -box_radius);
  while (true) {
    std::int64_t sum = 0;
    for (int t = 0; t <= n; ++t) sum += v[t];
    if (sum == m) degrees.insert(v);
    int t = 0;
    while (t <= n && v[t] == box_radius) {
      v[t] = -box_radius;
      ++t;
    }
    if (t > n) break;
    ++v[t];
  }
  return sum_over_multidegrees(n, p, m, {degrees.begin(), degrees.end()});
}

std::int64_t resolution_euler_characteristic(int n, int p, std::int64_t m) {
  std::int64_t chi = 0;
  for (int j = 0; j <= p; ++j) {
    auto h = line_bundle_cohomology(n, m - j);
    std::int64_t chi_line = 0;
    for (int q = 0; q <= n; ++q) chi_line += (q % 2 == 0 ? 1 : -1) * h[q];
    const std::int64_t sign = ((p - j) % 2 == 0) ? 1 : -1;
    chi += sign * to_int64(binomial(n + 1, j)) * chi_line;
  }
  return chi;
}

}  // namespace conehodge
