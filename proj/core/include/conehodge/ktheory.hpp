#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conehodge/table.hpp"

namespace conehodge {

// One window cell of a K-group series: the twisted graded dimension at
// Hodge index i and twist m, together with its (p, q) source in the
// table so the value stays reproducible by resolve_dim.
struct KContribution {
  int i = 0;
  std::int64_t m = 0;
  std::int64_t dim = 0;
  int p = 0;
  int q = 0;
  bool operator==(const KContribution&) const = default;
};

struct KTailLaw {
  int i = 0;
  int p = 0;
  int q = 0;
  Tail tail;  // governs m beyond that cell's window
};

// Multiplicity bound for the Omega^j_{C/Q} piece of the comparison
// between Q-relative and C-relative graded pieces: the C-relative
// dimensions of the (p - j, q) cells over the same index set. When
// every bound vanishes, the C-relative numbers are exact for the
// Q-relative groups as well.
struct KFiltrationBound {
  int j = 0;
  std::int64_t window_total = 0;
  bool certified_zero = false;
};

struct KGradedSeries {
  enum class Kind { Zero, Negative, HigherPiece };
  Kind kind = Kind::Zero;
  int l = 0;        // K_{-l} for Negative; weight l for HigherPiece
  int adams_i = 0;  // Adams eigenspace index for HigherPiece

  std::int64_t free_rank = 0;  // the Z summand (K_0 only)
  int index_lo = 0;            // structural Hodge-index range; empty when lo > hi
  int index_hi = -1;
  std::vector<KContribution> contributions;  // nonzero window cells, ascending (i, m)
  std::vector<KTailLaw> tails;               // per Hodge index
  std::vector<KFiltrationBound> filtration_bounds;
  bool q_relative_exact = false;  // all filtration bounds certified zero
  std::optional<GradedDimension> pic;  // classical K_0 only: dims of R+/R over m >= 1

  std::string label() const;  // "K_0", "K_-2", "K_3^(5)"
  bool structurally_empty() const { return index_lo > index_hi; }
  // True when the window part is empty and every tail certifies zero.
  bool non_free_part_zero() const;
  std::int64_t window_total() const;
};

// K_0(Z) = Z (+) sum over 1 <= i <= n, m >= 1 of dim(i, i, m).
KGradedSeries k_zero(const ConeDescriptor& desc);

// K_{-l}(Z) = sum over 0 <= i <= n-l, m >= 1 of dim(i, l+i, m), l >= 1.
KGradedSeries k_negative(const ConeDescriptor& desc, int l);

// Classical cone: K_0 gains the Picard summand Pic(C(X)) = R+/R with
// graded dimensions dim(0,0,m) - R_m; zero under the
// projective-normality flag.
KGradedSeries k_zero_classical(const ConeDescriptor& desc);

// Adams eigenspace K_l^(i)(Z) for i >= l+2: contributions at Hodge
// index i-1, cells (i-1, i-l-1, m) for m >= 1.
KGradedSeries higher_k_piece(const ConeDescriptor& desc, int l, int i);

}  // namespace conehodge
