#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conehodge/graded.hpp"
#include "conehodge/matrix.hpp"

namespace conehodge {

// Exact rational matrices of the cup-product maps
// H^q(DB^p) -> H^(q+1)(DB^(p+1)) between untwisted graded pieces, keyed
// by (p, q) with 0 <= p, q <= n-1. A missing key is the zero map
// between the recorded spaces; criteria that consult a defaulted block
// flag it in their reports.
struct LefschetzOperator {
  std::map<std::pair<int, int>, RationalMatrix> matrices;
  bool operator==(const LefschetzOperator&) const = default;
};

// The full graded Hodge-Du Bois data of one polarized variety (X, L):
// entries[(p, q)](m) = dim H^q(X, DB_X^p ox L^m).
struct HodgeDuBoisTable {
  std::string name;
  int n = 0;  // dim X
  bool smooth = false;
  bool seminormal = false;
  int lcdef_x = 0;
  std::map<std::pair<int, int>, GradedDimension> entries;
  std::optional<std::vector<std::int64_t>> betti;       // b_0..b_2n
  std::optional<GradedDimension> coordinate_ring;       // dim R_m, m >= 0

  bool operator==(const HodgeDuBoisTable&) const = default;

  const GradedDimension& entry(int p, int q) const;

  // dim H^q(X, DB^p ox L^m) with window/tail resolution; p, q must be
  // in range and the governing tail declared.
  std::int64_t dim(int p, int q, std::int64_t m) const;

  // Same, but (p, q) outside [0, n]^2 resolves to 0. Criteria ranging
  // over k = 0..n+1 use this view.
  std::int64_t dim_or_zero(int p, int q, std::int64_t m) const;
};

struct Violation {
  std::string code;     // stable identifier, e.g. "betti-sum"
  std::string path;     // data location, e.g. "hodge[1,1]"
  std::string message;  // human-readable, with the witness spelled out
};

using ValidationReport = std::vector<Violation>;

// Structural identities of the table itself: lcdef range, smoothness
// implications, Serre-duality symmetry for smooth tables, Betti sums
// against the untwisted diagonal, coordinate-ring dominance, and the
// per-entry graded checks. Violations are data, not exceptions.
ValidationReport validate_table(const HodgeDuBoisTable& table);

// Shape checks of an operator against its owning table.
ValidationReport validate_operator(const HodgeDuBoisTable& table, const LefschetzOperator& op);

struct LefschetzRank {
  std::int64_t rank = 0;
  bool injective = false;
  bool surjective = false;
};

// Exact rank over Q of block (p, q), 0 <= p, q <= n-1. Missing blocks
// are zero maps between the recorded spaces; maps from or to the zero
// space report rank 0 with the empty-domain conventions.
LefschetzRank lefschetz_rank(const HodgeDuBoisTable& table, const LefschetzOperator& op, int p,
                             int q);

// View of block (p, q) for 0 <= p, q <= n: when p = n or q = n the
// target space is zero-dimensional and the block is the zero map.
struct BlockView {
  int p = 0;
  int q = 0;
  std::int64_t source_dim = 0;
  std::int64_t target_dim = 0;
  std::int64_t rank = 0;
  bool stored = false;  // false = defaulted to the zero map
  bool injective() const { return rank == source_dim; }
  bool surjective() const { return rank == target_dim; }
  bool iso() const { return injective() && surjective(); }
  // A defaulted block between nonzero spaces is a silent assumption;
  // callers record these in their reports.
  bool defaulted_nontrivially() const { return !stored && source_dim > 0 && target_dim > 0; }
};

BlockView resolve_block(const HodgeDuBoisTable& table, const LefschetzOperator& op, int p, int q);

// Graded hard Lefschetz: along each diagonal p + q = j < n, the
// composite of the n - j consecutive blocks starting at (p, q) has full
// rank min(source, target). Holds for every catalog table; optional for
// user tables.
ValidationReport validate_hard_lefschetz(const HodgeDuBoisTable& table,
                                         const LefschetzOperator& op);

// A polarized table together with what cone is being asked about.
struct ConeDescriptor {
  HodgeDuBoisTable base;
  LefschetzOperator lefschetz;
  bool classical = false;                // classical cone C(X) requested
  std::optional<int> ambient_dim;        // N, for embedded statements
  bool projectively_normal = false;      // asserts R_m = dim(0,0,m)

  int dim_z() const { return base.n + 1; }
};

// Checks the descriptor-level preconditions (classical mode needs a
// coordinate ring or the projective-normality flag).
ConeDescriptor make_descriptor(HodgeDuBoisTable base, LefschetzOperator op, bool classical = false,
                               std::optional<int> ambient_dim = std::nullopt,
                               bool projectively_normal = false);

}  // namespace conehodge
