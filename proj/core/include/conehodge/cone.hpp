#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conehodge/table.hpp"

namespace conehodge {

// A single reason a depth or restriction condition fails, auditable
// against the table: either a nonzero graded dimension at a specific
// (p, q, m), or a Lefschetz block missing a required rank property.
struct Obstruction {
  enum class Kind {
    NonzeroCell,        // dim(p, q, m) = value != 0
    NonzeroH0,          // dim(k, 0, 0) != 0
    BlockNotIso,        // block (p, q) must be an isomorphism
    BlockNotInjective,  // block (p, q) must be injective
    BlockNotSurjective  // block (p, q) must be surjective
  };
  Kind kind = Kind::NonzeroCell;
  int p = 0;
  int q = 0;
  std::int64_t m = 0;
  std::int64_t value = 0;       // cell kinds
  std::int64_t rank = 0;        // block kinds
  std::int64_t source_dim = 0;
  std::int64_t target_dim = 0;

  std::string describe() const;
};

// Graded pieces of the global sections of H^i DB_Z^k: the constant
// summand (only at k = i = 0), the m >= 1 part coming from DB_X^k, and
// for k >= 1 the m >= 1 part coming from DB_X^(k-1).
struct ConeRow {
  int i = 0;
  int constant_summand = 0;
  GradedDimension top_part;
  std::optional<GradedDimension> lower_part;

  std::int64_t total_at(std::int64_t m) const;
};

struct ConeDuBoisTable {
  int k = 0;
  int dim_z = 0;
  std::vector<ConeRow> rows;  // i = 0..dim X
};

// The graded table of DB_Z^k per the cone decomposition; k ranges over
// 0..dim Z, with the k = dim Z complex carried entirely by its lower
// part.
ConeDuBoisTable cone_dubois(const ConeDescriptor& desc, int k);

struct RestrictionTest {
  int k = 0;
  int i = 0;
  bool injective = true;  // restriction is injective unconditionally
  bool iso = false;
  std::vector<Obstruction> obstructions;            // empty iff iso
  std::vector<std::pair<int, int>> defaulted_blocks;  // consulted zero-defaults
};

// Whether H^i(Z, DB_Z^k) -> H^i(U, DB_U^k) is an isomorphism, decided
// from twisted vanishing plus rank conditions on the m = 0 Lefschetz
// blocks (U = Z minus the vertex).
RestrictionTest restriction_iso_test(const ConeDescriptor& desc, int k, int i);

struct DepthWitness {
  int failed_d = 0;  // smallest d with "depth > d" false
  Obstruction obstruction;
};

struct DepthValue {
  int k = 0;
  int value = 1;
  bool capped = false;  // true = AtLeast(dim Z + 1), value holds dim Z + 1
  std::optional<DepthWitness> witness;
  std::vector<std::pair<int, int>> defaulted_blocks;

  std::string display() const;  // "3" or ">=4"
};

// Direct evaluation of the "depth > d" condition set; exposed so the
// nestedness of the conditions in d can be re-checked mechanically.
bool depth_condition_holds(const ConeDescriptor& desc, int k, int d,
                           Obstruction* first_failure = nullptr,
                           std::vector<std::pair<int, int>>* defaulted_blocks = nullptr);

// depth_x DB_Z^k at the vertex: the smallest d >= 1 where "depth > d"
// fails, capped at AtLeast(dim Z + 1). Never below 1.
DepthValue depth_at_vertex(const ConeDescriptor& desc, int k);

struct DepthVector {
  int dim_z = 0;
  std::vector<DepthValue> entries;  // k = 0..dim Z
};

DepthVector depth_vector(const ConeDescriptor& desc);

// The cone is seminormal exactly when the base is.
bool cone_seminormal(const ConeDescriptor& desc);

}  // namespace conehodge
