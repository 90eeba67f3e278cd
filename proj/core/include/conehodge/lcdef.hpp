#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conehodge/cone.hpp"

namespace conehodge {

struct ConditionVerdict {
  std::string condition;  // "(a)", "(b)", "(d)-iso", "(d)-inj", "(c)", "lcdef_x", "restriction"
  std::string detail;
  bool holds = true;
  bool indeterminate = false;  // hinges on a missing Lefschetz block
  std::optional<Obstruction> obstruction;
};

// Corroboration from the proof's footnote: inside the iso range the
// total cohomology in degree j is 1-dimensional for even j and zero
// for odd j.
struct FootnoteEntry {
  int j = 0;
  std::int64_t total = 0;
  std::int64_t expected = 0;
  bool ok = true;
};

struct LcdefCertificate {
  enum class Path { Depth, Lefschetz, Classical };
  enum class Status { Determined, Indeterminate };

  Path path = Path::Depth;
  Status status = Status::Determined;
  int c = 0;

  // Depth path: the full depth vector and the k that binds the maximum
  // (-1 when the base lcdef bound binds instead).
  std::optional<DepthVector> depth_evidence;
  int binding_k = -1;

  // Lefschetz path: per-condition verdicts at the returned c, plus the
  // failure pattern certifying that c - 1 is infeasible.
  std::vector<ConditionVerdict> verdicts;
  std::vector<ConditionVerdict> previous_c_failures;
  std::vector<std::pair<int, int>> missing_blocks;
  std::vector<FootnoteEntry> footnote;

  // Classical mode only.
  std::optional<int> embedded_lcd;     // c + (N - n)
  std::optional<int> restriction_c;    // c re-derived from the restriction criterion
};

// lcdef(Z) from the vertex depths:
// c = max(lcdef(X), max_k (dim Z - k - depth_k)), with capped depths
// contributing dim Z + 1.
LcdefCertificate lcdef_cone_depth(const ConeDescriptor& desc);

// lcdef(Z) as the smallest c >= lcdef(X) for which the graded
// conditions hold: untwisted edge vanishing (a), (b) and the Lefschetz
// chain condition (d). strict additionally re-audits the twisted
// vanishing (c) from the table instead of trusting lcdef(X).
LcdefCertificate lcdef_cone_lefschetz(const ConeDescriptor& desc, bool strict = false);

// Classical cone: same c (the two cones have equal lcdef), re-expressed
// against the restriction criterion H^i(P^N) -> H^i(X), with the
// embedded local cohomological dimension c + (N - n).
LcdefCertificate lcdef_classical(const ConeDescriptor& desc, bool strict = false);

struct AuditFinding {
  int p = 0;
  int q = 0;
  std::int64_t m = 0;
  std::int64_t value = 0;
  bool violation = false;  // false = informational
};

struct VanishingAudit {
  std::string name;
  std::vector<AuditFinding> findings;
  std::size_t violation_count() const;
};

// Scans H^q(X, DB^p ox L^m) for p + q < n - lcdef(X) and m <= -1.
// Nonzero cells at m = -1 contradict the dual vanishing theorem and are
// violations; deeper twists are reported as informational.
VanishingAudit dual_nakano_audit(const HodgeDuBoisTable& table);

// Scans p + q > n, m >= 1; any nonzero cell contradicts the
// Kodaira-Akizuki-Nakano analogue.
VanishingAudit kan_audit(const HodgeDuBoisTable& table);

struct PreDuBoisLevel {
  bool all = false;   // vanishing holds through j = n
  int level = -1;     // largest p with the vanishing through j <= p; -1 = fails at j = 0
  std::optional<Obstruction> witness;

  std::string display() const;
};

// Largest p such that dim(j, i, m) = 0 for all i >= 1, m >= 1, j <= p.
PreDuBoisLevel pre_p_dubois_level(const ConeDescriptor& desc);

}  // namespace conehodge
