#include "conehodge/lcdef.hpp"

#include <algorithm>

namespace conehodge {

namespace {

std::string range_detail(const std::string& what, const std::string& var, int lo, int hi) {
  if (lo > hi) return what + " over the empty range";
  return what + " for " + std::to_string(lo) + " <= " + var + " <= " + std::to_string(hi);
}

// Rank condition on a possibly-missing block. A missing block between
// nonzero spaces leaves the condition indeterminate unless the
// dimensions alone already rule it out.
ConditionVerdict block_condition(const ConeDescriptor& desc, int p, int q, bool need_iso,
                                 std::vector<std::pair<int, int>>* missing) {
  ConditionVerdict verdict;
  verdict.condition = need_iso ? "(d)-iso" : "(d)-inj";
  verdict.detail = "block (" + std::to_string(p) + "," + std::to_string(q) + ")";
  const BlockView view = resolve_block(desc.base, desc.lefschetz, p, q);
  const bool possible = need_iso ? (view.source_dim == view.target_dim)
                                 : (view.source_dim <= view.target_dim);
  if (!possible) {
    verdict.holds = false;
    Obstruction obstruction;
    obstruction.kind = need_iso ? Obstruction::Kind::BlockNotIso : Obstruction::Kind::BlockNotInjective;
    obstruction.p = p;
    obstruction.q = q;
    obstruction.rank = view.rank;
    obstruction.source_dim = view.source_dim;
    obstruction.target_dim = view.target_dim;
    verdict.obstruction = obstruction;
    return verdict;
  }
  if (view.defaulted_nontrivially()) {
    verdict.indeterminate = true;
    verdict.holds = false;
    if (missing) missing->push_back({p, q});
    return verdict;
  }
  const bool ok = need_iso ? view.iso() : view.injective();
  if (!ok) {
    verdict.holds = false;
    Obstruction obstruction;
    obstruction.kind = need_iso ? Obstruction::Kind::BlockNotIso : Obstruction::Kind::BlockNotInjective;
    obstruction.p = p;
    obstruction.q = q;
    obstruction.rank = view.rank;
    obstruction.source_dim = view.source_dim;
    obstruction.target_dim = view.target_dim;
    verdict.obstruction = obstruction;
  }
  return verdict;
}

// Conditions (a), (b), (d) at a fixed candidate c, as verdicts.
std::vector<ConditionVerdict> lefschetz_conditions(const ConeDescriptor& desc, int c,
                                                   std::vector<std::pair<int, int>>* missing) {
  const int n = desc.base.n;
  std::vector<ConditionVerdict> verdicts;

  {
    ConditionVerdict a;
    a.condition = "(a)";
    a.detail = range_detail("dim(0, i, 0) = 0", "i", 1, n - c - 1);
    for (int i = 1; i <= n - c - 1; ++i) {
      const std::int64_t v = desc.base.dim(0, i, 0);
      if (v != 0) {
        a.holds = false;
        Obstruction obstruction;
        obstruction.kind = Obstruction::Kind::NonzeroCell;
        obstruction.p = 0;
        obstruction.q = i;
        obstruction.m = 0;
        obstruction.value = v;
        a.obstruction = obstruction;
        break;
      }
    }
    verdicts.push_back(std::move(a));
  }
  {
    ConditionVerdict b;
    b.condition = "(b)";
    b.detail = range_detail("dim(k, 0, 0) = 0", "k", 1, n - c - 1);
    for (int k = 1; k <= n - c - 1; ++k) {
      const std::int64_t v = desc.base.dim(k, 0, 0);
      if (v != 0) {
        b.holds = false;
        Obstruction obstruction;
        obstruction.kind = Obstruction::Kind::NonzeroCell;
        obstruction.p = k;
        obstruction.q = 0;
        obstruction.m = 0;
        obstruction.value = v;
        b.obstruction = obstruction;
        break;
      }
    }
    verdicts.push_back(std::move(b));
  }
  for (int k = 1; k <= n - c - 2; ++k) {
    for (int i = 0; i <= n - c - k - 2; ++i) {
      verdicts.push_back(block_condition(desc, k - 1, i, /*need_iso=*/true, missing));
    }
    verdicts.push_back(block_condition(desc, k - 1, n - c - k - 1, /*need_iso=*/false, missing));
  }
  return verdicts;
}

enum class Feasibility { Holds, Fails, Indeterminate };

Feasibility summarize(const std::vector<ConditionVerdict>& verdicts) {
  bool indeterminate = false;
  for (const auto& v : verdicts) {
    if (v.indeterminate) {
      indeterminate = true;
    } else if (!v.holds) {
      return Feasibility::Fails;
    }
  }
  return indeterminate ? Feasibility::Indeterminate : Feasibility::Holds;
}

std::vector<FootnoteEntry> footnote_check(const HodgeDuBoisTable& table, int c) {
  std::vector<FootnoteEntry> out;
  const int n = table.n;
  for (int j = 0; j <= n - 1 - c; ++j) {
    FootnoteEntry entry;
    entry.j = j;
    for (int p = std::max(0, j - n); p <= std::min(n, j); ++p) {
      entry.total += table.dim(p, j - p, 0);
    }
    entry.expected = (j % 2 == 0) ? 1 : 0;
    entry.ok = (entry.total == entry.expected);
    out.push_back(entry);
  }
  return out;
}

// Strict re-audit of condition (c): dim(k, i, m) = 0 for m <= -1 and
// i + k <= n - c - 1, instead of trusting the recorded lcdef(X).
std::vector<ConditionVerdict> condition_c_audit(const HodgeDuBoisTable& table, int c) {
  std::vector<ConditionVerdict> verdicts;
  const int n = table.n;
  ConditionVerdict v;
  v.condition = "(c)";
  v.detail = "dim(k, i, m) = 0 for m <= -1, i + k <= " + std::to_string(n - c - 1);
  for (int k = 0; k <= n - c - 1 && v.holds; ++k) {
    for (int i = 0; i + k <= n - c - 1 && v.holds; ++i) {
      std::int64_t m = 0, value = 0;
      if (!table.entry(k, i).vanishes_from(-1, -1, &m, &value)) {
        v.holds = false;
        Obstruction obstruction;
        obstruction.kind = Obstruction::Kind::NonzeroCell;
        obstruction.p = k;
        obstruction.q = i;
        obstruction.m = m;
        obstruction.value = value;
        v.obstruction = obstruction;
      }
    }
  }
  verdicts.push_back(std::move(v));
  return verdicts;
}

}  // namespace

LcdefCertificate lcdef_cone_depth(const ConeDescriptor& desc) {
  LcdefCertificate cert;
  cert.path = LcdefCertificate::Path::Depth;
  cert.depth_evidence = depth_vector(desc);
  const int dim_z = desc.dim_z();

  int c = desc.base.lcdef_x;
  int binding_k = -1;
  for (const auto& entry : cert.depth_evidence->entries) {
    const int contribution = dim_z - entry.k - entry.value;
    if (contribution > c) {
      c = contribution;
      binding_k = entry.k;
    }
  }
  cert.c = std::max(c, 0);
  cert.binding_k = binding_k;
  return cert;
}

LcdefCertificate lcdef_cone_lefschetz(const ConeDescriptor& desc, bool strict) {
  LcdefCertificate cert;
  cert.path = LcdefCertificate::Path::Lefschetz;
  const int n = desc.base.n;

  int first_indeterminate = -1;
  for (int c = desc.base.lcdef_x; c <= n + 1; ++c) {
    std::vector<std::pair<int, int>> missing;
    auto verdicts = lefschetz_conditions(desc, c, &missing);
    const Feasibility feasibility = summarize(verdicts);
    if (feasibility == Feasibility::Indeterminate && first_indeterminate < 0) {
      first_indeterminate = c;
      cert.missing_blocks = missing;
    }
    if (feasibility == Feasibility::Holds) {
      cert.c = c;
      cert.verdicts = std::move(verdicts);
      if (c > desc.base.lcdef_x) {
        std::vector<std::pair<int, int>> prev_missing;
        cert.previous_c_failures = lefschetz_conditions(desc, c - 1, &prev_missing);
      }
      if (strict) {
        auto audit = condition_c_audit(desc.base, c);
        cert.verdicts.insert(cert.verdicts.end(), audit.begin(), audit.end());
      }
      cert.footnote = footnote_check(desc.base, c);
      cert.status = (first_indeterminate >= 0 && first_indeterminate < c)
                        ? LcdefCertificate::Status::Indeterminate
                        : LcdefCertificate::Status::Determined;
      return cert;
    }
  }
  // Unreachable: the ranges are empty at c = n - 1, so the conditions
  // hold vacuously by then.
  throw error("lcdef search did not terminate");
}

LcdefCertificate lcdef_classical(const ConeDescriptor& desc, bool strict) {
  if (!desc.classical) throw error("lcdef_classical: descriptor is not in classical mode");
  if (!desc.ambient_dim) throw error("lcdef_classical: ambient dimension N is required");
  const int n = desc.base.n;
  const int N = *desc.ambient_dim;

  LcdefCertificate cert = lcdef_cone_lefschetz(desc, strict);
  cert.path = LcdefCertificate::Path::Classical;
  cert.embedded_lcd = cert.c + (N - n);

  // Restriction criterion: the smallest c' >= lcdef(X) with
  // sum_{p+q=i} dim(p, q, 0) equal to the Betti numbers of P^N for all
  // i <= n - 1 - c'. Dimension equality decides the map: restriction
  // from P^N is injective on the 1-dimensional even classes in this
  // range.
  auto betti_matches = [&](int i) -> std::pair<bool, std::int64_t> {
    std::int64_t total = 0;
    for (int p = std::max(0, i - n); p <= std::min(n, i); ++p) total += desc.base.dim(p, i - p, 0);
    const std::int64_t expected = (i % 2 == 0) ? 1 : 0;
    return {total == expected, total};
  };
  int restriction_c = desc.base.lcdef_x;
  for (; restriction_c <= n + 1; ++restriction_c) {
    bool all_ok = true;
    for (int i = 0; i <= n - 1 - restriction_c && all_ok; ++i) {
      all_ok = betti_matches(i).first;
    }
    if (all_ok) break;
  }
  cert.restriction_c = restriction_c;
  for (int i = 0; i <= n - 1 - cert.c; ++i) {
    auto [ok, total] = betti_matches(i);
    ConditionVerdict v;
    v.condition = "restriction";
    v.detail = "sum of dim(p, q, 0) over p+q = " + std::to_string(i) + " is " +
               std::to_string(total) + ", P^N has " + std::to_string(i % 2 == 0 ? 1 : 0);
    v.holds = ok;
    cert.verdicts.push_back(std::move(v));
  }
  return cert;
}

std::size_t VanishingAudit::violation_count() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [](const AuditFinding& f) { return f.violation; }));
}

namespace {

// All certified-nonzero cells of the entry on a ray: explicit window
// values plus, for a nonzero polynomial tail, the first nonzero points
// past the window edge (a nonzero tail has infinitely many more).
void collect_ray_nonzeros(const GradedDimension& entry, int p, int q, std::int64_t from,
                          int direction, bool (*severity)(std::int64_t),
                          std::vector<AuditFinding>& out) {
  const std::int64_t begin = direction > 0 ? std::max<std::int64_t>(from, entry.window_lo)
                                           : std::min<std::int64_t>(from, entry.window_hi);
  const std::int64_t end = direction > 0 ? entry.window_hi : entry.window_lo;
  for (std::int64_t m = begin; direction > 0 ? m <= end : m >= end; m += direction) {
    const std::int64_t v = entry.resolve(m);
    if (v != 0) out.push_back({p, q, m, v, severity(m)});
  }
  const Tail& tail = direction > 0 ? entry.pos_tail : entry.neg_tail;
  if (!tail.declared()) {
    throw error("audit: undeclared " + std::string(direction > 0 ? "positive" : "negative") +
                " tail at (p, q) = (" + std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  if (tail.identically_zero()) return;
  std::int64_t m = direction > 0 ? std::max<std::int64_t>(from, entry.window_hi + 1)
                                 : std::min<std::int64_t>(from, entry.window_lo - 1);
  for (int step = 0; step <= tail.poly.degree() + 1; ++step, m += direction) {
    const std::int64_t v = entry.resolve(m);
    if (v != 0) out.push_back({p, q, m, v, severity(m)});
  }
}

}  // namespace

VanishingAudit dual_nakano_audit(const HodgeDuBoisTable& table) {
  VanishingAudit audit;
  audit.name = "dual-nakano";
  const int n = table.n;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (p + q >= n - table.lcdef_x) continue;
      collect_ray_nonzeros(table.entry(p, q), p, q, -1, -1,
                           [](std::int64_t m) { return m == -1; }, audit.findings);
    }
  }
  return audit;
}

VanishingAudit kan_audit(const HodgeDuBoisTable& table) {
  VanishingAudit audit;
  audit.name = "kan";
  const int n = table.n;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (p + q <= n) continue;
      collect_ray_nonzeros(table.entry(p, q), p, q, 1, 1, [](std::int64_t) { return true; },
                           audit.findings);
    }
  }
  return audit;
}

std::string PreDuBoisLevel::display() const {
  if (all) return "all";
  if (level < 0) return "none";
  return std::to_string(level);
}

PreDuBoisLevel pre_p_dubois_level(const ConeDescriptor& desc) {
  PreDuBoisLevel out;
  const int n = desc.base.n;
  for (int j = 0; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      std::int64_t m = 0, value = 0;
      if (!desc.base.entry(j, i).vanishes_from(1, +1, &m, &value)) {
        out.all = false;
        out.level = j - 1;
        Obstruction obstruction;
        obstruction.kind = Obstruction::Kind::NonzeroCell;
        obstruction.p = j;
        obstruction.q = i;
        obstruction.m = m;
        obstruction.value = value;
        out.witness = obstruction;
        return out;
      }
    }
  }
  out.all = true;
  out.level = n;
  return out;
}

}  // namespace conehodge
