// Acceptance suite: one line per criterion, exact checks only.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "conehodge/bott.hpp"
#include "conehodge/catalog.hpp"
#include "conehodge/cone.hpp"
#include "conehodge/ktheory.hpp"
#include "conehodge/lcdef.hpp"
#include "conehodge/oracle.hpp"
#include "conehodge/selftest.hpp"

using namespace conehodge;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!note.empty()) std::cout << " [" << note << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. bott_dimension == oracle_hodge_dimension on n in {1, 2}, |m| <= 8.
void criterion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 1; n <= 2 && ok; ++n) {
    for (int p = 0; p <= n && ok; ++p) {
      for (std::int64_t m = -8; m <= 8 && ok; ++m) {
        const auto h = oracle_hodge_dimension(n, p, m);
        for (int q = 0; q <= n; ++q) {
          if (h[q] != bott_dimension(n, p, q, m)) {
            ok = false;
            break;
          }
        }
      }
    }
  }
  std::ostringstream note;
  note << seconds_since(start) << " s";
  report(1, "closed form equals the brute-force oracle on the full box", ok, note.str());
}

// 2. d^2 = 0 on every assembled complex; Serre duality and Betti sums on
// the oracle itself, same box.
void criterion_oracle_structure() {
  bool d2_ok = true;
  bool serre_ok = true;
  bool betti_ok = true;
  for (int n = 1; n <= 2; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (std::int64_t m = -8; m <= 8; ++m) {
        try {
          for (const auto& v : relevant_multidegrees(n, p, m)) {
            OracleComplex::assemble(n, p, m, v);  // throws unless d^2 = 0 and anticommuting
          }
        } catch (const error&) {
          d2_ok = false;
        }
        const auto h = oracle_hodge_dimension(n, p, m);
        const auto dual = oracle_hodge_dimension(n, n - p, -m);
        for (int q = 0; q <= n; ++q) {
          if (h[q] != dual[n - q]) serre_ok = false;
        }
      }
    }
    for (int j = 0; j <= 2 * n; ++j) {
      std::int64_t total = 0;
      for (int p = std::max(0, j - n); p <= std::min(n, j); ++p) {
        total += oracle_hodge_dimension(n, p, 0)[j - p];
      }
      if (total != ((j % 2 == 0) ? 1 : 0)) betti_ok = false;
    }
  }
  report(2, "oracle structural identities (d^2 = 0, Serre duality, Betti sums)",
         d2_ok && serre_ok && betti_ok);
}

// 3. Quadric cone: depths 2, 2, 2 with the stated witnesses; lcdef 0.
void criterion_quadric_cone() {
  const auto desc = catalog_descriptor(parse_selector("P1@2"));
  bool ok = true;
  struct Expected {
    int k, p, q;
    std::int64_t m, value;
  };
  const std::vector<Expected> expected = {
      {0, 0, 1, -1, 1}, {1, 0, 1, -1, 1}, {2, 1, 1, -1, 3}};
  for (const auto& e : expected) {
    const auto depth = depth_at_vertex(desc, e.k);
    if (depth.value != 2 || depth.capped || !depth.witness) {
      ok = false;
      continue;
    }
    const auto& w = depth.witness->obstruction;
    if (depth.witness->failed_d != 2 || w.kind != Obstruction::Kind::NonzeroCell || w.p != e.p ||
        w.q != e.q || w.m != e.m || w.value != e.value) {
      ok = false;
    }
  }
  if (lcdef_cone_depth(desc).c != 0) ok = false;
  report(3, "quadric cone depths (2, 2, 2) with stated witnesses and lcdef 0", ok);
}

// 4. Segre cone: both paths give c = 1; classical with N = 5 reports
// embedded lcd 3.
void criterion_segre() {
  const auto desc = catalog_descriptor(parse_selector("P1xP2@1,1"), /*classical=*/true);
  bool ok = desc.ambient_dim && *desc.ambient_dim == 5;
  ok = ok && lcdef_cone_depth(desc).c == 1;
  ok = ok && lcdef_cone_lefschetz(desc).c == 1;
  const auto classical = lcdef_classical(desc);
  ok = ok && classical.c == 1 && classical.embedded_lcd && *classical.embedded_lcd == 3;
  report(4, "Segre example: both paths c = 1, embedded lcd = 3 in A^6", ok);
}

// 5. Dual-path equality over every catalog descriptor with dim <= 4 and
// polarizations <= 3.
void criterion_dual_path() {
  const auto start = std::chrono::steady_clock::now();
  const auto sweep = selftest_catalog_sweep();
  bool ok = sweep.size() >= 30;
  for (const auto& spec : sweep) {
    const auto desc = catalog_descriptor(spec);
    if (lcdef_cone_depth(desc).c != lcdef_cone_lefschetz(desc).c) {
      ok = false;
      std::cout << "  disagreement at " << spec.selector() << std::endl;
    }
  }
  std::ostringstream note;
  note << sweep.size() << " cases, " << seconds_since(start) << " s";
  report(5, "depth path equals Lefschetz path on the whole catalog sweep", ok, note.str());
}

// 6. Both vanishing audits return zero violations on every sweep table.
void criterion_audits() {
  bool ok = true;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto [table, op] = make_catalog_table(spec);
    if (!dual_nakano_audit(table).findings.empty() || !kan_audit(table).findings.empty()) {
      ok = false;
      std::cout << "  audit findings at " << spec.selector() << std::endl;
    }
  }
  report(6, "dual-Nakano and KAN audits are empty on every catalog table", ok);
}

// 7. K-theory: structural vanishing, the K_-(n+1) tally, and K_0 of the
// rational normal cones.
void criterion_ktheory() {
  bool ok = true;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto desc = catalog_descriptor(spec);
    const int n = desc.base.n;
    for (int l = n + 2; l <= n + 3; ++l) {
      const auto series = k_negative(desc, l);
      if (!series.structurally_empty() || !series.contributions.empty()) ok = false;
    }
    const auto top = k_negative(desc, n + 1);
    const GradedDimension& row = desc.base.entry(0, n);
    std::int64_t direct = 0;
    for (int m = 1; m <= row.window_hi; ++m) direct += row.resolve(m);
    if (!row.pos_tail.identically_zero()) ok = false;
    if (top.window_total() != direct) ok = false;
  }
  for (int d = 1; d <= 5; ++d) {
    const auto desc = catalog_descriptor(CatalogSpec{{1}, {d}, std::nullopt});
    const auto series = k_zero(desc);
    if (series.free_rank != 1 || !series.non_free_part_zero()) ok = false;
  }
  report(7, "K-theory: structural vanishing, K_-(n+1) tally, K_0 of rational normal cones", ok);
}

// 8. Depth condition nestedness over the sweep; byte-identical repeated
// CLI runs.
void criterion_determinism() {
  bool nested = true;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto desc = catalog_descriptor(spec);
    for (int k = 0; k <= desc.dim_z(); ++k) {
      const auto depth = depth_at_vertex(desc, k);
      const int limit = depth.capped ? desc.dim_z() : depth.value - 1;
      for (int e = 1; e <= limit; ++e) {
        if (!depth_condition_holds(desc, k, e)) nested = false;
      }
    }
  }

  bool deterministic = true;
  const std::vector<std::vector<std::string>> commands = {
      {"cone", "lcdef", "--variety", "P1xP2@1,1", "--method", "both", "--no-header"},
      {"cone", "kgroups", "--variety", "P1@2", "--classical", "--no-header"},
      {"catalog", "table", "--variety", "P2@2", "--no-header"},
      {"cone", "dubois", "--variety", "P1@2", "--no-header"},
  };
  for (const auto& argv : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int code1 = cli::run(argv, out1, err1);
    const int code2 = cli::run(argv, out2, err2);
    if (code1 != 0 || code2 != 0 || out1.str() != out2.str()) deterministic = false;
  }
  report(8, "depth conditions nested in d; repeated CLI runs byte-identical",
         nested && deterministic);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_oracle_equivalence();
  criterion_oracle_structure();
  criterion_quadric_cone();
  criterion_segre();
  criterion_dual_path();
  criterion_audits();
  criterion_ktheory();
  criterion_determinism();
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << seconds_since(start) << " s total)" << std::endl;
  return failures == 0 ? 0 : 1;
}
