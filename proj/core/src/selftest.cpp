#include "conehodge/selftest.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "conehodge/bott.hpp"
#include "conehodge/cone.hpp"
#include "conehodge/ktheory.hpp"
#include "conehodge/lcdef.hpp"
#include "conehodge/oracle.hpp"
#include "conehodge/table_io.hpp"

namespace conehodge {

namespace {

using Failures = std::vector<std::string>;

std::string cell_name(int n, int p, int q, std::int64_t m) {
  return "n=" + std::to_string(n) + " (p,q,m)=(" + std::to_string(p) + "," + std::to_string(q) +
         "," + std::to_string(m) + ")";
}

Failures bott_serre_duality() {
  Failures failures;
  for (int n = 0; n <= 3; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        for (std::int64_t k = -12; k <= 12; ++k) {
          if (bott_dimension(n, p, q, k) != bott_dimension(n, n - p, n - q, -k)) {
            failures.push_back("serre asymmetry at " + cell_name(n, p, q, k));
          }
        }
      }
    }
  }
  return failures;
}

Failures bott_betti_sums() {
  Failures failures;
  for (int n = 0; n <= 4; ++n) {
    for (int j = 0; j <= 2 * n; ++j) {
      std::int64_t sum = 0;
      for (int p = std::max(0, j - n); p <= std::min(n, j); ++p) {
        sum += bott_dimension(n, p, j - p, 0);
      }
      const std::int64_t expected = (j % 2 == 0) ? 1 : 0;
      if (sum != expected) {
        failures.push_back("P^" + std::to_string(n) + " betti b_" + std::to_string(j) + " = " +
                           std::to_string(sum));
      }
    }
  }
  return failures;
}

Failures bott_single_branch() {
  Failures failures;
  for (int n = 0; n <= 3; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        for (std::int64_t k = -12; k <= 12; ++k) {
          int firing = 0;
          if (q == 0 && k > p) ++firing;
          if (q == p && k == 0) ++firing;
          if (q == n && k < p - n) ++firing;
          if (firing > 1) failures.push_back("branch overlap at " + cell_name(n, p, q, k));
        }
      }
    }
  }
  return failures;
}

Failures oracle_agreement() {
  Failures failures;
  for (int n = 1; n <= 2; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (std::int64_t m = -8; m <= 8; ++m) {
        const auto h = oracle_hodge_dimension(n, p, m);
        for (int q = 0; q <= n; ++q) {
          if (h[q] != bott_dimension(n, p, q, m)) {
            failures.push_back("oracle disagrees with closed form at " + cell_name(n, p, q, m));
          }
        }
      }
    }
  }
  return failures;
}

Failures oracle_euler_characteristic() {
  Failures failures;
  for (int n = 1; n <= 2; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (std::int64_t m = -8; m <= 8; ++m) {
        const auto h = oracle_hodge_dimension(n, p, m);
        std::int64_t chi = 0;
        for (int q = 0; q <= n; ++q) chi += (q % 2 == 0 ? 1 : -1) * h[q];
        if (chi != resolution_euler_characteristic(n, p, m)) {
          failures.push_back("euler mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                             " m=" + std::to_string(m));
        }
      }
    }
  }
  return failures;
}

Failures oracle_serre_duality() {
  Failures failures;
  for (int n = 1; n <= 2; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (std::int64_t m = -6; m <= 6; ++m) {
        const auto h = oracle_hodge_dimension(n, p, m);
        const auto dual = oracle_hodge_dimension(n, n - p, -m);
        for (int q = 0; q <= n; ++q) {
          if (h[q] != dual[n - q]) {
            failures.push_back("oracle serre asymmetry at " + cell_name(n, p, q, m));
          }
        }
      }
    }
  }
  return failures;
}

Failures oracle_box_widening() {
  Failures failures;
  const std::vector<std::tuple<int, int, std::int64_t>> samples = {
      {1, 1, 0}, {1, 0, -3}, {2, 1, 2}, {2, 2, -4}, {2, 0, -5}, {2, 2, 0}};
  for (const auto& [n, p, m] : samples) {
    const auto lean = oracle_hodge_dimension(n, p, m);
    const auto wide = oracle_hodge_dimension_boxed(n, p, m, static_cast<int>(std::abs(m)) + 4);
    if (lean != wide) {
      failures.push_back("box widening changed the answer at n=" + std::to_string(n) +
                         " p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  }
  return failures;
}

Failures catalog_singleton_consistency() {
  Failures failures;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 3; ++d) {
      CatalogSpec spec{{n}, {d}, std::nullopt};
      const auto direct = projective_space_table(n, d);
      const auto via_product = product_table(spec);
      if (!(direct.first == via_product.first) || !(direct.second == via_product.second)) {
        failures.push_back("product of one factor differs from P" + std::to_string(n) + "@" +
                           std::to_string(d));
      }
    }
  }
  return failures;
}

Failures catalog_validation() {
  Failures failures;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto [table, op] = make_catalog_table(spec);
    for (const auto& v : validate_table(table)) {
      failures.push_back(spec.selector() + ": " + v.code + " " + v.message);
    }
    for (const auto& v : validate_operator(table, op)) {
      failures.push_back(spec.selector() + ": " + v.code + " " + v.message);
    }
    for (const auto& v : validate_hard_lefschetz(table, op)) {
      failures.push_back(spec.selector() + ": " + v.code + " " + v.message);
    }
  }
  return failures;
}

Failures catalog_roundtrip() {
  Failures failures;
  const std::vector<std::string> selectors = {"P1@2", "P2", "P1xP2@1,1", "P0@1", "P1xP1@2,3"};
  for (const auto& selector : selectors) {
    const auto spec = parse_selector(selector);
    const auto [table, op] = make_catalog_table(spec);
    const auto loaded = load_table(save_table(table, op));
    if (!(loaded.table == table) || !(loaded.lefschetz == op)) {
      failures.push_back("round trip not the identity for " + selector);
    }
    if (!loaded.report.empty()) {
      failures.push_back("round trip produced violations for " + selector);
    }
  }
  return failures;
}

Failures catalog_serre_window() {
  Failures failures;
  for (const auto& selector : {"P1@2", "P2", "P3", "P1xP2@1,1"}) {
    const auto spec = parse_selector(selector);
    const auto [table, op] = make_catalog_table(spec);
    const int reach = table.entry(0, 0).window_hi + 10;
    for (int p = 0; p <= table.n && failures.empty(); ++p) {
      for (int q = 0; q <= table.n && failures.empty(); ++q) {
        for (int m = -reach; m <= reach; ++m) {
          if (table.dim(p, q, m) != table.dim(table.n - p, table.n - q, -m)) {
            failures.push_back(std::string(selector) + ": window serre asymmetry at " +
                               cell_name(table.n, p, q, m));
            break;
          }
        }
      }
    }
  }
  return failures;
}

Failures depth_nestedness() {
  Failures failures;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto desc = catalog_descriptor(spec);
    for (int k = 0; k <= desc.dim_z(); ++k) {
      const auto depth = depth_at_vertex(desc, k);
      const int limit = depth.capped ? desc.dim_z() : depth.value - 1;
      for (int e = 1; e <= limit; ++e) {
        if (!depth_condition_holds(desc, k, e)) {
          failures.push_back(spec.selector() + ": condition set not nested at k=" +
                             std::to_string(k) + " e=" + std::to_string(e));
        }
      }
      if (!depth.capped && depth_condition_holds(desc, k, depth.value)) {
        failures.push_back(spec.selector() + ": reported depth not minimal at k=" +
                           std::to_string(k));
      }
    }
  }
  return failures;
}

Failures depth_restriction_consistency() {
  Failures failures;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto desc = catalog_descriptor(spec);
    for (int k = 0; k <= desc.dim_z(); ++k) {
      const auto depth = depth_at_vertex(desc, k);
      int first_non_iso = -1;
      for (int i = 0; i <= desc.dim_z() - 1; ++i) {
        const auto test = restriction_iso_test(desc, k, i);
        if (!test.injective) {
          failures.push_back(spec.selector() + ": restriction not injective at k=" +
                             std::to_string(k) + " i=" + std::to_string(i));
        }
        if (!test.iso) {
          first_non_iso = i;
          break;
        }
      }
      const int expected = (first_non_iso < 0) ? desc.dim_z() + 1 : first_non_iso + 1;
      const bool expected_capped = first_non_iso < 0;
      if (depth.value != expected || depth.capped != expected_capped) {
        failures.push_back(spec.selector() + ": depth " + depth.display() + " != restriction chain " +
                           std::to_string(expected) + " at k=" + std::to_string(k));
      }
    }
  }
  return failures;
}

Failures lcdef_cross_path() {
  Failures failures;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto desc = catalog_descriptor(spec);
    const auto by_depth = lcdef_cone_depth(desc);
    const auto by_lefschetz = lcdef_cone_lefschetz(desc);
    if (by_depth.c != by_lefschetz.c) {
      failures.push_back(spec.selector() + ": depth path c=" + std::to_string(by_depth.c) +
                         " vs lefschetz path c=" + std::to_string(by_lefschetz.c));
    }
    if (by_lefschetz.status != LcdefCertificate::Status::Determined) {
      failures.push_back(spec.selector() + ": catalog certificate indeterminate");
    }
  }
  return failures;
}

Failures lcdef_minimality() {
  Failures failures;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto desc = catalog_descriptor(spec);
    const auto cert = lcdef_cone_lefschetz(desc);
    if (cert.c > desc.base.lcdef_x && cert.previous_c_failures.empty()) {
      failures.push_back(spec.selector() + ": no certificate that c-1 fails");
    }
    bool prev_fails = cert.c == desc.base.lcdef_x;
    for (const auto& verdict : cert.previous_c_failures) {
      if (!verdict.holds && !verdict.indeterminate) prev_fails = true;
    }
    if (!prev_fails) {
      failures.push_back(spec.selector() + ": c-1 conditions did not definitively fail");
    }
  }
  return failures;
}

Failures audits_empty_on_catalog() {
  Failures failures;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto [table, op] = make_catalog_table(spec);
    if (!dual_nakano_audit(table).findings.empty()) {
      failures.push_back(spec.selector() + ": dual vanishing audit found cells");
    }
    if (!kan_audit(table).findings.empty()) {
      failures.push_back(spec.selector() + ": KAN audit found cells");
    }
  }
  return failures;
}

Failures ktheory_invariants() {
  Failures failures;
  for (const auto& spec : selftest_catalog_sweep()) {
    const auto desc = catalog_descriptor(spec, /*classical=*/true);
    const int n = desc.base.n;

    for (int l = n + 2; l <= n + 3; ++l) {
      const auto series = k_negative(desc, l);
      if (!series.structurally_empty() || !series.contributions.empty()) {
        failures.push_back(spec.selector() + ": K_-" + std::to_string(l) + " not structurally empty");
      }
    }

    const auto k0 = k_zero(desc);
    for (const auto& c : k0.contributions) {
      if (desc.base.dim(c.p, c.q, c.m) != c.dim) {
        failures.push_back(spec.selector() + ": K_0 contribution not reproducible by resolve_dim");
      }
    }
    const auto classical = k_zero_classical(desc);
    if (classical.contributions != k0.contributions || classical.free_rank != k0.free_rank) {
      failures.push_back(spec.selector() + ": classical K_0 minus Pic differs from K_0");
    }
    if (!classical.pic || !classical.pic->values.empty() ||
        !classical.pic->pos_tail.identically_zero()) {
      failures.push_back(spec.selector() + ": Segre-Veronese ring should have Pic(C(X)) = 0");
    }

    const auto level = pre_p_dubois_level(desc);
    if (level.all) {
      if (!k0.non_free_part_zero()) {
        failures.push_back(spec.selector() + ": pre-All but K_0 has non-free part");
      }
      for (int l = 1; l <= n + 1; ++l) {
        const auto series = k_negative(desc, l);
        if (!series.non_free_part_zero()) {
          failures.push_back(spec.selector() + ": pre-All but K_-" + std::to_string(l) +
                             " is nonzero");
        }
      }
    }
  }
  return failures;
}

}  // namespace

std::vector<CatalogSpec> selftest_catalog_sweep() {
  static const std::vector<CatalogSpec> sweep = [] {
    std::vector<CatalogSpec> out;
    const std::vector<std::vector<int>> factor_sets = {{1},       {2},       {3},    {4},
                                                       {1, 1},    {1, 2},    {1, 3}, {2, 2},
                                                       {1, 1, 1}, {1, 1, 2}, {1, 1, 1, 1}};
    for (const auto& factors : factor_sets) {
      std::vector<int> pol(factors.size(), 1);
      while (true) {
        out.push_back(CatalogSpec{factors, pol, std::nullopt});
        std::size_t i = 0;
        while (i < pol.size() && pol[i] == 3) {
          pol[i] = 1;
          ++i;
        }
        if (i == pol.size()) break;
        ++pol[i];
      }
    }
    return out;
  }();
  return sweep;
}

std::vector<SuiteResult> run_selftest(std::ostream* progress) {
  const std::vector<std::pair<std::string, std::function<Failures()>>> suites = {
      {"bott-serre-duality", bott_serre_duality},
      {"bott-betti-sums", bott_betti_sums},
      {"bott-single-branch", bott_single_branch},
      {"oracle-agreement", oracle_agreement},
      {"oracle-euler-characteristic", oracle_euler_characteristic},
      {"oracle-serre-duality", oracle_serre_duality},
      {"oracle-box-widening", oracle_box_widening},
      {"catalog-singleton-consistency", catalog_singleton_consistency},
      {"catalog-validation", catalog_validation},
      {"catalog-roundtrip", catalog_roundtrip},
      {"catalog-serre-window", catalog_serre_window},
      {"depth-nestedness", depth_nestedness},
      {"depth-restriction-consistency", depth_restriction_consistency},
      {"lcdef-cross-path", lcdef_cross_path},
      {"lcdef-minimality", lcdef_minimality},
      {"audits-empty-on-catalog", audits_empty_on_catalog},
      {"ktheory-invariants", ktheory_invariants},
  };

  std::vector<SuiteResult> results;
  for (const auto& [name, run] : suites) {
    SuiteResult result;
    result.name = name;
    try {
      result.failures = run();
    } catch (const std::exception& e) {
      result.failures.push_back(std::string("exception: ") + e.what());
    }
    result.passed = result.failures.empty();
    if (progress) {
      *progress << (result.passed ? "PASS " : "FAIL ") << name;
      if (!result.passed) *progress << " (" << result.failures.size() << " failure(s))";
      *progress << "\n";
      for (std::size_t i = 0; i < result.failures.size() && i < 5; ++i) {
        *progress << "  - " << result.failures[i] << "\n";
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace conehodge
