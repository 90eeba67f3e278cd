#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "conehodge/catalog.hpp"

namespace conehodge {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
};

// Every catalog descriptor with total dimension <= 4 and polarizations
// a_i <= 3; the sweep the cross-path, nestedness and audit invariants
// quantify over.
std::vector<CatalogSpec> selftest_catalog_sweep();

// Runs every invariant suite declared across the modules. With a
// progress stream, prints one line per suite as it completes.
std::vector<SuiteResult> run_selftest(std::ostream* progress = nullptr);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace conehodge
