#pragma once

#include <string>

#include "conehodge/table.hpp"

namespace conehodge {

struct LoadedTable {
  HodgeDuBoisTable table;
  LefschetzOperator lefschetz;
  // Identity-level findings from validate_table/validate_operator;
  // structural problems are rejected with a path-addressed error
  // instead of being reported here.
  ValidationReport report;
};

// Parses the JSON table format. Rejects malformed JSON, schema
// violations (out-of-range lcdef, negative dimensions, bad windows,
// non-rational matrix entries, missing entries) with path-addressed
// messages; attaches the validation report for everything else.
LoadedTable load_table(const std::string& json_text);

// Deterministic serialization: sorted keys, rationals as "a" or "a/b",
// entries and blocks in ascending (p, q) order. load(save(t)) == t.
std::string save_table(const HodgeDuBoisTable& table, const LefschetzOperator& op);

LoadedTable load_table_file(const std::string& path);
void save_table_file(const std::string& path, const HodgeDuBoisTable& table,
                     const LefschetzOperator& op);

}  // namespace conehodge
