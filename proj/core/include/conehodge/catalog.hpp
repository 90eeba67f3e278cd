#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conehodge/table.hpp"

namespace conehodge {

// P^{n_1} x ... x P^{n_r} polarized by O(a_1, ..., a_r). Tables are
// computed exactly on [-M, M] with closed-form tails beyond.
struct CatalogSpec {
  std::vector<int> factors;       // n_i >= 1
  std::vector<int> polarization;  // a_i >= 1
  std::optional<int> window;      // absent = default for the dimension

  int total_dim() const;
  int resolved_window() const;
  std::string selector() const;  // "P1xP2@1,1"
};

// Default exact window for a dimension-n table; wide enough for every m
// the depth and lcdef criteria consult at the cap.
int default_window(int n);

// Exact table of (P^n, O(d)). Entry (p, q, m) = bott_dimension(n, p, q, d*m);
// Lefschetz block (p, p) is the 1x1 matrix (d). Includes Betti numbers
// and the section ring of the d-uple embedding as coordinate_ring.
std::pair<HodgeDuBoisTable, LefschetzOperator> projective_space_table(int n, int d,
                                                                      std::optional<int> window = {});

// Kunneth assembly for products, with Lefschetz blocks computed in
// Q[h_1, ..., h_r]/(h_i^(n_i+1)) on the lexicographically ordered
// monomial basis of each H^{p,p}.
std::pair<HodgeDuBoisTable, LefschetzOperator> product_table(const CatalogSpec& spec);

// Dispatch on the number of factors; single factors go through
// projective_space_table.
std::pair<HodgeDuBoisTable, LefschetzOperator> make_catalog_table(const CatalogSpec& spec);

// Dimension of the Segre-Veronese target: prod C(n_i + a_i, n_i) - 1.
int segre_veronese_ambient_dim(const CatalogSpec& spec);

// Descriptor with catalog conveniences: embedded ambient dimension and
// projective normality (both hold for Segre-Veronese embeddings).
ConeDescriptor catalog_descriptor(const CatalogSpec& spec, bool classical = false);

// Selector mini-grammar: "P<n>" or "P<n1>x...xP<nr>", optionally
// "@<a1>,...,<ar>"; omitted polarization means all ones. Anything with
// a path separator or a .json suffix is a file, not a selector.
bool selector_is_file(const std::string& text);
CatalogSpec parse_selector(const std::string& selector);

// Named presets embedded in the binary.
const std::vector<std::pair<std::string, CatalogSpec>>& catalog_manifest();

}  // namespace conehodge
