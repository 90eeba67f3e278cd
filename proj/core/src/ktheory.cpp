#include "conehodge/ktheory.hpp"

#include <algorithm>

namespace conehodge {

std::string KGradedSeries::label() const {
  switch (kind) {
    case Kind::Zero:
      return "K_0";
    case Kind::Negative:
      return "K_-" + std::to_string(l);
    case Kind::HigherPiece:
      return "K_" + std::to_string(l) + "^(" + std::to_string(adams_i) + ")";
  }
  return "K";
}

bool KGradedSeries::non_free_part_zero() const {
  if (!contributions.empty()) return false;
  for (const auto& t : tails) {
    if (!t.tail.identically_zero()) return false;
  }
  if (pic && (!pic->values.empty() || !pic->pos_tail.identically_zero())) return false;
  return true;
}

std::int64_t KGradedSeries::window_total() const {
  std::int64_t total = 0;
  for (const auto& c : contributions) total += c.dim;
  return total;
}

namespace {

struct CellRef {
  int i;  // Hodge index reported in the series
  int p;
  int q;
};

KGradedSeries build_series(const ConeDescriptor& desc, KGradedSeries::Kind kind, int l, int adams_i,
                           int index_lo, int index_hi, const std::vector<CellRef>& cells) {
  KGradedSeries series;
  series.kind = kind;
  series.l = l;
  series.adams_i = adams_i;
  series.index_lo = index_lo;
  series.index_hi = index_hi;

  const HodgeDuBoisTable& table = desc.base;
  int max_p = 0;
  for (const auto& cell : cells) {
    const GradedDimension& entry = table.entry(cell.p, cell.q);
    if (!entry.pos_tail.declared()) {
      throw error(series.label() + ": undeclared positive tail at (p, q) = (" +
                  std::to_string(cell.p) + ", " + std::to_string(cell.q) + ")");
    }
    for (int m = std::max(1, entry.window_lo); m <= entry.window_hi; ++m) {
      const std::int64_t v = entry.resolve(m);
      if (v != 0) series.contributions.push_back({cell.i, m, v, cell.p, cell.q});
    }
    series.tails.push_back({cell.i, cell.p, cell.q, entry.pos_tail});
    max_p = std::max(max_p, cell.p);
  }
  std::sort(series.contributions.begin(), series.contributions.end(),
            [](const KContribution& a, const KContribution& b) {
              return std::tie(a.i, a.m) < std::tie(b.i, b.m);
            });

  // Filtration annotation: for each j >= 1 the (p - j, q) companions of
  // the cells above, as multiplicity bounds for Omega^j_{C/Q} pieces.
  for (int j = 1; j <= max_p; ++j) {
    KFiltrationBound bound;
    bound.j = j;
    bound.certified_zero = true;
    for (const auto& cell : cells) {
      const int p = cell.p - j;
      if (p < 0) continue;
      const GradedDimension& entry = table.entry(p, cell.q);
      for (int m = std::max(1, entry.window_lo); m <= entry.window_hi; ++m) {
        bound.window_total += entry.resolve(m);
      }
      if (bound.window_total != 0 || !entry.pos_tail.identically_zero()) {
        bound.certified_zero = false;
      }
    }
    series.filtration_bounds.push_back(bound);
  }
  series.q_relative_exact = std::all_of(series.filtration_bounds.begin(),
                                        series.filtration_bounds.end(),
                                        [](const KFiltrationBound& b) { return b.certified_zero; });
  return series;
}

}  // namespace

KGradedSeries k_zero(const ConeDescriptor& desc) {
  const int n = desc.base.n;
  std::vector<CellRef> cells;
  for (int i = 1; i <= n; ++i) cells.push_back({i, i, i});
  KGradedSeries series = build_series(desc, KGradedSeries::Kind::Zero, 0, 0, 1, n, cells);
  series.free_rank = 1;
  return series;
}

KGradedSeries k_negative(const ConeDescriptor& desc, int l) {
  if (l < 1) throw error("k_negative: l must be >= 1");
  const int n = desc.base.n;
  std::vector<CellRef> cells;
  for (int i = 0; i <= n - l; ++i) cells.push_back({i, i, l + i});
  return build_series(desc, KGradedSeries::Kind::Negative, l, 0, 0, n - l, cells);
}

KGradedSeries k_zero_classical(const ConeDescriptor& desc) {
  if (!desc.classical) throw error("k_zero_classical: descriptor is not in classical mode");
  KGradedSeries series = k_zero(desc);

  const GradedDimension& sections = desc.base.entry(0, 0);
  GradedDimension pic;
  pic.window_lo = 1;
  pic.neg_tail = Tail::zero();

  if (desc.projectively_normal) {
    // R_m = dim(0, 0, m) by assertion, so R+/R = 0.
    pic.window_hi = std::max(1, sections.window_hi);
    pic.pos_tail = Tail::zero();
  } else if (desc.base.coordinate_ring) {
    const GradedDimension& ring = *desc.base.coordinate_ring;
    pic.window_hi = std::max({1, sections.window_hi, ring.window_hi});
    for (int m = 1; m <= pic.window_hi; ++m) {
      const std::int64_t v = sections.resolve(m) - ring.resolve(m);
      if (v < 0) {
        throw error("k_zero_classical: R_" + std::to_string(m) + " exceeds dim(0,0," +
                    std::to_string(m) + "); the ring does not embed in its seminormalization");
      }
      if (v != 0) pic.values[m] = v;
    }
    if (!sections.pos_tail.declared() || !ring.pos_tail.declared()) {
      throw error("k_zero_classical: undeclared positive tail on the section ring comparison");
    }
    const Polynomial sections_poly = sections.pos_tail.kind == Tail::Kind::Poly
                                         ? sections.pos_tail.poly
                                         : Polynomial();
    const Polynomial ring_poly =
        ring.pos_tail.kind == Tail::Kind::Poly ? ring.pos_tail.poly : Polynomial();
    const Polynomial diff = sections_poly - ring_poly;
    pic.pos_tail = diff.is_zero() ? Tail::zero() : Tail::polynomial(diff);
  } else {
    throw error("k_zero_classical: coordinate ring required without the projective-normality flag");
  }
  series.pic = std::move(pic);
  return series;
}

KGradedSeries higher_k_piece(const ConeDescriptor& desc, int l, int i) {
  if (l < 1) throw error("higher_k_piece: l must be >= 1");
  if (i < l + 2) throw error("higher_k_piece: requires i >= l + 2");
  const int n = desc.base.n;
  if (i - 1 > n) {
    throw error("higher_k_piece: Hodge index i - 1 = " + std::to_string(i - 1) +
                " exceeds dim X = " + std::to_string(n));
  }
  std::vector<CellRef> cells{{i - 1, i - 1, i - l - 1}};
  return build_series(desc, KGradedSeries::Kind::HigherPiece, l, i, i - 1, i - 1, cells);
}

}  // namespace conehodge
