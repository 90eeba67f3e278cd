#include "conehodge/cone.hpp"

#include <algorithm>

namespace conehodge {

std::string Obstruction::describe() const {
  const std::string cell = "dim(" + std::to_string(p) + "," + std::to_string(q) + "," +
                           std::to_string(m) + ") = " + std::to_string(value);
  const std::string block = "block (" + std::to_string(p) + "," + std::to_string(q) + ") rank " +
                            std::to_string(rank) + " of " + std::to_string(source_dim) + " -> " +
                            std::to_string(target_dim);
  switch (kind) {
    case Kind::NonzeroCell:
      return cell + " != 0";
    case Kind::NonzeroH0:
      return cell + " != 0";
    case Kind::BlockNotIso:
      return block + " is not an isomorphism";
    case Kind::BlockNotInjective:
      return block + " is not injective";
    case Kind::BlockNotSurjective:
      return block + " is not surjective";
  }
  return cell;
}

std::int64_t ConeRow::total_at(std::int64_t m) const {
  std::int64_t total = (m == 0 ? constant_summand : 0);
  if (m >= 1) {
    total += top_part.resolve(m);
    if (lower_part) total += lower_part->resolve(m);
  }
  return total;
}

namespace {

// Restriction of an entry to the ray m >= 1, with the inherited
// positive tail.
GradedDimension positive_part(const GradedDimension& entry) {
  GradedDimension g;
  g.window_lo = 1;
  g.window_hi = std::max(1, entry.window_hi);
  for (int m = g.window_lo; m <= g.window_hi; ++m) {
    const std::int64_t v = entry.resolve(m);
    if (v != 0) g.values[m] = v;
  }
  g.pos_tail = entry.pos_tail;
  g.neg_tail = Tail::zero();
  return g;
}

GradedDimension zero_positive_part(int window_hi) {
  return GradedDimension::zero(1, std::max(1, window_hi));
}

// Checks dim(p, q, m) = 0 for all m <= from; out-of-range p rows are
// identically zero. Emits a NonzeroCell obstruction on failure.
bool ray_vanishes(const HodgeDuBoisTable& table, int p, int q, std::int64_t from,
                  Obstruction* failure) {
  if (p < 0 || p > table.n || q < 0 || q > table.n) return true;
  std::int64_t witness_m = 0;
  std::int64_t witness_v = 0;
  if (table.entry(p, q).vanishes_from(from, -1, &witness_m, &witness_v)) return true;
  if (failure) {
    failure->kind = Obstruction::Kind::NonzeroCell;
    failure->p = p;
    failure->q = q;
    failure->m = witness_m;
    failure->value = witness_v;
  }
  return false;
}

// Block (p, q) of the m = 0 Lefschetz data, extended to q = -1 (zero
// source) and p or q = n (zero target).
BlockView block_between(const ConeDescriptor& desc, int p, int q) {
  const int n = desc.base.n;
  if (q < 0 || p < 0 || p > n || q > n) {
    BlockView view;
    view.p = p;
    view.q = q;
    view.source_dim = (p >= 0 && p <= n && q >= 0 && q <= n) ? desc.base.dim(p, q, 0) : 0;
    view.target_dim = desc.base.dim_or_zero(p + 1, q + 1, 0);
    view.stored = true;  // nothing to consult
    return view;
  }
  return resolve_block(desc.base, desc.lefschetz, p, q);
}

void note_defaulted(const BlockView& view, std::vector<std::pair<int, int>>* defaulted) {
  if (defaulted && view.defaulted_nontrivially()) {
    defaulted->push_back({view.p, view.q});
  }
}

void block_failure(const BlockView& view, Obstruction::Kind kind, Obstruction* failure) {
  if (!failure) return;
  failure->kind = kind;
  failure->p = view.p;
  failure->q = view.q;
  failure->rank = view.rank;
  failure->source_dim = view.source_dim;
  failure->target_dim = view.target_dim;
}

}  // namespace

ConeDuBoisTable cone_dubois(const ConeDescriptor& desc, int k) {
  const int n = desc.base.n;
  if (k < 0 || k > n + 1) {
    throw error("cone_dubois: k = " + std::to_string(k) + " outside [0, dim Z = " +
                std::to_string(n + 1) + "]");
  }
  ConeDuBoisTable out;
  out.k = k;
  out.dim_z = n + 1;
  for (int i = 0; i <= n; ++i) {
    ConeRow row;
    row.i = i;
    row.constant_summand = (k == 0 && i == 0) ? 1 : 0;
    if (k <= n) {
      row.top_part = positive_part(desc.base.entry(k, i));
    } else {
      row.top_part = zero_positive_part(desc.base.entry(n, i).window_hi);
    }
    if (k >= 1) row.lower_part = positive_part(desc.base.entry(k - 1, i));
    out.rows.push_back(std::move(row));
  }
  return out;
}

RestrictionTest restriction_iso_test(const ConeDescriptor& desc, int k, int i) {
  const int n = desc.base.n;
  if (k < 0 || k > n + 1) throw error("restriction_iso_test: k out of range");
  if (i < 0) throw error("restriction_iso_test: i must be >= 0");

  RestrictionTest result;
  result.k = k;
  result.i = i;

  auto add_cell = [&](int p, int q, std::int64_t from) {
    Obstruction failure;
    if (!ray_vanishes(desc.base, p, q, from, &failure)) result.obstructions.push_back(failure);
  };

  if (k == 0) {
    add_cell(0, i, i == 0 ? -1 : 0);
  } else {
    // Twisted vanishing in this cohomological degree, lower part first.
    add_cell(k - 1, i, -1);
    add_cell(k, i, -1);
    // d surjective out of degree i-1, injective out of degree i.
    const BlockView below = block_between(desc, k - 1, i - 1);
    note_defaulted(below, &result.defaulted_blocks);
    if (!below.surjective()) {
      Obstruction failure;
      block_failure(below, Obstruction::Kind::BlockNotSurjective, &failure);
      result.obstructions.push_back(failure);
    }
    const BlockView at = block_between(desc, k - 1, i);
    note_defaulted(at, &result.defaulted_blocks);
    if (!at.injective()) {
      Obstruction failure;
      block_failure(at, Obstruction::Kind::BlockNotInjective, &failure);
      result.obstructions.push_back(failure);
    }
  }
  result.iso = result.obstructions.empty();
  return result;
}

bool depth_condition_holds(const ConeDescriptor& desc, int k, int d, Obstruction* first_failure,
                           std::vector<std::pair<int, int>>* defaulted_blocks) {
  const int n = desc.base.n;
  if (k < 0 || k > n + 1) throw error("depth condition: k out of range");
  if (d < 1) throw error("depth condition: d must be >= 1");

  if (k == 0) {
    Obstruction failure;
    if (!ray_vanishes(desc.base, 0, 0, -1, &failure)) {
      if (first_failure) *first_failure = failure;
      return false;
    }
    for (int i = 1; i <= d - 1 && i <= n; ++i) {
      if (!ray_vanishes(desc.base, 0, i, 0, &failure)) {
        if (first_failure) *first_failure = failure;
        return false;
      }
    }
    return true;
  }

  // Twisted vanishing for m <= -1 in degrees 0..d-1, lower part first.
  Obstruction failure;
  for (int i = 0; i <= d - 1; ++i) {
    if (!ray_vanishes(desc.base, k - 1, i, -1, &failure)) {
      if (first_failure) *first_failure = failure;
      return false;
    }
    if (!ray_vanishes(desc.base, k, i, -1, &failure)) {
      if (first_failure) *first_failure = failure;
      return false;
    }
  }
  // H^0 of the untwisted top part must vanish.
  const std::int64_t h0 = desc.base.dim_or_zero(k, 0, 0);
  if (h0 != 0) {
    if (first_failure) {
      first_failure->kind = Obstruction::Kind::NonzeroH0;
      first_failure->p = k;
      first_failure->q = 0;
      first_failure->m = 0;
      first_failure->value = h0;
    }
    return false;
  }
  // Lefschetz chain: isomorphisms below degree d-1, injectivity there.
  for (int i = 0; i <= d - 2; ++i) {
    const BlockView view = block_between(desc, k - 1, i);
    note_defaulted(view, defaulted_blocks);
    if (!view.iso()) {
      block_failure(view, Obstruction::Kind::BlockNotIso, first_failure);
      return false;
    }
  }
  const BlockView last = block_between(desc, k - 1, d - 1);
  note_defaulted(last, defaulted_blocks);
  if (!last.injective()) {
    block_failure(last, Obstruction::Kind::BlockNotInjective, first_failure);
    return false;
  }
  return true;
}

DepthValue depth_at_vertex(const ConeDescriptor& desc, int k) {
  const int n = desc.base.n;
  if (k < 0 || k > n + 1) throw error("depth_at_vertex: k out of range");
  DepthValue out;
  out.k = k;
  const int dim_z = n + 1;
  auto finish = [&out] {
    std::sort(out.defaulted_blocks.begin(), out.defaulted_blocks.end());
    out.defaulted_blocks.erase(std::unique(out.defaulted_blocks.begin(), out.defaulted_blocks.end()),
                               out.defaulted_blocks.end());
  };
  for (int d = 1; d <= dim_z; ++d) {
    Obstruction failure;
    if (!depth_condition_holds(desc, k, d, &failure, &out.defaulted_blocks)) {
      out.value = d;
      out.capped = false;
      out.witness = DepthWitness{d, failure};
      finish();
      return out;
    }
  }
  out.value = dim_z + 1;
  out.capped = true;
  finish();
  return out;
}

std::string DepthValue::display() const {
  return capped ? (">=" + std::to_string(value)) : std::to_string(value);
}

DepthVector depth_vector(const ConeDescriptor& desc) {
  DepthVector out;
  out.dim_z = desc.dim_z();
  for (int k = 0; k <= out.dim_z; ++k) out.entries.push_back(depth_at_vertex(desc, k));
  return out;
}

bool cone_seminormal(const ConeDescriptor& desc) { return desc.base.seminormal; }

}  // namespace conehodge
