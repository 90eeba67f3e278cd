#include "conehodge/table.hpp"

#include <algorithm>

namespace conehodge {

namespace {

std::string pq_path(int p, int q) {
  return "hodge[" + std::to_string(p) + "," + std::to_string(q) + "]";
}

}  // namespace

const GradedDimension& HodgeDuBoisTable::entry(int p, int q) const {
  if (p < 0 || p > n || q < 0 || q > n) {
    throw error("table '" + name + "': (p, q) = (" + std::to_string(p) + ", " + std::to_string(q) +
                ") out of range for n = " + std::to_string(n));
  }
  auto it = entries.find({p, q});
  if (it == entries.end()) {
    throw error("table '" + name + "': missing entry " + pq_path(p, q));
  }
  return it->second;
}

std::int64_t HodgeDuBoisTable::dim(int p, int q, std::int64_t m) const {
  return entry(p, q).resolve(m);
}

std::int64_t HodgeDuBoisTable::dim_or_zero(int p, int q, std::int64_t m) const {
  if (p < 0 || p > n || q < 0 || q > n) return 0;
  return dim(p, q, m);
}

ValidationReport validate_table(const HodgeDuBoisTable& table) {
  ValidationReport report;
  const int n = table.n;

  if (table.lcdef_x < 0 || table.lcdef_x > n) {
    report.push_back({"lcdef-range", "lcdef",
                      "lcdef = " + std::to_string(table.lcdef_x) + " outside [0, " +
                          std::to_string(n) + "]"});
  }
  if (table.smooth && table.lcdef_x != 0) {
    report.push_back({"smooth-lcdef", "lcdef", "smooth table must have lcdef 0"});
  }
  if (table.smooth && !table.seminormal) {
    report.push_back({"smooth-seminormal", "seminormal", "smooth table must be seminormal"});
  }

  // Per-entry graded structure, plus key-range.
  for (const auto& [key, graded] : table.entries) {
    const auto [p, q] = key;
    if (p < 0 || p > n || q < 0 || q > n) {
      report.push_back({"entry-range", pq_path(p, q), "entry outside [0, n]^2"});
      continue;
    }
    for (const auto& problem : check_graded(graded)) {
      report.push_back({"graded", pq_path(p, q), problem});
    }
  }
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (!table.entries.count({p, q})) {
        report.push_back({"entry-missing", pq_path(p, q), "entry absent"});
      }
    }
  }
  if (!std::all_of(report.begin(), report.end(),
                   [](const Violation& v) { return v.code == "lcdef-range" || v.code == "smooth-lcdef" ||
                                                   v.code == "smooth-seminormal"; })) {
    // Entry-level problems make the identity checks below unreliable.
    return report;
  }

  // Serre-duality symmetry for smooth tables, over every m resolvable
  // on both sides.
  if (table.smooth) {
    int reach = 0;
    for (const auto& [key, graded] : table.entries) {
      reach = std::max({reach, std::abs(graded.window_lo), std::abs(graded.window_hi)});
    }
    reach += 10;
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        // Each unordered pair of dual cells is checked once.
        if (std::pair(p, q) > std::pair(n - p, n - q)) continue;
        const bool self_dual = (p == n - p && q == n - q);
        const GradedDimension& a = table.entry(p, q);
        const GradedDimension& b = table.entry(n - p, n - q);
        for (int m = self_dual ? 1 : -reach; m <= reach; ++m) {
          const bool a_ok = (m >= a.window_lo && m <= a.window_hi) ||
                            (m > a.window_hi ? a.pos_tail.declared() : a.neg_tail.declared());
          const bool b_ok = (-m >= b.window_lo && -m <= b.window_hi) ||
                            (-m > b.window_hi ? b.pos_tail.declared() : b.neg_tail.declared());
          if (!a_ok || !b_ok) continue;
          std::int64_t lhs, rhs;
          try {
            lhs = a.resolve(m);
            rhs = b.resolve(-m);
          } catch (const error& e) {
            report.push_back({"resolve-error", pq_path(p, q), e.what()});
            break;
          }
          if (lhs != rhs) {
            report.push_back({"serre-duality", pq_path(p, q),
                              "dim(" + std::to_string(p) + "," + std::to_string(q) + "," +
                                  std::to_string(m) + ") = " + std::to_string(lhs) + " but dim(" +
                                  std::to_string(n - p) + "," + std::to_string(n - q) + "," +
                                  std::to_string(-m) + ") = " + std::to_string(rhs)});
          }
        }
      }
    }
  }

  // Hodge-to-de Rham degeneration: untwisted diagonal sums against the
  // Betti numbers.
  if (table.betti) {
    if (static_cast<int>(table.betti->size()) != 2 * n + 1) {
      report.push_back({"betti-length", "betti",
                        "expected 2n+1 = " + std::to_string(2 * n + 1) + " entries, got " +
                            std::to_string(table.betti->size())});
    } else {
      for (int j = 0; j <= 2 * n; ++j) {
        std::int64_t sum = 0;
        bool resolvable = true;
        for (int p = std::max(0, j - n); p <= std::min(n, j) && resolvable; ++p) {
          try {
            sum += table.dim(p, j - p, 0);
          } catch (const error& e) {
            report.push_back({"resolve-error", pq_path(p, j - p), e.what()});
            resolvable = false;
          }
        }
        if (resolvable && sum != (*table.betti)[j]) {
          report.push_back({"betti-sum", "betti[" + std::to_string(j) + "]",
                            "sum of dim(p, q, 0) over p+q = " + std::to_string(j) + " is " +
                                std::to_string(sum) + ", betti gives " +
                                std::to_string((*table.betti)[j])});
        }
      }
    }
  }

  // A ring embeds in its seminormalization: R_m <= dim(0, 0, m), m >= 0.
  if (table.coordinate_ring) {
    const GradedDimension& ring = *table.coordinate_ring;
    const GradedDimension& sections = table.entry(0, 0);
    const int reach = std::max(ring.window_hi, sections.window_hi) + 10;
    for (int m = 0; m <= reach; ++m) {
      const bool r_ok = (m >= ring.window_lo && m <= ring.window_hi) ||
                        (m > ring.window_hi ? ring.pos_tail.declared() : ring.neg_tail.declared());
      const bool s_ok = (m >= sections.window_lo && m <= sections.window_hi) ||
                        (m > sections.window_hi ? sections.pos_tail.declared()
                                                : sections.neg_tail.declared());
      if (!r_ok || !s_ok) continue;
      std::int64_t rm, sm;
      try {
        rm = ring.resolve(m);
        sm = sections.resolve(m);
      } catch (const error& e) {
        report.push_back({"resolve-error", "coordinate_ring", e.what()});
        break;
      }
      if (rm > sm) {
        report.push_back({"ring-dominance", "coordinate_ring",
                          "R_" + std::to_string(m) + " = " + std::to_string(rm) +
                              " exceeds dim(0,0," + std::to_string(m) + ") = " +
                              std::to_string(sm)});
      }
    }
  }

  return report;
}

ValidationReport validate_operator(const HodgeDuBoisTable& table, const LefschetzOperator& op) {
  ValidationReport report;
  const int n = table.n;
  for (const auto& [key, matrix] : op.matrices) {
    const auto [p, q] = key;
    const std::string path = "lefschetz[" + std::to_string(p) + "," + std::to_string(q) + "]";
    if (p < 0 || p > n - 1 || q < 0 || q > n - 1) {
      report.push_back({"block-range", path, "block outside [0, n-1]^2"});
      continue;
    }
    const std::int64_t source = table.dim(p, q, 0);
    const std::int64_t target = table.dim(p + 1, q + 1, 0);
    if (static_cast<std::int64_t>(matrix.rows()) != target ||
        static_cast<std::int64_t>(matrix.cols()) != source) {
      report.push_back({"block-shape", path,
                        "expected " + std::to_string(target) + "x" + std::to_string(source) +
                            ", got " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols())});
    }
  }
  return report;
}

LefschetzRank lefschetz_rank(const HodgeDuBoisTable& table, const LefschetzOperator& op, int p,
                             int q) {
  const int n = table.n;
  if (p < 0 || p > n - 1 || q < 0 || q > n - 1) {
    throw error("lefschetz_rank: (p, q) = (" + std::to_string(p) + ", " + std::to_string(q) +
                ") outside [0, n-1]^2");
  }
  const std::int64_t source = table.dim(p, q, 0);
  const std::int64_t target = table.dim(p + 1, q + 1, 0);
  LefschetzRank result;
  auto it = op.matrices.find({p, q});
  if (it != op.matrices.end()) {
    if (static_cast<std::int64_t>(it->second.rows()) != target ||
        static_cast<std::int64_t>(it->second.cols()) != source) {
      throw error("lefschetz_rank: block (" + std::to_string(p) + ", " + std::to_string(q) +
                  ") shape mismatch against the owning table");
    }
    result.rank = static_cast<std::int64_t>(exact_rank(it->second));
  } else {
    result.rank = 0;
  }
  result.injective = (result.rank == source);
  result.surjective = (result.rank == target);
  return result;
}

BlockView resolve_block(const HodgeDuBoisTable& table, const LefschetzOperator& op, int p, int q) {
  const int n = table.n;
  if (p < 0 || p > n || q < 0 || q > n) {
    throw error("resolve_block: (p, q) out of range");
  }
  BlockView view;
  view.p = p;
  view.q = q;
  view.source_dim = table.dim(p, q, 0);
  view.target_dim = table.dim_or_zero(p + 1, q + 1, 0);
  if (p <= n - 1 && q <= n - 1) {
    auto it = op.matrices.find({p, q});
    if (it != op.matrices.end()) {
      view.stored = true;
      const auto rank = lefschetz_rank(table, op, p, q);
      view.rank = rank.rank;
      return view;
    }
  }
  view.stored = false;
  view.rank = 0;
  return view;
}

ValidationReport validate_hard_lefschetz(const HodgeDuBoisTable& table,
                                         const LefschetzOperator& op) {
  ValidationReport report;
  const int n = table.n;
  for (int j = 0; j <= n - 1; ++j) {
    for (int p = std::max(0, j - n); p <= std::min(n, j); ++p) {
      const int q = j - p;
      const int steps = n - j;
      if (p + steps > n || q + steps > n) continue;
      const std::int64_t source = table.dim(p, q, 0);
      const std::int64_t target = table.dim(p + steps, q + steps, 0);
      // Composite of the consecutive blocks along the diagonal.
      RationalMatrix composite;
      bool first = true;
      bool shape_ok = true;
      for (int s = 0; s < steps; ++s) {
        const int bp = p + s;
        const int bq = q + s;
        RationalMatrix block(static_cast<std::size_t>(table.dim_or_zero(bp + 1, bq + 1, 0)),
                             static_cast<std::size_t>(table.dim(bp, bq, 0)));
        if (bp <= n - 1 && bq <= n - 1) {
          auto it = op.matrices.find({bp, bq});
          if (it != op.matrices.end()) {
            if (it->second.rows() != block.rows() || it->second.cols() != block.cols()) {
              shape_ok = false;
              break;
            }
            block = it->second;
          }
        }
        composite = first ? block : block * composite;
        first = false;
      }
      const std::string path = "lefschetz-diagonal[" + std::to_string(p) + "," + std::to_string(q) + "]";
      if (!shape_ok) {
        report.push_back({"hard-lefschetz-shape", path, "block shape mismatch along diagonal"});
        continue;
      }
      const std::int64_t expected = std::min(source, target);
      const std::int64_t rank =
          first ? std::min(source, target) : static_cast<std::int64_t>(exact_rank(composite));
      if (rank != expected) {
        report.push_back({"hard-lefschetz", path,
                          "composite of " + std::to_string(steps) + " blocks from (" +
                              std::to_string(p) + "," + std::to_string(q) + ") has rank " +
                              std::to_string(rank) + ", expected " + std::to_string(expected)});
      }
    }
  }
  return report;
}

ConeDescriptor make_descriptor(HodgeDuBoisTable base, LefschetzOperator op, bool classical,
                               std::optional<int> ambient_dim, bool projectively_normal) {
  if (classical && !base.coordinate_ring && !projectively_normal) {
    throw error("classical cone requested but the table has no coordinate ring and the "
                "projective-normality flag is not set");
  }
  ConeDescriptor desc;
  desc.base = std::move(base);
  desc.lefschetz = std::move(op);
  desc.classical = classical;
  desc.ambient_dim = ambient_dim;
  desc.projectively_normal = projectively_normal;
  return desc;
}

}  // namespace conehodge
