#include "conehodge/graded.hpp"

#include <vector>

namespace conehodge {

GradedDimension GradedDimension::zero(int lo, int hi) {
  GradedDimension g;
  g.window_lo = lo;
  g.window_hi = hi;
  g.pos_tail = Tail::zero();
  g.neg_tail = Tail::zero();
  return g;
}

namespace {

std::int64_t eval_tail(const Tail& tail, std::int64_t m, const char* side) {
  switch (tail.kind) {
    case Tail::Kind::Zero:
      return 0;
    case Tail::Kind::Poly: {
      Rational val = tail.poly.eval_at(m);
      if (!is_integer(val) || val < 0) {
        throw error(std::string("corrupt table: ") + side + " tail evaluates to " +
                    rational_to_string(val) + " at m = " + std::to_string(m));
      }
      return to_int64(val);
    }
    case Tail::Kind::Undeclared:
      break;
  }
  throw error(std::string("undeclared ") + side + " tail consulted at m = " + std::to_string(m));
}

}  // namespace

std::int64_t GradedDimension::resolve(std::int64_t m) const {
  if (m >= window_lo && m <= window_hi) {
    auto it = values.find(static_cast<int>(m));
    return it == values.end() ? 0 : it->second;
  }
  if (m > window_hi) return eval_tail(pos_tail, m, "positive");
  return eval_tail(neg_tail, m, "negative");
}

bool GradedDimension::vanishes_from(std::int64_t from, int direction, std::int64_t* witness,
                                    std::int64_t* witness_value) const {
  // Window part of the ray.
  const std::int64_t lo = window_lo;
  const std::int64_t hi = window_hi;
  std::int64_t begin, end;  // inclusive, iterated in `direction`
  if (direction > 0) {
    begin = std::max(from, lo);
    end = hi;
  } else {
    begin = std::min(from, hi);
    end = lo;
  }
  for (std::int64_t m = begin; direction > 0 ? m <= end : m >= end; m += direction) {
    const std::int64_t v = resolve(m);
    if (v != 0) {
      if (witness) *witness = m;
      if (witness_value) *witness_value = v;
      return false;
    }
  }
  // Tail part. A nonzero polynomial is nonzero at all but finitely many
  // integers, so a polynomial tail certifies vanishing iff it is the
  // zero polynomial; otherwise scan past its roots for a witness.
  const Tail& tail = direction > 0 ? pos_tail : neg_tail;
  const std::int64_t tail_start = direction > 0 ? std::max(from, hi + 1) : std::min(from, lo - 1);
  if (!tail.declared()) {
    throw error(std::string("undeclared ") + (direction > 0 ? "positive" : "negative") +
                " tail consulted while certifying vanishing");
  }
  if (tail.identically_zero()) return true;
  std::int64_t m = tail_start;
  for (int step = 0; step <= tail.poly.degree() + 1; ++step, m += direction) {
    const std::int64_t v = resolve(m);
    if (v != 0) {
      if (witness) *witness = m;
      if (witness_value) *witness_value = v;
      return false;
    }
  }
  // Unreachable for honest polynomials: degree+1 consecutive roots force
  // the zero polynomial.
  throw error("polynomial tail vanished at degree+2 consecutive points but is not zero");
}

std::vector<std::string> check_graded(const GradedDimension& g) {
  std::vector<std::string> problems;
  if (g.window_lo > g.window_hi) {
    problems.push_back("window_lo > window_hi");
    return problems;
  }
  for (const auto& [m, v] : g.values) {
    if (m < g.window_lo || m > g.window_hi) {
      problems.push_back("value at m = " + std::to_string(m) + " outside window");
    }
    if (v < 0) {
      problems.push_back("negative dimension " + std::to_string(v) + " at m = " + std::to_string(m));
    }
  }
  auto check_tail = [&](const Tail& tail, int edge, int direction, const char* side) {
    if (tail.kind != Tail::Kind::Poly) return;
    Rational at_edge = tail.poly.eval_at(edge);
    auto edge_it = g.values.find(edge);
    const std::int64_t stored = edge_it == g.values.end() ? 0 : edge_it->second;
    if (!is_integer(at_edge) || to_int64(at_edge) != stored) {
      problems.push_back(std::string(side) + " tail disagrees with stored value at window edge m = " +
                         std::to_string(edge));
    }
    for (int step = 1; step <= 10; ++step) {
      const std::int64_t m = edge + static_cast<std::int64_t>(step) * direction;
      Rational val = tail.poly.eval_at(m);
      if (!is_integer(val) || val < 0) {
        problems.push_back(std::string(side) + " tail not a nonnegative integer at m = " +
                           std::to_string(m) + " (value " + rational_to_string(val) + ")");
      }
    }
  };
  check_tail(g.pos_tail, g.window_hi, +1, "positive");
  check_tail(g.neg_tail, g.window_lo, -1, "negative");
  return problems;
}

}  // namespace conehodge
