#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "conehodge/polynomial.hpp"

namespace conehodge {

// Law governing a graded dimension beyond its finite window. Undeclared
// means the table asserts nothing there; operations that would need the
// value must refuse rather than assume vanishing.
struct Tail {
  enum class Kind { Undeclared, Zero, Poly };
  Kind kind = Kind::Undeclared;
  Polynomial poly;  // meaningful only for Kind::Poly

  static Tail undeclared() { return {}; }
  static Tail zero() { return {Kind::Zero, {}}; }
  static Tail polynomial(Polynomial p) { return {Kind::Poly, std::move(p)}; }

  bool declared() const { return kind != Kind::Undeclared; }
  // True when the tail certifies vanishing at every point it governs.
  bool identically_zero() const {
    return kind == Kind::Zero || (kind == Kind::Poly && poly.is_zero());
  }
  bool operator==(const Tail&) const = default;
};

// The integer-graded dimension function m -> dim, stored as explicit
// values on [window_lo, window_hi] plus a tail law on each side. The
// positive tail governs m > window_hi and must agree with the stored
// value at window_hi; symmetrically for the negative tail at window_lo.
struct GradedDimension {
  int window_lo = 0;
  int window_hi = 0;
  std::map<int, std::int64_t> values;
  Tail pos_tail;
  Tail neg_tail;

  static GradedDimension zero(int lo, int hi);

  bool operator==(const GradedDimension&) const = default;

  // Window value inside the window (absent key = 0), tail evaluation
  // outside. Throws on an undeclared governing tail and on polynomial
  // tails that evaluate to a negative or non-integer value.
  std::int64_t resolve(std::int64_t m) const;

  // True if dim(m) = 0 for every m in the given unbounded direction
  // starting from `from` (direction +1 or -1), certified by the window
  // values together with the tail law. Throws on undeclared tails. When
  // false and `witness` is given, it receives the nearest offending m.
  bool vanishes_from(std::int64_t from, int direction, std::int64_t* witness = nullptr,
                     std::int64_t* witness_value = nullptr) const;
};

// Structural checks of a single graded record: nonnegative window
// values, tail agreement at the window edge, and nonnegative integer
// polynomial values at the 10 integers nearest each edge. Returns a
// list of human-readable problems; empty = valid.
std::vector<std::string> check_graded(const GradedDimension& g);

}  // namespace conehodge
