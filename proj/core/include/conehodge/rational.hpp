#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace conehodge {

// All arithmetic in this library is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error type for contract violations: out-of-range indices, undeclared
// tails, corrupt tables, malformed input. Validation findings that are
// data rather than failures go through ValidationReport instead.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Serialized form is "a" or "a/b" with b > 0.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

bool is_integer(const Rational& r);

// Conversion guarded against overflow; throws conehodge::error if the
// value is not an integer or does not fit in 64 bits.
std::int64_t to_int64(const Rational& r);

std::int64_t to_int64(const BigInt& n);

}  // namespace conehodge
