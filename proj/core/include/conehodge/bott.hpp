#pragma once

#include <cstdint>

#include "conehodge/rational.hpp"

namespace conehodge {

// C(n, k) with the usual convention C(n, k) = 0 for k < 0; n may be any
// integer (C(-3, 2) = 3 via the falling factorial).
BigInt binomial(std::int64_t n, std::int64_t k);

// dim H^q(P^n, Omega^p(k)) in closed form:
//   q = 0, k > p:      C(k+n-p, k) * C(k-1, p)
//   q = p, k = 0:      1
//   q = n, k < p-n:    C(-k+p, -k) * C(-k-1, n-p)
//   otherwise:         0
// At most one of the three nonzero branches applies to any (n, p, q, k).
// Validated exhaustively against the Cech-Koszul oracle (see oracle.hpp).
std::int64_t bott_dimension(int n, int p, int q, std::int64_t k);

}  // namespace conehodge
