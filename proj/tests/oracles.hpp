#pragma once

// Test-side oracles, written independently of the library code paths they
// check: Riemann-Roch on P1 and on an elliptic curve, position functions for
// the slope orders, and the A(q, P) membership rule in integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>

namespace oracle {

// chi(E, F) = rk E rk F + rk E deg F - deg E rk F on P1.
inline std::int64_t chi_p1(std::int64_t r1, std::int64_t d1, std::int64_t r2, std::int64_t d2) {
  return r1 * r2 + r1 * d2 - d1 * r2;
}

// chi(E, F) = rk E deg F - deg E rk F on an elliptic curve.
inline std::int64_t chi_elliptic(std::int64_t r1, std::int64_t d1, std::int64_t r2, std::int64_t d2) {
  return r1 * d2 - d1 * r2;
}

// h^0(O(n)) on P1.
inline std::int64_t h0_line(std::int64_t n) { return std::max<std::int64_t>(n + 1, 0); }

// Position of an exceptional slope in the chain
//   ... < (i+p, 0) < (i-1, 1) < (i+p+1, 0) < (i, 1) < ...
// for finite p. Strictly increasing along the chain.
inline std::int64_t exceptional_position(std::int64_t shift, int column, std::int64_t p) {
  return column == 0 ? 2 * shift : 2 * (shift + p + 1) + 1;
}

// Order of two exceptional slopes: finite p from the chain position, p = inf
// puts column 0 first. Returns -1, 0 or 1.
inline int exceptional_order(std::int64_t s1, int c1, std::int64_t s2, int c2, std::optional<std::int64_t> p) {
  std::tuple<std::int64_t, std::int64_t> a;
  std::tuple<std::int64_t, std::int64_t> b;
  if (p) {
    a = {exceptional_position(s1, c1, *p), 0};
    b = {exceptional_position(s2, c2, *p), 0};
  } else {
    a = {c1, s1};
    b = {c2, s2};
  }
  return a < b ? -1 : (b < a ? 1 : 0);
}

// A(q, P)_0 membership for q = qn/qd (qd > 0) or q = inf (qd == 0).
inline bool elliptic_in_a0(std::int64_t rank, std::int64_t degree, const std::string& point, std::int64_t qn,
                           std::int64_t qd, const std::string& p_points) {
  const bool in_p = p_points.find(point) != std::string::npos;
  if (qd == 0) return rank > 0 || in_p;  // every bundle has mu < inf
  if (rank == 0) return false;           // mu = inf > q
  const auto lhs = degree * qd;          // compare d/r with qn/qd
  const auto rhs = qn * rank;
  return lhs < rhs || (lhs == rhs && in_p);
}

}  // namespace oracle
