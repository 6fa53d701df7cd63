#pragma once

// Reduced object model for an elliptic curve: formal sums of shifted stable
// classes. A stable class is a (rank, degree) pair with gcd 1 together with a
// point label standing for the Atiyah parameter; rank 0 means the skyscraper
// O_x (degree 1).
//
// Higher-rank indecomposable semistables are represented by multiples of the
// stable class; K0 and slopes are right, indecomposability is not tracked.

#include <compare>
#include <cstdint>
#include <string>

#include "tstab/formal_sum.hpp"
#include "tstab/p1.hpp"
#include "tstab/rational.hpp"
#include "tstab/slope.hpp"

namespace tstab {

struct StableClass {
  std::int64_t rank = 1;
  std::int64_t degree = 0;
  std::string point;

  /// Throws NonCoprime when gcd(rank, degree) != 1 or rank is negative,
  /// BadParams for a malformed label.
  static StableClass make(std::int64_t rank, std::int64_t degree, std::string point);

  friend auto operator<=>(const StableClass&, const StableClass&) = default;
};

struct ShiftedStable {
  StableClass cls;
  std::int64_t shift = 0;

  friend bool operator==(const ShiftedStable&, const ShiftedStable&) = default;
  friend std::strong_ordering operator<=>(const ShiftedStable& a, const ShiftedStable& b) {
    if (auto c = a.shift <=> b.shift; c != 0) return c;
    return a.cls <=> b.cls;
  }
};

using EllipticObject = FormalSum<ShiftedStable>;

EllipticObject object(const ShiftedStable& t, std::int64_t multiplicity = 1);

std::string render(const StableClass& c);
std::string render(const ShiftedStable& t);
/// `m*S(r,d,label)[i]` joined by ` + `; `0` for zero.
std::string render(const EllipticObject& x);

/// deg/rank, +inf for rank 0.
ExtendedRational mu_class(const StableClass& c);

/// Hom (ext_degree 0) and Ext^1 (ext_degree 1) between stable classes.
std::int64_t hom_dim_stable(const StableClass& e, const StableClass& f, std::int64_t ext_degree);

K0Class k0_class(const ShiftedStable& t);
K0Class k0_class(const EllipticObject& x);

HomProfile hom_profile(const EllipticObject& x, const EllipticObject& y);

}  // namespace tstab
