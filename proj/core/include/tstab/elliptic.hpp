#pragma once

// Standard stability on the elliptic-curve model and the A(q, P) torsion
// pairs of its sheaves.
//
// Slopes are (shift, mu, point) ordered lexicographically with the point order
// breaking ties between stable classes of equal mu. The torsion pair A(q, P)
// puts a stable class into A0 when mu < q, or mu = q and its point lies in P;
// everything else is A1. The tilted heart is A1[0] + A0[1].

#include <string>
#include <vector>

#include "tstab/elliptic_object.hpp"
#include "tstab/stability.hpp"
#include "tstab/t_structure.hpp"

namespace tstab {

class EllipticStability final : public Stability {
 public:
  explicit EllipticStability(PointOrder order = {}) : order_(std::move(order)) {}

  const PointOrder& point_order() const noexcept { return order_; }

  std::string name() const override { return "elliptic"; }
  std::strong_ordering compare(const SlopeId& a, const SlopeId& b) const override;
  SlopeId tau(const SlopeId& s) const override;
  SlopeId tau_inverse(const SlopeId& s) const override;
  EllipticFiltration hn(const EllipticObject& x) const override;
  /// Classes with rank <= w.max_length and |degree - centre| <= radius.
  std::vector<SlopeId> window_slopes(const Window& w) const override;

 private:
  PointOrder order_;
};

SlopeId elliptic_slope(const ShiftedStable& t);

EllipticFiltration hn_elliptic(const EllipticObject& x, const EllipticStability& family = EllipticStability{});

struct QpSplit {
  EllipticObject a1;
  EllipticObject a0;
  /// Hom(A1 part, A0 part) = 0, checked class by class.
  bool hom_vanishing = true;
};

/// Whether a stable class lies in A(q, P)_0.
bool in_a0(const StableClass& c, const ExtendedRational& q, const PointSet& P);

/// Splits a shift-0 object. Throws QOutOfRange unless q is +inf or in [0, 1),
/// BadParams when a summand is not at shift 0.
QpSplit a_qp_split(const EllipticObject& x, const ExtendedRational& q, const PointSet& P);

/// X is in the heart iff every summand is an A1 class at shift 0 or an A0
/// class at shift 1. Throws QOutOfRange.
bool elliptic_heart_contains(const EllipticObject& x, const ExtendedRational& q, const PointSet& P);

}  // namespace tstab
