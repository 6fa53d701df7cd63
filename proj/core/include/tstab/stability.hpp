#pragma once

// Stability data on a triangulated category, in the split model.
//
// A family fixes a linearly ordered slope set with a shift automorphism tau
// and, for every object, a Harder-Narasimhan filtration
//
//     X = F^0 X  <-  F^1 X  <-  ...  <-  F^n X = 0,     F^i X / F^{i+1} X = Q_i,
//
// with semistable quotients Q_i of strictly ascending slope. A filtration is
// stored as its quotient list together with the term objects F^i X; the
// connecting morphisms are never represented. For split objects the checks in
// verify_hn characterise the HN filtration, so no morphism data is needed.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tstab/elliptic_object.hpp"
#include "tstab/p1.hpp"
#include "tstab/rational.hpp"

namespace tstab {

struct CoarseSlope {
  std::int64_t shift = 0;
  friend bool operator==(const CoarseSlope&, const CoarseSlope&) = default;
};

struct IntLevel {
  std::int64_t degree = 0;
  friend bool operator==(const IntLevel&, const IntLevel&) = default;
};

struct PointLevel {
  std::string point;
  friend bool operator==(const PointLevel&, const PointLevel&) = default;
};

struct StandardSlope {
  std::int64_t shift = 0;
  std::variant<IntLevel, PointLevel> level;
  friend bool operator==(const StandardSlope&, const StandardSlope&) = default;
};

struct ExceptionalSlope {
  std::int64_t shift = 0;
  int column = 0;  // 0 for O(k), 1 for O(k+1)
  friend bool operator==(const ExceptionalSlope&, const ExceptionalSlope&) = default;
};

struct EllipticSlope {
  std::int64_t shift = 0;
  ExtendedRational mu;
  StableClass cls;
  friend bool operator==(const EllipticSlope&, const EllipticSlope&) = default;
};

/// Label of a block in a coarsened slope set.
struct BlockSlope {
  std::int64_t index = 0;
  friend bool operator==(const BlockSlope&, const BlockSlope&) = default;
};

using SlopeId = std::variant<CoarseSlope, StandardSlope, ExceptionalSlope, EllipticSlope, BlockSlope>;

std::string render(const SlopeId& slope);

template <class Object>
struct Quotient {
  SlopeId slope;
  Object object;
  friend bool operator==(const Quotient&, const Quotient&) = default;
};

template <class Object>
struct Filtration {
  /// Ascending in slope for an HN filtration.
  std::vector<Quotient<Object>> quotients;
  /// terms[0] = X, terms.back() = 0, one more entry than quotients.
  std::vector<Object> terms = {Object{}};

  const Object& object() const { return terms.front(); }
  friend bool operator==(const Filtration&, const Filtration&) = default;
};

using HNFiltration = Filtration<DerivedObject>;
using EllipticFiltration = Filtration<EllipticObject>;

/// Finite generator window used by the window-certified checks.
struct Window {
  std::int64_t shift_radius = 2;
  std::int64_t shift_center = 0;
  std::int64_t degree_radius = 8;
  std::int64_t degree_center = 0;
  std::int64_t max_length = 3;
  std::vector<std::string> points = {"x", "y"};
};

/// Every O(n)[i] and T(x,d)[i] in the window.
std::vector<ShiftedIndec> window_indecomposables(const Window& w);

class Stability {
 public:
  virtual ~Stability() = default;

  /// "standard", "exceptional", "coarse", "elliptic", "coarsened", ...
  virtual std::string name() const = 0;

  /// Throws DomainError(CrossFamily) for slopes of another family.
  virtual std::strong_ordering compare(const SlopeId& a, const SlopeId& b) const = 0;
  virtual SlopeId tau(const SlopeId& s) const = 0;
  virtual SlopeId tau_inverse(const SlopeId& s) const = 0;

  /// Throws DomainError(UnsupportedFamily) unless overridden.
  virtual HNFiltration hn(const DerivedObject& x) const;
  virtual EllipticFiltration hn(const EllipticObject& x) const;

  /// Slopes occurring in the window, ascending.
  virtual std::vector<SlopeId> window_slopes(const Window& w) const = 0;

  bool less(const SlopeId& a, const SlopeId& b) const { return compare(a, b) < 0; }
};

using FamilyPtr = std::shared_ptr<const Stability>;

/// HN filtration of X; the zero object gets the empty filtration.
template <class Object>
Filtration<Object> hn(const Object& x, const Stability& family) {
  if (x.is_zero()) return {};
  return family.hn(x);
}

/// The slope when X is semistable (single HN quotient), empty otherwise.
template <class Object>
std::optional<SlopeId> is_semistable(const Object& x, const Stability& family);

/// Merges filtrations of direct summands into the filtration of their sum,
/// sorting by slope and coalescing equal slopes. Term F^i of the result is the
/// sum of each part's first term whose slopes are all >= the i-th slope.
template <class Object>
Filtration<Object> merge_by_slope(const Stability& family, const std::vector<Filtration<Object>>& parts);

template <class Object>
Filtration<Object> scaled(const Filtration<Object>& f, std::int64_t multiplicity);

/// Object shifted by n and every slope mapped by tau^n.
template <class Object>
Filtration<Object> shifted(const Filtration<Object>& f, const Stability& family, std::int64_t n);

/// Rebuilds terms from the quotients as running tail sums (exact for split
/// filtrations, K0-correct always).
template <class Object>
Filtration<Object> with_running_terms(std::vector<Quotient<Object>> quotients);

enum class ShuffleMode { BySlope, Explicit };

/// Interleaves fa (of X) and fb (of Y) into a filtration of X + Y.
/// In Explicit mode `order` lists 0/1 source tags, one per quotient; each
/// source keeps its internal order. Throws InvalidShuffle on a bad order.
template <class Object>
Filtration<Object> shuffle_merge(const Stability& family, const Filtration<Object>& fa,
                                 const Filtration<Object>& fb, ShuffleMode mode,
                                 const std::vector<int>& order = {});

template <class Object>
struct FiltrationBlock {
  std::optional<SlopeId> slope;
  Object sum;
  std::vector<Quotient<Object>> inner;
  friend bool operator==(const FiltrationBlock&, const FiltrationBlock&) = default;
};

/// Concatenates the inner quotient lists of consecutive outer quotients.
template <class Object>
std::vector<Quotient<Object>> glue(const std::vector<FiltrationBlock<Object>>& outer);

/// Groups a flat quotient list into consecutive blocks given by index lists.
/// Throws NonConsecutiveBlocks unless the blocks cover 0..n-1 in order.
template <class Object>
std::vector<FiltrationBlock<Object>> split(const std::vector<Quotient<Object>>& flat,
                                           const std::vector<std::vector<std::size_t>>& blocks);

struct HnReport {
  bool ascending = true;     // (a)
  bool semistable = true;    // (b)
  bool hom_vanishing = true; // (c)
  bool k0_additive = true;   // (d)
  bool endpoints = true;     // (e)
  std::vector<std::string> failures;

  bool ok() const noexcept {
    return ascending && semistable && hom_vanishing && k0_additive && endpoints;
  }
};

/// Checks (a) strictly ascending slopes, (b) semistable nonzero quotients of
/// the recorded slope, (c) Hom^{<=0}(Q_j, Q_i) = 0 for j > i, (d) K0
/// additivity of the terms, (e) terms[0] = X and terms.back() = 0.
template <class Object>
HnReport verify_hn(const Object& x, const Filtration<Object>& filt, const Stability& family);

struct StabilityReport {
  bool tau_equivariant = true;
  bool tau_raises = true;
  bool hom_vanishing = true;
  bool hn_verified = true;
  std::size_t generators_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t objects_checked = 0;
  std::vector<std::string> failures;
  /// First Hom-vanishing violation, rendered as "Hom^q(A, B) = d".
  std::string witness;

  bool ok() const noexcept { return tau_equivariant && tau_raises && hom_vanishing && hn_verified; }
};

/// Checks the stability axioms on the semistable generators of the window:
/// tau-equivariance of slopes under [1], tau(phi) > phi, and Hom^{<=0}
/// vanishing from higher to lower slopes; then runs hn + verify_hn on
/// `random_objects` seeded random objects.
StabilityReport validate_stability(const Stability& family, const Window& window,
                                   std::size_t random_objects = 200, std::uint64_t seed = 1);

}  // namespace tstab
