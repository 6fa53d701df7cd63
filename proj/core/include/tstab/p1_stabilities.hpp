#pragma once

// Concrete t-stabilities on the derived category of the projective line.
//
//   coarse       slopes Z, an object's slope is its shift
//   standard     slopes Z x (Z + points); O(n)[i] at (i, Int n), T(x,d)[i] at (i, Pt x)
//   exceptional  slopes Z x {0, 1} for the pair (O(k), O(k+1)) with parameter p
//
// In the exceptional order the two columns interleave as
//
//     ... < (i+p, 0) < (i-1, 1) < (i+p+1, 0) < (i, 1) < ...
//
// for finite p, and every column-0 slope lies below every column-1 slope for
// p = infinity.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tstab/p1.hpp"
#include "tstab/stability.hpp"

namespace tstab {

class CoarseStability final : public Stability {
 public:
  std::string name() const override { return "coarse"; }
  std::strong_ordering compare(const SlopeId& a, const SlopeId& b) const override;
  SlopeId tau(const SlopeId& s) const override;
  SlopeId tau_inverse(const SlopeId& s) const override;
  HNFiltration hn(const DerivedObject& x) const override;
  std::vector<SlopeId> window_slopes(const Window& w) const override;
};

class StandardStability final : public Stability {
 public:
  /// With torsion_above_lines = false the torsion slopes of a shift sit below
  /// its line bundles. That order violates Hom vanishing; it exists so the
  /// validators can be seen to reject it.
  explicit StandardStability(PointOrder order = {}, bool torsion_above_lines = true)
      : order_(std::move(order)), torsion_above_lines_(torsion_above_lines) {}

  const PointOrder& point_order() const noexcept { return order_; }
  bool torsion_above_lines() const noexcept { return torsion_above_lines_; }

  std::string name() const override { return "standard"; }
  std::strong_ordering compare(const SlopeId& a, const SlopeId& b) const override;
  SlopeId tau(const SlopeId& s) const override;
  SlopeId tau_inverse(const SlopeId& s) const override;
  HNFiltration hn(const DerivedObject& x) const override;
  std::vector<SlopeId> window_slopes(const Window& w) const override;

 private:
  PointOrder order_;
  bool torsion_above_lines_;
};

SlopeId standard_slope(const ShiftedIndec& t);

/// p = nullopt is p = infinity.
std::strong_ordering compare_exceptional(const ExceptionalSlope& a, const ExceptionalSlope& b,
                                         std::optional<std::int64_t> p);

class ExceptionalStability final : public Stability {
 public:
  /// Throws BadParams for negative p.
  ExceptionalStability(std::int64_t k, std::optional<std::int64_t> p);

  std::int64_t k() const noexcept { return k_; }
  std::optional<std::int64_t> p() const noexcept { return p_; }

  std::string name() const override { return "exceptional"; }
  std::strong_ordering compare(const SlopeId& a, const SlopeId& b) const override;
  SlopeId tau(const SlopeId& s) const override;
  SlopeId tau_inverse(const SlopeId& s) const override;
  HNFiltration hn(const DerivedObject& x) const override;
  std::vector<SlopeId> window_slopes(const Window& w) const override;

 private:
  std::int64_t k_;
  std::optional<std::int64_t> p_;
};

struct Rewrite {
  /// One or two quotients, ascending in every exceptional order.
  std::vector<Quotient<DerivedObject>> quotients;
  /// The sub-object with the higher-slope quotient; zero for a generator.
  DerivedObject mid_term;
};

/// The destabilising triangle of a single indecomposable for (O(k), O(k+1)):
///
///   n > k+1:  (n-k) O(k+1) -> O(n) -> (n-k-1) O(k)[1]
///   n < k:    (k-n) O(k+1)[-1] -> O(n) -> (k-n+1) O(k)
///   torsion:  d O(k+1) -> T(x,d) -> d O(k)[1]
Rewrite exceptional_rewrite(const ShiftedIndec& t, std::int64_t k);

/// Filtration of m copies of t with the rewrite's terms.
HNFiltration rewrite_filtration(const ShiftedIndec& t, std::int64_t multiplicity, std::int64_t k);

HNFiltration hn_standard(const DerivedObject& x, const StandardStability& family = StandardStability{});
HNFiltration hn_exceptional(const DerivedObject& x, std::int64_t k, std::optional<std::int64_t> p);

// Coarsening ---------------------------------------------------------------

/// The slope set of labels for blocks indexed by integers, with a chosen tau.
class BlockOrder final : public Stability {
 public:
  /// tau(block i) = block (i + step).
  explicit BlockOrder(std::int64_t step = 0) : step_(step) {}
  std::string name() const override { return "blocks"; }
  std::strong_ordering compare(const SlopeId& a, const SlopeId& b) const override;
  SlopeId tau(const SlopeId& s) const override;
  SlopeId tau_inverse(const SlopeId& s) const override;
  std::vector<SlopeId> window_slopes(const Window& w) const override;

 private:
  std::int64_t step_;
};

/// A partition of a base slope set into order-convex blocks, given by the
/// label map r and the ordered label set (target).
struct Partition {
  std::string name;
  FamilyPtr target;
  std::function<SlopeId(const SlopeId&)> label;
};

/// Blocks {shift = i}; labels in the coarse family.
Partition partition_by_shift();
/// Every slope its own block.
Partition partition_singletons(FamilyPtr base);
/// For finite p the blocks {(j+p+1, 0), (j, 1)}; for p = infinity the two
/// columns.
Partition partition_exceptional_pairs(const ExceptionalStability& base);

class CoarsenedStability final : public Stability {
 public:
  /// Throws InvalidPartition unless r is monotone and tau-equivariant on the
  /// window slopes of the base.
  CoarsenedStability(FamilyPtr base, Partition partition, const Window& window = {});

  const Stability& base() const noexcept { return *base_; }
  const Partition& partition() const noexcept { return partition_; }

  std::string name() const override { return "coarsened"; }
  std::strong_ordering compare(const SlopeId& a, const SlopeId& b) const override;
  SlopeId tau(const SlopeId& s) const override;
  SlopeId tau_inverse(const SlopeId& s) const override;
  /// Per summand: a summand whose base HN slopes all fall in one block is
  /// semistable of that label; otherwise each run of quotients inside a
  /// block becomes one quotient.
  HNFiltration hn(const DerivedObject& x) const override;
  std::vector<SlopeId> window_slopes(const Window& w) const override;

 private:
  FamilyPtr base_;
  Partition partition_;
};

FamilyPtr coarsen(FamilyPtr base, Partition partition, const Window& window = {});

struct FinerVerdict {
  bool finer = true;
  std::string witness;
  std::string reason;
};

/// Checks on the generators of the window that (i) every fine-semistable
/// generator is weak-semistable, (ii) the induced slope map is well defined
/// and monotone, (iii) it commutes with tau. Generators are tried at the
/// window's shift centre first, line bundles by degree upward from the
/// degree centre and then downward, then torsion, then other shifts.
FinerVerdict is_finer(const Stability& fine, const Stability& weak, const Window& window = {});

struct FinestReport {
  bool finest = true;
  std::size_t slopes_checked = 0;
  std::string witness;
};

/// For each slope in the window, degree-0 Hom must be nonzero in both
/// directions between any two semistable generators of that slope.
FinestReport finest_check(const Stability& family, const Window& window = {});

}  // namespace tstab
