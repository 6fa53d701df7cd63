#pragma once

// t-structures from cuts of a slope set.
//
// A cut Phi = Phi_- + Phi_+ with Phi_+ up-closed gives D^{<=0} as the objects
// whose HN slopes all lie in Phi_+, and D^{>=1} as those with all slopes in
// Phi_-. The heart is cut out by the slopes phi in Phi_+ with tau^{-1}(phi)
// in Phi_-.
//
// Cuts are finite threshold data:
//
//   standard     Phi_+ = {(i, a) : i >= c(a)} with
//                c(Int n) = m+1 if n < K else m,
//                c(Pt x)  = m if K < +inf or x in P, else m+1
//   exceptional  Phi_+ = {(i, 0) : i >= a} + {(j, 1) : j >= b}
//   coarse       Phi_+ = {i >= m}

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tstab/p1.hpp"
#include "tstab/p1_stabilities.hpp"
#include "tstab/rational.hpp"
#include "tstab/stability.hpp"

namespace tstab {

/// A set of point labels, or every point.
struct PointSet {
  bool all = false;
  std::vector<std::string> labels;  // sorted, unique

  static PointSet every() { return {true, {}}; }
  static PointSet none() { return {}; }
  static PointSet of(std::vector<std::string> labels);

  bool contains(const std::string& x) const;
  bool empty() const noexcept { return !all && labels.empty(); }
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// "all", "none" or the labels joined by ';'.
std::string to_string(const PointSet& p);

struct StandardCut {
  std::int64_t m = 0;
  ExtendedInt K = ExtendedInt::neg_inf();
  PointSet P = PointSet::every();
  friend bool operator==(const StandardCut&, const StandardCut&) = default;
};

struct ExceptionalCut {
  ExtendedInt a = 0;
  ExtendedInt b = 0;
  friend bool operator==(const ExceptionalCut&, const ExceptionalCut&) = default;
};

struct CoarseCut {
  std::int64_t m = 0;
  friend bool operator==(const CoarseCut&, const CoarseCut&) = default;
};

using SlopeCut = std::variant<StandardCut, ExceptionalCut, CoarseCut>;

/// CUTSPEC text: `std:m=0,K=inf,P=x;y`, `exc:a=1,b=-2`, `coarse:m=0`.
std::string render(const SlopeCut& cut);

/// Whether phi lies in Phi_+. Throws InvalidCut when cut and family do not match.
bool in_upper(const SlopeCut& cut, const SlopeId& phi, const Stability& family);

struct CutReport {
  bool valid = true;
  std::vector<std::string> failures;
};

/// Up-closedness of Phi_+ on the window slopes plus the threshold constraints.
CutReport validate_cut(const SlopeCut& cut, const Stability& family, const Window& window = {});

struct Truncation {
  DerivedObject le0;
  DerivedObject ge1;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// X_{<=0} -> X -> X_{>=1}, summand by summand from the HN filtrations.
/// Throws InvalidCut for an invalid cut.
Truncation truncate(const DerivedObject& x, const SlopeCut& cut, const Stability& family);

struct HeartDescription {
  std::string family;
  std::function<bool(const SlopeId&)> contains_slope;
  /// Generator list, e.g. {"O(n)[0], n >= 0", "O_x[0], x in P1", "O(n)[1], n < 0"}.
  std::vector<std::string> generators;
};

HeartDescription heart_slopes(const SlopeCut& cut, const Stability& family);
bool heart_contains(const DerivedObject& x, const SlopeCut& cut, const Stability& family);
bool is_bounded(const SlopeCut& cut, const Stability& family);

// Catalog ------------------------------------------------------------------

struct CatalogParams {
  std::optional<std::int64_t> p;
  PointSet P;
  /// Point order of the ambient session; D(P) moves P to the top of it.
  std::vector<std::string> points = {"x", "y", "z"};
};

struct CatalogEntry {
  std::string name;
  std::map<std::string, std::string> params;
  FamilyPtr family;
  SlopeCut cut;
  HeartDescription heart;
  bool bounded = true;
  bool quiver = false;
};

/// Names "A" ... "I". Throws BadParams for unknown names, a missing or
/// negative p for E and F, or an empty or total P for D.
CatalogEntry catalog(const std::string& name, const CatalogParams& params = {});
const std::vector<std::string>& catalog_names();

/// The autoequivalence - (x) O(twist) then [shift] - applied to a cut: the
/// image of Phi_+ under the induced slope map. Exceptional cuts only move
/// under the shift; the twist moves the family parameter k instead.
SlopeCut apply_autoequivalence(const SlopeCut& cut, std::int64_t twist, std::int64_t shift);

struct Classification {
  std::string name;
  std::map<std::string, std::string> params;
  /// Applying (twist, shift) to the catalog cut gives the input cut.
  std::int64_t twist = 0;
  std::int64_t shift = 0;
  std::vector<std::string> heart;
  bool bounded = true;
};

/// Throws InvalidCut or Unbounded.
Classification classify_bounded_cut(const SlopeCut& cut, const Stability& family);

/// True when (twist, shift) maps the catalog cut of `c` onto `cut` on the
/// window slopes and in canonical form.
bool reproduces(const Classification& c, const SlopeCut& cut, const Stability& family,
                const Window& window = {});

// Torsion pairs --------------------------------------------------------------

struct TorsionPair {
  std::string name;
  /// Membership of a sheaf in A1; the rest of the shift-0 indecomposables form A0.
  std::function<bool(const Indecomposable&)> in_a1;
};

/// The standard cut with Phi_+ = {i >= 1} + {(0, a) : slope-a sheaves in A1}.
/// Throws HomViolation when Hom(A1, A0) != 0 on the window, and
/// NotSlopeDescribable when A1 is not a union of standard slope classes cut by
/// a threshold.
StandardCut torsion_pair_cut(const TorsionPair& pair, const StandardStability& family,
                             const Window& window = {});

/// ASCII picture of the slope line with the D^{<=0} and D^{>=0} brackets.
std::string render_diagram(const CatalogEntry& entry);

}  // namespace tstab
