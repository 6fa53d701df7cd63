#pragma once

// Split normal forms for objects of the bounded derived category of coherent
// sheaves on the projective line, and the Hom/Ext dimension table.
//
// Since Coh P1 has homological dimension one, every object is a finite
// direct sum of shifted indecomposable sheaves: line bundles O(n) and the
// length-d torsion sheaves T(x, d) supported at a point x. O_x is T(x, 1).

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tstab/formal_sum.hpp"
#include "tstab/slope.hpp"

namespace tstab {

/// Total order on point labels. Declared labels form the top of the order in
/// declaration order; undeclared labels sit below them, lexicographically.
class PointOrder {
 public:
  PointOrder() = default;
  /// Throws DomainError(BadParams) on duplicate or malformed labels.
  explicit PointOrder(std::vector<std::string> declared);

  const std::vector<std::string>& declared() const noexcept { return declared_; }
  bool is_declared(const std::string& label) const;
  std::strong_ordering compare(const std::string& a, const std::string& b) const;

  friend bool operator==(const PointOrder&, const PointOrder&) = default;

 private:
  std::vector<std::string> declared_;
};

/// Point labels are nonempty strings of letters and digits.
bool is_valid_label(const std::string& label);

struct Line {
  std::int64_t degree = 0;
  friend auto operator<=>(const Line&, const Line&) = default;
};

struct Torsion {
  std::string point;
  std::int64_t length = 1;
  friend auto operator<=>(const Torsion&, const Torsion&) = default;
};

using Indecomposable = std::variant<Line, Torsion>;

struct ShiftedIndec {
  Indecomposable base;
  std::int64_t shift = 0;

  friend bool operator==(const ShiftedIndec&, const ShiftedIndec&) = default;
  // Canonical order: shift, then line bundles before torsion, then degree or
  // (point label, length).
  friend std::strong_ordering operator<=>(const ShiftedIndec& a, const ShiftedIndec& b) {
    if (auto c = a.shift <=> b.shift; c != 0) return c;
    return a.base <=> b.base;
  }
};

using DerivedObject = FormalSum<ShiftedIndec>;

/// O(n)[shift]
ShiftedIndec line(std::int64_t degree, std::int64_t shift = 0);
/// T(point, length)[shift]; throws DomainError(InvalidLength) for length < 1.
ShiftedIndec torsion(const std::string& point, std::int64_t length, std::int64_t shift = 0);

DerivedObject object(const ShiftedIndec& t, std::int64_t multiplicity = 1);

/// Sums of indecomposables with multiplicities; merged and sorted.
DerivedObject normalize(const std::vector<std::pair<ShiftedIndec, std::int64_t>>& sum);

DerivedObject shift(const DerivedObject& x, std::int64_t n);

std::string render(const Indecomposable& base);
std::string render(const ShiftedIndec& t);
/// Canonical text: `m*O(n)[i]`, `m*T(label,d)[i]` joined by ` + `; `0` for zero.
/// Multiplicity 1 is written without the `1*` prefix.
std::string render(const DerivedObject& x);

K0Class k0_class(const Indecomposable& base);
K0Class k0_class(const ShiftedIndec& t);
K0Class k0_class(const DerivedObject& x);

/// dim Ext^e_Coh(a, b) for sheaves; zero outside e in {0, 1}.
std::int64_t ext_dim(const Indecomposable& a, const Indecomposable& b, std::int64_t e);

/// dim Hom^q(A, B) = dim Ext^{q + shift(B) - shift(A)}(base A, base B).
std::int64_t hom_dim(const ShiftedIndec& a, const ShiftedIndec& b, std::int64_t q);

/// Degree q -> dim Hom^q; zero entries are omitted.
using HomProfile = std::map<std::int64_t, std::int64_t>;

HomProfile hom_profile(const ShiftedIndec& a, const ShiftedIndec& b);
HomProfile hom_profile(const DerivedObject& x, const DerivedObject& y);

/// True when Hom^q vanishes for every q <= 0.
bool vanishes_in_nonpositive_degrees(const HomProfile& profile);

/// Riemann-Roch pairing on P1: rk(a)rk(b) + rk(a)deg(b) - deg(a)rk(b).
std::int64_t euler_form(const K0Class& a, const K0Class& b);

}  // namespace tstab
