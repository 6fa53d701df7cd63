#pragma once

// Slopes from positive systems of additive functions on a free K0 model.
//
// A class x = (x_0, ..., x_{r-1}) with leading zeros x_0 = ... = x_{s-1} = 0
// gets the slope vector
//
//     (One, ..., One, Nu(-x_{s+1}/x_s), ..., Nu(-x_{r-1}/x_s))
//
// of length r-1. Nu(q) stands for arcctg(q)/pi, a strictly decreasing
// function of q, so the comparator orders Nu components by reversed rational
// order and never evaluates the arc cotangent.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tstab/rational.hpp"

namespace tstab {

struct K0Class {
  std::vector<std::int64_t> components;

  K0Class() = default;
  explicit K0Class(std::vector<std::int64_t> c) : components(std::move(c)) {}
  /// The (rank, degree) class used by the curve categories.
  static K0Class rank_degree(std::int64_t rank, std::int64_t degree) {
    return K0Class({rank, degree});
  }

  std::size_t arity() const noexcept { return components.size(); }
  bool is_zero() const noexcept;
  std::int64_t rank() const { return components.at(0); }
  std::int64_t degree() const { return components.at(1); }

  K0Class& operator+=(const K0Class& other);
  K0Class& operator-=(const K0Class& other);
  friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
  friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
  K0Class operator-() const;
  K0Class scaled(std::int64_t m) const;

  friend bool operator==(const K0Class&, const K0Class&) = default;
};

std::string to_string(const K0Class& cls);

struct PositiveSystem {
  std::vector<std::string> labels;
  /// Whether the zero vector must mean the zero object.
  bool is_base = false;

  std::size_t arity() const noexcept { return labels.size(); }

  /// (rk, deg) on coherent sheaves of a curve; a positive base.
  static PositiveSystem rank_degree() { return {{"rk", "deg"}, true}; }
};

struct PositivityViolation {
  std::size_t sample_index = 0;
  K0Class sample;
  std::string reason;
};

/// Checks the cascading positivity conditions on each sample.
/// Throws DomainError(ArityMismatch) if a sample has the wrong length.
std::vector<PositivityViolation> check_positive(const PositiveSystem& system,
                                                const std::vector<K0Class>& samples);

class SlopeComponent {
 public:
  static SlopeComponent one() { return SlopeComponent(true, Rational(0)); }
  static SlopeComponent nu(Rational q) { return SlopeComponent(false, q); }

  bool is_one() const noexcept { return one_; }
  /// Argument of Nu; meaningless for One.
  const Rational& argument() const noexcept { return arg_; }

  /// Display value only: 1 for One, arcctg(q)/pi otherwise.
  double approx() const;

  friend bool operator==(const SlopeComponent&, const SlopeComponent&) = default;
  friend std::strong_ordering operator<=>(const SlopeComponent& a, const SlopeComponent& b);

 private:
  SlopeComponent(bool one, Rational q) : one_(one), arg_(q) {}
  bool one_;
  Rational arg_;
};

struct SlopeValue {
  std::vector<SlopeComponent> components;
  friend bool operator==(const SlopeValue&, const SlopeValue&) = default;
};

std::string to_string(const SlopeValue& v);

/// Throws ZeroClass for the zero vector, NotPositive when the class fails
/// positivity, ArityMismatch on a length mismatch.
SlopeValue gamma_slope(const PositiveSystem& system, const K0Class& cls);

/// Lexicographic comparison; throws LengthMismatch on different lengths.
std::strong_ordering compare_slopes(const SlopeValue& a, const SlopeValue& b);

/// deg/rk, or +inf for rank zero. Requires arity 2 and a nonzero positive class.
ExtendedRational mu_bar(const K0Class& cls);

enum class SeesawAlternative { Increasing, Decreasing, Equal, Mixed };

std::string_view to_string(SeesawAlternative alt) noexcept;

struct SeesawReport {
  SeesawAlternative alternative = SeesawAlternative::Mixed;
  SlopeValue left, middle, right;
  bool holds() const noexcept { return alternative != SeesawAlternative::Mixed; }
};

/// Seesaw test for the sequence 0 -> a -> a+c -> c -> 0.
SeesawReport seesaw_check(const PositiveSystem& system, const K0Class& a, const K0Class& c);

}  // namespace tstab
