#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace tstab {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

/// A rational number or +infinity; +infinity is the maximum.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational q) : value_(q) {}  // NOLINT(implicit)
  ExtendedRational(std::int64_t n) : value_(Rational(n)) {}  // NOLINT(implicit)

  static ExtendedRational plus_infinity() {
    ExtendedRational r;
    r.value_.reset();
    return r;
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rational& finite() const { return *value_; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*b.value_ < *a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "inf" or "n" or "n/d".
  std::string to_string() const;
  /// Inverse of to_string; throws DomainError(BadParams) on junk.
  static ExtendedRational parse(const std::string& text);

 private:
  std::optional<Rational> value_ = Rational(0);
};

/// Integers extended by -inf and +inf, used for cut thresholds.
class ExtendedInt {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)

  static constexpr ExtendedInt neg_inf() { return ExtendedInt(Kind::NegInf); }
  static constexpr ExtendedInt pos_inf() { return ExtendedInt(Kind::PosInf); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr std::int64_t value() const noexcept { return value_; }

  /// Adds a finite offset; infinities absorb it.
  constexpr ExtendedInt plus(std::int64_t d) const {
    return is_finite() ? ExtendedInt(value_ + d) : *this;
  }

  friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a,
                                                    const ExtendedInt& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  /// "-inf", "inf" or the decimal value.
  std::string to_string() const;
  static ExtendedInt parse(const std::string& text);

 private:
  constexpr explicit ExtendedInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

}  // namespace tstab
