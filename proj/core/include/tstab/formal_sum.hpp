#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace tstab {

/// Finite formal sum of shifted indecomposables with positive multiplicities.
/// Key must be totally ordered and expose a mutable integer `shift`.
/// The map keeps the normal form: no zero entries, canonical key order.
template <class Key>
class FormalSum {
 public:
  using key_type = Key;
  using Terms = std::map<Key, std::int64_t>;

  FormalSum() = default;
  explicit FormalSum(const Key& key, std::int64_t multiplicity = 1) { add(key, multiplicity); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Multiplicities below one are ignored (a zero multiple is the zero object).
  FormalSum& add(const Key& key, std::int64_t multiplicity = 1) {
    if (multiplicity > 0) terms_[key] += multiplicity;
    return *this;
  }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& [k, m] : other.terms_) add(k, m);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

  FormalSum scaled(std::int64_t m) const {
    FormalSum out;
    if (m <= 0) return out;
    for (const auto& [k, mult] : terms_) out.terms_.emplace(k, mult * m);
    return out;
  }

  FormalSum shifted(std::int64_t n) const {
    FormalSum out;
    for (const auto& [k, m] : terms_) {
      Key moved = k;
      moved.shift += n;
      out.terms_.emplace(std::move(moved), m);
    }
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Terms terms_;
};

}  // namespace tstab
