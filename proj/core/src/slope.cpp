#include "tstab/slope.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tstab/error.hpp"

namespace tstab {

bool K0Class::is_zero() const noexcept {
  for (auto c : components) {
    if (c != 0) return false;
  }
  return true;
}

K0Class& K0Class::operator+=(const K0Class& other) {
  if (other.arity() != arity()) {
    throw DomainError(ErrorCode::ArityMismatch, "K0 classes of different arity");
  }
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += other.components[i];
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& other) { return *this += -other; }

K0Class K0Class::operator-() const { return scaled(-1); }

K0Class K0Class::scaled(std::int64_t m) const {
  K0Class out = *this;
  for (auto& c : out.components) c *= m;
  return out;
}

std::string to_string(const K0Class& cls) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < cls.components.size(); ++i) {
    if (i) os << ',';
    os << cls.components[i];
  }
  os << ')';
  return os.str();
}

namespace {

void require_arity(const PositiveSystem& system, const K0Class& cls) {
  if (cls.arity() != system.arity()) {
    throw DomainError(ErrorCode::ArityMismatch,
                      "class " + to_string(cls) + " has arity " + std::to_string(cls.arity()) +
                          ", system has " + std::to_string(system.arity()));
  }
}

// Empty when positive; otherwise the reason. The zero vector is read as the
// zero object, which only a positive base forbids outright.
std::string positivity_failure(const PositiveSystem& system, const K0Class& cls) {
  if (cls.is_zero()) return system.is_base ? "base violation: zero vector" : std::string();
  const auto& x = cls.components;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0) return {};
    if (x[i] < 0) {
      return system.labels.at(i) + " < 0 after " + std::to_string(i) + " leading zeros";
    }
  }
  return {};  // unreachable: some component is nonzero
}

}  // namespace

std::vector<PositivityViolation> check_positive(const PositiveSystem& system,
                                                const std::vector<K0Class>& samples) {
  std::vector<PositivityViolation> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    require_arity(system, samples[i]);
    if (auto reason = positivity_failure(system, samples[i]); !reason.empty()) {
      out.push_back({i, samples[i], std::move(reason)});
    }
  }
  return out;
}

double SlopeComponent::approx() const {
  if (one_) return 1.0;
  // arcctg with range (0, pi): arcctg(q) = pi/2 - atan(q).
  const double q = static_cast<double>(arg_.numerator()) / static_cast<double>(arg_.denominator());
  return (std::numbers::pi / 2 - std::atan(q)) / std::numbers::pi;
}

std::strong_ordering operator<=>(const SlopeComponent& a, const SlopeComponent& b) {
  if (a.one_ || b.one_) return a.one_ <=> b.one_;
  // arcctg decreases: Nu(p) < Nu(q) iff p > q.
  if (a.arg_ > b.arg_) return std::strong_ordering::less;
  if (a.arg_ < b.arg_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const SlopeValue& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    if (i) os << ", ";
    const auto& c = v.components[i];
    if (c.is_one()) {
      os << "One";
    } else {
      os << "Nu(" << to_string(c.argument()) << ')';
    }
  }
  os << ')';
  return os.str();
}

SlopeValue gamma_slope(const PositiveSystem& system, const K0Class& cls) {
  require_arity(system, cls);
  if (cls.is_zero()) throw DomainError(ErrorCode::ZeroClass, "slope of the zero class");
  if (auto reason = positivity_failure(system, cls); !reason.empty()) {
    throw DomainError(ErrorCode::NotPositive, to_string(cls) + ": " + reason);
  }
  const auto& x = cls.components;
  std::size_t s = 0;
  while (x[s] == 0) ++s;

  SlopeValue out;
  out.components.reserve(x.size() - 1);
  for (std::size_t i = 0; i < s; ++i) out.components.push_back(SlopeComponent::one());
  for (std::size_t j = s + 1; j < x.size(); ++j) {
    out.components.push_back(SlopeComponent::nu(Rational(-x[j], x[s])));
  }
  // s == r-1 leaves r-1 leading ones and no Nu entries; length is r-1 either way.
  return out;
}

std::strong_ordering compare_slopes(const SlopeValue& a, const SlopeValue& b) {
  if (a.components.size() != b.components.size()) {
    throw DomainError(ErrorCode::LengthMismatch, "slope vectors of different length");
  }
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (auto c = a.components[i] <=> b.components[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

ExtendedRational mu_bar(const K0Class& cls) {
  const auto system = PositiveSystem::rank_degree();
  require_arity(system, cls);
  if (cls.is_zero()) throw DomainError(ErrorCode::ZeroClass, "slope of the zero class");
  if (auto reason = positivity_failure(system, cls); !reason.empty()) {
    throw DomainError(ErrorCode::NotPositive, to_string(cls) + ": " + reason);
  }
  if (cls.rank() == 0) return ExtendedRational::plus_infinity();
  return ExtendedRational(Rational(cls.degree(), cls.rank()));
}

std::string_view to_string(SeesawAlternative alt) noexcept {
  switch (alt) {
    case SeesawAlternative::Increasing: return "increasing";
    case SeesawAlternative::Decreasing: return "decreasing";
    case SeesawAlternative::Equal: return "equal";
    case SeesawAlternative::Mixed: return "mixed";
  }
  return "mixed";
}

SeesawReport seesaw_check(const PositiveSystem& system, const K0Class& a, const K0Class& c) {
  SeesawReport report;
  report.left = gamma_slope(system, a);
  report.middle = gamma_slope(system, a + c);
  report.right = gamma_slope(system, c);

  const auto ab = compare_slopes(report.left, report.middle);
  const auto ac = compare_slopes(report.left, report.right);
  const auto bc = compare_slopes(report.middle, report.right);
  if (ab == ac && ac == bc) {
    if (ab < 0) {
      report.alternative = SeesawAlternative::Increasing;
    } else if (ab > 0) {
      report.alternative = SeesawAlternative::Decreasing;
    } else {
      report.alternative = SeesawAlternative::Equal;
    }
  }
  return report;
}

}  // namespace tstab
