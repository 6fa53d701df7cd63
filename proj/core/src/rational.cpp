#include "tstab/rational.hpp"

#include <charconv>

#include "tstab/error.hpp"

namespace tstab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::CrossFamily: return "CrossFamily";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::InvalidShuffle: return "InvalidShuffle";
    case ErrorCode::NonConsecutiveBlocks: return "NonConsecutiveBlocks";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotSlopeDescribable: return "NotSlopeDescribable";
    case ErrorCode::HomViolation: return "HomViolation";
    case ErrorCode::QOutOfRange: return "QOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::NonCoprime: return "NonCoprime";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError(ErrorCode::BadParams, "not an integer: '" + whole + "'");
  }
  return v;
}

}  // namespace

std::string ExtendedRational::to_string() const {
  return is_infinite() ? "inf" : tstab::to_string(*value_);
}

ExtendedRational ExtendedRational::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return plus_infinity();
  auto slash = text.find('/');
  if (slash == std::string::npos) return ExtendedRational(parse_int(text, text));
  auto num = parse_int(std::string_view(text).substr(0, slash), text);
  auto den = parse_int(std::string_view(text).substr(slash + 1), text);
  if (den == 0) throw DomainError(ErrorCode::BadParams, "zero denominator: '" + text + "'");
  return ExtendedRational(Rational(num, den));
}

std::string ExtendedInt::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: break;
  }
  return std::to_string(value_);
}

ExtendedInt ExtendedInt::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtendedInt(parse_int(text, text));
}

}  // namespace tstab
