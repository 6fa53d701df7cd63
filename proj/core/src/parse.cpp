#include "tstab/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "tstab/error.hpp"

namespace tstab {

namespace {

enum class Model { Unknown, P1, Elliptic };

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ParsedObject parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    term();
    for (skip(); pos_ < s_.size(); skip()) {
      expect('+');
      term();
    }
    if (model_ == Model::Elliptic) return elliptic_;
    return derived_;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(ErrorCode::SyntaxError, pos_, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer(bool allow_sign) {
    skip();
    const auto start = pos_;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view digits = s_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
      pos_ = start;
      fail(allow_sign ? "expected an integer" : "expected a natural number");
    }
    return v;
  }

  std::string label() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a point label");
    return std::string(s_.substr(start, pos_ - start));
  }

  void use(Model m) {
    if (model_ != Model::Unknown && model_ != m) fail("cannot mix S terms with O and T terms");
    model_ = m;
  }

  void term() {
    skip();
    std::int64_t mult = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const auto save = pos_;
      const auto n = integer(false);
      if (peek('*')) {
        ++pos_;
        mult = n;
      } else if (n == 0) {
        zero_atom();
        return;
      } else {
        pos_ = save;
        fail("expected '*' after a multiplicity");
      }
    }
    skip();
    if (pos_ >= s_.size()) fail("expected O(, T(, S( or 0");
    const char head = s_[pos_];
    if (head == '0') {
      ++pos_;
      zero_atom();
      return;
    }
    ++pos_;
    expect('(');
    if (head == 'O') {
      const auto n = integer(true);
      expect(')');
      use(Model::P1);
      derived_.add(line(n, shift_suffix()), mult);
    } else if (head == 'T') {
      auto x = label();
      expect(',');
      const auto d = integer(false);
      expect(')');
      use(Model::P1);
      derived_.add(torsion(x, d, shift_suffix()), mult);
    } else if (head == 'S') {
      const auto r = integer(true);
      expect(',');
      const auto d = integer(true);
      expect(',');
      auto x = label();
      expect(')');
      use(Model::Elliptic);
      auto cls = StableClass::make(r, d, std::move(x));
      elliptic_.add(ShiftedStable{std::move(cls), shift_suffix()}, mult);
    } else {
      --pos_;
      fail("expected O(, T(, S( or 0");
    }
  }

  void zero_atom() {
    if (peek('[')) shift_suffix();
  }

  std::int64_t shift_suffix() {
    if (!peek('[')) return 0;
    ++pos_;
    const auto i = integer(true);
    expect(']');
    return i;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Model model_ = Model::Unknown;
  DerivedObject derived_;
  EllipticObject elliptic_;
};

}  // namespace

ParsedObject parse_object(std::string_view text) { return Parser(text).parse(); }

DerivedObject parse_derived(std::string_view text) {
  auto x = parse_object(text);
  if (auto* d = std::get_if<DerivedObject>(&x)) return std::move(*d);
  throw SyntaxError(ErrorCode::SyntaxError, 0, "expected a P1 object, got S terms");
}

EllipticObject parse_elliptic(std::string_view text) {
  auto x = parse_object(text);
  if (auto* e = std::get_if<EllipticObject>(&x)) return std::move(*e);
  if (std::get<DerivedObject>(x).is_zero()) return {};
  throw SyntaxError(ErrorCode::SyntaxError, 0, "expected an elliptic object, got O or T terms");
}

std::string render(const ParsedObject& x) {
  return std::visit([](const auto& v) { return render(v); }, x);
}

}  // namespace tstab
