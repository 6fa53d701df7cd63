#include "tstab/p1.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tstab/error.hpp"

namespace tstab {

bool is_valid_label(const std::string& label) {
  return !label.empty() && std::all_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
}

PointOrder::PointOrder(std::vector<std::string> declared) : declared_(std::move(declared)) {
  std::set<std::string> seen;
  for (const auto& label : declared_) {
    if (!is_valid_label(label)) {
      throw DomainError(ErrorCode::BadParams, "invalid point label '" + label + "'");
    }
    if (!seen.insert(label).second) {
      throw DomainError(ErrorCode::BadParams, "duplicate point label '" + label + "'");
    }
  }
}

bool PointOrder::is_declared(const std::string& label) const {
  return std::find(declared_.begin(), declared_.end(), label) != declared_.end();
}

std::strong_ordering PointOrder::compare(const std::string& a, const std::string& b) const {
  auto index = [&](const std::string& s) -> std::ptrdiff_t {
    auto it = std::find(declared_.begin(), declared_.end(), s);
    return it == declared_.end() ? -1 : it - declared_.begin();
  };
  const auto ia = index(a);
  const auto ib = index(b);
  if (ia < 0 && ib < 0) return a <=> b;
  return ia <=> ib;
}

ShiftedIndec line(std::int64_t degree, std::int64_t shift) { return {Line{degree}, shift}; }

ShiftedIndec torsion(const std::string& point, std::int64_t length, std::int64_t shift) {
  if (length < 1) {
    throw DomainError(ErrorCode::InvalidLength,
                      "torsion length must be positive, got " + std::to_string(length));
  }
  if (!is_valid_label(point)) {
    throw DomainError(ErrorCode::BadParams, "invalid point label '" + point + "'");
  }
  return {Torsion{point, length}, shift};
}

DerivedObject object(const ShiftedIndec& t, std::int64_t multiplicity) {
  return DerivedObject(t, multiplicity);
}

DerivedObject normalize(const std::vector<std::pair<ShiftedIndec, std::int64_t>>& sum) {
  DerivedObject out;
  for (const auto& [t, m] : sum) out.add(t, m);
  return out;
}

DerivedObject shift(const DerivedObject& x, std::int64_t n) { return x.shifted(n); }

std::string render(const Indecomposable& base) {
  if (const auto* l = std::get_if<Line>(&base)) return "O(" + std::to_string(l->degree) + ")";
  const auto& t = std::get<Torsion>(base);
  return "T(" + t.point + "," + std::to_string(t.length) + ")";
}

std::string render(const ShiftedIndec& t) {
  return render(t.base) + "[" + std::to_string(t.shift) + "]";
}

std::string render(const DerivedObject& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [t, m] : x.terms()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += render(t);
  }
  return out;
}

K0Class k0_class(const Indecomposable& base) {
  if (const auto* l = std::get_if<Line>(&base)) return K0Class::rank_degree(1, l->degree);
  return K0Class::rank_degree(0, std::get<Torsion>(base).length);
}

K0Class k0_class(const ShiftedIndec& t) {
  auto cls = k0_class(t.base);
  return t.shift % 2 == 0 ? cls : -cls;
}

K0Class k0_class(const DerivedObject& x) {
  K0Class total = K0Class::rank_degree(0, 0);
  for (const auto& [t, m] : x.terms()) total += k0_class(t).scaled(m);
  return total;
}

std::int64_t ext_dim(const Indecomposable& a, const Indecomposable& b, std::int64_t e) {
  if (e != 0 && e != 1) return 0;
  const auto* la = std::get_if<Line>(&a);
  const auto* lb = std::get_if<Line>(&b);
  if (la && lb) {
    // H^0 / H^1 of O(b - a).
    return e == 0 ? std::max<std::int64_t>(lb->degree - la->degree + 1, 0)
                  : std::max<std::int64_t>(la->degree - lb->degree - 1, 0);
  }
  if (la) return e == 0 ? std::get<Torsion>(b).length : 0;
  if (lb) return e == 0 ? 0 : std::get<Torsion>(a).length;
  const auto& ta = std::get<Torsion>(a);
  const auto& tb = std::get<Torsion>(b);
  return ta.point == tb.point ? std::min(ta.length, tb.length) : 0;
}

std::int64_t hom_dim(const ShiftedIndec& a, const ShiftedIndec& b, std::int64_t q) {
  return ext_dim(a.base, b.base, q + b.shift - a.shift);
}

HomProfile hom_profile(const ShiftedIndec& a, const ShiftedIndec& b) {
  HomProfile out;
  const auto gap = a.shift - b.shift;
  for (std::int64_t e = 0; e <= 1; ++e) {
    if (auto d = ext_dim(a.base, b.base, e); d != 0) out[e + gap] += d;
  }
  return out;
}

HomProfile hom_profile(const DerivedObject& x, const DerivedObject& y) {
  HomProfile out;
  for (const auto& [a, ma] : x.terms()) {
    for (const auto& [b, mb] : y.terms()) {
      for (const auto& [q, d] : hom_profile(a, b)) out[q] += ma * mb * d;
    }
  }
  return out;
}

bool vanishes_in_nonpositive_degrees(const HomProfile& profile) {
  return profile.empty() || profile.begin()->first > 0;
}

std::int64_t euler_form(const K0Class& a, const K0Class& b) {
  return a.rank() * b.rank() + a.rank() * b.degree() - a.degree() * b.rank();
}

}  // namespace tstab
