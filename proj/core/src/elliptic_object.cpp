#include "tstab/elliptic_object.hpp"

#include <numeric>

#include "tstab/error.hpp"

namespace tstab {

StableClass StableClass::make(std::int64_t rank, std::int64_t degree, std::string point) {
  if (rank < 0 || std::gcd(rank, degree) != 1) {
    throw DomainError(ErrorCode::NonCoprime, "S(" + std::to_string(rank) + "," +
                                                 std::to_string(degree) +
                                                 ") is not a stable class (need gcd 1, rank >= 0)");
  }
  if (!is_valid_label(point)) {
    throw DomainError(ErrorCode::BadParams, "invalid point label '" + point + "'");
  }
  return StableClass{rank, degree, std::move(point)};
}

EllipticObject object(const ShiftedStable& t, std::int64_t multiplicity) {
  return EllipticObject(t, multiplicity);
}

std::string render(const StableClass& c) {
  return "S(" + std::to_string(c.rank) + "," + std::to_string(c.degree) + "," + c.point + ")";
}

std::string render(const ShiftedStable& t) {
  return render(t.cls) + "[" + std::to_string(t.shift) + "]";
}

std::string render(const EllipticObject& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [t, m] : x.terms()) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += render(t);
  }
  return out;
}

ExtendedRational mu_class(const StableClass& c) {
  if (c.rank == 0) return ExtendedRational::plus_infinity();
  return ExtendedRational(Rational(c.degree, c.rank));
}

std::int64_t hom_dim_stable(const StableClass& e, const StableClass& f, std::int64_t ext_degree) {
  if (ext_degree != 0 && ext_degree != 1) return 0;
  if (e == f) return 1;
  const auto chi = e.rank * f.degree - e.degree * f.rank;
  const auto order = mu_class(e) <=> mu_class(f);
  if (order < 0) return ext_degree == 0 ? chi : 0;
  if (order > 0) return ext_degree == 1 ? -chi : 0;
  return 0;  // same slope, different stable classes are orthogonal
}

K0Class k0_class(const ShiftedStable& t) {
  auto cls = K0Class::rank_degree(t.cls.rank, t.cls.degree);
  return t.shift % 2 == 0 ? cls : -cls;
}

K0Class k0_class(const EllipticObject& x) {
  K0Class total = K0Class::rank_degree(0, 0);
  for (const auto& [t, m] : x.terms()) total += k0_class(t).scaled(m);
  return total;
}

HomProfile hom_profile(const EllipticObject& x, const EllipticObject& y) {
  HomProfile out;
  for (const auto& [a, ma] : x.terms()) {
    for (const auto& [b, mb] : y.terms()) {
      const auto gap = a.shift - b.shift;
      for (std::int64_t e = 0; e <= 1; ++e) {
        if (auto d = hom_dim_stable(a.cls, b.cls, e); d != 0) out[e + gap] += ma * mb * d;
      }
    }
  }
  return out;
}

}  // namespace tstab
