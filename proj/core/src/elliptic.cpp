#include "tstab/elliptic.hpp"

#include <algorithm>
#include <numeric>

#include "tstab/error.hpp"

namespace tstab {

namespace {

const EllipticSlope& expect_elliptic(const SlopeId& s) {
  if (const auto* e = std::get_if<EllipticSlope>(&s)) return *e;
  throw DomainError(ErrorCode::CrossFamily, "slope " + render(s) + " does not belong to the elliptic family");
}

void check_q(const ExtendedRational& q) {
  if (q.is_infinite()) return;
  if (q < ExtendedRational(0) || q >= ExtendedRational(1)) {
    throw DomainError(ErrorCode::QOutOfRange, "q = " + q.to_string() + " is outside [0, 1) + {inf}");
  }
}

}  // namespace

std::strong_ordering EllipticStability::compare(const SlopeId& a, const SlopeId& b) const {
  const auto& ea = expect_elliptic(a);
  const auto& eb = expect_elliptic(b);
  if (auto c = ea.shift <=> eb.shift; c != 0) return c;
  if (auto c = ea.mu <=> eb.mu; c != 0) return c;
  return order_.compare(ea.cls.point, eb.cls.point);
}

SlopeId EllipticStability::tau(const SlopeId& s) const {
  auto out = expect_elliptic(s);
  ++out.shift;
  return out;
}

SlopeId EllipticStability::tau_inverse(const SlopeId& s) const {
  auto out = expect_elliptic(s);
  --out.shift;
  return out;
}

SlopeId elliptic_slope(const ShiftedStable& t) { return EllipticSlope{t.shift, mu_class(t.cls), t.cls}; }

EllipticFiltration EllipticStability::hn(const EllipticObject& x) const {
  std::vector<EllipticFiltration> parts;
  for (const auto& [t, m] : x.terms()) {
    EllipticFiltration f;
    f.quotients = {{elliptic_slope(t), object(t, m)}};
    f.terms = {object(t, m), EllipticObject{}};
    parts.push_back(std::move(f));
  }
  return merge_by_slope(*this, parts);
}

std::vector<SlopeId> EllipticStability::window_slopes(const Window& w) const {
  std::vector<SlopeId> out;
  std::vector<std::string> points = order_.declared();
  points.insert(points.end(), w.points.begin(), w.points.end());
  for (auto i = w.shift_center - w.shift_radius; i <= w.shift_center + w.shift_radius; ++i) {
    for (const auto& x : points) {
      out.push_back(elliptic_slope({StableClass::make(0, 1, x), i}));
      for (std::int64_t r = 1; r <= w.max_length; ++r) {
        for (auto d = w.degree_center - w.degree_radius; d <= w.degree_center + w.degree_radius; ++d) {
          if (std::gcd(r, d) == 1) out.push_back(elliptic_slope({StableClass::make(r, d, x), i}));
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const SlopeId& a, const SlopeId& b) { return less(a, b); });
  out.erase(std::unique(out.begin(), out.end(),
                        [&](const SlopeId& a, const SlopeId& b) { return compare(a, b) == 0; }),
            out.end());
  return out;
}

EllipticFiltration hn_elliptic(const EllipticObject& x, const EllipticStability& family) {
  return hn(x, family);
}

bool in_a0(const StableClass& c, const ExtendedRational& q, const PointSet& P) {
  const auto mu = mu_class(c);
  return mu < q || (mu == q && P.contains(c.point));
}

QpSplit a_qp_split(const EllipticObject& x, const ExtendedRational& q, const PointSet& P) {
  check_q(q);
  QpSplit out;
  for (const auto& [t, m] : x.terms()) {
    if (t.shift != 0) {
      throw DomainError(ErrorCode::BadParams, "a_qp_split needs a sheaf; " + render(t) + " is not at shift 0");
    }
    (in_a0(t.cls, q, P) ? out.a0 : out.a1).add(t, m);
  }
  for (const auto& [a, ma] : out.a1.terms()) {
    for (const auto& [b, mb] : out.a0.terms()) {
      if (hom_dim_stable(a.cls, b.cls, 0) != 0) out.hom_vanishing = false;
    }
  }
  return out;
}

bool elliptic_heart_contains(const EllipticObject& x, const ExtendedRational& q, const PointSet& P) {
  check_q(q);
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& entry) {
    const auto& t = entry.first;
    const bool a0 = in_a0(t.cls, q, P);
    return (t.shift == 0 && !a0) || (t.shift == 1 && a0);
  });
}

}  // namespace tstab
