#include "tstab/stability.hpp"

#include <algorithm>
#include <sstream>

#include "tstab/error.hpp"
#include "tstab/sampling.hpp"

namespace tstab {

std::string render(const SlopeId& slope) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoarseSlope>) {
          os << '(' << s.shift << ')';
        } else if constexpr (std::is_same_v<T, StandardSlope>) {
          os << '(' << s.shift << ", ";
          if (const auto* n = std::get_if<IntLevel>(&s.level)) {
            os << "Int " << n->degree;
          } else {
            os << "Pt " << std::get<PointLevel>(s.level).point;
          }
          os << ')';
        } else if constexpr (std::is_same_v<T, ExceptionalSlope>) {
          os << '(' << s.shift << ',' << s.column << ')';
        } else if constexpr (std::is_same_v<T, EllipticSlope>) {
          os << '(' << s.shift << ", " << s.mu.to_string() << ", " << render(s.cls) << ')';
        } else {
          os << "block " << s.index;
        }
      },
      slope);
  return os.str();
}

std::vector<ShiftedIndec> window_indecomposables(const Window& w) {
  std::vector<ShiftedIndec> out;
  for (auto i = w.shift_center - w.shift_radius; i <= w.shift_center + w.shift_radius; ++i) {
    for (auto n = w.degree_center - w.degree_radius; n <= w.degree_center + w.degree_radius; ++n) {
      out.push_back(line(n, i));
    }
    for (const auto& x : w.points) {
      for (std::int64_t d = 1; d <= w.max_length; ++d) out.push_back(torsion(x, d, i));
    }
  }
  return out;
}

HNFiltration Stability::hn(const DerivedObject&) const {
  throw DomainError(ErrorCode::UnsupportedFamily, name() + " stability has no P1 object model");
}

EllipticFiltration Stability::hn(const EllipticObject&) const {
  throw DomainError(ErrorCode::UnsupportedFamily, name() + " stability has no elliptic object model");
}

template <class Object>
std::optional<SlopeId> is_semistable(const Object& x, const Stability& family) {
  if (x.is_zero()) return std::nullopt;
  auto f = family.hn(x);
  if (f.quotients.size() != 1) return std::nullopt;
  return f.quotients.front().slope;
}

template <class Object>
Filtration<Object> merge_by_slope(const Stability& family, const std::vector<Filtration<Object>>& parts) {
  std::vector<SlopeId> slopes;
  for (const auto& part : parts) {
    for (const auto& q : part.quotients) slopes.push_back(q.slope);
  }
  std::stable_sort(slopes.begin(), slopes.end(),
                   [&](const SlopeId& a, const SlopeId& b) { return family.less(a, b); });
  slopes.erase(std::unique(slopes.begin(), slopes.end(),
                           [&](const SlopeId& a, const SlopeId& b) { return family.compare(a, b) == 0; }),
               slopes.end());

  Filtration<Object> out;
  out.terms.clear();
  out.quotients.reserve(slopes.size());
  for (const auto& s : slopes) {
    Object sum;
    Object term;
    for (const auto& part : parts) {
      std::size_t j = 0;
      while (j < part.quotients.size() && family.less(part.quotients[j].slope, s)) ++j;
      term += part.terms.at(j);
      if (j < part.quotients.size() && family.compare(part.quotients[j].slope, s) == 0) {
        sum += part.quotients[j].object;
      }
    }
    out.terms.push_back(std::move(term));
    out.quotients.push_back({s, std::move(sum)});
  }
  out.terms.push_back(Object{});
  if (slopes.empty()) {
    // Only zero parts: the empty filtration of their (zero) sum.
    out.terms = {Object{}};
  }
  return out;
}

template <class Object>
Filtration<Object> scaled(const Filtration<Object>& f, std::int64_t multiplicity) {
  Filtration<Object> out;
  out.terms.clear();
  for (const auto& q : f.quotients) out.quotients.push_back({q.slope, q.object.scaled(multiplicity)});
  for (const auto& t : f.terms) out.terms.push_back(t.scaled(multiplicity));
  return out;
}

template <class Object>
Filtration<Object> shifted(const Filtration<Object>& f, const Stability& family, std::int64_t n) {
  Filtration<Object> out;
  out.terms.clear();
  for (const auto& q : f.quotients) {
    SlopeId s = q.slope;
    for (std::int64_t k = 0; k < n; ++k) s = family.tau(s);
    for (std::int64_t k = 0; k > n; --k) s = family.tau_inverse(s);
    out.quotients.push_back({std::move(s), q.object.shifted(n)});
  }
  for (const auto& t : f.terms) out.terms.push_back(t.shifted(n));
  return out;
}

template <class Object>
Filtration<Object> with_running_terms(std::vector<Quotient<Object>> quotients) {
  Filtration<Object> out;
  out.quotients = std::move(quotients);
  out.terms.assign(out.quotients.size() + 1, Object{});
  for (std::size_t i = out.quotients.size(); i-- > 0;) {
    out.terms[i] = out.terms[i + 1] + out.quotients[i].object;
  }
  return out;
}

template <class Object>
Filtration<Object> shuffle_merge(const Stability& family, const Filtration<Object>& fa,
                                 const Filtration<Object>& fb, ShuffleMode mode,
                                 const std::vector<int>& order) {
  if (mode == ShuffleMode::BySlope) return merge_by_slope<Object>(family, {fa, fb});

  const std::size_t na = fa.quotients.size();
  const std::size_t nb = fb.quotients.size();
  if (order.size() != na + nb) {
    throw DomainError(ErrorCode::InvalidShuffle, "shuffle has " + std::to_string(order.size()) +
                                                     " entries, expected " + std::to_string(na + nb));
  }
  Filtration<Object> out;
  out.terms.clear();
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (int tag : order) {
    out.terms.push_back(fa.terms.at(ia) + fb.terms.at(ib));
    if (tag == 0 && ia < na) {
      out.quotients.push_back(fa.quotients[ia++]);
    } else if (tag == 1 && ib < nb) {
      out.quotients.push_back(fb.quotients[ib++]);
    } else {
      throw DomainError(ErrorCode::InvalidShuffle, "shuffle tag out of range or exhausted source");
    }
  }
  out.terms.push_back(fa.terms.at(ia) + fb.terms.at(ib));
  return out;
}

template <class Object>
std::vector<Quotient<Object>> glue(const std::vector<FiltrationBlock<Object>>& outer) {
  std::vector<Quotient<Object>> flat;
  for (const auto& block : outer) flat.insert(flat.end(), block.inner.begin(), block.inner.end());
  return flat;
}

template <class Object>
std::vector<FiltrationBlock<Object>> split(const std::vector<Quotient<Object>>& flat,
                                           const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<FiltrationBlock<Object>> out;
  std::size_t next = 0;
  for (const auto& indices : blocks) {
    if (indices.empty()) throw DomainError(ErrorCode::NonConsecutiveBlocks, "empty block");
    FiltrationBlock<Object> block;
    for (auto idx : indices) {
      if (idx != next || idx >= flat.size()) {
        throw DomainError(ErrorCode::NonConsecutiveBlocks,
                          "block index " + std::to_string(idx) + " where " + std::to_string(next) +
                              " was expected");
      }
      block.sum += flat[idx].object;
      block.inner.push_back(flat[idx]);
      ++next;
    }
    if (block.inner.size() == 1) block.slope = block.inner.front().slope;
    out.push_back(std::move(block));
  }
  if (next != flat.size()) {
    throw DomainError(ErrorCode::NonConsecutiveBlocks, "blocks do not cover the quotient list");
  }
  return out;
}

template <class Object>
HnReport verify_hn(const Object& x, const Filtration<Object>& filt, const Stability& family) {
  HnReport r;
  const auto& qs = filt.quotients;
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    r.failures.push_back(std::move(msg));
  };

  for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
    if (!family.less(qs[i].slope, qs[i + 1].slope)) {
      fail(r.ascending, "(a) slope " + render(qs[i].slope) + " is not below " + render(qs[i + 1].slope));
    }
  }

  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i].object.is_zero()) {
      fail(r.semistable, "(b) quotient " + std::to_string(i) + " is zero");
      continue;
    }
    auto s = is_semistable(qs[i].object, family);
    if (!s) {
      fail(r.semistable, "(b) quotient " + render(qs[i].object) + " is not semistable");
    } else if (family.compare(*s, qs[i].slope) != 0) {
      fail(r.semistable, "(b) quotient " + render(qs[i].object) + " has slope " + render(*s) +
                             ", recorded " + render(qs[i].slope));
    }
  }

  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      if (!vanishes_in_nonpositive_degrees(hom_profile(qs[j].object, qs[i].object))) {
        fail(r.hom_vanishing, "(c) Hom^{<=0}(" + render(qs[j].object) + ", " + render(qs[i].object) +
                                  ") != 0");
      }
    }
  }

  if (filt.terms.size() != qs.size() + 1) {
    fail(r.k0_additive, "(d) expected " + std::to_string(qs.size() + 1) + " terms, got " +
                            std::to_string(filt.terms.size()));
  } else {
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (k0_class(filt.terms[i]) != k0_class(filt.terms[i + 1]) + k0_class(qs[i].object)) {
        fail(r.k0_additive, "(d) K0 not additive at term " + std::to_string(i));
      }
    }
  }

  if (filt.terms.empty() || !(filt.terms.front() == x)) {
    fail(r.endpoints, "(e) first term is not the filtered object");
  }
  if (filt.terms.empty() || !filt.terms.back().is_zero()) {
    fail(r.endpoints, "(e) last term is not zero");
  }
  return r;
}

#define TSTAB_INSTANTIATE(Object)                                                                    \
  template std::optional<SlopeId> is_semistable(const Object&, const Stability&);                  \
  template Filtration<Object> merge_by_slope(const Stability&, const std::vector<Filtration<Object>>&); \
  template Filtration<Object> scaled(const Filtration<Object>&, std::int64_t);                      \
  template Filtration<Object> shifted(const Filtration<Object>&, const Stability&, std::int64_t);   \
  template Filtration<Object> with_running_terms(std::vector<Quotient<Object>>);                    \
  template Filtration<Object> shuffle_merge(const Stability&, const Filtration<Object>&,            \
                                            const Filtration<Object>&, ShuffleMode,                 \
                                            const std::vector<int>&);                               \
  template std::vector<Quotient<Object>> glue(const std::vector<FiltrationBlock<Object>>&);         \
  template std::vector<FiltrationBlock<Object>> split(const std::vector<Quotient<Object>>&,         \
                                                      const std::vector<std::vector<std::size_t>>&); \
  template HnReport verify_hn(const Object&, const Filtration<Object>&, const Stability&);

TSTAB_INSTANTIATE(DerivedObject)
TSTAB_INSTANTIATE(EllipticObject)

#undef TSTAB_INSTANTIATE

StabilityReport validate_stability(const Stability& family, const Window& window,
                                   std::size_t random_objects, std::uint64_t seed) {
  StabilityReport r;
  struct Generator {
    ShiftedIndec object;
    SlopeId slope;
  };
  std::vector<Generator> gens;
  for (const auto& t : window_indecomposables(window)) {
    if (auto s = is_semistable(object(t), family)) gens.push_back({t, *s});
  }
  r.generators_checked = gens.size();

  for (const auto& g : gens) {
    auto up = g.object;
    up.shift += 1;
    const auto raised = family.tau(g.slope);
    auto s1 = is_semistable(object(up), family);
    if (!s1 || family.compare(*s1, raised) != 0) {
      r.tau_equivariant = false;
      r.failures.push_back("slope of " + render(up) + " is not tau(" + render(g.slope) + ")");
    }
    if (!family.less(g.slope, raised)) {
      r.tau_raises = false;
      r.failures.push_back("tau does not raise " + render(g.slope));
    }
  }

  for (const auto& a : gens) {
    for (const auto& b : gens) {
      if (family.compare(a.slope, b.slope) <= 0) continue;
      ++r.pairs_checked;
      const auto profile = hom_profile(a.object, b.object);
      if (vanishes_in_nonpositive_degrees(profile)) continue;
      if (r.hom_vanishing) {
        const auto& [q, d] = *profile.begin();
        r.witness = "Hom^" + std::to_string(q) + "(" + render(a.object) + ", " + render(b.object) +
                    ") = " + std::to_string(d);
        r.failures.push_back("slope " + render(a.slope) + " > " + render(b.slope) + " but " + r.witness);
      }
      r.hom_vanishing = false;
    }
  }

  std::mt19937_64 rng(seed);
  SampleSpec spec;
  spec.points = window.points;
  for (std::size_t n = 0; n < random_objects; ++n) {
    const auto x = random_object(rng, spec);
    const auto rep = verify_hn(x, hn(x, family), family);
    ++r.objects_checked;
    if (!rep.ok()) {
      r.hn_verified = false;
      r.failures.push_back("hn of " + render(x) + ": " + rep.failures.front());
    }
  }
  return r;
}

}  // namespace tstab
