#include "tstab/p1_stabilities.hpp"

#include <algorithm>

#include "tstab/error.hpp"

namespace tstab {

namespace {

template <class T>
const T& expect(const SlopeId& s, const std::string& family) {
  if (const auto* v = std::get_if<T>(&s)) return *v;
  throw DomainError(ErrorCode::CrossFamily, "slope " + render(s) + " does not belong to the " + family + " family");
}

std::vector<SlopeId> sorted_unique(const Stability& family, std::vector<SlopeId> slopes) {
  std::stable_sort(slopes.begin(), slopes.end(),
                   [&](const SlopeId& a, const SlopeId& b) { return family.less(a, b); });
  slopes.erase(std::unique(slopes.begin(), slopes.end(),
                           [&](const SlopeId& a, const SlopeId& b) { return family.compare(a, b) == 0; }),
               slopes.end());
  return slopes;
}

HNFiltration single(const SlopeId& slope, const DerivedObject& x) {
  HNFiltration f;
  f.quotients = {{slope, x}};
  f.terms = {x, DerivedObject{}};
  return f;
}

// Generators in the order is_finer and finest_check report witnesses.
std::vector<ShiftedIndec> ordered_generators(const Window& w) {
  std::vector<std::int64_t> shifts = {w.shift_center};
  for (std::int64_t r = 1; r <= w.shift_radius; ++r) {
    shifts.push_back(w.shift_center + r);
    shifts.push_back(w.shift_center - r);
  }
  std::vector<ShiftedIndec> out;
  for (auto i : shifts) {
    for (auto n = w.degree_center; n <= w.degree_center + w.degree_radius; ++n) out.push_back(line(n, i));
    for (auto n = w.degree_center - 1; n >= w.degree_center - w.degree_radius; --n) out.push_back(line(n, i));
    for (const auto& x : w.points) {
      for (std::int64_t d = 1; d <= w.max_length; ++d) out.push_back(torsion(x, d, i));
    }
  }
  return out;
}

}  // namespace

// Coarse ---------------------------------------------------------------------

std::strong_ordering CoarseStability::compare(const SlopeId& a, const SlopeId& b) const {
  return expect<CoarseSlope>(a, "coarse").shift <=> expect<CoarseSlope>(b, "coarse").shift;
}

SlopeId CoarseStability::tau(const SlopeId& s) const {
  return CoarseSlope{expect<CoarseSlope>(s, "coarse").shift + 1};
}

SlopeId CoarseStability::tau_inverse(const SlopeId& s) const {
  return CoarseSlope{expect<CoarseSlope>(s, "coarse").shift - 1};
}

HNFiltration CoarseStability::hn(const DerivedObject& x) const {
  std::vector<HNFiltration> parts;
  for (const auto& [t, m] : x.terms()) parts.push_back(single(CoarseSlope{t.shift}, object(t, m)));
  return merge_by_slope(*this, parts);
}

std::vector<SlopeId> CoarseStability::window_slopes(const Window& w) const {
  std::vector<SlopeId> out;
  for (auto i = w.shift_center - w.shift_radius; i <= w.shift_center + w.shift_radius; ++i) {
    out.push_back(CoarseSlope{i});
  }
  return out;
}

// Standard -------------------------------------------------------------------

SlopeId standard_slope(const ShiftedIndec& t) {
  if (const auto* l = std::get_if<Line>(&t.base)) return StandardSlope{t.shift, IntLevel{l->degree}};
  return StandardSlope{t.shift, PointLevel{std::get<Torsion>(t.base).point}};
}

std::strong_ordering StandardStability::compare(const SlopeId& a, const SlopeId& b) const {
  const auto& sa = expect<StandardSlope>(a, "standard");
  const auto& sb = expect<StandardSlope>(b, "standard");
  if (auto c = sa.shift <=> sb.shift; c != 0) return c;
  const auto* ia = std::get_if<IntLevel>(&sa.level);
  const auto* ib = std::get_if<IntLevel>(&sb.level);
  if (ia && ib) return ia->degree <=> ib->degree;
  if (!ia && !ib) {
    return order_.compare(std::get<PointLevel>(sa.level).point, std::get<PointLevel>(sb.level).point);
  }
  // One line level, one point level.
  const bool a_above = torsion_above_lines_ ? ib != nullptr : ia != nullptr;
  return a_above ? std::strong_ordering::greater : std::strong_ordering::less;
}

SlopeId StandardStability::tau(const SlopeId& s) const {
  auto out = expect<StandardSlope>(s, "standard");
  ++out.shift;
  return out;
}

SlopeId StandardStability::tau_inverse(const SlopeId& s) const {
  auto out = expect<StandardSlope>(s, "standard");
  --out.shift;
  return out;
}

HNFiltration StandardStability::hn(const DerivedObject& x) const {
  std::vector<HNFiltration> parts;
  for (const auto& [t, m] : x.terms()) parts.push_back(single(standard_slope(t), object(t, m)));
  return merge_by_slope(*this, parts);
}

std::vector<SlopeId> StandardStability::window_slopes(const Window& w) const {
  std::vector<SlopeId> out;
  std::vector<std::string> points = order_.declared();
  points.insert(points.end(), w.points.begin(), w.points.end());
  for (auto i = w.shift_center - w.shift_radius; i <= w.shift_center + w.shift_radius; ++i) {
    for (auto n = w.degree_center - w.degree_radius; n <= w.degree_center + w.degree_radius; ++n) {
      out.push_back(StandardSlope{i, IntLevel{n}});
    }
    for (const auto& x : points) out.push_back(StandardSlope{i, PointLevel{x}});
  }
  return sorted_unique(*this, std::move(out));
}

HNFiltration hn_standard(const DerivedObject& x, const StandardStability& family) {
  return hn(x, family);
}

// Exceptional ----------------------------------------------------------------

std::strong_ordering compare_exceptional(const ExceptionalSlope& a, const ExceptionalSlope& b,
                                         std::optional<std::int64_t> p) {
  if (a.column == b.column) return a.shift <=> b.shift;
  // Reduce to a in column 0, b in column 1.
  if (a.column == 1) return 0 <=> compare_exceptional(b, a, p);
  if (!p) return std::strong_ordering::less;
  return a.shift <= b.shift + *p + 1 ? std::strong_ordering::less : std::strong_ordering::greater;
}

ExceptionalStability::ExceptionalStability(std::int64_t k, std::optional<std::int64_t> p) : k_(k), p_(p) {
  if (p && *p < 0) throw DomainError(ErrorCode::BadParams, "exceptional parameter p must be >= 0");
}

std::strong_ordering ExceptionalStability::compare(const SlopeId& a, const SlopeId& b) const {
  return compare_exceptional(expect<ExceptionalSlope>(a, "exceptional"),
                             expect<ExceptionalSlope>(b, "exceptional"), p_);
}

SlopeId ExceptionalStability::tau(const SlopeId& s) const {
  auto out = expect<ExceptionalSlope>(s, "exceptional");
  ++out.shift;
  return out;
}

SlopeId ExceptionalStability::tau_inverse(const SlopeId& s) const {
  auto out = expect<ExceptionalSlope>(s, "exceptional");
  --out.shift;
  return out;
}

Rewrite exceptional_rewrite(const ShiftedIndec& t, std::int64_t k) {
  const auto i = t.shift;
  auto at = [](std::int64_t shift, int column) { return SlopeId{ExceptionalSlope{shift, column}}; };
  Rewrite r;
  if (const auto* tor = std::get_if<Torsion>(&t.base)) {
    const auto d = tor->length;
    r.mid_term = object(line(k + 1, i), d);
    r.quotients = {{at(i + 1, 0), object(line(k, i + 1), d)}, {at(i, 1), r.mid_term}};
    return r;
  }
  const auto n = std::get<Line>(t.base).degree;
  if (n == k) {
    r.quotients = {{at(i, 0), object(t)}};
  } else if (n == k + 1) {
    r.quotients = {{at(i, 1), object(t)}};
  } else if (n > k + 1) {
    r.mid_term = object(line(k + 1, i), n - k);
    r.quotients = {{at(i + 1, 0), object(line(k, i + 1), n - k - 1)}, {at(i, 1), r.mid_term}};
  } else {
    r.mid_term = object(line(k + 1, i - 1), k - n);
    r.quotients = {{at(i, 0), object(line(k, i), k - n + 1)}, {at(i - 1, 1), r.mid_term}};
  }
  return r;
}

HNFiltration rewrite_filtration(const ShiftedIndec& t, std::int64_t multiplicity, std::int64_t k) {
  auto r = exceptional_rewrite(t, k);
  HNFiltration f;
  f.terms = {object(t, multiplicity)};
  for (auto& q : r.quotients) q.object = q.object.scaled(multiplicity);
  if (r.quotients.size() == 2) f.terms.push_back(r.mid_term.scaled(multiplicity));
  f.terms.push_back(DerivedObject{});
  f.quotients = std::move(r.quotients);
  return f;
}

HNFiltration ExceptionalStability::hn(const DerivedObject& x) const {
  std::vector<HNFiltration> parts;
  for (const auto& [t, m] : x.terms()) parts.push_back(rewrite_filtration(t, m, k_));
  return merge_by_slope(*this, parts);
}

std::vector<SlopeId> ExceptionalStability::window_slopes(const Window& w) const {
  std::vector<SlopeId> out;
  for (auto i = w.shift_center - w.shift_radius; i <= w.shift_center + w.shift_radius; ++i) {
    out.push_back(ExceptionalSlope{i, 0});
    out.push_back(ExceptionalSlope{i, 1});
  }
  return sorted_unique(*this, std::move(out));
}

HNFiltration hn_exceptional(const DerivedObject& x, std::int64_t k, std::optional<std::int64_t> p) {
  return hn(x, ExceptionalStability(k, p));
}

// Coarsening -----------------------------------------------------------------

std::strong_ordering BlockOrder::compare(const SlopeId& a, const SlopeId& b) const {
  return expect<BlockSlope>(a, "block").index <=> expect<BlockSlope>(b, "block").index;
}

SlopeId BlockOrder::tau(const SlopeId& s) const {
  return BlockSlope{expect<BlockSlope>(s, "block").index + step_};
}

SlopeId BlockOrder::tau_inverse(const SlopeId& s) const {
  return BlockSlope{expect<BlockSlope>(s, "block").index - step_};
}

std::vector<SlopeId> BlockOrder::window_slopes(const Window& w) const {
  std::vector<SlopeId> out;
  for (auto i = -w.shift_radius; i <= w.shift_radius; ++i) out.push_back(BlockSlope{i});
  return out;
}

Partition partition_by_shift() {
  return {"by shift", std::make_shared<CoarseStability>(), [](const SlopeId& s) -> SlopeId {
            return std::visit(
                [&](const auto& v) -> SlopeId {
                  using T = std::decay_t<decltype(v)>;
                  if constexpr (std::is_same_v<T, BlockSlope>) {
                    throw DomainError(ErrorCode::InvalidPartition, "block labels carry no shift");
                  } else {
                    return CoarseSlope{v.shift};
                  }
                },
                s);
          }};
}

Partition partition_singletons(FamilyPtr base) {
  return {"singletons", std::move(base), [](const SlopeId& s) { return s; }};
}

Partition partition_exceptional_pairs(const ExceptionalStability& base) {
  if (const auto p = base.p()) {
    const auto pv = *p;
    return {"exceptional pairs", std::make_shared<CoarseStability>(), [pv](const SlopeId& s) -> SlopeId {
              const auto& e = expect<ExceptionalSlope>(s, "exceptional");
              return CoarseSlope{e.column == 0 ? e.shift - pv : e.shift + 1};
            }};
  }
  return {"exceptional columns", std::make_shared<BlockOrder>(0), [](const SlopeId& s) -> SlopeId {
            return BlockSlope{expect<ExceptionalSlope>(s, "exceptional").column};
          }};
}

CoarsenedStability::CoarsenedStability(FamilyPtr base, Partition partition, const Window& window)
    : base_(std::move(base)), partition_(std::move(partition)) {
  const auto& target = *partition_.target;
  const auto slopes = base_->window_slopes(window);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const auto r = partition_.label(slopes[i]);
    if (i + 1 < slopes.size() && target.less(partition_.label(slopes[i + 1]), r)) {
      throw DomainError(ErrorCode::InvalidPartition, "partition '" + partition_.name + "' is not monotone at " +
                                                         render(slopes[i]) + " < " + render(slopes[i + 1]));
    }
    if (target.compare(partition_.label(base_->tau(slopes[i])), target.tau(r)) != 0) {
      throw DomainError(ErrorCode::InvalidPartition,
                        "partition '" + partition_.name + "' is not tau-stable at " + render(slopes[i]));
    }
  }
}

std::strong_ordering CoarsenedStability::compare(const SlopeId& a, const SlopeId& b) const {
  return partition_.target->compare(a, b);
}

SlopeId CoarsenedStability::tau(const SlopeId& s) const { return partition_.target->tau(s); }

SlopeId CoarsenedStability::tau_inverse(const SlopeId& s) const { return partition_.target->tau_inverse(s); }

HNFiltration CoarsenedStability::hn(const DerivedObject& x) const {
  const auto& target = *partition_.target;
  std::vector<HNFiltration> parts;
  for (const auto& [t, m] : x.terms()) {
    const auto summand = object(t, m);
    const auto fine = tstab::hn(summand, *base_);
    HNFiltration part;
    part.terms.clear();
    for (std::size_t j = 0; j < fine.quotients.size(); ++j) {
      const auto label = partition_.label(fine.quotients[j].slope);
      if (part.quotients.empty() || target.compare(part.quotients.back().slope, label) != 0) {
        part.terms.push_back(fine.terms[j]);
        part.quotients.push_back({label, fine.quotients[j].object});
      } else {
        part.quotients.back().object += fine.quotients[j].object;
      }
    }
    part.terms.push_back(DerivedObject{});
    if (part.quotients.size() == 1) part.quotients.front().object = summand;
    parts.push_back(std::move(part));
  }
  return merge_by_slope(*this, parts);
}

std::vector<SlopeId> CoarsenedStability::window_slopes(const Window& w) const {
  std::vector<SlopeId> labels;
  for (const auto& s : base_->window_slopes(w)) labels.push_back(partition_.label(s));
  return sorted_unique(*this, std::move(labels));
}

FamilyPtr coarsen(FamilyPtr base, Partition partition, const Window& window) {
  return std::make_shared<CoarsenedStability>(std::move(base), std::move(partition), window);
}

// Refinement -----------------------------------------------------------------

FinerVerdict is_finer(const Stability& fine, const Stability& weak, const Window& window) {
  struct Entry {
    ShiftedIndec gen;
    SlopeId fine_slope;
    SlopeId weak_slope;
  };
  std::vector<Entry> entries;
  for (const auto& g : ordered_generators(window)) {
    const auto x = object(g);
    const auto fs = is_semistable(x, fine);
    if (!fs) continue;
    const auto ws = is_semistable(x, weak);
    if (!ws) {
      return {false, render(x), "semistable for " + fine.name() + " but not for " + weak.name()};
    }
    entries.push_back({g, *fs, *ws});
  }

  for (const auto& a : entries) {
    for (const auto& b : entries) {
      const auto cf = fine.compare(a.fine_slope, b.fine_slope);
      const auto cw = weak.compare(a.weak_slope, b.weak_slope);
      const auto pair = render(a.gen) + ", " + render(b.gen);
      if (cf == 0 && cw != 0) return {false, pair, "equal fine slopes map to different weak slopes"};
      if (cf < 0 && cw > 0) return {false, pair, "slope map is not monotone"};
    }
  }

  for (const auto& a : entries) {
    const auto up = fine.tau(a.fine_slope);
    for (const auto& b : entries) {
      if (fine.compare(b.fine_slope, up) != 0) continue;
      if (weak.compare(b.weak_slope, weak.tau(a.weak_slope)) != 0) {
        return {false, render(a.gen) + ", " + render(b.gen), "slope map does not commute with tau"};
      }
      break;
    }
  }
  return {};
}

FinestReport finest_check(const Stability& family, const Window& window) {
  std::vector<std::pair<SlopeId, std::vector<ShiftedIndec>>> groups;
  for (const auto& g : ordered_generators(window)) {
    const auto s = is_semistable(object(g), family);
    if (!s) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& grp) { return family.compare(grp.first, *s) == 0; });
    if (it == groups.end()) {
      groups.push_back({*s, {g}});
    } else {
      it->second.push_back(g);
    }
  }

  FinestReport r;
  for (const auto& [slope, gens] : groups) {
    ++r.slopes_checked;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i; j < gens.size(); ++j) {
        if (hom_dim(gens[i], gens[j], 0) == 0 || hom_dim(gens[j], gens[i], 0) == 0) {
          r.finest = false;
          r.witness = "(" + render(gens[i]) + ", " + render(gens[j]) + ")";
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace tstab
