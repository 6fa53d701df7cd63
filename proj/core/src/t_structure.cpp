#include "tstab/t_structure.hpp"

#include <algorithm>
#include <sstream>

#include "tstab/error.hpp"

namespace tstab {

namespace {

const StandardStability* as_standard(const Stability& f) { return dynamic_cast<const StandardStability*>(&f); }
const ExceptionalStability* as_exceptional(const Stability& f) {
  return dynamic_cast<const ExceptionalStability*>(&f);
}
const CoarseStability* as_coarse(const Stability& f) { return dynamic_cast<const CoarseStability*>(&f); }

[[noreturn]] void mismatch(const SlopeCut& cut, const Stability& family) {
  throw DomainError(ErrorCode::InvalidCut, "cut " + render(cut) + " does not apply to the " + family.name() + " family");
}

void check_family(const SlopeCut& cut, const Stability& family) {
  const bool ok = std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, StandardCut>) return as_standard(family) != nullptr;
        if constexpr (std::is_same_v<T, ExceptionalCut>) return as_exceptional(family) != nullptr;
        if constexpr (std::is_same_v<T, CoarseCut>) return as_coarse(family) != nullptr;
      },
      cut);
  if (!ok) mismatch(cut, family);
}

// Threshold shift c(alpha) of a standard level; slopes (i, alpha) with i >= c are in Phi_+.
std::int64_t standard_threshold(const StandardCut& c, const std::variant<IntLevel, PointLevel>& level) {
  if (const auto* n = std::get_if<IntLevel>(&level)) {
    return ExtendedInt(n->degree) < c.K ? c.m + 1 : c.m;
  }
  const auto& x = std::get<PointLevel>(level).point;
  return (c.K < ExtendedInt::pos_inf() || c.P.contains(x)) ? c.m : c.m + 1;
}

bool ge(std::int64_t i, const ExtendedInt& threshold) { return ExtendedInt(i) >= threshold; }

// Window around the thresholds of the cut, so the interesting boundary is inside.
Window centered(const SlopeCut& cut, Window w) {
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, StandardCut>) {
          w.shift_center = c.m;
          if (c.K.is_finite()) w.degree_center = c.K.value();
          for (const auto& x : c.P.labels) {
            if (std::find(w.points.begin(), w.points.end(), x) == w.points.end()) w.points.push_back(x);
          }
        } else if constexpr (std::is_same_v<T, ExceptionalCut>) {
          if (c.a.is_finite()) {
            w.shift_center = c.a.value();
          } else if (c.b.is_finite()) {
            w.shift_center = c.b.value();
          }
          w.shift_radius = std::max<std::int64_t>(w.shift_radius, 4);
        } else {
          w.shift_center = c.m;
        }
      },
      cut);
  return w;
}

std::string exceptional_generator(std::int64_t degree, std::int64_t shift) {
  const std::string base = degree == 0 ? "O" : "O(" + std::to_string(degree) + ")";
  return base + "[" + std::to_string(shift) + "]";
}

std::string level_text(std::int64_t i) { return std::to_string(i); }

std::vector<std::string> standard_generators(const StandardCut& c) {
  const auto m = c.m;
  const bool k_inf = c.K == ExtendedInt::pos_inf();
  if (c.K == ExtendedInt::neg_inf()) return {"Coh P1[" + level_text(m) + "]"};
  if (k_inf && c.P.empty()) return {"Coh P1[" + level_text(m + 1) + "]"};
  std::vector<std::string> out;
  if (!k_inf) out.push_back("O(n)[" + level_text(m) + "], n >= " + c.K.to_string());
  if (!k_inf || c.P.all) {
    out.push_back("O_x[" + level_text(m) + "], x in P1");
  } else {
    out.push_back("O_x[" + level_text(m) + "], x in P");
    out.push_back("O_y[" + level_text(m + 1) + "], y not in P");
  }
  out.push_back(k_inf ? "O(n)[" + level_text(m + 1) + "], n in Z"
                      : "O(n)[" + level_text(m + 1) + "], n < " + c.K.to_string());
  return out;
}

SlopeCut canonical(const SlopeCut& cut) {
  if (const auto* s = std::get_if<StandardCut>(&cut)) {
    if (s->K == ExtendedInt::pos_inf() && s->P.empty()) return StandardCut{s->m + 1, ExtendedInt::neg_inf(), PointSet::every()};
    if (s->K != ExtendedInt::pos_inf()) return StandardCut{s->m, s->K, PointSet::every()};
  }
  return cut;
}

std::string slope_token(const SlopeId& s, const Stability& family) {
  if (const auto* st = std::get_if<StandardSlope>(&s)) {
    if (const auto* n = std::get_if<IntLevel>(&st->level)) return render(line(n->degree, st->shift));
    return "O_" + std::get<PointLevel>(st->level).point + "[" + std::to_string(st->shift) + "]";
  }
  if (const auto* e = std::get_if<ExceptionalSlope>(&s)) {
    const auto k = as_exceptional(family)->k();
    return exceptional_generator(k + e->column, e->shift);
  }
  if (const auto* c = std::get_if<CoarseSlope>(&s)) return "Coh[" + std::to_string(c->shift) + "]";
  return render(s);
}

}  // namespace

PointSet PointSet::of(std::vector<std::string> labels) {
  for (const auto& x : labels) {
    if (!is_valid_label(x)) throw DomainError(ErrorCode::BadParams, "invalid point label '" + x + "'");
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return {false, std::move(labels)};
}

bool PointSet::contains(const std::string& x) const {
  return all || std::binary_search(labels.begin(), labels.end(), x);
}

std::string to_string(const PointSet& p) {
  if (p.all) return "all";
  if (p.labels.empty()) return "none";
  std::string out;
  for (const auto& x : p.labels) out += (out.empty() ? "" : ";") + x;
  return out;
}

std::string render(const SlopeCut& cut) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, StandardCut>) {
          return "std:m=" + std::to_string(c.m) + ",K=" + c.K.to_string() + ",P=" + to_string(c.P);
        } else if constexpr (std::is_same_v<T, ExceptionalCut>) {
          return "exc:a=" + c.a.to_string() + ",b=" + c.b.to_string();
        } else {
          return "coarse:m=" + std::to_string(c.m);
        }
      },
      cut);
}

bool in_upper(const SlopeCut& cut, const SlopeId& phi, const Stability& family) {
  check_family(cut, family);
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, StandardCut>) {
          const auto* s = std::get_if<StandardSlope>(&phi);
          if (!s) mismatch(cut, family);
          return s->shift >= standard_threshold(c, s->level);
        } else if constexpr (std::is_same_v<T, ExceptionalCut>) {
          const auto* e = std::get_if<ExceptionalSlope>(&phi);
          if (!e) mismatch(cut, family);
          return ge(e->shift, e->column == 0 ? c.a : c.b);
        } else {
          const auto* s = std::get_if<CoarseSlope>(&phi);
          if (!s) mismatch(cut, family);
          return s->shift >= c.m;
        }
      },
      cut);
}

CutReport validate_cut(const SlopeCut& cut, const Stability& family, const Window& window) {
  CutReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.failures.push_back(std::move(msg));
  };
  try {
    check_family(cut, family);
  } catch (const DomainError& e) {
    fail(e.what());
    return r;
  }

  if (const auto* s = std::get_if<StandardCut>(&cut)) {
    if (s->K == ExtendedInt::pos_inf() && !s->P.all && !s->P.empty()) {
      // A finite up-closed set of points is a top segment of the declared order.
      const auto& declared = as_standard(family)->point_order().declared();
      const auto n = s->P.labels.size();
      bool suffix = n <= declared.size();
      for (std::size_t i = 0; suffix && i < n; ++i) suffix = s->P.contains(declared[declared.size() - n + i]);
      if (!suffix) fail("point set " + to_string(s->P) + " is not up-closed in the point order");
    }
  } else if (const auto* e = std::get_if<ExceptionalCut>(&cut)) {
    const auto p = as_exceptional(family)->p();
    const auto& a = e->a;
    const auto& b = e->b;
    if (p) {
      if (a.is_finite() && b.is_finite()) {
        const auto lo = a.value() - *p - 2;
        if (b.value() != lo && b.value() != lo + 1) {
          fail("b = " + b.to_string() + " must be a-p-2 or a-p-1 for a = " + a.to_string());
        }
      } else if (a != b || a.is_finite() || b.is_finite()) {
        fail("with finite p an infinite threshold forces a = b = " + (a.is_finite() ? b : a).to_string());
      }
    } else if (a != ExtendedInt::pos_inf() && b != ExtendedInt::neg_inf()) {
      fail("with p = inf, a < +inf forces b = -inf");
    }
  }

  const auto w = centered(cut, window);
  const auto slopes = family.window_slopes(w);
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
    if (in_upper(cut, slopes[i], family) && !in_upper(cut, slopes[i + 1], family)) {
      fail("Phi_+ not up-closed: " + render(slopes[i]) + " in, " + render(slopes[i + 1]) + " out");
      break;
    }
  }
  return r;
}

namespace {

void require_valid(const SlopeCut& cut, const Stability& family) {
  const auto report = validate_cut(cut, family);
  if (!report.valid) throw DomainError(ErrorCode::InvalidCut, "invalid cut " + render(cut) + ": " + report.failures.front());
}

}  // namespace

Truncation truncate(const DerivedObject& x, const SlopeCut& cut, const Stability& family) {
  require_valid(cut, family);
  Truncation out;
  for (const auto& [t, m] : x.terms()) {
    const auto summand = object(t, m);
    const auto f = hn(summand, family);
    std::size_t j = 0;
    while (j < f.quotients.size() && !in_upper(cut, f.quotients[j].slope, family)) ++j;
    if (j == 0) {
      out.le0 += summand;
    } else if (j == f.quotients.size()) {
      out.ge1 += summand;
    } else {
      out.le0 += f.terms[j];
      for (std::size_t i = 0; i < j; ++i) out.ge1 += f.quotients[i].object;
    }
  }
  return out;
}

HeartDescription heart_slopes(const SlopeCut& cut, const Stability& family) {
  require_valid(cut, family);
  HeartDescription h;
  h.family = family.name();
  const Stability* fam = &family;
  h.contains_slope = [cut, fam](const SlopeId& phi) {
    return in_upper(cut, phi, *fam) && !in_upper(cut, fam->tau_inverse(phi), *fam);
  };
  if (const auto* s = std::get_if<StandardCut>(&cut)) {
    h.generators = standard_generators(*s);
  } else if (const auto* e = std::get_if<ExceptionalCut>(&cut)) {
    const auto k = as_exceptional(family)->k();
    if (e->a.is_finite()) h.generators.push_back(exceptional_generator(k, e->a.value()));
    if (e->b.is_finite()) h.generators.push_back(exceptional_generator(k + 1, e->b.value()));
    if (h.generators.empty()) h.generators.push_back("0");
  } else {
    h.generators.push_back("Coh P1[" + std::to_string(std::get<CoarseCut>(cut).m) + "]");
  }
  return h;
}

bool heart_contains(const DerivedObject& x, const SlopeCut& cut, const Stability& family) {
  const auto h = heart_slopes(cut, family);
  const auto f = hn(x, family);
  return std::all_of(f.quotients.begin(), f.quotients.end(),
                     [&](const auto& q) { return h.contains_slope(q.slope); });
}

bool is_bounded(const SlopeCut& cut, const Stability& family) {
  require_valid(cut, family);
  if (const auto* e = std::get_if<ExceptionalCut>(&cut)) return e->a.is_finite() && e->b.is_finite();
  return true;
}

// Catalog --------------------------------------------------------------------

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"A", "B", "C", "D", "E", "F", "G", "H", "I"};
  return names;
}

CatalogEntry catalog(const std::string& name, const CatalogParams& params) {
  CatalogEntry e;
  e.name = name;
  auto standard = [&](std::vector<std::string> points) {
    return std::make_shared<StandardStability>(PointOrder(std::move(points)));
  };
  auto need_p = [&]() {
    if (!params.p || *params.p < 0) {
      throw DomainError(ErrorCode::BadParams, "catalog entry " + name + " needs a parameter p >= 0");
    }
    e.params["p"] = std::to_string(*params.p);
    return *params.p;
  };
  const auto pos = ExtendedInt::pos_inf();
  const auto neg = ExtendedInt::neg_inf();

  if (name == "A" || name == "B" || name == "C") {
    e.family = standard(params.points);
    const ExtendedInt K = name == "A" ? neg : name == "B" ? ExtendedInt(0) : pos;
    e.cut = StandardCut{0, K, PointSet::every()};
  } else if (name == "D") {
    if (params.P.all || params.P.empty()) {
      throw DomainError(ErrorCode::BadParams, "catalog entry D needs a nonempty proper point set P");
    }
    std::vector<std::string> order;
    for (const auto& x : params.points) {
      if (!params.P.contains(x)) order.push_back(x);
    }
    order.insert(order.end(), params.P.labels.begin(), params.P.labels.end());
    e.family = standard(order);
    e.cut = StandardCut{0, pos, params.P};
    e.params["P"] = to_string(params.P);
  } else if (name == "E" || name == "F") {
    const auto p = need_p();
    e.family = std::make_shared<ExceptionalStability>(0, p);
    e.cut = ExceptionalCut{p, name == "E" ? -2 : -1};
    e.quiver = name == "F" && p == 0;
  } else if (name == "G" || name == "H" || name == "I") {
    e.family = std::make_shared<ExceptionalStability>(0, std::nullopt);
    e.cut = name == "G" ? ExceptionalCut{0, neg} : name == "H" ? ExceptionalCut{pos, 0} : ExceptionalCut{pos, neg};
    e.params["p"] = "inf";
  } else {
    throw DomainError(ErrorCode::BadParams, "unknown catalog entry '" + name + "'");
  }
  e.heart = heart_slopes(e.cut, *e.family);
  e.bounded = is_bounded(e.cut, *e.family);
  return e;
}

SlopeCut apply_autoequivalence(const SlopeCut& cut, std::int64_t twist, std::int64_t shift) {
  return std::visit(
      [&](const auto& c) -> SlopeCut {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, StandardCut>) {
          return StandardCut{c.m + shift, c.K.plus(twist), c.P};
        } else if constexpr (std::is_same_v<T, ExceptionalCut>) {
          return ExceptionalCut{c.a.plus(shift), c.b.plus(shift)};
        } else {
          return CoarseCut{c.m + shift};
        }
      },
      cut);
}

namespace {

CatalogParams params_for(const Classification& c, const Stability& family) {
  CatalogParams p;
  if (auto it = c.params.find("p"); it != c.params.end()) p.p = std::stoll(it->second);
  if (const auto* s = as_standard(family)) {
    if (!s->point_order().declared().empty()) p.points = s->point_order().declared();
  }
  if (auto it = c.params.find("P"); it != c.params.end()) {
    std::vector<std::string> labels;
    std::stringstream ss(it->second);
    for (std::string x; std::getline(ss, x, ';');) labels.push_back(x);
    p.P = PointSet::of(labels);
    for (const auto& x : p.P.labels) {
      if (std::find(p.points.begin(), p.points.end(), x) == p.points.end()) p.points.push_back(x);
    }
  }
  return p;
}

}  // namespace

Classification classify_bounded_cut(const SlopeCut& cut, const Stability& family) {
  require_valid(cut, family);
  if (!is_bounded(cut, family)) throw DomainError(ErrorCode::Unbounded, "cut " + render(cut) + " is not bounded");

  Classification c;
  if (const auto* s = std::get_if<StandardCut>(&cut)) {
    c.shift = s->m;
    if (s->K == ExtendedInt::neg_inf()) {
      c.name = "A";
    } else if (s->K.is_finite()) {
      c.name = "B";
      c.twist = s->K.value();
    } else if (s->P.all) {
      c.name = "C";
    } else if (s->P.empty()) {
      c.name = "A";
      c.shift = s->m + 1;
    } else {
      c.name = "D";
      c.params["P"] = to_string(s->P);
    }
  } else if (const auto* e = std::get_if<ExceptionalCut>(&cut)) {
    const auto& fam = *as_exceptional(family);
    const auto p = *fam.p();
    const auto a = e->a.value();
    c.name = e->b.value() == a - p - 2 ? "E" : "F";
    c.params["p"] = std::to_string(p);
    c.shift = a - p;
    c.twist = fam.k();
  } else {
    c.name = "A";
    c.shift = std::get<CoarseCut>(cut).m;
  }
  const auto entry = catalog(c.name, params_for(c, family));
  c.heart = entry.heart.generators;
  c.bounded = entry.bounded;
  return c;
}

bool reproduces(const Classification& c, const SlopeCut& cut, const Stability& family, const Window& window) {
  const auto entry = catalog(c.name, params_for(c, family));
  SlopeCut image;
  if (as_coarse(family)) {
    image = CoarseCut{c.shift};
  } else if (const auto* ef = as_exceptional(family)) {
    const auto* cat = as_exceptional(*entry.family);
    if (!cat || cat->k() + c.twist != ef->k() || cat->p() != ef->p()) return false;
    image = apply_autoequivalence(entry.cut, c.twist, c.shift);
  } else {
    image = apply_autoequivalence(entry.cut, c.twist, c.shift);
  }
  if (canonical(image) != canonical(cut)) return false;
  const auto w = centered(cut, window);
  for (const auto& s : family.window_slopes(w)) {
    if (in_upper(image, s, family) != in_upper(cut, s, family)) return false;
  }
  return true;
}

// Torsion pairs --------------------------------------------------------------

StandardCut torsion_pair_cut(const TorsionPair& pair, const StandardStability& family, const Window& window) {
  std::vector<ShiftedIndec> a1;
  std::vector<ShiftedIndec> a0;
  std::vector<std::pair<std::int64_t, bool>> lines;
  for (auto n = window.degree_center - window.degree_radius; n <= window.degree_center + window.degree_radius; ++n) {
    const auto t = line(n);
    const bool in = pair.in_a1(t.base);
    (in ? a1 : a0).push_back(t);
    lines.emplace_back(n, in);
  }
  std::vector<std::string> points_in;
  bool all_points = true;
  for (const auto& x : window.points) {
    const bool first = pair.in_a1(torsion(x, 1).base);
    for (std::int64_t d = 1; d <= window.max_length; ++d) {
      const auto t = torsion(x, d);
      const bool in = pair.in_a1(t.base);
      if (in != first) {
        throw DomainError(ErrorCode::NotSlopeDescribable,
                          "torsion at " + x + " is split between A1 and A0 by length");
      }
      (in ? a1 : a0).push_back(t);
    }
    if (first) {
      points_in.push_back(x);
    } else {
      all_points = false;
    }
  }

  for (const auto& a : a1) {
    for (const auto& b : a0) {
      if (const auto d = hom_dim(a, b, 0); d != 0) {
        throw DomainError(ErrorCode::HomViolation, "torsion pair '" + pair.name + "': Hom(" + render(a) + ", " +
                                                       render(b) + ") = " + std::to_string(d));
      }
    }
  }

  ExtendedInt K = ExtendedInt::pos_inf();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!lines[i].second) continue;
    if (!std::all_of(lines.begin() + static_cast<std::ptrdiff_t>(i), lines.end(),
                     [](const auto& l) { return l.second; })) {
      throw DomainError(ErrorCode::NotSlopeDescribable, "line bundles in A1 are not cut by a degree threshold");
    }
    K = i == 0 ? ExtendedInt::neg_inf() : ExtendedInt(lines[i].first);
    break;
  }

  StandardCut cut{0, K, all_points ? PointSet::every() : PointSet::of(points_in)};
  if (const auto report = validate_cut(cut, family, window); !report.valid) {
    throw DomainError(ErrorCode::NotSlopeDescribable, "torsion pair '" + pair.name + "' gives " + render(cut) +
                                                          ": " + report.failures.front());
  }
  return cut;
}

// Diagram --------------------------------------------------------------------

std::string render_diagram(const CatalogEntry& entry) {
  const auto& family = *entry.family;
  Window w;
  w.shift_radius = 6;
  w.degree_radius = 1;
  w.points.clear();
  if (const auto* s = as_standard(family)) {
    if (s->point_order().declared().empty()) w.points = {"x"};
  }
  w = centered(entry.cut, w);
  w.shift_radius = 6;
  w.degree_radius = 1;
  const auto all = family.window_slopes(w);

  // Slice the (gap-free) middle of the window around the two boundaries.
  std::optional<std::size_t> first_upper;
  std::optional<std::size_t> last_lower;  // last slope phi with tau^{-1}(phi) in Phi_-
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!first_upper && in_upper(entry.cut, all[i], family)) first_upper = i;
    if (!in_upper(entry.cut, family.tau_inverse(all[i]), family)) last_lower = i;
  }
  const auto mid = all.size() / 2;
  const auto left = std::min(first_upper.value_or(mid), last_lower.value_or(mid));
  const auto right = std::max(first_upper.value_or(mid), last_lower.value_or(mid));
  const std::size_t pad = std::holds_alternative<ExceptionalCut>(entry.cut) ? 2 : 3;
  const auto lo = left > pad ? left - pad : 0;
  const auto hi = std::min(all.size(), right + pad + 1);

  std::string row = "...";
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (auto i = lo; i < hi; ++i) {
    row += ' ';
    const auto token = slope_token(all[i], family);
    spans.emplace_back(row.size(), row.size() + token.size());
    row += token;
  }
  row += " ...";

  std::string upper(row.size(), ' ');
  if (first_upper && *first_upper < hi) {
    const auto start = spans[*first_upper - lo].first;
    upper[start] = '[';
    for (auto i = start + 1; i < row.size(); ++i) upper[i] = '=';
  }
  std::string lower(row.size(), ' ');
  if (last_lower && *last_lower >= lo) {
    const auto end = spans[*last_lower - lo].second - 1;
    for (std::size_t i = 0; i < end; ++i) lower[i] = '=';
    lower[end] = ']';
  }

  std::ostringstream os;
  os << entry.name;
  for (const auto& [k, v] : entry.params) os << ' ' << k << '=' << v;
  os << "  cut " << render(entry.cut) << '\n';
  os << row << '\n';
  os << upper << "  D<=0\n";
  os << lower << "  D>=0\n";
  os << "heart:";
  for (const auto& g : entry.heart.generators) os << "  " << g;
  os << '\n';
  return os.str();
}

}  // namespace tstab
