#include "tstab/io.hpp"

#include <algorithm>
#include <sstream>

#include "tstab/elliptic.hpp"
#include "tstab/error.hpp"

namespace tstab {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw DomainError(ErrorCode::BadParams, msg); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  bad("expected an integer for " + what + ", got '" + text + "'");
}

// key=value pairs after the "kind:" prefix.
std::vector<std::pair<std::string, std::string>> key_values(std::string_view body, const std::string& spec) {
  std::vector<std::pair<std::string, std::string>> out;
  if (trim(body).empty()) return out;
  for (const auto& item : split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) bad("expected key=value in '" + spec + "', got '" + item + "'");
    out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return out;
}

Json p_json(const std::optional<std::int64_t>& p) {
  if (p) return *p;
  return "inf";
}

template <class Object>
Json filtration_json(const Filtration<Object>& f, const Stability& family) {
  Json quotients = Json::array();
  for (const auto& q : f.quotients) quotients.push_back({{"slope", to_json(q.slope)}, {"object", render(q.object)}});
  Json terms = Json::array();
  for (const auto& t : f.terms) terms.push_back(render(t));
  return {{"object", render(f.object())}, {"family", to_json(family)}, {"quotients", quotients}, {"terms", terms}};
}

template <class Object, class ParseFn>
HnReport check_doc(const Json& doc, const Stability& family, ParseFn parse) {
  Filtration<Object> f;
  f.terms.clear();
  for (const auto& q : doc.at("quotients")) {
    f.quotients.push_back({slope_from_json(q.at("slope"), family), parse(q.at("object").template get<std::string>())});
  }
  for (const auto& t : doc.at("terms")) f.terms.push_back(parse(t.get<std::string>()));
  const auto x = parse(doc.at("object").get<std::string>());
  return verify_hn(x, f, family);
}

}  // namespace

Json to_json(const SlopeId& slope) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoarseSlope>) {
          return {{"shift", s.shift}};
        } else if constexpr (std::is_same_v<T, StandardSlope>) {
          if (const auto* n = std::get_if<IntLevel>(&s.level)) {
            return {{"shift", s.shift}, {"level", "int"}, {"degree", n->degree}};
          }
          return {{"shift", s.shift}, {"level", "point"}, {"point", std::get<PointLevel>(s.level).point}};
        } else if constexpr (std::is_same_v<T, ExceptionalSlope>) {
          return {{"shift", s.shift}, {"column", s.column}};
        } else if constexpr (std::is_same_v<T, EllipticSlope>) {
          return {{"shift", s.shift},
                  {"mu", s.mu.to_string()},
                  {"rank", s.cls.rank},
                  {"degree", s.cls.degree},
                  {"point", s.cls.point}};
        } else {
          return {{"block", s.index}};
        }
      },
      slope);
}

SlopeId slope_from_json(const Json& j, const Stability& family) {
  SlopeId s;
  try {
    if (j.contains("block")) {
      s = BlockSlope{j.at("block").get<std::int64_t>()};
    } else if (j.contains("column")) {
      const auto c = j.at("column").get<int>();
      if (c != 0 && c != 1) bad("exceptional column must be 0 or 1");
      s = ExceptionalSlope{j.at("shift").get<std::int64_t>(), c};
    } else if (j.contains("level")) {
      const auto level = j.at("level").get<std::string>();
      StandardSlope st{j.at("shift").get<std::int64_t>(), IntLevel{}};
      if (level == "int") {
        st.level = IntLevel{j.at("degree").get<std::int64_t>()};
      } else if (level == "point") {
        st.level = PointLevel{j.at("point").get<std::string>()};
      } else {
        bad("unknown standard level '" + level + "'");
      }
      s = st;
    } else if (j.contains("mu")) {
      auto cls = StableClass::make(j.at("rank").get<std::int64_t>(), j.at("degree").get<std::int64_t>(),
                                   j.at("point").get<std::string>());
      s = EllipticSlope{j.at("shift").get<std::int64_t>(), mu_class(cls), cls};
    } else {
      s = CoarseSlope{j.at("shift").get<std::int64_t>()};
    }
  } catch (const Json::exception& e) {
    bad(std::string("malformed slope: ") + e.what());
  }
  (void)family.compare(s, s);  // CrossFamily for a slope of another family
  return s;
}

Json to_json(const Stability& family) {
  if (const auto* s = dynamic_cast<const StandardStability*>(&family)) {
    Json j = {{"family", "standard"}, {"point_order", s->point_order().declared()}};
    if (!s->torsion_above_lines()) j["torsion_above_lines"] = false;
    return j;
  }
  if (const auto* e = dynamic_cast<const ExceptionalStability*>(&family)) {
    return {{"family", "exceptional"}, {"k", e->k()}, {"p", p_json(e->p())}};
  }
  if (const auto* e = dynamic_cast<const EllipticStability*>(&family)) {
    return {{"family", "elliptic"}, {"point_order", e->point_order().declared()}};
  }
  if (const auto* c = dynamic_cast<const CoarsenedStability*>(&family)) {
    return {{"family", "coarsened"}, {"base", to_json(c->base())}, {"partition", c->partition().name}};
  }
  return {{"family", family.name()}};
}

FamilyPtr family_from_json(const Json& j) {
  try {
    const auto name = j.at("family").get<std::string>();
    if (name == "standard") {
      const auto points = j.value("point_order", std::vector<std::string>{});
      return std::make_shared<StandardStability>(PointOrder(points), j.value("torsion_above_lines", true));
    }
    if (name == "exceptional") {
      const auto& p = j.at("p");
      return std::make_shared<ExceptionalStability>(j.value("k", std::int64_t{0}),
                                                    p.is_string() ? parse_p(p.get<std::string>())
                                                                  : std::optional(p.get<std::int64_t>()));
    }
    if (name == "coarse") return std::make_shared<CoarseStability>();
    if (name == "blocks") return std::make_shared<BlockOrder>();
    if (name == "elliptic") {
      return std::make_shared<EllipticStability>(PointOrder(j.value("point_order", std::vector<std::string>{})));
    }
    if (name == "coarsened") {
      auto base = family_from_json(j.at("base"));
      const auto partition = j.at("partition").get<std::string>();
      if (partition == "by shift") return coarsen(base, partition_by_shift());
      if (partition == "singletons") return coarsen(base, partition_singletons(base));
      if (const auto* e = dynamic_cast<const ExceptionalStability*>(base.get())) {
        auto part = partition_exceptional_pairs(*e);
        if (part.name == partition) return coarsen(base, std::move(part));
      }
      bad("unknown partition '" + partition + "'");
    }
    bad("unknown family '" + name + "'");
  } catch (const Json::exception& e) {
    bad(std::string("malformed family descriptor: ") + e.what());
  }
}

Json to_json(const HNFiltration& f, const Stability& family) { return filtration_json(f, family); }
Json to_json(const EllipticFiltration& f, const Stability& family) { return filtration_json(f, family); }

FiltrationCheck check_filtration_json(const Json& doc) {
  FiltrationCheck out;
  try {
    out.family = family_from_json(doc.at("family"));
    out.object = doc.at("object").get<std::string>();
    if (dynamic_cast<const EllipticStability*>(out.family.get())) {
      out.report = check_doc<EllipticObject>(doc, *out.family, [](const std::string& s) { return parse_elliptic(s); });
    } else {
      out.report = check_doc<DerivedObject>(doc, *out.family, [](const std::string& s) { return parse_derived(s); });
    }
  } catch (const Json::exception& e) {
    bad(std::string("malformed filtration document: ") + e.what());
  }
  return out;
}

Json to_json(const HnReport& r) {
  return {{"ok", r.ok()},
          {"ascending", r.ascending},
          {"semistable", r.semistable},
          {"hom_vanishing", r.hom_vanishing},
          {"k0_additive", r.k0_additive},
          {"endpoints", r.endpoints},
          {"failures", r.failures}};
}

Json to_json(const StabilityReport& r) {
  return {{"ok", r.ok()},
          {"tau_equivariant", r.tau_equivariant},
          {"tau_raises", r.tau_raises},
          {"hom_vanishing", r.hom_vanishing},
          {"hn_verified", r.hn_verified},
          {"generators_checked", r.generators_checked},
          {"pairs_checked", r.pairs_checked},
          {"objects_checked", r.objects_checked},
          {"witness", r.witness},
          {"failures", r.failures}};
}

Json to_json(const CutReport& r) { return {{"valid", r.valid}, {"failures", r.failures}}; }

Json to_json(const Classification& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) {
    if (k == "p") {
      params[k] = std::stoll(v);
    } else {
      params[k] = v;
    }
  }
  return {{"name", c.name}, {"params", params}, {"twist", c.twist},
          {"shift", c.shift}, {"heart", c.heart}, {"bounded", c.bounded}};
}

Json to_json(const CatalogEntry& e) {
  Json params = Json::object();
  for (const auto& [k, v] : e.params) {
    if (k == "p" && v != "inf") {
      params[k] = std::stoll(v);
    } else {
      params[k] = v;
    }
  }
  Json j = {{"name", e.name},     {"params", params},   {"twist", 0},
            {"shift", 0},         {"heart", e.heart.generators}, {"bounded", e.bounded},
            {"cut", render(e.cut)}, {"family", to_json(*e.family)}};
  if (e.quiver) j["quiver"] = true;
  return j;
}

Json to_json(const HomProfile& h) {
  Json j = Json::object();
  for (const auto& [q, d] : h) j[std::to_string(q)] = d;
  return j;
}

std::optional<std::int64_t> parse_p(const std::string& text) {
  if (text == "inf") return std::nullopt;
  const auto v = parse_int(text, "p");
  if (v < 0) bad("p must be >= 0 or inf");
  return v;
}

SlopeCut parse_cutspec(std::string_view spec) {
  const std::string s(spec);
  const auto colon = s.find(':');
  const auto kind = trim(s.substr(0, colon));
  const auto kv = key_values(colon == std::string::npos ? std::string_view{} : std::string_view(s).substr(colon + 1), s);
  auto ext = [&](const std::string& text) {
    try {
      return ExtendedInt::parse(text);
    } catch (const DomainError&) {
      bad("expected an integer or +-inf in '" + s + "', got '" + text + "'");
    }
  };

  if (kind == "std") {
    StandardCut c;
    for (const auto& [k, v] : kv) {
      if (k == "m") {
        c.m = parse_int(v, "m");
      } else if (k == "K") {
        c.K = ext(v);
      } else if (k == "P") {
        if (v == "all") {
          c.P = PointSet::every();
        } else if (v == "none" || v.empty()) {
          c.P = PointSet::none();
        } else {
          c.P = PointSet::of(split(v, ';'));
        }
      } else {
        bad("unknown key '" + k + "' in standard cut '" + s + "'");
      }
    }
    return c;
  }
  if (kind == "exc") {
    std::optional<ExtendedInt> a;
    std::optional<ExtendedInt> b;
    for (const auto& [k, v] : kv) {
      if (k == "a") {
        a = ext(v);
      } else if (k == "b") {
        b = ext(v);
      } else {
        bad("unknown key '" + k + "' in exceptional cut '" + s + "'");
      }
    }
    if (!a || !b) bad("exceptional cut needs both a and b: '" + s + "'");
    return ExceptionalCut{*a, *b};
  }
  if (kind == "coarse") {
    CoarseCut c;
    for (const auto& [k, v] : kv) {
      if (k != "m") bad("unknown key '" + k + "' in coarse cut '" + s + "'");
      c.m = parse_int(v, "m");
    }
    return c;
  }
  bad("unknown cut kind '" + kind + "' (expected std, exc or coarse)");
}

FamilyPtr parse_famspec(std::string_view spec, const std::vector<std::string>& points) {
  const std::string s = trim(spec);
  if (s.rfind("coarsened:", 0) == 0) {
    auto base = parse_famspec(std::string_view(s).substr(10), points);
    if (const auto* e = dynamic_cast<const ExceptionalStability*>(base.get())) {
      return coarsen(base, partition_exceptional_pairs(*e));
    }
    if (dynamic_cast<const StandardStability*>(base.get())) return coarsen(base, partition_by_shift());
    bad("no default coarsening for '" + s + "'");
  }
  const auto colon = s.find(':');
  const auto kind = s.substr(0, colon);
  const auto kv = key_values(colon == std::string::npos ? std::string_view{} : std::string_view(s).substr(colon + 1), s);
  if (kind == "std" || kind == "standard") {
    if (!kv.empty()) bad("standard family takes no parameters: '" + s + "'");
    return std::make_shared<StandardStability>(PointOrder(points));
  }
  if (kind == "coarse") return std::make_shared<CoarseStability>();
  if (kind == "ell" || kind == "elliptic") return std::make_shared<EllipticStability>(PointOrder(points));
  if (kind == "exc" || kind == "exceptional") {
    std::int64_t k = 0;
    std::optional<std::int64_t> p = 0;
    for (const auto& [key, v] : kv) {
      if (key == "k") {
        k = parse_int(v, "k");
      } else if (key == "p") {
        p = parse_p(v);
      } else {
        bad("unknown key '" + key + "' in family '" + s + "'");
      }
    }
    return std::make_shared<ExceptionalStability>(k, p);
  }
  bad("unknown family '" + s + "' (expected std, coarse, ell, exc:k=K,p=P or coarsened:...)");
}

SessionConfig parse_config(std::istream& in, SessionConfig base) {
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const auto line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) bad("config line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "points") {
      base.points = value.empty() ? std::vector<std::string>{} : split(value, ',');
      (void)PointOrder(base.points);  // validates labels and uniqueness
    } else if (key == "k") {
      base.k = parse_int(value, "k");
    } else if (key == "p") {
      base.p = parse_p(value);
    } else if (key == "format") {
      if (value != "text" && value != "json") bad("config format must be text or json");
      base.json = value == "json";
    } else {
      bad("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

}  // namespace tstab
