#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tstab/elliptic.hpp"
#include "tstab/error.hpp"
#include "tstab/io.hpp"
#include "tstab/p1_stabilities.hpp"
#include "tstab/parse.hpp"
#include "tstab/t_structure.hpp"

namespace tstab::cli {

namespace {

struct Session {
  SessionConfig config;
  std::ostream* out = nullptr;

  bool json() const { return config.json; }

  std::vector<std::string> catalog_points() const {
    return config.points.empty() ? std::vector<std::string>{"x", "y", "z"} : config.points;
  }

  FamilyPtr family(const std::string& spec) const {
    if (spec == "exc" || spec == "exceptional") {
      const std::string p = config.p ? std::to_string(*config.p) : "inf";
      return parse_famspec("exc:k=" + std::to_string(config.k) + ",p=" + p);
    }
    return parse_famspec(spec, config.points);
  }

  FamilyPtr family_for(const SlopeCut& cut) const {
    if (std::holds_alternative<StandardCut>(cut)) return family("std");
    if (std::holds_alternative<ExceptionalCut>(cut)) return family("exc");
    return family("coarse");
  }

  Window window(std::int64_t w) const {
    Window win;
    win.degree_radius = w;
    if (!config.points.empty()) win.points = config.points;
    return win;
  }

  void emit(const Json& j) const { *out << j.dump(2) << '\n'; }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_filtration(const Session& s, const Json& doc) {
  if (s.json()) {
    s.emit(doc);
    return;
  }
  *s.out << doc.at("object").get<std::string>() << '\n';
  for (const auto& q : doc.at("quotients")) {
    *s.out << "  " << q.at("slope").dump() << "  " << q.at("object").get<std::string>() << '\n';
  }
}

int print_report(const Session& s, const Json& j, bool ok, const std::vector<std::string>& failures) {
  if (s.json()) {
    s.emit(j);
  } else {
    *s.out << (ok ? "pass" : "FAIL") << '\n';
    for (const auto& f : failures) *s.out << "  " << f << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harder-Narasimhan filtrations, t-structures and hearts on P1 and elliptic curves", "tstab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string points_csv;
  std::string format;
  app.add_option("--config", config_path, "key = value session file (points, k, p, format)");
  app.add_option("--points", points_csv, "point order, lowest first, e.g. x,y,z");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string k_text;
  std::string p_text;
  auto add_kp = [&](CLI::App* sub) {
    sub->add_option("--k", k_text, "exceptional pair (O(k), O(k+1))");
    sub->add_option("--p", p_text, "exceptional parameter, a natural number or inf");
  };

  std::string expr;
  std::string expr2;
  std::string stability = "std";
  std::string cut_text;

  auto* normalize = app.add_subcommand("normalize", "print the normal form of an object");
  normalize->add_option("expr", expr, "object expression")->required();

  std::optional<std::int64_t> degree;
  auto* hom = app.add_subcommand("hom", "Hom^q dimensions between two objects");
  hom->add_option("a", expr, "source object")->required();
  hom->add_option("b", expr2, "target object")->required();
  hom->add_option("--degree", degree, "a single degree q");

  auto* hn_cmd = app.add_subcommand("hn", "Harder-Narasimhan filtration");
  hn_cmd->add_option("expr", expr, "object expression")->required();
  hn_cmd->add_option("--stability", stability, "std | exc | coarse | ell | FAMSPEC");
  add_kp(hn_cmd);

  auto* trunc = app.add_subcommand("truncate", "X_<=0 -> X -> X_>=1 for a cut");
  trunc->add_option("expr", expr, "object expression")->required();
  trunc->add_option("--cut", cut_text, "CUTSPEC")->required();
  add_kp(trunc);

  std::string contains;
  auto* heart = app.add_subcommand("heart", "heart of the t-structure of a cut");
  heart->add_option("--cut", cut_text, "CUTSPEC")->required();
  heart->add_option("--contains", contains, "test membership of an object");
  add_kp(heart);

  auto* classify = app.add_subcommand("classify", "name a bounded cut in the catalog");
  classify->add_option("--cut", cut_text, "CUTSPEC")->required();
  add_kp(classify);

  std::string name;
  std::vector<std::string> params;
  bool diagram = false;
  auto* cat = app.add_subcommand("catalog", "the t-structures A ... I");
  cat->add_option("name", name, "A, B, C, D, E, F, G, H or I");
  cat->add_option("--params", params, "p=N and/or P=x;y");
  cat->add_flag("--diagram", diagram, "draw the slope line");

  std::int64_t window_radius = 8;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  auto* check = app.add_subcommand("check", "window-certified checks");
  check->require_subcommand(1);
  check->fallthrough();
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", window_radius, "degree radius of the generator window");
  };
  auto* check_stab = check->add_subcommand("stability", "stability axioms on a window");
  check_stab->add_option("--stability", stability, "std | exc | coarse | FAMSPEC");
  check_stab->add_option("--seed", seed, "seed for the random objects");
  check_stab->add_option("--samples", samples, "number of random objects");
  add_window(check_stab);
  add_kp(check_stab);
  auto* check_cut = check->add_subcommand("cut", "validity of a cut");
  check_cut->add_option("--cut", cut_text, "CUTSPEC")->required();
  add_window(check_cut);
  add_kp(check_cut);
  auto* check_hn = check->add_subcommand("hn", "verify a filtration document read from stdin");
  add_window(check_hn);
  auto* check_finest = check->add_subcommand("finest", "Hom test for a finest stability");
  check_finest->add_option("--stability", stability, "std | exc | coarse | FAMSPEC");
  add_window(check_finest);
  add_kp(check_finest);

  std::string fine;
  std::string weak;
  auto* compare = app.add_subcommand("compare", "is FINE finer than WEAK");
  compare->add_option("--fine", fine, "FAMSPEC")->required();
  compare->add_option("--weak", weak, "FAMSPEC")->required();
  add_window(compare);

  std::vector<const char*> argv = {"tstab"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Session s;
  s.out = &out;
  try {
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) {
        err << "error: cannot read config file " << config_path << '\n';
        return 2;
      }
      s.config = parse_config(file, s.config);
    }
    if (!points_csv.empty()) {
      std::istringstream line("points = " + points_csv);
      s.config = parse_config(line, s.config);
    }
    if (!format.empty()) s.config.json = format == "json";
    if (!k_text.empty()) {
      std::istringstream line("k = " + k_text);
      s.config = parse_config(line, s.config);
    }
    if (!p_text.empty()) s.config.p = parse_p(p_text);

    if (*normalize) {
      const auto x = parse_object(expr);
      if (s.json()) {
        s.emit({{"object", render(x)}});
      } else {
        out << render(x) << '\n';
      }
      return 0;
    }

    if (*hom) {
      const auto a = parse_object(expr);
      const auto b = parse_object(expr2);
      HomProfile profile;
      if (a.index() != b.index()) {
        if (!std::visit([](const auto& v) { return v.is_zero(); }, a) &&
            !std::visit([](const auto& v) { return v.is_zero(); }, b)) {
          throw DomainError(ErrorCode::UnsupportedFamily, "hom between a P1 object and an elliptic object");
        }
      } else if (const auto* da = std::get_if<DerivedObject>(&a)) {
        profile = hom_profile(*da, std::get<DerivedObject>(b));
      } else {
        profile = hom_profile(std::get<EllipticObject>(a), std::get<EllipticObject>(b));
      }
      if (degree) {
        const auto it = profile.find(*degree);
        const auto d = it == profile.end() ? 0 : it->second;
        if (s.json()) {
          s.emit({{"degree", *degree}, {"dim", d}});
        } else {
          out << d << '\n';
        }
      } else if (s.json()) {
        s.emit({{"profile", to_json(profile)}});
      } else {
        for (const auto& [q, d] : profile) out << "Hom^" << q << " = " << d << '\n';
        if (profile.empty()) out << "0\n";
      }
      return 0;
    }

    if (*hn_cmd) {
      const auto family = s.family(stability);
      const auto x = parse_object(expr);
      if (const auto* e = std::get_if<EllipticObject>(&x)) {
        print_filtration(s, to_json(tstab::hn(*e, *family), *family));
      } else {
        print_filtration(s, to_json(tstab::hn(std::get<DerivedObject>(x), *family), *family));
      }
      return 0;
    }

    if (*trunc) {
      const auto cut = parse_cutspec(cut_text);
      const auto family = s.family_for(cut);
      const auto t = truncate(parse_derived(expr), cut, *family);
      if (s.json()) {
        s.emit({{"le0", render(t.le0)}, {"ge1", render(t.ge1)}});
      } else {
        out << "X_le0: " << render(t.le0) << "\nX_ge1: " << render(t.ge1) << '\n';
      }
      return 0;
    }

    if (*heart) {
      const auto cut = parse_cutspec(cut_text);
      const auto family = s.family_for(cut);
      const auto h = heart_slopes(cut, *family);
      const bool bounded = is_bounded(cut, *family);
      Json j = {{"cut", render(cut)}, {"heart", h.generators}, {"bounded", bounded}};
      if (!contains.empty()) j["contains"] = heart_contains(parse_derived(contains), cut, *family);
      if (s.json()) {
        s.emit(j);
      } else {
        out << "heart:";
        for (const auto& g : h.generators) out << "  " << g;
        out << "\nbounded: " << bool_text(bounded) << '\n';
        if (j.contains("contains")) out << "contains: " << bool_text(j["contains"].get<bool>()) << '\n';
      }
      return 0;
    }

    if (*classify) {
      const auto cut = parse_cutspec(cut_text);
      const auto family = s.family_for(cut);
      const auto c = classify_bounded_cut(cut, *family);
      if (s.json()) {
        s.emit(to_json(c));
      } else {
        out << c.name;
        for (const auto& [k, v] : c.params) out << ' ' << k << '=' << v;
        out << "  twist " << c.twist << "  shift " << c.shift << "\nheart:";
        for (const auto& g : c.heart) out << "  " << g;
        out << '\n';
      }
      return 0;
    }

    if (*cat) {
      CatalogParams cp;
      cp.points = s.catalog_points();
      for (const auto& item : params) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError(ErrorCode::BadParams, "expected key=value, got '" + item + "'");
        const auto key = item.substr(0, eq);
        const auto value = item.substr(eq + 1);
        if (key == "p") {
          cp.p = parse_p(value);
          if (!cp.p) throw DomainError(ErrorCode::BadParams, "catalog p must be finite");
        } else if (key == "P") {
          std::vector<std::string> labels;
          std::stringstream ss(value);
          for (std::string x; std::getline(ss, x, ';');) labels.push_back(x);
          cp.P = PointSet::of(labels);
        } else {
          throw DomainError(ErrorCode::BadParams, "unknown catalog parameter '" + key + "'");
        }
      }
      std::vector<std::string> names;
      if (name.empty()) {
        names = catalog_names();
        if (!cp.p) cp.p = 0;
        if (cp.P.empty()) cp.P = PointSet::of({cp.points.back()});
      } else {
        names = {name};
      }
      Json all = Json::array();
      for (const auto& n : names) {
        const auto entry = catalog(n, cp);
        if (s.json()) {
          all.push_back(to_json(entry));
        } else if (diagram) {
          out << render_diagram(entry) << '\n';
        } else {
          out << entry.name;
          for (const auto& [k, v] : entry.params) out << ' ' << k << '=' << v;
          out << "  " << render(entry.cut) << "  " << (entry.bounded ? "bounded" : "unbounded");
          if (entry.quiver) out << "  quiver";
          out << "\n  heart:";
          for (const auto& g : entry.heart.generators) out << "  " << g;
          out << '\n';
        }
      }
      if (s.json()) s.emit(name.empty() ? all : all.front());
      return 0;
    }

    if (*check_stab) {
      const auto family = s.family(stability);
      const auto r = validate_stability(*family, s.window(window_radius), samples, seed);
      return print_report(s, to_json(r), r.ok(), r.failures);
    }

    if (*check_cut) {
      const auto cut = parse_cutspec(cut_text);
      const auto family = s.family_for(cut);
      const auto r = validate_cut(cut, *family, s.window(window_radius));
      return print_report(s, to_json(r), r.valid, r.failures);
    }

    if (*check_hn) {
      std::stringstream buffer;
      buffer << in.rdbuf();
      Json doc;
      try {
        doc = Json::parse(buffer.str());
      } catch (const Json::parse_error& e) {
        throw DomainError(ErrorCode::BadParams, std::string("stdin is not JSON: ") + e.what());
      }
      const auto c = check_filtration_json(doc);
      return print_report(s, to_json(c.report), c.report.ok(), c.report.failures);
    }

    if (*check_finest) {
      const auto family = s.family(stability);
      const auto r = finest_check(*family, s.window(window_radius));
      const Json j = {{"finest", r.finest}, {"slopes_checked", r.slopes_checked}, {"witness", r.witness}};
      return print_report(s, j, r.finest, r.finest ? std::vector<std::string>{} : std::vector{"witness " + r.witness});
    }

    if (*compare) {
      const auto f = s.family(fine);
      const auto w = s.family(weak);
      auto win = s.window(window_radius);
      if (const auto* e = dynamic_cast<const ExceptionalStability*>(f.get())) win.degree_center = e->k();
      if (const auto* e = dynamic_cast<const ExceptionalStability*>(w.get())) win.degree_center = e->k();
      const auto v = is_finer(*f, *w, win);
      const Json j = {{"finer", v.finer}, {"witness", v.witness}, {"reason", v.reason}};
      if (s.json()) {
        s.emit(j);
      } else {
        out << (v.finer ? "finer" : "not finer") << '\n';
        if (!v.finer) out << "  witness " << v.witness << "\n  " << v.reason << '\n';
      }
      return 0;
    }
  } catch (const DomainError& e) {
    if (s.json()) {
      s.emit({{"error", e.what()}, {"code", std::string(to_string(e.code()))}});
    } else {
      err << "error: " << e.what() << '\n';
    }
    return 1;
  }
  return 2;
}

}  // namespace tstab::cli
