#include <random>
#include <set>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "tstab/error.hpp"
#include "tstab/parse.hpp"
#include "tstab/sampling.hpp"
#include "tstab/t_structure.hpp"

using namespace tstab;

namespace {

using OptP = std::optional<std::int64_t>;
using Strings = std::vector<std::string>;

DerivedObject P(const char* s) { return parse_derived(s); }

const StandardStability kStd(PointOrder({"x", "y", "z"}));

StandardCut std_cut(std::int64_t m, ExtendedInt K, PointSet P = PointSet::every()) { return {m, K, std::move(P)}; }

template <class F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error, expected " << to_string(code);
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

CatalogEntry entry(const std::string& name, OptP p = std::nullopt, PointSet P = {}) {
  CatalogParams params;
  params.p = p;
  params.P = std::move(P);
  return catalog(name, params);
}

}  // namespace

TEST(ValidateCut, Examples) {
  for (std::int64_t p : {0, 1, 3}) {
    EXPECT_TRUE(validate_cut(ExceptionalCut{p, -2}, ExceptionalStability(0, p)).valid);
    EXPECT_TRUE(validate_cut(ExceptionalCut{p, -1}, ExceptionalStability(0, p)).valid);
    EXPECT_FALSE(validate_cut(ExceptionalCut{p, 0}, ExceptionalStability(0, p)).valid);
    EXPECT_FALSE(validate_cut(ExceptionalCut{0, ExtendedInt::neg_inf()}, ExceptionalStability(0, p)).valid);
  }
  EXPECT_TRUE(validate_cut(ExceptionalCut{0, ExtendedInt::neg_inf()}, ExceptionalStability(0, std::nullopt)).valid);
  EXPECT_FALSE(validate_cut(ExceptionalCut{0, 3}, ExceptionalStability(0, std::nullopt)).valid);
  EXPECT_TRUE(validate_cut(std_cut(0, 0), kStd).valid);
  EXPECT_TRUE(validate_cut(std_cut(0, ExtendedInt::pos_inf(), PointSet::of({"z"})), kStd).valid);
  EXPECT_FALSE(validate_cut(std_cut(0, ExtendedInt::pos_inf(), PointSet::of({"x"})), kStd).valid);
  EXPECT_TRUE(validate_cut(CoarseCut{4}, CoarseStability{}).valid);
}

TEST(ValidateCut, FamilyMismatch) {
  EXPECT_FALSE(validate_cut(ExceptionalCut{0, -2}, kStd).valid);
  expect_code(ErrorCode::InvalidCut, [] { in_upper(CoarseCut{0}, StandardSlope{0, IntLevel{0}}, kStd); });
  expect_code(ErrorCode::InvalidCut, [] { truncate(P("O(1)"), ExceptionalCut{0, 0}, ExceptionalStability(0, 0)); });
}

TEST(Truncate, Examples) {
  const auto a = truncate(P("O(1)[0] + O(2)[-1]"), std_cut(0, ExtendedInt::neg_inf()), kStd);
  EXPECT_EQ(a.le0, P("O(1)"));
  EXPECT_EQ(a.ge1, P("O(2)[-1]"));

  const ExceptionalStability exc(0, 0);
  const auto b = truncate(P("O(3)"), ExceptionalCut{1, 0}, exc);
  EXPECT_EQ(b.le0, P("O(3)"));
  EXPECT_TRUE(b.ge1.is_zero());

  // Splits the triangle 3 O(1) -> O(3) -> 2 O[1].
  const auto c = truncate(P("O(3)"), ExceptionalCut{2, 0}, exc);
  EXPECT_EQ(c.le0, P("3*O(1)"));
  EXPECT_EQ(c.ge1, P("2*O(0)[1]"));

  const auto d = truncate(P("T(x,2)[-3]"), std_cut(0, 0), kStd);
  EXPECT_TRUE(d.le0.is_zero());
  EXPECT_EQ(d.ge1, P("T(x,2)[-3]"));
}

TEST(Heart, Examples) {
  const auto B = entry("B");
  EXPECT_TRUE(heart_contains(P("O(5)[0]"), B.cut, *B.family));
  EXPECT_TRUE(heart_contains(P("O(-1)[1]"), B.cut, *B.family));
  EXPECT_FALSE(heart_contains(P("O(-1)[0]"), B.cut, *B.family));
  EXPECT_TRUE(heart_contains(DerivedObject{}, B.cut, *B.family));
  const auto C = entry("C");
  EXPECT_TRUE(heart_contains(P("T(x,2)[0]"), C.cut, *C.family));
  EXPECT_TRUE(heart_contains(P("O(7)[1] + T(y,1)"), C.cut, *C.family));
  EXPECT_FALSE(heart_contains(P("O(7)[0]"), C.cut, *C.family));
  const auto E = entry("E", 2);
  EXPECT_TRUE(heart_contains(P("O(0)[2] + 3*O(1)[-2]"), E.cut, *E.family));
  EXPECT_FALSE(heart_contains(P("O(0)[1]"), E.cut, *E.family));
}

TEST(Heart, SlopeDescriptions) {
  EXPECT_EQ(heart_slopes(ExceptionalCut{3, -2}, ExceptionalStability(0, 3)).generators, (Strings{"O[3]", "O(1)[-2]"}));
  EXPECT_EQ(heart_slopes(std_cut(0, ExtendedInt::neg_inf()), kStd).generators, (Strings{"Coh P1[0]"}));
  EXPECT_EQ(heart_slopes(std_cut(2, ExtendedInt::neg_inf()), kStd).generators, (Strings{"Coh P1[2]"}));
  const ExceptionalStability inf(0, std::nullopt);
  EXPECT_EQ(heart_slopes(ExceptionalCut{ExtendedInt::pos_inf(), ExtendedInt::neg_inf()}, inf).generators,
            (Strings{"0"}));
  EXPECT_FALSE(heart_contains(P("O(0)"), ExceptionalCut{ExtendedInt::pos_inf(), ExtendedInt::neg_inf()}, inf));
}

TEST(Bounded, Examples) {
  for (const auto* n : {"A", "B", "C"}) EXPECT_TRUE(entry(n).bounded);
  EXPECT_TRUE(entry("D", std::nullopt, PointSet::of({"x"})).bounded);
  for (std::int64_t p : {0, 1, 5}) {
    EXPECT_TRUE(entry("E", p).bounded);
    EXPECT_TRUE(entry("F", p).bounded);
  }
  for (const auto* n : {"G", "H", "I"}) EXPECT_FALSE(entry(n).bounded);
  EXPECT_TRUE(is_bounded(CoarseCut{-3}, CoarseStability{}));
}

TEST(Catalog, HeartGoldens) {
  EXPECT_EQ(entry("A").heart.generators, (Strings{"Coh P1[0]"}));
  EXPECT_EQ(entry("B").heart.generators, (Strings{"O(n)[0], n >= 0", "O_x[0], x in P1", "O(n)[1], n < 0"}));
  EXPECT_EQ(entry("C").heart.generators, (Strings{"O_x[0], x in P1", "O(n)[1], n in Z"}));
  EXPECT_EQ(entry("D", std::nullopt, PointSet::of({"x"})).heart.generators,
            (Strings{"O_x[0], x in P", "O_y[1], y not in P", "O(n)[1], n in Z"}));
  for (std::int64_t p : {0, 1, 2, 7}) {
    const auto s = std::to_string(p);
    EXPECT_EQ(entry("E", p).heart.generators, (Strings{"O[" + s + "]", "O(1)[-2]"}));
    EXPECT_EQ(entry("F", p).heart.generators, (Strings{"O[" + s + "]", "O(1)[-1]"}));
  }
  EXPECT_EQ(entry("G").heart.generators, (Strings{"O[0]"}));
  EXPECT_EQ(entry("H").heart.generators, (Strings{"O(1)[0]"}));
  EXPECT_EQ(entry("I").heart.generators, (Strings{"0"}));
}

TEST(Catalog, HeartListsMatchCuts) {
  for (const auto& name : catalog_names()) {
    OptP p;
    PointSet P;
    if (name == "E" || name == "F") p = 1;
    if (name == "D") P = PointSet::of({"y", "z"});
    const auto e = entry(name, p, P);
    EXPECT_TRUE(validate_cut(e.cut, *e.family).valid) << name;
    EXPECT_EQ(e.heart.generators, heart_slopes(e.cut, *e.family).generators) << name;
    EXPECT_EQ(e.bounded, is_bounded(e.cut, *e.family)) << name;
  }
}

TEST(Catalog, QuiverFlag) {
  EXPECT_TRUE(entry("F", 0).quiver);
  EXPECT_FALSE(entry("F", 1).quiver);
  EXPECT_FALSE(entry("E", 0).quiver);
}

TEST(Catalog, BadParams) {
  expect_code(ErrorCode::BadParams, [] { entry("E"); });
  expect_code(ErrorCode::BadParams, [] { entry("F", -1); });
  expect_code(ErrorCode::BadParams, [] { entry("D", std::nullopt, PointSet::none()); });
  expect_code(ErrorCode::BadParams, [] { entry("D", std::nullopt, PointSet::every()); });
  expect_code(ErrorCode::BadParams, [] { entry("J"); });
}

TEST(Catalog, Diagram) {
  const auto d = render_diagram(entry("E", 1));
  EXPECT_NE(d.find("O(1)[-2]"), std::string::npos);
  EXPECT_NE(d.find("O[1]"), std::string::npos);
  EXPECT_NE(d.find("D<=0"), std::string::npos);
  EXPECT_NE(d.find("D>=0"), std::string::npos);
}

TEST(TorsionPair, Examples) {
  const TorsionPair b{"B", [](const Indecomposable& t) {
                        const auto* l = std::get_if<Line>(&t);
                        return !l || l->degree >= 0;
                      }};
  EXPECT_EQ(torsion_pair_cut(b, kStd), std_cut(0, 0));
  const TorsionPair c{"C", [](const Indecomposable& t) { return std::holds_alternative<Torsion>(t); }};
  EXPECT_EQ(torsion_pair_cut(c, kStd), std_cut(0, ExtendedInt::pos_inf()));
  const TorsionPair bad{"bad", [](const Indecomposable& t) {
                          const auto* l = std::get_if<Line>(&t);
                          return l && l->degree < 0;
                        }};
  expect_code(ErrorCode::HomViolation, [&] { torsion_pair_cut(bad, kStd); });
}

TEST(Classify, Examples) {
  const auto b = classify_bounded_cut(std_cut(0, 0), kStd);
  EXPECT_EQ(b.name, "B");
  EXPECT_EQ(b.twist, 0);
  EXPECT_EQ(b.shift, 0);

  const auto a = classify_bounded_cut(std_cut(3, ExtendedInt::neg_inf()), kStd);
  EXPECT_EQ(a.name, "A");
  EXPECT_EQ(a.shift, 3);

  const ExceptionalStability exc(0, 2);
  const auto e = classify_bounded_cut(ExceptionalCut{2, -2}, exc);
  EXPECT_EQ(e.name, "E");
  EXPECT_EQ(e.params.at("p"), "2");
  EXPECT_EQ(e.shift, 0);
  EXPECT_EQ(e.heart, entry("E", 2).heart.generators);

  const auto d = classify_bounded_cut(std_cut(-1, ExtendedInt::pos_inf(), PointSet::of({"y", "z"})), kStd);
  EXPECT_EQ(d.name, "D");
  EXPECT_EQ(d.params.at("P"), "y;z");
  EXPECT_EQ(d.shift, -1);

  expect_code(ErrorCode::Unbounded, [] {
    classify_bounded_cut(ExceptionalCut{0, ExtendedInt::neg_inf()}, ExceptionalStability(0, std::nullopt));
  });
  expect_code(ErrorCode::InvalidCut, [&] { classify_bounded_cut(ExceptionalCut{2, 2}, exc); });
}

// Properties ---------------------------------------------------------------

namespace {

void truncation_axioms(const Stability& family, std::uint64_t seed, int rounds) {
  const auto cuts = gen::valid_cuts(family);
  ASSERT_FALSE(cuts.empty());
  std::mt19937_64 rng(seed);
  for (int n = 0; n < rounds; ++n) {
    const auto x = random_object(rng);
    const auto& cut = cuts[rng() % cuts.size()];
    const auto t = truncate(x, cut, family);
    ASSERT_EQ(k0_class(t.le0) + k0_class(t.ge1), k0_class(x)) << render(x) << " " << render(cut);
    for (const auto& [q, d] : hom_profile(t.le0, t.ge1)) ASSERT_GT(q, 0) << render(x) << " " << render(cut);
    for (const auto& q : hn(t.le0, family).quotients) ASSERT_TRUE(in_upper(cut, q.slope, family));
    for (const auto& q : hn(t.ge1, family).quotients) ASSERT_FALSE(in_upper(cut, q.slope, family));
    ASSERT_EQ(truncate(t.le0, cut, family), (Truncation{t.le0, {}}));
    ASSERT_EQ(truncate(t.ge1, cut, family), (Truncation{{}, t.ge1}));
  }
}

}  // namespace

TEST(TStructureProperties, TruncationAxiomsStandard) { truncation_axioms(kStd, 1, 500); }

TEST(TStructureProperties, TruncationAxiomsExceptional) {
  for (OptP p : {OptP(0), OptP(2), OptP()}) truncation_axioms(ExceptionalStability(1, p), 2, 200);
}

TEST(TStructureProperties, TruncationAxiomsCoarse) { truncation_axioms(CoarseStability{}, 3, 200); }

TEST(TStructureProperties, HeartEquivalence) {
  std::vector<FamilyPtr> fams = {std::make_shared<StandardStability>(PointOrder({"x", "y", "z"})),
                                 std::make_shared<ExceptionalStability>(0, 1)};
  std::mt19937_64 rng(4);
  SampleSpec small;
  small.max_summands = 2;
  small.shift_radius = 2;
  for (const auto& f : fams) {
    const auto cuts = gen::valid_cuts(*f);
    std::size_t hits = 0;
    for (int n = 0; n < 1500; ++n) {
      const auto x = random_object(rng, small);
      const auto& cut = cuts[rng() % cuts.size()];
      bool expected = truncate(x, cut, *f).ge1.is_zero();
      for (const auto& q : hn(x, *f).quotients) expected = expected && !in_upper(cut, f->tau_inverse(q.slope), *f);
      const bool got = heart_contains(x, cut, *f);
      ASSERT_EQ(got, expected) << render(x) << " " << render(cut);
      hits += got ? 1 : 0;
    }
    EXPECT_GT(hits, 5u);
  }
}


TEST(TStructureProperties, ClassificationIsExhaustiveAndUnique) {
  Window w;
  w.shift_radius = 4;
  w.points = {"w", "x", "y", "z"};  // w is undeclared
  std::size_t classified = 0;
  for (const auto& cut : gen::standard_cuts(2, 4, {"x", "y", "z"})) {
    if (!validate_cut(cut, kStd).valid || !is_bounded(cut, kStd)) continue;
    const auto c = classify_bounded_cut(cut, kStd);
    ASSERT_TRUE(reproduces(c, cut, kStd)) << render(cut);
    const auto m = gen::matching_classes(cut, kStd, w);
    ASSERT_EQ(m.size(), 1u) << render(cut);
    ASSERT_EQ(*m.begin(), gen::class_label(c)) << render(cut);
    ++classified;
  }
  EXPECT_GT(classified, 100u);

  w.shift_radius = 10;
  for (std::int64_t p : {0, 1, 2}) {
    const ExceptionalStability fam(0, p);
    std::size_t count = 0;
    for (const auto& cut : gen::exceptional_cuts(6)) {
      if (!validate_cut(cut, fam).valid || !is_bounded(cut, fam)) continue;
      const auto c = classify_bounded_cut(cut, fam);
      ASSERT_TRUE(reproduces(c, cut, fam)) << render(cut);
      const auto m = gen::matching_classes(cut, fam, w);
      ASSERT_EQ(m, (std::set<std::string>{c.name})) << render(cut);
      ++count;
    }
    EXPECT_GT(count, 10u);
  }
}

TEST(TStructureProperties, QuiverHeart) {
  const auto g1 = P("O(0)[0]");
  const auto g2 = P("O(1)[-1]");
  auto hom0 = [](const DerivedObject& a, const DerivedObject& b) {
    const auto h = hom_profile(a, b);
    const auto it = h.find(0);
    return it == h.end() ? 0 : it->second;
  };
  EXPECT_EQ(hom0(g2, g1), 0);
  EXPECT_EQ(hom0(g1, g2), 0);
  EXPECT_EQ(hom0(g1, shift(g2, 1)), 2);
  const auto F0 = entry("F", 0);
  EXPECT_TRUE(heart_contains(g1, F0.cut, *F0.family));
  EXPECT_TRUE(heart_contains(g2, F0.cut, *F0.family));
}
