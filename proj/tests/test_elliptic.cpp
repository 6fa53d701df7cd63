#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tstab/elliptic.hpp"
#include "tstab/error.hpp"
#include "tstab/parse.hpp"
#include "tstab/sampling.hpp"

using namespace tstab;

namespace {

StableClass S(std::int64_t r, std::int64_t d, const char* x) { return StableClass::make(r, d, x); }
EllipticObject Ell(const char* s) { return parse_elliptic(s); }

const ExtendedRational kInf = ExtendedRational::plus_infinity();

std::vector<StableClass> class_window() {
  std::vector<StableClass> out;
  for (const char* x : {"a", "b", "c"}) {
    out.push_back(S(0, 1, x));
    for (std::int64_t r = 1; r <= 5; ++r) {
      for (std::int64_t d = -7; d <= 7; ++d) {
        if (std::gcd(r, d) == 1) out.push_back(S(r, d, x));
      }
    }
  }
  return out;
}

}  // namespace

TEST(StableClass, Validation) {
  EXPECT_THROW(S(2, 4, "a"), DomainError);
  try {
    S(0, 2, "a");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonCoprime);
  }
  EXPECT_NO_THROW(S(3, -2, "a"));
}

TEST(MuClass, Examples) {
  EXPECT_EQ(mu_class(S(1, 0, "a")), ExtendedRational(0));
  EXPECT_TRUE(mu_class(S(0, 1, "x")).is_infinite());
  EXPECT_EQ(mu_class(S(2, 3, "a")), ExtendedRational(Rational(3, 2)));
}

TEST(HomDimStable, Examples) {
  EXPECT_EQ(hom_dim_stable(S(1, 0, "a"), S(1, 1, "b"), 0), 1);
  EXPECT_EQ(hom_dim_stable(S(1, 0, "a"), S(1, 0, "a"), 0), 1);
  EXPECT_EQ(hom_dim_stable(S(1, 0, "a"), S(1, 0, "a"), 1), 1);
  EXPECT_EQ(hom_dim_stable(S(1, 0, "a"), S(1, 0, "b"), 0), 0);
  EXPECT_EQ(hom_dim_stable(S(1, 0, "a"), S(1, 0, "b"), 1), 0);
  EXPECT_EQ(hom_dim_stable(S(1, 3, "a"), S(1, 0, "b"), 1), 3);
  EXPECT_EQ(hom_dim_stable(S(1, 0, "a"), S(0, 1, "b"), 0), 1);
}

TEST(HnElliptic, Examples) {
  const auto f = hn_elliptic(Ell("S(1,0,a) + S(1,1,b)"));
  ASSERT_EQ(f.quotients.size(), 2u);
  EXPECT_EQ(std::get<EllipticSlope>(f.quotients[0].slope).mu, ExtendedRational(0));
  EXPECT_EQ(std::get<EllipticSlope>(f.quotients[1].slope).mu, ExtendedRational(1));

  const auto g = hn_elliptic(Ell("S(0,1,x) + S(1,5,a)"));
  ASSERT_EQ(g.quotients.size(), 2u);
  EXPECT_EQ(render(g.quotients[0].object), "S(1,5,a)[0]");
  EXPECT_EQ(render(g.quotients[1].object), "S(0,1,x)[0]");

  const auto h = hn_elliptic(Ell("3*S(2,1,a)[1]"));
  ASSERT_EQ(h.quotients.size(), 1u);
  EXPECT_TRUE(verify_hn(Ell("3*S(2,1,a)[1]"), h, EllipticStability{}).ok());
}

TEST(HnElliptic, PointOrderBreaksTies) {
  const EllipticStability fam(PointOrder({"b", "a"}));
  const auto f = hn(Ell("S(1,0,a) + S(1,0,b)"), fam);
  ASSERT_EQ(f.quotients.size(), 2u);
  EXPECT_EQ(render(f.quotients[0].object), "S(1,0,b)[0]");
  EXPECT_TRUE(verify_hn(Ell("S(1,0,a) + S(1,0,b)"), f, fam).ok());
}

TEST(QpSplit, Examples) {
  const auto x = Ell("S(1,-1,a) + S(1,0,a) + S(1,2,b) + S(0,1,c)");
  const auto std_split = a_qp_split(x, 0, PointSet::none());
  EXPECT_EQ(std_split.a0, Ell("S(1,-1,a)"));
  EXPECT_EQ(std_split.a1, Ell("S(1,0,a) + S(1,2,b) + S(0,1,c)"));
  EXPECT_TRUE(std_split.hom_vanishing);

  EXPECT_EQ(a_qp_split(x, 0, PointSet::of({"a"})).a0, Ell("S(1,-1,a) + S(1,0,a)"));
  EXPECT_EQ(a_qp_split(Ell("S(0,1,c)"), Rational(1, 2), PointSet::every()).a1, Ell("S(0,1,c)"));
  EXPECT_EQ(a_qp_split(x, kInf, PointSet::none()).a1, Ell("S(0,1,c)"));
}

TEST(QpSplit, Errors) {
  try {
    a_qp_split(Ell("S(1,0,a)"), 1, PointSet::none());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::QOutOfRange);
  }
  try {
    a_qp_split(Ell("S(1,0,a)"), Rational(-1, 3), PointSet::none());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::QOutOfRange);
  }
  try {
    a_qp_split(Ell("S(1,0,a)[1]"), 0, PointSet::none());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
  }
}

TEST(EllipticHeart, Examples) {
  EXPECT_TRUE(elliptic_heart_contains(Ell("S(1,1,a)[0]"), 0, PointSet::none()));
  EXPECT_TRUE(elliptic_heart_contains(Ell("S(1,-1,a)[1]"), 0, PointSet::none()));
  EXPECT_FALSE(elliptic_heart_contains(Ell("S(1,-1,a)[0]"), 0, PointSet::none()));
  EXPECT_TRUE(elliptic_heart_contains(Ell("S(1,0,a)[0]"), 0, PointSet::none()));
  EXPECT_TRUE(elliptic_heart_contains(Ell("S(1,0,a)[1]"), 0, PointSet::of({"a"})));
  EXPECT_TRUE(elliptic_heart_contains(Ell("S(0,1,a)[1]"), kInf, PointSet::of({"a"})));
  EXPECT_THROW(elliptic_heart_contains(Ell("S(1,0,a)"), 2, PointSet::none()), DomainError);
}

// Properties ---------------------------------------------------------------

TEST(EllipticProperties, EulerAndSerre) {
  const auto w = class_window();
  for (const auto& e : w) {
    for (const auto& f : w) {
      const auto h0 = hom_dim_stable(e, f, 0);
      const auto h1 = hom_dim_stable(e, f, 1);
      ASSERT_EQ(h0 - h1, oracle::chi_elliptic(e.rank, e.degree, f.rank, f.degree)) << render(e) << " " << render(f);
      ASSERT_EQ(h1, hom_dim_stable(f, e, 0)) << render(e) << " " << render(f);
      ASSERT_GE(h0, 0);
      ASSERT_GE(h1, 0);
    }
  }
}

TEST(EllipticProperties, SingleClassesAreSemistable) {
  const EllipticStability fam(PointOrder({"a", "b", "c"}));
  for (const auto& c : class_window()) {
    for (std::int64_t i = -1; i <= 1; ++i) {
      EXPECT_TRUE(is_semistable(object(ShiftedStable{c, i}, 2), fam).has_value());
    }
  }
}

TEST(EllipticProperties, RandomObjectsVerify) {
  std::mt19937_64 rng(99);
  const EllipticStability fam(PointOrder({"a", "b", "c"}));
  for (int n = 0; n < 300; ++n) {
    const auto x = random_elliptic_object(rng);
    ASSERT_TRUE(verify_hn(x, hn(x, fam), fam).ok()) << render(x);
  }
}

TEST(EllipticProperties, SplitHomVanishing) {
  std::mt19937_64 rng(12);
  EllipticSampleSpec spec;
  spec.shift_radius = 0;
  const std::vector<ExtendedRational> qs = {0, Rational(1, 2), kInf};
  const std::vector<PointSet> ps = {PointSet::none(), PointSet::of({"a"}), PointSet::every()};
  for (int n = 0; n < 300; ++n) {
    const auto x = random_elliptic_object(rng, spec);
    for (const auto& q : qs) {
      for (const auto& P : ps) {
        const auto s = a_qp_split(x, q, P);
        ASSERT_TRUE(s.hom_vanishing);
        ASSERT_EQ(s.a0 + s.a1, x);
        for (const auto& [t1, m1] : s.a1.terms()) {
          for (const auto& [t0, m0] : s.a0.terms()) ASSERT_EQ(hom_dim_stable(t1.cls, t0.cls, 0), 0);
        }
      }
    }
  }
}

TEST(EllipticProperties, HeartMatchesOracle) {
  std::mt19937_64 rng(31);
  EllipticSampleSpec spec;
  spec.shift_radius = 1;
  spec.max_summands = 2;
  const std::vector<std::pair<std::int64_t, std::int64_t>> qs = {{0, 1}, {1, 2}, {1, 3}, {0, 0}};
  const std::vector<std::string> ps = {"", "a", "ab", "abc"};
  std::size_t members = 0;
  for (int n = 0; n < 500; ++n) {
    const auto x = random_elliptic_object(rng, spec);
    const auto [qn, qd] = qs[rng() % qs.size()];
    const auto& pts = ps[rng() % ps.size()];
    std::vector<std::string> labels;
    for (char c : pts) labels.emplace_back(1, c);
    const ExtendedRational q = qd == 0 ? kInf : ExtendedRational(Rational(qn, qd));
    bool expected = true;
    for (const auto& [t, m] : x.terms()) {
      const bool a0 = oracle::elliptic_in_a0(t.cls.rank, t.cls.degree, t.cls.point, qn, qd, pts);
      expected = expected && t.shift == (a0 ? 1 : 0);
    }
    const bool got = elliptic_heart_contains(x, q, PointSet::of(labels));
    ASSERT_EQ(got, expected) << render(x);
    members += got ? 1 : 0;
  }
  EXPECT_GT(members, 20u);
}
