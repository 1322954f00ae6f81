#include <gtest/gtest.h>

#include "qcomin/qdegrees.hpp"
#include "qcomin/qposet.hpp"
#include "support.hpp"

using namespace qcomin;
using qcomin::test::Gen;
using qcomin::test::space;

namespace {

const std::vector<std::string> kPairSpaces = {"grassmannian 2 5", "grassmannian 3 6", "lagrangian 3", "quadric 5",
                                              "quadric 6",        "cayley",           "lagrangian 4", "quadric 7",
                                              "orthogonal 5",     "raw D5 1"};

class PairSpace : public ::testing::TestWithParam<std::string> {
 protected:
  const CominData& c() { return *space(GetParam()); }
};

TEST(Shift, LagrangianShifts) {
  auto c = space("lagrangian 8");
  Shape u = parse_shape(*c, "8,6,2");
  EXPECT_EQ(shift(*c, u, 0), u);
  EXPECT_EQ(shift(*c, u, -1), parse_shape(*c, "6,2"));
  EXPECT_EQ(shift(*c, u, -2), parse_shape(*c, "2"));
  EXPECT_EQ(shift(*c, u, 1), parse_shape(*c, "8,7,6,2"));
  EXPECT_EQ(shift(*c, u, 2), parse_shape(*c, "8,7,6,5,2"));
}

TEST_P(PairSpace, ShiftSaturationAndMonotonicity) {
  const int D = c().diameter();
  for (const auto& u : all_shapes(c())) {
    EXPECT_EQ(shift(c(), u, D), c().full_shape());
    EXPECT_EQ(shift(c(), u, D + 3), c().full_shape());
    EXPECT_EQ(shift(c(), u, -D), c().empty_shape());
    for (int d = -D; d < D; ++d) {
      Shape a = shift(c(), u, d), b = shift(c(), u, d + 1);
      EXPECT_TRUE(c().poset().is_ideal(a.boxes));
      EXPECT_TRUE(a.boxes.subset_of(b.boxes));
    }
  }
}

TEST_P(PairSpace, ShiftAlgebra) {
  Gen g(17);
  const int D = c().diameter();
  for (int k = 0; k < 300; ++k) {
    Shape u = g.shape(c()), v = g.shape(c());
    int d = g.range(-D - 1, D + 1), e = g.range(0, D + 1);
    EXPECT_EQ(shift(c(), join(u, v), d), join(shift(c(), u, d), shift(c(), v, d)));
    EXPECT_EQ(shift(c(), meet(u, v), d), meet(shift(c(), u, d), shift(c(), v, d)));
    EXPECT_EQ(shift(c(), join(u, shift(c(), v, d)), e), join(shift(c(), u, e), shift(c(), v, d + e)));
    EXPECT_EQ(shift(c(), meet(shift(c(), u, d), v), -e), meet(shift(c(), u, d - e), shift(c(), v, -e)));
    const Shape ze = c().make_shape(c().z_set(std::min(e, D)));
    EXPECT_EQ(shift(c(), shift(c(), u, d), e), join(shift(c(), u, d + e), ze)) << "d=" << d << " e=" << e;
  }
}

TEST_P(PairSpace, IntervalProperty) {
  for (const auto& u : all_shapes(c()))
    for (const auto& v : all_shapes(c())) {
      const int lo = d_min(c(), u, v), hi = d_max(c(), u, v);
      ASSERT_LE(lo, hi);
      for (int d = 0; d <= c().diameter() + 1; ++d)
        ASSERT_EQ(qh_degree_occurs(c(), u, v, d), lo <= d && d <= hi);
    }
}

TEST_P(PairSpace, FiberContainmentDescends) {
  for (const auto& u : all_shapes(c()))
    for (const auto& v : all_shapes(c()))
      for (int d = 2; d <= std::min(d_max(c(), c().empty_shape(), dual_shape(c(), u)),
                                    d_max(c(), c().empty_shape(), v));
           ++d) {
        auto [ud, vd] = fiber_elements(c(), u, v, d);
        auto [a, b] = fiber_elements(c(), u, v, d - 1);
        if (ud.boxes.subset_of(vd.boxes)) EXPECT_TRUE(a.boxes.subset_of(b.boxes));
      }
}

TEST_P(PairSpace, DmaxFormulaAgreesWithScan) {
  for (const auto& u : all_shapes(c()))
    for (const auto& v : all_shapes(c())) ASSERT_EQ(d_max_formula(c(), u, v), d_max_scan(c(), u, v));
}

TEST_P(PairSpace, PointProductDegree) {
  for (const auto& v : all_shapes(c())) {
    EXPECT_EQ(dmax_point(c(), v), d_max(c(), c().empty_shape(), v));
    EXPECT_EQ(dmax_point(c(), v), d_min(c(), c().empty_shape(), v));
  }
}

TEST_P(PairSpace, ProfilesAreCommutative) {
  // Swapping the two factors: O_u * O^v = O^{u^v} * O^v = O_{v^v} * O^{u^v}.
  int mismatches = 0;
  for (const auto& u : all_shapes(c()))
    for (const auto& v : all_shapes(c())) {
      auto a = degree_profile(c(), u, v);
      auto b = degree_profile(c(), dual_shape(c(), v), dual_shape(c(), u));
      mismatches += !(a == b);
    }
  EXPECT_EQ(mismatches, 0);
}

TEST_P(PairSpace, ExceptionalDegreeIsDmaxPlusOne) {
  for (const auto& u : all_shapes(c()))
    for (const auto& v : all_shapes(c())) {
      auto ex = exceptional_degrees(c(), u, v);
      ASSERT_LE(ex.size(), 1u);
      if (!ex.empty()) ASSERT_EQ(ex[0], d_max(c(), u, v) + 1);
      if (c().minuscule()) ASSERT_TRUE(ex.empty());
    }
}

TEST_P(PairSpace, LatticeTestMatchesFiberTest) {
  for (const auto& u : all_shapes(c()))
    for (const auto& v : all_shapes(c()))
      for (int d = 0; d <= c().diameter() + 1; ++d)
        ASSERT_EQ(qdeg_via_lattice(c(), u, v, d), qh_degree_occurs(c(), u, v, d));
}

INSTANTIATE_TEST_SUITE_P(Spaces, PairSpace, ::testing::ValuesIn(kPairSpaces), [](const auto& info) {
  std::string s = info.param;
  for (char& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  return s;
});

TEST(Degrees, TrivialProduct) {
  for (const std::string name : {"lagrangian 4", "cayley", "quadric 9"}) {
    auto c = space(name);
    auto p = degree_profile(*c, c->empty_shape(), c->empty_shape());
    EXPECT_EQ(p.d_min, 0);
    EXPECT_EQ(p.d_max, 0);
    EXPECT_EQ(p.qk_interval, std::make_pair(0, 0));
  }
}

TEST(Degrees, LagrangianProfiles) {
  auto c = space("lagrangian 4");
  auto p = degree_profile(*c, parse_shape(*c, "3"), parse_shape(*c, "4,3,1"));
  EXPECT_EQ(p.d_min, 2);
  EXPECT_EQ(p.d_max, 3);
  EXPECT_FALSE(p.exceptional);
  auto q = degree_profile(*c, parse_shape(*c, "4,2"), parse_shape(*c, "3,1"));
  EXPECT_EQ(q.qh_degrees, (std::vector<int>{0, 1}));
  EXPECT_EQ(q.exceptional, 2);
  EXPECT_EQ(q.status, ExceptionalStatus::PresentVerified);
  EXPECT_STREQ(to_string(q.status), "present-verified");
}

TEST(Degrees, VerificationStatusScope) {
  EXPECT_TRUE(exceptional_verified_space(*space("lagrangian 6")));
  EXPECT_FALSE(exceptional_verified_space(*space("lagrangian 7")));
  EXPECT_TRUE(exceptional_verified_space(*space("quadric 9")));
  EXPECT_FALSE(exceptional_verified_space(*space("quadric 8")));
  EXPECT_FALSE(exceptional_verified_space(*space("cayley")));
}

TEST(Degrees, FiberReadings) {
  auto lg = space("lagrangian 8");
  Shape u = parse_shape(*lg, "8,6,2"), v = dual_shape(*lg, u);
  auto [ud, vd] = fiber_elements(*lg, u, v, 5);
  const FiberPoset& f = lg->fiber(5);
  auto z_rows = fiber_rows(*lg, f, ud.boxes, FiberSide::Z);
  auto k_rows = fiber_rows(*lg, f, ud.boxes, FiberSide::Kappa);
  ASSERT_EQ(z_rows.size(), 1u);
  EXPECT_EQ(z_rows[0], (std::vector<int>{5, 4, 1}));
  EXPECT_EQ(k_rows[0], (std::vector<int>{3, 2, 2, 2, 1}));
  auto v_rows = fiber_rows(*lg, f, vd.boxes, FiberSide::Kappa);
  EXPECT_EQ(v_rows[0], (std::vector<int>{2, 1, 1, 1, 0}));
  EXPECT_FALSE(ud.boxes.subset_of(vd.boxes));
  EXPECT_EQ(f.dual(ud.boxes), vd.boxes);

  auto gr = space("grassmannian 7 17");
  auto [gu, gv] = fiber_elements(*gr, parse_shape(*gr, "10,8,5,5,4,1,0"), gr->empty_shape(), 4);
  const FiberPoset& g = gr->fiber(4);
  EXPECT_EQ(fiber_rows(*gr, g, gu.boxes, FiberSide::Z), (std::vector<std::vector<int>>{{4, 2, 0}, {5, 4, 1, 0}}));
  EXPECT_EQ(fiber_rows(*gr, g, gu.boxes, FiberSide::Kappa), (std::vector<std::vector<int>>{{4, 2, 0}, {5, 4, 1, 0}}));
}

TEST(Census, ThreadIndependent) {
  for (const std::string name : {"lagrangian 5", "quadric 7", "grassmannian 3 6"}) {
    auto c = space(name);
    CensusResult a = census(*c, 1);
    for (int t : {2, 3, 7}) {
      CensusResult b = census(*c, t);
      EXPECT_EQ(a.total, b.total);
      EXPECT_EQ(a.exceptional, b.exceptional);
    }
    EXPECT_EQ(a.total, a.ideals * (a.ideals + 1) / 2);
  }
}

TEST(Census, AgreesWithPairwiseProfiles) {
  for (const std::string name : {"lagrangian 3", "lagrangian 4", "quadric 7"}) {
    auto c = space(name);
    auto shapes = all_shapes(*c);
    std::int64_t count = 0;
    for (std::size_t a = 0; a < shapes.size(); ++a)
      for (std::size_t b = a; b < shapes.size(); ++b)
        count += !exceptional_degrees(*c, dual_shape(*c, shapes[a]), shapes[b]).empty();
    EXPECT_EQ(census(*c, 1).exceptional, count) << name;
  }
}

TEST(Census, ExceptionalPresenceIsSymmetric) {
  // Swapping the two Schubert classes never changes whether an exceptional degree occurs.
  for (const std::string name : {"lagrangian 3", "lagrangian 4", "lagrangian 5", "quadric 7", "quadric 9"}) {
    auto c = space(name);
    PairScanner s(*c);
    const int n = static_cast<int>(s.ideals().size());
    int asymmetric = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        asymmetric += (s.exceptional(s.dual_index(a), b) != 0) != (s.exceptional(s.dual_index(b), a) != 0);
    EXPECT_EQ(asymmetric, 0) << name;
  }
}

TEST(Census, TableValuesSmall) {
  EXPECT_EQ(census(*space("lagrangian 2")).exceptional, 1);
  EXPECT_EQ(census(*space("lagrangian 4")).total, 136);
  EXPECT_EQ(census(*space("lagrangian 4")).exceptional, 17);
}

}  // namespace
