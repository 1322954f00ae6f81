#include <gtest/gtest.h>

#include <set>

#include "qcomin/qdegrees.hpp"
#include "qcomin/qposet.hpp"
#include "support.hpp"

using namespace qcomin;
using qcomin::test::Gen;
using qcomin::test::space;

namespace {

std::vector<QClass> classes(const CominData& c, int lo, int hi) {
  std::vector<QClass> out;
  for (int d = lo; d <= hi; ++d)
    for (const auto& s : all_shapes(c)) out.push_back({d, s});
  return out;
}

bool distributive_lattice_laws(const CominData& c, const QClass& a, const QClass& b, const QClass& x) {
  auto J = [&](const QClass& p, const QClass& q) { return qclass_join(c, p, q); };
  auto M = [&](const QClass& p, const QClass& q) { return qclass_meet(c, p, q); };
  return J(a, a) == a && M(a, a) == a && J(a, b) == J(b, a) && M(a, b) == M(b, a) && J(a, M(a, b)) == a &&
         M(a, J(a, b)) == a && M(a, J(b, x)) == J(M(a, b), M(a, x)) && J(a, M(b, x)) == M(J(a, b), J(a, x)) &&
         J(J(a, b), x) == J(a, J(b, x)) && M(M(a, b), x) == M(a, M(b, x));
}

TEST(Lattice, OrderIsPartialOrder) {
  for (const std::string name : {"quadric 5", "grassmannian 2 5", "lagrangian 3"}) {
    auto c = space(name);
    auto els = classes(*c, -2, 1);
    for (const auto& a : els) {
      EXPECT_TRUE(qclass_leq(*c, a, a));
      for (const auto& b : els) {
        if (!(a == b) && qclass_leq(*c, a, b)) EXPECT_FALSE(qclass_leq(*c, b, a));
        EXPECT_EQ(qclass_leq(*c, a, b), qclass_join(*c, a, b) == b);
        EXPECT_EQ(qclass_leq(*c, a, b), qclass_meet(*c, a, b) == a);
      }
    }
  }
}

TEST(Lattice, LawsExhaustiveSmall) {
  for (const std::string name : {"quadric 5", "grassmannian 2 4", "lagrangian 2"}) {
    auto c = space(name);
    auto els = classes(*c, -1, 1);
    for (const auto& a : els)
      for (const auto& b : els)
        for (const auto& x : els) ASSERT_TRUE(distributive_lattice_laws(*c, a, b, x)) << name;
  }
}

TEST(Lattice, LawsRandomLarge) {
  Gen g(99);
  auto c = space("lagrangian 6");
  for (int k = 0; k < 3000; ++k) {
    QClass a{g.range(-4, 4), g.shape(*c)}, b{g.range(-4, 4), g.shape(*c)}, x{g.range(-4, 4), g.shape(*c)};
    ASSERT_TRUE(distributive_lattice_laws(*c, a, b, x));
  }
}

TEST(Lattice, ShiftingIsMonotone) {
  auto c = space("lagrangian 4");
  for (const auto& s : all_shapes(*c))
    for (int d = -5; d <= 5; ++d) EXPECT_TRUE(qclass_leq(*c, {d, s}, {d + 1, s}));
}

TEST(Lattice, JoinIrreduciblesMatchClassification) {
  for (const std::string name : {"quadric 5", "grassmannian 2 5", "lagrangian 3"}) {
    auto c = space(name);
    const int D = c->diameter();
    const int lo = -1, hi = 1;
    auto below_pool = classes(*c, lo - D - 2, hi);
    std::set<std::pair<int, std::vector<int>>> brute;
    for (const auto& x : classes(*c, lo, hi)) {
      std::vector<QClass> lower;
      for (const auto& y : below_pool)
        if (!(y == x) && qclass_leq(*c, y, x)) lower.push_back(y);
      int covers = 0;
      for (const auto& y : lower) {
        bool is_cover = true;
        for (const auto& z : lower)
          if (!(z == y) && qclass_leq(*c, y, z)) is_cover = false;
        covers += is_cover;
      }
      if (covers == 1) brute.insert({x.d, x.u.boxes.indices()});
    }
    std::set<std::pair<int, std::vector<int>>> listed;
    CylinderWindow w = cylinder_window(*c, lo, hi);
    for (const auto& e : w.elements) {
      QClass q = to_qclass(*c, e);
      listed.insert({q.d, q.u.boxes.indices()});
    }
    EXPECT_EQ(brute, listed) << name;
  }
}

TEST(Cylinder, TauIsOrderEmbedding) {
  for (const std::string name : {"lagrangian 4", "orthogonal 6", "quadric 10", "quadric 7", "cayley", "freudenthal",
                                 "grassmannian 3 7"}) {
    auto c = space(name);
    for (int a = 0; a < c->size(); ++a)
      for (int b = 0; b < c->size(); ++b)
        ASSERT_EQ(qclass_leq(*c, tau(*c, a), tau(*c, b)), c->leq(a, b)) << name;
    EXPECT_EQ(tau(*c, c->size() - 1), (QClass{0, c->full_shape()}));
  }
}

TEST(Cylinder, IdealMeetsTauImageInShiftedShape) {
  for (const std::string name : {"lagrangian 4", "quadric 7", "grassmannian 3 6"}) {
    auto c = space(name);
    const int D = c->diameter();
    for (const auto& u : all_shapes(*c))
      for (int d = -D; d <= D; ++d) {
        BoxSet got;
        for (int a = 0; a < c->size(); ++a)
          if (qclass_leq(*c, tau(*c, a), {d, u})) got.set(a);
        ASSERT_EQ(got, shift(*c, u, d).boxes) << name << " d=" << d << " u=" << format_shape(*c, u);
      }
  }
}

TEST(Cylinder, WindowStructure) {
  auto c = space("lagrangian 3");
  CylinderWindow w = cylinder_window(*c, -3, 0);
  EXPECT_EQ(w.elements.size(), 4u * (1 + static_cast<std::size_t>(tau_boxes(*c).count())));
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    EXPECT_EQ(w.index_of(w.elements[i]), static_cast<int>(i));
    EXPECT_TRUE(w.leq[i][i]);
  }
  for (auto [i, j] : w.relations) {
    EXPECT_TRUE(w.leq[i][j]);
    EXPECT_NE(i, j);
  }
  // Each window ideal is downward closed.
  QClass top{0, parse_shape(*c, "3,1")};
  auto ideal = ideal_of(*c, top, w);
  std::set<int> in(ideal.begin(), ideal.end());
  for (int i : ideal)
    for (std::size_t k = 0; k < w.elements.size(); ++k)
      if (w.leq[k][i]) EXPECT_TRUE(in.count(static_cast<int>(k)));
  EXPECT_THROW(cylinder_window(*c, 1, 0), std::invalid_argument);
}

TEST(Lattice, PointProduct) {
  for (const std::string name : {"lagrangian 4", "quadric 7", "grassmannian 3 6", "cayley"}) {
    auto c = space(name);
    EXPECT_EQ(point_product(*c, c->empty_shape()), (QClass{0, c->full_shape()}));
    for (const auto& v : all_shapes(*c)) {
      QClass p = point_product(*c, v);
      EXPECT_EQ(p.d, dmax_point(*c, v));
      EXPECT_TRUE(qclass_leq(*c, {0, v}, p));
    }
  }
}

}  // namespace
