#include <gtest/gtest.h>

#include "qcomin/root_system.hpp"
#include "support.hpp"

using namespace qcomin;
using qcomin::test::root_system;

namespace {

struct TypeCount {
  std::string type;
  int positive;
};

class RootCounts : public ::testing::TestWithParam<TypeCount> {};

TEST_P(RootCounts, NumberOfPositiveRoots) {
  auto rs = root_system(GetParam().type);
  EXPECT_EQ(static_cast<int>(rs->positive_roots().size()), GetParam().positive);
}

INSTANTIATE_TEST_SUITE_P(Types, RootCounts,
                         ::testing::Values(TypeCount{"A1", 1}, TypeCount{"A4", 10}, TypeCount{"A6", 21},
                                           TypeCount{"B2", 4}, TypeCount{"B5", 25}, TypeCount{"C3", 9},
                                           TypeCount{"C8", 64}, TypeCount{"D4", 12}, TypeCount{"D6", 30},
                                           TypeCount{"E6", 36}, TypeCount{"E7", 63}));

TEST(RootSystem, HighestRoots) {
  EXPECT_EQ(root_system("A4")->highest_root(), (RootVector{1, 1, 1, 1}));
  EXPECT_EQ(root_system("B4")->highest_root(), (RootVector{1, 2, 2, 2}));
  EXPECT_EQ(root_system("C4")->highest_root(), (RootVector{2, 2, 2, 1}));
  EXPECT_EQ(root_system("D5")->highest_root(), (RootVector{1, 2, 2, 1, 1}));
  EXPECT_EQ(root_system("E6")->highest_root(), (RootVector{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(root_system("E7")->highest_root(), (RootVector{2, 2, 3, 4, 3, 2, 1}));
}

TEST(RootSystem, LongAndShortCounts) {
  auto count_long = [](const RootSystem& rs) {
    int n = 0;
    for (const auto& r : rs.positive_roots()) n += rs.is_long(r);
    return n;
  };
  for (int n = 2; n <= 7; ++n) {
    auto b = root_system("B" + std::to_string(n));
    auto c = root_system("C" + std::to_string(n));
    EXPECT_EQ(count_long(*b), n * (n - 1));
    EXPECT_EQ(count_long(*c), n);
  }
  auto e7 = root_system("E7");
  EXPECT_EQ(count_long(*e7), 63);
}

TEST(RootSystem, CartanFromForm) {
  for (const std::string t : {"A5", "B4", "C4", "D5", "E6", "E7"}) {
    auto rs = root_system(t);
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = 0; j < rs->rank(); ++j) {
        EXPECT_EQ(rs->gram2(i, j), rs->gram2(j, i));
        EXPECT_EQ(rs->cartan(i, j), rs->pair_with_coroot(rs->simple_root(i), rs->simple_root(j))) << t;
      }
    for (int i = 0; i < rs->rank(); ++i) EXPECT_EQ(rs->cartan(i, i), 2);
  }
  // C2: alpha_1 short, alpha_2 long.
  auto c2 = root_system("C2");
  EXPECT_EQ(c2->cartan(0, 1), -1);
  EXPECT_EQ(c2->cartan(1, 0), -2);
}

TEST(RootSystem, ReflectionsPreserveForm) {
  for (const std::string t : {"A4", "B4", "C4", "D5", "E6", "E7"}) {
    auto rs = root_system(t);
    const auto& pos = rs->positive_roots();
    for (std::size_t a = 0; a < pos.size(); a += (pos.size() > 40 ? 5 : 1))
      for (const auto& u : pos)
        for (const auto& v : pos)
          ASSERT_EQ(rs->pair(rs->reflect(pos[a], u), rs->reflect(pos[a], v)), rs->pair(u, v)) << t;
  }
}

TEST(RootSystem, ReflectionsPermuteRoots) {
  for (const std::string t : {"A5", "B5", "C5", "D5", "E6", "E7"}) {
    auto rs = root_system(t);
    for (const auto& a : rs->positive_roots())
      for (const auto& b : rs->positive_roots()) {
        RootVector r = rs->reflect(a, b);
        ASSERT_TRUE(is_positive(r) ? rs->is_root(r) : rs->is_root(-r)) << t;
      }
    // s_i permutes the positive roots other than alpha_i.
    for (int i = 0; i < rs->rank(); ++i)
      for (const auto& b : rs->positive_roots())
        if (b != rs->simple_root(i)) EXPECT_TRUE(is_positive(rs->simple_reflect(i, b)));
  }
}

TEST(RootSystem, RootOrderAndHeight) {
  auto rs = root_system("D5");
  const auto& pos = rs->positive_roots();
  for (std::size_t i = 1; i < pos.size(); ++i) EXPECT_LE(height(pos[i - 1]), height(pos[i]));
  for (const auto& r : pos) EXPECT_TRUE(root_leq(r, rs->highest_root()));
  EXPECT_EQ(rs->positive_index(rs->highest_root()), static_cast<int>(pos.size()) - 1);
  EXPECT_EQ(rs->positive_index(RootVector{1, 0, 1, 0, 0}), -1);
}

TEST(RootSystem, ParseErrors) {
  EXPECT_THROW(CartanType::parse("F4"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("E9"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("A0"), std::invalid_argument);
  EXPECT_THROW(CartanType::parse("B"), std::invalid_argument);
  EXPECT_EQ(CartanType::parse("C4").name(), "C4");
}

TEST(RootSystem, ReflectionInNonRootThrows) {
  auto b2 = root_system("B2");
  EXPECT_THROW(b2->reflect(RootVector{2, 1}, RootVector{0, 1}), std::invalid_argument);
  EXPECT_EQ(b2->reflect(RootVector{0, 1}, RootVector{1, 0}), (RootVector{1, 2}));
}

}  // namespace
