#include <gtest/gtest.h>

#include <algorithm>

#include "qcomin/weyl.hpp"
#include "support.hpp"

using namespace qcomin;
using qcomin::test::all_elements;
using qcomin::test::Gen;
using qcomin::test::root_system;

namespace {

TEST(Weyl, GroupOrders) {
  EXPECT_EQ(all_elements(root_system("A3")).size(), 24u);
  EXPECT_EQ(all_elements(root_system("A4")).size(), 120u);
  EXPECT_EQ(all_elements(root_system("B3")).size(), 48u);
  EXPECT_EQ(all_elements(root_system("C3")).size(), 48u);
  EXPECT_EQ(all_elements(root_system("D4")).size(), 192u);
}

TEST(Weyl, LengthReducedWordAndInversions) {
  for (const std::string t : {"A3", "B3", "C3", "D4"}) {
    auto rs = root_system(t);
    for (const auto& w : all_elements(rs)) {
      auto word = reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), length(w));
      EXPECT_EQ(static_cast<int>(inversion_set(w).size()), length(w));
      EXPECT_TRUE(is_reduced_word(*rs, word));
      EXPECT_EQ(WeylElement::from_word(rs, word), w);
      EXPECT_TRUE(is_identity(w * w.inverse()));
      for (int i = 0; i < rs->rank(); ++i)
        EXPECT_EQ(w.has_right_descent(i), length(w.times_simple(i)) < length(w));
    }
  }
}

TEST(Weyl, LongestElement) {
  for (const std::string t : {"A4", "B4", "C4", "D5", "E6", "E7"}) {
    auto rs = root_system(t);
    WeylElement w0 = longest_element(rs);
    EXPECT_EQ(length(w0), static_cast<int>(rs->positive_roots().size())) << t;
    for (int i = 0; i < rs->rank(); ++i) EXPECT_TRUE(is_negative(w0.act(rs->simple_root(i))));
  }
}

TEST(Weyl, ReflectionOfRoot) {
  auto rs = root_system("B3");
  for (const auto& beta : rs->positive_roots()) {
    WeylElement s = WeylElement::reflection(rs, beta);
    EXPECT_TRUE(is_identity(s * s));
    EXPECT_EQ(s.act(beta), -beta);
    EXPECT_EQ(length(s) % 2, 1);
  }
}

TEST(Weyl, BruhatMatchesSubwordOracle) {
  for (const std::string t : {"A3", "B3", "C3"}) {
    auto els = all_elements(root_system(t));
    for (const auto& u : els)
      for (const auto& v : els) ASSERT_EQ(bruhat_leq(v, u), test::subword_bruhat(v, u)) << t;
  }
}

TEST(Weyl, LeftWeakOrderDefinition) {
  auto els = all_elements(root_system("B3"));
  for (const auto& a : els)
    for (const auto& b : els) {
      bool want = length(b * a.inverse()) + length(a) == length(b);
      ASSERT_EQ(left_weak_leq(a, b), want);
    }
}

TEST(Weyl, HeckeProductBasics) {
  auto rs = root_system("C3");
  for (const auto& u : all_elements(rs))
    for (int i = 0; i < rs->rank(); ++i) {
      WeylElement s = WeylElement::from_word(rs, {i});
      WeylElement want = u.has_right_descent(i) ? u : u.times_simple(i);
      EXPECT_EQ(hecke_product(u, s), want);
    }
}

TEST(Weyl, HeckeMonotonicity) {
  for (const std::string t : {"A3", "B3", "C3"}) {
    auto els = all_elements(root_system(t));
    for (const auto& x : els)
      for (const auto& u : els) {
        WeylElement xu = hecke_product(x, u);
        ASSERT_TRUE(left_weak_leq(u, xu));
        ASSERT_TRUE(bruhat_leq(xu * u.inverse(), x));
        ASSERT_LE(length(xu), length(x) + length(u));
      }
  }
}

TEST(Weyl, HeckeAssociativeRandom) {
  Gen g(3);
  for (const std::string t : {"A3", "B3", "C3", "D4"}) {
    auto rs = root_system(t);
    for (int k = 0; k < 500; ++k) {
      WeylElement a = g.element(rs), b = g.element(rs), c = g.element(rs);
      ASSERT_EQ(hecke_product(hecke_product(a, b), c), hecke_product(a, hecke_product(b, c)));
    }
  }
}

TEST(Weyl, ParabolicFactorizationAgainstCosetMinimum) {
  for (const std::string t : {"A3", "B3", "C3"}) {
    auto rs = root_system(t);
    auto els = all_elements(rs);
    for (int gamma = 0; gamma < rs->rank(); ++gamma) {
      const std::vector<int> gens = complement_indices(rs->rank(), {gamma});
      std::vector<WeylElement> wp;
      for (const auto& w : els) {
        auto word = reduced_word(w);
        if (std::find(word.begin(), word.end(), gamma) == word.end()) wp.push_back(w);
      }
      for (const auto& w : els) {
        auto [wP, w_P] = parabolic_factorize(w, {gamma});
        EXPECT_EQ(wP * w_P, w);
        EXPECT_EQ(length(wP) + length(w_P), length(w));
        EXPECT_TRUE(is_min_coset_rep(wP, {gamma}));
        // Brute: the unique element of minimal length in w W_P.
        int best = 1 << 20, count = 0;
        WeylElement arg;
        for (const auto& p : wp) {
          int l = length(w * p);
          if (l < best) best = l, arg = w * p, count = 1;
          else if (l == best) ++count;
        }
        EXPECT_EQ(count, 1);
        EXPECT_EQ(arg, wP);
      }
      EXPECT_EQ(length(longest_parabolic(rs, gens)),
                length(*std::max_element(wp.begin(), wp.end(),
                                         [](const auto& a, const auto& b) { return length(a) < length(b); })));
    }
  }
}

TEST(Weyl, PXBruhatInA4) {
  auto rs = root_system("A4");
  WeylElement v = WeylElement::from_word(rs, {2});
  WeylElement u = WeylElement::from_word(rs, {2, 1, 0, 3, 2, 1, 2});
  EXPECT_TRUE(px_bruhat_leq(v, u, {0, 1, 2}));
  EXPECT_FALSE(px_bruhat_leq(u, v, {0, 1, 2}));
}

TEST(Weyl, SemiTransversalRejectsNonMinimalRepresentatives) {
  auto rs = root_system("C3");
  WeylElement bad = WeylElement::from_word(rs, {0});
  WeylElement ok = WeylElement::from_word(rs, {2});
  EXPECT_THROW(semi_transversal_kappa(bad, ok, {2}), std::invalid_argument);
}

}  // namespace
