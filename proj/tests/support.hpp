#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qcomin/comin.hpp"
#include "qcomin/space.hpp"
#include "qcomin/weyl.hpp"

namespace qcomin::test {

inline std::shared_ptr<const RootSystem> root_system(const std::string& type) {
  static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  auto& slot = cache[type];
  if (!slot) slot = std::make_shared<const RootSystem>(RootSystem::build(CartanType::parse(type)));
  return slot;
}

inline CominPtr space(const std::string& name) {
  static std::map<std::string, CominPtr> cache;
  auto& slot = cache[name];
  if (!slot) slot = build_space(name);
  return slot;
}

// Fixed-seed generators so failures reproduce.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed = 0x5eed) : rng(seed) {}

  int below(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  std::vector<int> word(int rank, int max_len) {
    std::vector<int> w(below(max_len + 1));
    for (int& x : w) x = below(rank);
    return w;
  }
  WeylElement element(const std::shared_ptr<const RootSystem>& rs, int max_len = 12) {
    return WeylElement::from_word(rs, word(rs->rank(), max_len));
  }
  Shape shape(const CominData& c) {
    // Random ideal: grow by adding random minimal boxes of the complement.
    BoxSet s;
    const int target = below(c.size() + 1);
    while (s.count() < target) {
      std::vector<int> addable;
      for (int i = 0; i < c.size(); ++i)
        if (!s.test(i) && c.below(i).subset_of(s | BoxSet::single(i))) addable.push_back(i);
      s.set(addable[below(static_cast<int>(addable.size()))]);
    }
    return c.make_shape(s);
  }
};

// Brute-force enumeration of W by breadth-first search over simple reflections.
inline std::vector<WeylElement> all_elements(const std::shared_ptr<const RootSystem>& rs) {
  std::vector<WeylElement> out{WeylElement::identity(rs)};
  std::set<std::vector<int>> seen{out[0].matrix()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < rs->rank(); ++i) {
      WeylElement w = out[k].times_simple(i);
      if (seen.insert(w.matrix()).second) out.push_back(w);
    }
  return out;
}

// Subword criterion: v <= u iff some subword of a reduced word of u is a word for v.
inline bool subword_bruhat(const WeylElement& v, const WeylElement& u) {
  const std::vector<int> w = reduced_word(u);
  const auto& rs = u.root_system_ptr();
  for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (mask >> i & 1u) sub.push_back(w[i]);
    if (WeylElement::from_word(rs, sub) == v) return true;
  }
  return false;
}

}  // namespace qcomin::test
