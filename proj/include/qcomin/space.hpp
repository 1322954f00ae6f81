#pragma once

#include <string>
#include <vector>

#include "qcomin/comin.hpp"

namespace qcomin {

// A named cominuscule space resolved to Dynkin data.
struct SpaceSpec {
  std::string family;        // grassmannian, lagrangian, orthogonal, quadric, cayley, freudenthal, raw
  std::vector<int> params;
  CartanType type;
  int gamma = 0;             // 0-based
};

// Words such as {"grassmannian", "3", "7"} or {"raw", "C4", "4"}.
SpaceSpec parse_space(const std::vector<std::string>& words);
// Same, from a single space-separated string.
SpaceSpec parse_space(const std::string& text);
CominPtr build_space(const SpaceSpec& s);
CominPtr build_space(const std::string& text);

}  // namespace qcomin
