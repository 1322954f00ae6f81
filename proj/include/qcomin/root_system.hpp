#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcomin {

// Coefficients in the basis of simple roots.
using RootVector = std::vector<int>;

// Value of the invariant form; the denominator is 1 or 2.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

enum class Family { A, B, C, D, E };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  // Parses "A5", "C4", "E6", ...
  static CartanType parse(const std::string& text);
  std::string name() const;
  bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }
  bool operator==(const CartanType&) const = default;
};

// A finite root system with Bourbaki numbering. Simple roots are 0-based.
class RootSystem {
 public:
  static RootSystem build(CartanType type);

  CartanType type() const { return type_; }
  int rank() const { return type_.rank; }

  // <alpha_i, alpha_j^vee>.
  int cartan(int i, int j) const { return cartan_[i * rank() + j]; }
  // (alpha_i, alpha_i); long roots have norm 2.
  int norm(int i) const { return gram2_[i * rank() + i] / 2; }
  // 2 (alpha_i, alpha_j), always an integer.
  int gram2(int i, int j) const { return gram2_[i * rank() + j]; }

  const std::vector<RootVector>& positive_roots() const { return positive_; }
  const RootVector& highest_root() const { return positive_.back(); }
  // Index into positive_roots(), or -1.
  int positive_index(const RootVector& v) const;

  Rational pair(const RootVector& a, const RootVector& b) const;
  // 2 (a, b).
  std::int64_t pair2(const RootVector& a, const RootVector& b) const;
  // 2(a,b)/(b,b); throws if not integral.
  int pair_with_coroot(const RootVector& a, const RootVector& b) const;

  bool is_root(const RootVector& v) const;
  bool is_long(const RootVector& root) const;
  // s_alpha(v); alpha must be a root.
  RootVector reflect(const RootVector& alpha, const RootVector& v) const;
  RootVector simple_reflect(int i, const RootVector& v) const;
  RootVector simple_root(int i) const;

 private:
  CartanType type_;
  std::vector<int> gram2_;
  std::vector<int> cartan_;
  std::vector<RootVector> positive_;
  std::map<RootVector, int> index_;
};

int height(const RootVector& v);
bool is_positive(const RootVector& v);
bool is_negative(const RootVector& v);
// Componentwise a <= b.
bool root_leq(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& v);
RootVector operator+(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& a, const RootVector& b);

}  // namespace qcomin
