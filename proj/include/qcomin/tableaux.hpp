#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcomin/comin.hpp"

namespace qcomin {

// A half-integer stored as twice its value.
struct HalfInt {
  int doubled = 0;
  static HalfInt from_int(int v) { return {2 * v}; }
  bool is_integer() const { return doubled % 2 == 0; }
  auto operator<=>(const HalfInt&) const = default;
  std::string str() const;
};

// Labels of the boxes of outer \ inner, listed by increasing box index.
struct PrimedTableau {
  BoxSet outer;
  BoxSet inner;
  std::vector<int> boxes;
  std::vector<HalfInt> labels;

  HalfInt at(int box) const;
  bool operator==(const PrimedTableau&) const = default;
  bool operator<(const PrimedTableau& o) const { return labels < o.labels; }
};

// Finite multiset of integral weights in the simple-root basis.
class WeightMultiset {
 public:
  void add(const RootVector& w, std::int64_t mult = 1);
  void add_all(const WeightMultiset& o);
  std::int64_t total() const;
  bool empty() const { return m_.empty(); }
  std::int64_t count(const RootVector& w) const;
  const std::map<RootVector, std::int64_t>& entries() const { return m_; }
  bool operator==(const WeightMultiset&) const = default;

 private:
  std::map<RootVector, std::int64_t> m_;
};

// Pointwise sums over the product of the two multisets.
WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b);

// Decreasing primed tableaux on outer \ inner with labels in [a, m).
// Depth first over boxes in index order, labels tried in descending order.
std::vector<PrimedTableau> enumerate_tableaux(const FinitePoset& p, BoxSet outer, BoxSet inner, HalfInt a, HalfInt m);
// Exhaustive oracle: all maps box -> allowed label, filtered by the rules.
std::vector<PrimedTableau> enumerate_tableaux_naive(const FinitePoset& p, BoxSet outer, BoxSet inner, HalfInt a,
                                                    HalfInt m);
std::vector<PrimedTableau> enumerate_tableaux(const CominData& c, const Shape& outer, const Shape& inner, HalfInt a,
                                              HalfInt m);

// (omega_gamma, alpha^vee) for a box alpha.
int omega_pairing(const CominData& c, int box);
// lambda(T[m]): m on I(inner), T on the skew, 0 elsewhere.
RootVector weight(const CominData& c, const PrimedTableau& t, int m);

// C^u_{v,[a,m)}: the weights -lambda(T[m]).
WeightMultiset representation(const CominData& c, const Shape& u, const Shape& v, HalfInt a, int m);

struct SignedMultiset {
  int sign = 1;
  WeightMultiset weights;
  bool operator==(const SignedMultiset&) const = default;
};

// [J]^m . O^v = sum over u of (-1)^{|u|-|v|} [C^u_{v,[0,m)}]; empty terms omitted.
std::map<Shape, SignedMultiset> chevalley_power(const CominData& c, const Shape& v, int m);
SignedMultiset euler_characteristic(const CominData& c, const Shape& u, const Shape& v, int m);
bool is_cohomologically_trivial(const CominData& c, const Shape& u, const Shape& v, int m);

}  // namespace qcomin
