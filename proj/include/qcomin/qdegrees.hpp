#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcomin/comin.hpp"

namespace qcomin {

// Raised when two independent computations of the same quantity disagree.
class OracleViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Products are [X_u] * [X^v]; both arguments are given by their ideals I(u), I(v).

int dmax_point(const CominData& c, const Shape& v);
Shape shift(const CominData& c, const Shape& u, int d);
// (I(u_d), I(v^d)) as shapes in the fiber poset of degree d.
std::pair<Shape, Shape> fiber_elements(const CominData& c, const Shape& u, const Shape& v, int d);
// Shape I(x kappa_d) in P_X for x a shape of the fiber poset of degree d.
Shape fiber_times_kappa(const CominData& c, const Shape& x, int d);

int d_min(const CominData& c, const Shape& u, const Shape& v);
// Closed formula d_max(v) - d_min((w_0^X v)^v, u).
int d_max_formula(const CominData& c, const Shape& u, const Shape& v);
// Largest degree passing qh_degree_occurs.
int d_max_scan(const CominData& c, const Shape& u, const Shape& v);
// Both of the above; throws OracleViolation when they differ.
int d_max(const CominData& c, const Shape& u, const Shape& v);
bool qh_degree_occurs(const CominData& c, const Shape& u, const Shape& v, int d);
std::vector<int> exceptional_degrees(const CominData& c, const Shape& u, const Shape& v);

enum class ExceptionalStatus { Absent, PresentConjectural, PresentVerified };
const char* to_string(ExceptionalStatus s);

struct DegreeProfile {
  int d_min = 0;
  int d_max = 0;
  std::vector<int> qh_degrees;
  std::pair<int, int> qk_interval{0, 0};
  std::optional<int> exceptional;
  ExceptionalStatus status = ExceptionalStatus::Absent;
  bool operator==(const DegreeProfile&) const = default;
};

DegreeProfile degree_profile(const CominData& c, const Shape& u, const Shape& v);
// Whether occurrence of the exceptional degree has been checked for this space.
bool exceptional_verified_space(const CominData& c);

// Precomputed tables for scanning many pairs of one space.
class PairScanner {
 public:
  explicit PairScanner(const CominData& c);
  const std::vector<BoxSet>& ideals() const { return ideals_; }
  // Index of the dual ideal.
  int dual_index(int a) const { return dual_[a]; }
  // Exceptional degree of [X_{ideal u}] * [X^{ideal v}], or 0.
  int exceptional(int u, int v) const;
  bool fiber_leq(int u, int v, int d) const;

 private:
  const CominData& c_;
  std::vector<BoxSet> ideals_;
  std::vector<int> dual_;
  std::vector<int> dmax_;
  std::vector<std::vector<BoxSet>> transported_;  // [u][d] = rot^{-d}(I(u) & z-image)
};

struct CensusResult {
  std::int64_t ideals = 0;
  std::int64_t total = 0;
  std::int64_t exceptional = 0;
};

// Unordered pairs {a, b} with repetition; the product is O^a * O^b.
CensusResult census(const CominData& c, int threads = 1);

}  // namespace qcomin
