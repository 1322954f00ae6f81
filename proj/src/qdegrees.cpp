#include "qcomin/qdegrees.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace qcomin {

int dmax_point(const CominData& c, const Shape& v) {
  int n = 0;
  for (int d = 1; d <= c.diameter(); ++d) n += v.contains(c.tilde_alpha(d));
  return n;
}

Shape shift(const CominData& c, const Shape& u, int d) {
  const int D = c.diameter();
  if (d >= D) return c.full_shape();
  if (d <= -D) return c.empty_shape();
  if (d >= 0) {
    BoxSet moved = c.rotate_set(u.boxes & c.z_dual_set(d), -d);
    return {c.z_set(d) | moved, c.size()};
  }
  return {c.rotate_set(u.boxes - c.z_set(-d), -d), c.size()};
}

std::pair<Shape, Shape> fiber_elements(const CominData& c, const Shape& u, const Shape& v, int d) {
  const FiberPoset& f = fiber_poset(c, d);
  return {{f.pull_back_z(u.boxes), f.size()}, {f.pull_back_kappa(v.boxes), f.size()}};
}

Shape fiber_times_kappa(const CominData& c, const Shape& x, int d) {
  if (d == 0) return c.empty_shape();
  return {c.kappa_set(d) | fiber_poset(c, d).push_kappa(x.boxes), c.size()};
}

int d_min(const CominData& c, const Shape& u, const Shape& v) {
  for (int d = 0;; ++d)
    if (v.boxes.subset_of(shift(c, u, d).boxes)) return d;
}

bool qh_degree_occurs(const CominData& c, const Shape& u, const Shape& v, int d) {
  if (d < 0) return false;
  if (d < d_min(c, u, v)) return false;
  if (d > std::min(dmax_point(c, dual_shape(c, u)), dmax_point(c, v))) return false;
  if (d == 0) return v.boxes.subset_of(u.boxes);
  auto [ud, vd] = fiber_elements(c, u, v, d);
  return ud.boxes.subset_of(vd.boxes);
}

int d_max_scan(const CominData& c, const Shape& u, const Shape& v) {
  for (int d = c.diameter(); d >= 0; --d)
    if (qh_degree_occurs(c, u, v, d)) return d;
  throw OracleViolation("no degree occurs in a quantum product");
}

int d_max_formula(const CominData& c, const Shape& u, const Shape& v) {
  WeylElement w = parabolic_factorize(c.w0_upper_X() * shape_to_weyl(c, v), c.excluded()).first;
  Shape wv = weyl_to_shape(c, w);
  return dmax_point(c, v) - d_min(c, wv, u);
}

int d_max(const CominData& c, const Shape& u, const Shape& v) {
  int a = d_max_formula(c, u, v);
  int b = d_max_scan(c, u, v);
  if (a != b)
    throw OracleViolation("d_max disagreement: closed formula " + std::to_string(a) + ", scan " +
                          std::to_string(b));
  return a;
}

std::vector<int> exceptional_degrees(const CominData& c, const Shape& u, const Shape& v) {
  std::vector<int> out;
  const int lim = std::min(dmax_point(c, dual_shape(c, u)), dmax_point(c, v));
  for (int d = 1; d <= lim; ++d) {
    const FiberPoset& f = fiber_poset(c, d);
    auto [ud, vd] = fiber_elements(c, u, v, d);
    BoxSet skew = ud.boxes - vd.boxes;
    if (skew.empty() || !f.poset.is_antichain(skew)) continue;
    bool all_short = true;
    skew.for_each([&](int e) { all_short = all_short && !f.poset.long_box[e]; });
    if (all_short) out.push_back(d);
  }
  return out;
}

const char* to_string(ExceptionalStatus s) {
  switch (s) {
    case ExceptionalStatus::Absent: return "absent";
    case ExceptionalStatus::PresentConjectural: return "present-conjectural";
    case ExceptionalStatus::PresentVerified: return "present-verified";
  }
  return "?";
}

bool exceptional_verified_space(const CominData& c) {
  const CartanType t = c.rs().type();
  if (t.family == Family::B && c.gamma() == 0) return true;
  if (t.family == Family::C && c.gamma() == t.rank - 1 && t.rank <= 6) return true;
  return false;
}

DegreeProfile degree_profile(const CominData& c, const Shape& u, const Shape& v) {
  DegreeProfile p;
  p.d_min = d_min(c, u, v);
  p.d_max = d_max(c, u, v);
  for (int d = 0; d <= c.diameter(); ++d)
    if (qh_degree_occurs(c, u, v, d)) p.qh_degrees.push_back(d);
  for (std::size_t k = 0; k < p.qh_degrees.size(); ++k)
    if (p.qh_degrees[k] != p.d_min + static_cast<int>(k))
      throw OracleViolation("quantum cohomology degrees do not form an interval");
  if (p.qh_degrees.empty() || p.qh_degrees.back() != p.d_max)
    throw OracleViolation("degree scan does not end at d_max");
  auto ex = exceptional_degrees(c, u, v);
  if (ex.size() > 1) throw OracleViolation("more than one exceptional degree");
  p.qk_interval = {p.d_min, p.d_max};
  if (!ex.empty()) {
    if (ex[0] != p.d_max + 1) throw OracleViolation("exceptional degree is not d_max + 1");
    p.exceptional = ex[0];
    p.qk_interval.second = ex[0];
    p.status = exceptional_verified_space(c) ? ExceptionalStatus::PresentVerified
                                             : ExceptionalStatus::PresentConjectural;
  }
  return p;
}

PairScanner::PairScanner(const CominData& c) : c_(c), ideals_(all_ideals(c.poset())) {
  std::map<BoxSet, int> index;
  for (int i = 0; i < static_cast<int>(ideals_.size()); ++i) index[ideals_[i]] = i;
  const int D = c.diameter();
  for (BoxSet s : ideals_) {
    Shape sh{s, c.size()};
    dual_.push_back(index.at(dual_shape(c, sh).boxes));
    dmax_.push_back(dmax_point(c, sh));
    std::vector<BoxSet> t(D + 1);
    for (int d = 1; d <= D; ++d) t[d] = c.rotate_set(s & c.fiber(d).z_image, -d);
    transported_.push_back(std::move(t));
  }
}

bool PairScanner::fiber_leq(int u, int v, int d) const {
  return transported_[u][d].subset_of(ideals_[v]);
}

int PairScanner::exceptional(int u, int v) const {
  const int lim = std::min(dmax_[dual_[u]], dmax_[v]);
  const FinitePoset& p = c_.poset();
  const BoxSet shorts = c_.short_boxes();
  for (int d = 1; d <= lim; ++d) {
    BoxSet skew = transported_[u][d] - ideals_[v];
    if (!skew.empty() && skew.subset_of(shorts) && p.is_antichain(skew)) return d;
  }
  return 0;
}

CensusResult census(const CominData& c, int threads) {
  PairScanner scan(c);
  const int N = static_cast<int>(scan.ideals().size());
  threads = std::max(1, threads);
  std::vector<std::int64_t> counts(threads, 0);
  auto work = [&](int t) {
    std::int64_t n = 0;
    for (int a = t; a < N; a += threads) {
      const int u = scan.dual_index(a);
      for (int b = a; b < N; ++b)
        if (scan.exceptional(u, b)) ++n;
    }
    counts[t] = n;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  CensusResult r;
  r.ideals = N;
  r.total = static_cast<std::int64_t>(N) * (N + 1) / 2;
  for (auto n : counts) r.exceptional += n;
  return r;
}

}  // namespace qcomin
