#include "qcomin/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qcomin {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

HalfInt PrimedTableau::at(int box) const {
  auto it = std::lower_bound(boxes.begin(), boxes.end(), box);
  if (it == boxes.end() || *it != box) throw std::out_of_range("box not in tableau");
  return labels[it - boxes.begin()];
}

void WeightMultiset::add(const RootVector& w, std::int64_t mult) {
  if (mult == 0) return;
  auto& slot = m_[w];
  slot += mult;
  if (slot == 0) m_.erase(w);
}

void WeightMultiset::add_all(const WeightMultiset& o) {
  for (const auto& [w, k] : o.m_) add(w, k);
}

std::int64_t WeightMultiset::total() const {
  std::int64_t n = 0;
  for (const auto& e : m_) n += e.second;
  return n;
}

std::int64_t WeightMultiset::count(const RootVector& w) const {
  auto it = m_.find(w);
  return it == m_.end() ? 0 : it->second;
}

WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [wa, ka] : a.entries())
    for (const auto& [wb, kb] : b.entries()) out.add(wa + wb, ka * kb);
  return out;
}

namespace {

void check_skew(const FinitePoset& p, BoxSet outer, BoxSet inner) {
  if (!inner.subset_of(outer)) throw std::invalid_argument("skew shape: inner is not contained in outer");
  if (!p.is_ideal(outer) || !p.is_ideal(inner)) throw std::invalid_argument("skew shape: not order ideals");
}

// Largest allowed label not above `hi` (doubled), respecting integrality.
int snap_down(int hi, bool is_long) { return is_long && (hi % 2 != 0) ? hi - 1 : hi; }
int snap_up(int lo, bool is_long) { return is_long && (lo % 2 != 0) ? lo + 1 : lo; }

}  // namespace

std::vector<PrimedTableau> enumerate_tableaux(const FinitePoset& p, BoxSet outer, BoxSet inner, HalfInt a,
                                              HalfInt m) {
  check_skew(p, outer, inner);
  std::vector<PrimedTableau> out;
  if (a > m) return out;
  BoxSet skew = outer - inner;
  std::vector<int> boxes = skew.indices();
  const int k = static_cast<int>(boxes.size());

  // Smallest label each box can carry given the chain of boxes above it.
  std::vector<int> floor(k);
  for (int i = k - 1; i >= 0; --i) {
    int lo = snap_up(a.doubled, p.long_box[boxes[i]]);
    for (int j = i + 1; j < k; ++j)
      if (p.leq(boxes[i], boxes[j])) lo = std::max(lo, snap_up(floor[j] + 1, p.long_box[boxes[i]]));
    floor[i] = lo;
  }
  std::vector<int> lab(k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      PrimedTableau t{outer, inner, boxes, {}};
      for (int x : lab) t.labels.push_back({x});
      out.push_back(std::move(t));
      return;
    }
    int hi = m.doubled - 1;
    for (int j = 0; j < i; ++j)
      if (p.leq(boxes[j], boxes[i])) hi = std::min(hi, lab[j] - 1);
    const bool lg = p.long_box[boxes[i]];
    for (int x = snap_down(hi, lg); x >= floor[i]; x -= lg ? 2 : 1) {
      lab[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<PrimedTableau> enumerate_tableaux_naive(const FinitePoset& p, BoxSet outer, BoxSet inner, HalfInt a,
                                                    HalfInt m) {
  check_skew(p, outer, inner);
  std::vector<PrimedTableau> out;
  std::vector<int> boxes = (outer - inner).indices();
  const int k = static_cast<int>(boxes.size());
  std::vector<int> lab(k, a.doubled);
  if (a >= m && k > 0) return out;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (p.long_box[boxes[i]] && lab[i] % 2 != 0) ok = false;
      for (int j = 0; j < k && ok; ++j)
        if (i != j && p.leq(boxes[i], boxes[j]) && !(lab[i] > lab[j])) ok = false;
    }
    if (ok) {
      PrimedTableau t{outer, inner, boxes, {}};
      for (int x : lab) t.labels.push_back({x});
      out.push_back(std::move(t));
    }
    int i = 0;
    while (i < k && ++lab[i] >= m.doubled) lab[i++] = a.doubled;
    if (i == k) break;
  }
  return out;
}

std::vector<PrimedTableau> enumerate_tableaux(const CominData& c, const Shape& outer, const Shape& inner, HalfInt a,
                                              HalfInt m) {
  return enumerate_tableaux(c.poset(), outer.boxes, inner.boxes, a, m);
}

int omega_pairing(const CominData& c, int box) {
  const RootVector& alpha = c.box(box);
  const RootVector g = c.rs().simple_root(c.gamma());
  std::int64_t num = alpha[c.gamma()] * c.rs().pair2(g, g);
  std::int64_t den = c.rs().pair2(alpha, alpha);
  return static_cast<int>(num / den);
}

RootVector weight(const CominData& c, const PrimedTableau& t, int m) {
  const int n = c.rs().rank();
  std::vector<std::int64_t> twice(n, 0);
  auto add = [&](int box, int doubled_label) {
    twice[c.label(box)] += static_cast<std::int64_t>(doubled_label) * omega_pairing(c, box);
  };
  t.inner.for_each([&](int b) { add(b, 2 * m); });
  for (std::size_t i = 0; i < t.boxes.size(); ++i) add(t.boxes[i], t.labels[i].doubled);
  RootVector out(n);
  for (int i = 0; i < n; ++i) {
    if (twice[i] % 2 != 0) throw std::logic_error("non-integral tableau weight");
    out[i] = static_cast<int>(twice[i] / 2);
  }
  return out;
}

WeightMultiset representation(const CominData& c, const Shape& u, const Shape& v, HalfInt a, int m) {
  WeightMultiset out;
  for (const auto& t : enumerate_tableaux(c, u, v, a, HalfInt::from_int(m))) out.add(-weight(c, t, m));
  return out;
}

std::map<Shape, SignedMultiset> chevalley_power(const CominData& c, const Shape& v, int m) {
  if (m < 0) throw std::invalid_argument("chevalley_power: m must be non-negative");
  std::map<Shape, SignedMultiset> out;
  for (const Shape& u : all_shapes(c)) {
    if (!v.boxes.subset_of(u.boxes)) continue;
    WeightMultiset w = representation(c, u, v, HalfInt{0}, m);
    if (w.empty()) continue;
    out[u] = {(u.size() - v.size()) % 2 == 0 ? 1 : -1, std::move(w)};
  }
  return out;
}

SignedMultiset euler_characteristic(const CominData& c, const Shape& u, const Shape& v, int m) {
  if (!v.boxes.subset_of(u.boxes)) throw std::invalid_argument("euler_characteristic: v is not below u");
  if (m < 1) throw std::invalid_argument("euler_characteristic: m must be at least 1");
  return {(u.size() - v.size()) % 2 == 0 ? 1 : -1, representation(c, u, v, HalfInt{1}, m)};
}

bool is_cohomologically_trivial(const CominData& c, const Shape& u, const Shape& v, int m) {
  if (!v.boxes.subset_of(u.boxes)) throw std::invalid_argument("is_cohomologically_trivial: v is not below u");
  return enumerate_tableaux(c, u, v, HalfInt{1}, HalfInt::from_int(m)).empty();
}

}  // namespace qcomin
