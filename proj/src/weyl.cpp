#include "qcomin/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcomin {

WeylElement WeylElement::identity(std::shared_ptr<const RootSystem> rs) {
  WeylElement w;
  const int n = rs->rank();
  w.rs_ = std::move(rs);
  w.m_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) w.m_[i * n + i] = 1;
  return w;
}

WeylElement WeylElement::from_word(std::shared_ptr<const RootSystem> rs, const std::vector<int>& word) {
  WeylElement w = identity(std::move(rs));
  for (int i : word) w = w.times_simple(i);
  return w;
}

WeylElement WeylElement::from_action(std::shared_ptr<const RootSystem> rs, std::vector<int> matrix) {
  WeylElement w;
  w.rs_ = std::move(rs);
  w.m_ = std::move(matrix);
  w.word_ = reduced_word(w);
  return w;
}

WeylElement WeylElement::reflection(std::shared_ptr<const RootSystem> rs, const RootVector& beta) {
  if (!rs->is_root(beta)) throw std::invalid_argument("reflection: not a root");
  WeylElement w;
  const int n = rs->rank();
  w.m_.assign(n * n, 0);
  for (int c = 0; c < n; ++c) {
    RootVector img = rs->reflect(beta, rs->simple_root(c));
    for (int r = 0; r < n; ++r) w.m_[r * n + c] = img[r];
  }
  w.rs_ = std::move(rs);
  w.word_ = reduced_word(w);
  return w;
}

RootVector WeylElement::act(const RootVector& v) const {
  const int n = rank();
  RootVector out(n, 0);
  for (int c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    for (int r = 0; r < n; ++r) out[r] += m_[r * n + c] * v[c];
  }
  return out;
}

RootVector WeylElement::column(int i) const {
  const int n = rank();
  RootVector out(n);
  for (int r = 0; r < n; ++r) out[r] = m_[r * n + i];
  return out;
}

bool WeylElement::has_right_descent(int i) const {
  const int n = rank();
  // Images of roots are either positive or negative; the first nonzero entry decides.
  for (int r = 0; r < n; ++r) {
    int c = m_[r * n + i];
    if (c != 0) return c < 0;
  }
  return false;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  const int n = rank();
  WeylElement w;
  w.rs_ = rs_;
  w.m_.assign(n * n, 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      int a = m_[r * n + k];
      if (a == 0) continue;
      for (int c = 0; c < n; ++c) w.m_[r * n + c] += a * o.m_[k * n + c];
    }
  w.word_ = word_;
  w.word_.insert(w.word_.end(), o.word_.begin(), o.word_.end());
  return w;
}

WeylElement WeylElement::times_simple(int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw std::out_of_range("simple reflection index out of range");
  WeylElement w = *this;
  // Column c of w s_i is w(s_i alpha_c) = w(alpha_c) - <alpha_c, alpha_i^vee> w(alpha_i).
  for (int c = 0; c < n; ++c) {
    int a = rs_->cartan(c, i);
    if (a == 0) continue;
    for (int r = 0; r < n; ++r) w.m_[r * n + c] -= a * m_[r * n + i];
  }
  w.word_.push_back(i);
  return w;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> rw = reduced_word(*this);
  std::reverse(rw.begin(), rw.end());
  return from_word(rs_, rw);
}

RootVector act(const WeylElement& w, const RootVector& v) { return w.act(v); }

int length(const WeylElement& w) {
  int n = 0;
  for (const auto& b : w.root_system().positive_roots())
    if (is_negative(w.act(b))) ++n;
  return n;
}

bool is_identity(const WeylElement& w) {
  return w == WeylElement::identity(w.root_system_ptr());
}

std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> rev;
  WeylElement x = w;
  const int n = w.rank();
  for (;;) {
    int i = 0;
    while (i < n && !x.has_right_descent(i)) ++i;
    if (i == n) break;
    x = x.times_simple(i);
    rev.push_back(i);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

bool is_reduced_word(const RootSystem& rs, const std::vector<int>& word) {
  auto p = std::make_shared<const RootSystem>(rs);
  return length(WeylElement::from_word(p, word)) == static_cast<int>(word.size());
}

std::vector<RootVector> inversion_set(const WeylElement& w) {
  std::vector<RootVector> out;
  for (const auto& b : w.root_system().positive_roots())
    if (is_negative(w.act(b))) out.push_back(b);
  return out;
}

WeylElement hecke_product(const WeylElement& u, const WeylElement& v) {
  WeylElement x = u;
  for (int i : reduced_word(v))
    if (!x.has_right_descent(i)) x = x.times_simple(i);
  return x;
}

WeylElement longest_parabolic(std::shared_ptr<const RootSystem> rs, const std::vector<int>& generators) {
  WeylElement w = WeylElement::identity(std::move(rs));
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : generators)
      if (!w.has_right_descent(i)) {
        w = w.times_simple(i);
        grew = true;
      }
  }
  return w;
}

WeylElement longest_element(std::shared_ptr<const RootSystem> rs) {
  std::vector<int> all(rs->rank());
  for (int i = 0; i < rs->rank(); ++i) all[i] = i;
  return longest_parabolic(std::move(rs), all);
}

std::vector<int> complement_indices(int rank, const std::vector<int>& excluded) {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) out.push_back(i);
  return out;
}

std::pair<WeylElement, WeylElement> parabolic_factorize(const WeylElement& w, const std::vector<int>& excluded) {
  const auto gens = complement_indices(w.rank(), excluded);
  WeylElement top = w;
  std::vector<int> rev;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (int i : gens)
      if (top.has_right_descent(i)) {
        top = top.times_simple(i);
        rev.push_back(i);
        stripped = true;
        break;
      }
  }
  std::reverse(rev.begin(), rev.end());
  WeylElement bottom = WeylElement::from_word(w.root_system_ptr(), rev);
  WeylElement top_clean = WeylElement::from_word(w.root_system_ptr(), reduced_word(top));
  return {top_clean, bottom};
}

bool is_min_coset_rep(const WeylElement& w, const std::vector<int>& excluded) {
  for (int i : complement_indices(w.rank(), excluded))
    if (w.has_right_descent(i)) return false;
  return true;
}

bool bruhat_leq(const WeylElement& v, const WeylElement& u) {
  // Walk a reduced word of u from the right; for s a right descent of u,
  // v <= u iff min(v, vs) <= us.
  WeylElement x = v;
  std::vector<int> word = reduced_word(u);
  int lx = length(x);
  if (lx > static_cast<int>(word.size())) return false;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it;
    if (x.has_right_descent(s)) {
      x = x.times_simple(s);
      --lx;
    }
    if (lx == 0) return true;
  }
  return lx == 0;
}

bool left_weak_leq(const WeylElement& a, const WeylElement& b) {
  return length(b * a.inverse()) == length(b) - length(a);
}

bool px_bruhat_leq(const WeylElement& v, const WeylElement& u, const std::vector<int>& excluded) {
  if (!bruhat_leq(v, u)) return false;
  auto vx = parabolic_factorize(v, excluded).second;
  auto ux = parabolic_factorize(u, excluded).second;
  return left_weak_leq(ux, vx);
}

SemiTransversal semi_transversal_kappa(const WeylElement& u, const WeylElement& v,
                                       const std::vector<int>& excluded) {
  if (!is_min_coset_rep(u, excluded) || !is_min_coset_rep(v, excluded))
    throw std::invalid_argument("semi_transversal_kappa: arguments must be minimal coset representatives");
  auto rs = u.root_system_ptr();
  WeylElement w0x = longest_parabolic(rs, complement_indices(u.rank(), excluded));
  WeylElement vinv = v.inverse();
  SemiTransversal out;
  out.kappa = hecke_product(hecke_product(u, w0x), vinv);
  out.reduced = length(out.kappa) == length(u) + length(w0x) + length(v);
  out.w0_kappa_v = longest_element(rs) * out.kappa * v;
  return out;
}

}  // namespace qcomin
