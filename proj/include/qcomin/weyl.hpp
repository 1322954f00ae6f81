#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "qcomin/root_system.hpp"

namespace qcomin {

// A Weyl group element: the word it was built from plus its action on the
// simple roots. Equality compares actions only.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(std::shared_ptr<const RootSystem> rs);
  static WeylElement from_word(std::shared_ptr<const RootSystem> rs, const std::vector<int>& word);
  // Element with the given action matrix; its word is a reduced word.
  static WeylElement from_action(std::shared_ptr<const RootSystem> rs, std::vector<int> matrix);
  // The reflection s_beta for a root beta.
  static WeylElement reflection(std::shared_ptr<const RootSystem> rs, const RootVector& beta);

  const RootSystem& root_system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
  const std::vector<int>& word() const { return word_; }
  int rank() const { return rs_ ? rs_->rank() : 0; }

  RootVector act(const RootVector& v) const;
  // Image of the i-th simple root.
  RootVector column(int i) const;
  // w(alpha_i) < 0.
  bool has_right_descent(int i) const;

  // Group product (words concatenate).
  WeylElement operator*(const WeylElement& o) const;
  WeylElement times_simple(int i) const;
  WeylElement inverse() const;

  bool operator==(const WeylElement& o) const { return m_ == o.m_; }
  // Action matrix, column-major images of simple roots; the canonical fingerprint.
  const std::vector<int>& matrix() const { return m_; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> m_;  // m_[r * rank + c] = coefficient r of w(alpha_c)
  std::vector<int> word_;
};

RootVector act(const WeylElement& w, const RootVector& v);
int length(const WeylElement& w);
bool is_identity(const WeylElement& w);
// Reduced word by stripping right descents (smallest index first).
std::vector<int> reduced_word(const WeylElement& w);
bool is_reduced_word(const RootSystem& rs, const std::vector<int>& word);
// Positive roots sent to negative roots.
std::vector<RootVector> inversion_set(const WeylElement& w);

WeylElement hecke_product(const WeylElement& u, const WeylElement& v);

WeylElement longest_element(std::shared_ptr<const RootSystem> rs);
// Longest element of the parabolic subgroup generated by the given simple indices.
WeylElement longest_parabolic(std::shared_ptr<const RootSystem> rs, const std::vector<int>& generators);

// Simple indices not in `excluded`.
std::vector<int> complement_indices(int rank, const std::vector<int>& excluded);

// w = w^P * w_P with w_P in the subgroup generated by Delta \ excluded.
std::pair<WeylElement, WeylElement> parabolic_factorize(const WeylElement& w, const std::vector<int>& excluded);
bool is_min_coset_rep(const WeylElement& w, const std::vector<int>& excluded);

bool bruhat_leq(const WeylElement& v, const WeylElement& u);
// a <=_L b: l(b a^-1) = l(b) - l(a).
bool left_weak_leq(const WeylElement& a, const WeylElement& b);
// v <= u and u_X <=_L v_X.
bool px_bruhat_leq(const WeylElement& v, const WeylElement& u, const std::vector<int>& excluded);

struct SemiTransversal {
  WeylElement kappa;         // u . w_{0,X} . v^-1
  WeylElement w0_kappa_v;    // w_0 kappa v
  bool reduced = false;      // the Hecke product was a reduced product
};
SemiTransversal semi_transversal_kappa(const WeylElement& u, const WeylElement& v,
                                       const std::vector<int>& excluded);

}  // namespace qcomin
