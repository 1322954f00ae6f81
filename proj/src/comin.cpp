#include "qcomin/comin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcomin {

bool FinitePoset::is_ideal(BoxSet s) const {
  bool ok = true;
  s.for_each([&](int i) { ok = ok && below[i].subset_of(s); });
  return ok;
}

bool FinitePoset::is_antichain(BoxSet s) const {
  bool ok = true;
  s.for_each([&](int i) { ok = ok && (below[i] & s) == BoxSet::single(i); });
  return ok;
}

std::vector<BoxSet> all_ideals(const FinitePoset& p) {
  std::vector<BoxSet> out;
  const int n = p.size();
  std::vector<BoxSet> strict(n);
  for (int i = 0; i < n; ++i) strict[i] = p.below[i] - BoxSet::single(i);
  std::function<void(int, BoxSet)> rec = [&](int i, BoxSet cur) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    rec(i + 1, cur);
    if (strict[i].subset_of(cur)) {
      BoxSet next = cur;
      next.set(i);
      rec(i + 1, next);
    }
  };
  rec(0, BoxSet{});
  std::sort(out.begin(), out.end(), [](BoxSet a, BoxSet b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.indices() < b.indices();
  });
  return out;
}

BoxSet FiberPoset::pull_back_kappa(BoxSet px) const {
  BoxSet out;
  for (int e = 0; e < size(); ++e)
    if (px.test(kappa_map[e])) out.set(e);
  return out;
}

BoxSet FiberPoset::pull_back_z(BoxSet px) const {
  BoxSet out;
  for (int e = 0; e < size(); ++e)
    if (px.test(z_map[e])) out.set(e);
  return out;
}

BoxSet FiberPoset::push_kappa(BoxSet fiber) const {
  BoxSet out;
  fiber.for_each([&](int e) { out.set(kappa_map[e]); });
  return out;
}

BoxSet FiberPoset::push_z(BoxSet fiber) const {
  BoxSet out;
  fiber.for_each([&](int e) { out.set(z_map[e]); });
  return out;
}

BoxSet FiberPoset::dual(BoxSet s) const {
  BoxSet image;
  s.for_each([&](int e) { image.set(w0_involution[e]); });
  return poset.all() - image;
}

namespace {

// Product of the reflections s_{a_1} ... s_{a_k} over roots in the given order.
std::vector<int> reflection_product(const RootSystem& rs, const std::vector<const RootVector*>& roots) {
  const int n = rs.rank();
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  std::vector<int> tmp(n * n);
  for (const RootVector* beta : roots) {
    // m <- m * s_beta; column c of s_beta is alpha_c - <alpha_c, beta^vee> beta.
    std::vector<int> mb(n, 0);  // m * beta
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) mb[r] += m[r * n + k] * (*beta)[k];
    for (int c = 0; c < n; ++c) {
      int p = rs.pair_with_coroot(rs.simple_root(c), *beta);
      for (int r = 0; r < n; ++r) tmp[r * n + c] = m[r * n + c] - p * mb[r];
    }
    m.swap(tmp);
  }
  return m;
}

RootVector apply_matrix(const std::vector<int>& m, const RootVector& v) {
  const int n = static_cast<int>(v.size());
  RootVector out(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r] += m[r * n + c] * v[c];
  return out;
}

int simple_index(const RootVector& v) {
  int idx = -1;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || idx >= 0) return -1;
    idx = i;
  }
  return idx;
}

struct LabeledCell {
  int row, col, label;  // label 1-based
};

std::vector<LabeledCell> label_grid(CartanType t, int gamma) {
  const int n = t.rank;
  const int g = gamma + 1;
  std::vector<LabeledCell> cells;
  auto add_rows = [&](const std::vector<std::pair<int, std::vector<int>>>& rows) {
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (int k = 0; k < static_cast<int>(rows[r].second.size()); ++k)
        cells.push_back({r + 1, rows[r].first + k, rows[r].second[k]});
  };
  switch (t.family) {
    case Family::A:
      for (int r = 1; r <= g; ++r)
        for (int c = 1; c <= n + 1 - g; ++c) cells.push_back({r, c, g - r + c});
      break;
    case Family::B:
      for (int c = 1; c <= 2 * n - 1; ++c) cells.push_back({1, c, c <= n ? c : 2 * n - c});
      break;
    case Family::C:
      for (int r = 1; r <= n; ++r)
        for (int c = r; c <= n; ++c) cells.push_back({r, c, n - (c - r)});
      break;
    case Family::D:
      if (g == 1) {
        for (int j = 2; j <= n; ++j) cells.push_back({1, j - 1, j - 1});
        for (int j = n; j >= 2; --j) cells.push_back({2, 2 * n - 2 - j, j == n ? n : j - 1});
      } else {
        const bool node_n = g == n;
        for (int r = 1; r <= n - 1; ++r)
          for (int c = r; c <= n - 1; ++c) {
            int label;
            if (c == r) label = ((r % 2 == 1) == node_n) ? n : n - 1;
            else label = n - 1 - (c - r);
            cells.push_back({r, c, label});
          }
      }
      break;
    case Family::E:
      if (n == 6) {
        add_rows({{1, {6, 5, 4, 2}}, {3, {3, 4, 5, 6}}, {3, {1, 3, 4, 5}}, {5, {2, 4, 3, 1}}});
        if (g == 1) {
          static const int kSigma[] = {0, 6, 2, 5, 4, 3, 1};
          for (auto& cell : cells) cell.label = kSigma[cell.label];
        }
      } else {
        add_rows({{1, {7, 6, 5, 4, 3, 1}},
                  {4, {2, 4, 3}},
                  {5, {5, 4, 2}},
                  {5, {6, 5, 4, 3, 1}},
                  {5, {7, 6, 5, 4, 3}},
                  {8, {2, 4}},
                  {9, {5}},
                  {9, {6}},
                  {9, {7}}});
      }
      break;
  }
  return cells;
}

bool north_west(const LabeledCell& a, const LabeledCell& b) { return a.row <= b.row && a.col <= b.col; }

}  // namespace

std::vector<int> CominData::cominuscule_nodes(CartanType type) {
  RootSystem rs = RootSystem::build(type);
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.highest_root()[i] == 1) out.push_back(i);
  return out;
}

std::string CominData::name() const {
  const CartanType t = rs_->type();
  const int n = t.rank, g = gamma_ + 1;
  switch (t.family) {
    case Family::A: return "Gr(" + std::to_string(g) + "," + std::to_string(n + 1) + ")";
    case Family::B: return "Q^" + std::to_string(2 * n - 1);
    case Family::C: return "LG(" + std::to_string(n) + "," + std::to_string(2 * n) + ")";
    case Family::D:
      if (g == 1) return "Q^" + std::to_string(2 * n - 2);
      return "OG(" + std::to_string(n) + "," + std::to_string(2 * n) + ")";
    case Family::E: return t.name() + "/P" + std::to_string(g);
  }
  return t.name();
}

CominPtr CominData::build(CartanType type, int gamma) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(type));
  auto nodes = cominuscule_nodes(type);
  if (std::find(nodes.begin(), nodes.end(), gamma) == nodes.end()) {
    std::string list;
    for (int i : nodes) list += (list.empty() ? "" : ", ") + std::to_string(i + 1);
    throw std::invalid_argument("node " + std::to_string(gamma + 1) + " of " + type.name() +
                                " is not cominuscule; valid nodes: " + list);
  }
  auto c = std::shared_ptr<CominData>(new CominData());
  c->rs_ = rs;
  c->gamma_ = gamma;
  for (const auto& r : rs->positive_roots())
    if (r[gamma] >= 1) c->boxes_.push_back(r);
  const int N = static_cast<int>(c->boxes_.size());
  if (N > BoxSet::kCapacity)
    throw std::invalid_argument("poset too large: " + std::to_string(N) + " boxes (limit 128)");

  c->poset_.below.assign(N, BoxSet{});
  c->poset_.long_box.assign(N, false);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j <= i; ++j)
      if (root_leq(c->boxes_[j], c->boxes_[i])) c->poset_.below[i].set(j);
    c->poset_.long_box[i] = rs->is_long(c->boxes_[i]);
    if (!c->poset_.long_box[i]) c->short_mask_.set(i);
  }
  for (int i = 0; i < N; ++i) {
    BoxSet strict = c->poset_.below[i] - BoxSet::single(i);
    strict.for_each([&](int j) {
      BoxSet between = (strict & c->poset_.below[i]) - BoxSet::single(j);
      bool cover = true;
      between.for_each([&](int k) { cover = cover && !c->poset_.below[k].test(j); });
      if (cover) c->covers_.push_back({j, i});
    });
  }
  std::sort(c->covers_.begin(), c->covers_.end());

  // delta(alpha) = w_{lambda(alpha)} . alpha
  c->labels_.assign(N, -1);
  for (int i = 0; i < N; ++i) {
    std::vector<const RootVector*> lower;
    (c->poset_.below[i] - BoxSet::single(i)).for_each([&](int j) { lower.push_back(&c->boxes_[j]); });
    RootVector img = apply_matrix(reflection_product(*rs, lower), c->boxes_[i]);
    int s = simple_index(img);
    if (s < 0) throw std::logic_error("delta label is not a simple root");
    c->labels_[i] = s;
    if (s == gamma) c->tilde_.push_back(i);
  }
  for (std::size_t k = 1; k < c->tilde_.size(); ++k)
    if (!c->leq(c->tilde_[k - 1], c->tilde_[k])) throw std::logic_error("gamma boxes do not form a chain");

  const int D = c->diameter();
  c->kappa_.assign(D + 1, BoxSet{});
  c->z_.assign(D + 1, BoxSet{});
  for (int d = 1; d <= D; ++d) {
    c->kappa_[d] = c->poset_.below[c->tilde_[d - 1]];
    if (d == D) {
      c->z_[d] = c->poset_.all();
    } else {
      int nxt = c->tilde_[d];
      for (int i = 0; i < N; ++i)
        if (!c->leq(nxt, i)) c->z_[d].set(i);
    }
  }

  c->w0_ = longest_element(rs);
  c->w0x_ = longest_parabolic(rs, complement_indices(rs->rank(), {gamma}));
  c->w0_upper_ = c->w0_ * c->w0x_;
  c->w0_upper_ = WeylElement::from_word(rs, reduced_word(c->w0_upper_));

  c->w0x_boxes_.assign(N, -1);
  for (int i = 0; i < N; ++i) {
    int j = c->box_index(c->w0x_.act(c->boxes_[i]));
    if (j < 0) throw std::logic_error("w_{0,X} does not preserve P_X");
    c->w0x_boxes_[i] = j;
  }
  auto dual = [&](BoxSet s) {
    BoxSet img;
    s.for_each([&](int i) { img.set(c->w0x_boxes_[i]); });
    return c->poset_.all() - img;
  };
  c->kappa_dual_.resize(D + 1);
  c->z_dual_.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    c->kappa_dual_[d] = dual(c->kappa_[d]);
    c->z_dual_[d] = dual(c->z_[d]);
  }

  // rotation = z_1 s_gamma
  WeylElement z1 = shape_to_weyl(*c, c->make_shape(c->z_[std::min(1, D)]));
  WeylElement rot = z1.times_simple(gamma);
  c->rot_.assign(N, -1);
  c->rot_inv_.assign(N, -1);
  for (int i = 0; i < N; ++i) {
    int j = c->box_index(rot.act(c->boxes_[i]));
    if (j < 0) throw std::logic_error("rotation does not permute P_X");
    c->rot_[i] = j;
    c->rot_inv_[j] = i;
  }
  std::vector<int> id(N);
  std::iota(id.begin(), id.end(), 0);
  c->rot_pos_ = {id};
  c->rot_neg_ = {id};
  for (;;) {
    std::vector<int> next(N), prev(N);
    for (int i = 0; i < N; ++i) {
      next[i] = c->rot_[c->rot_pos_.back()[i]];
      prev[i] = c->rot_inv_[c->rot_neg_.back()[i]];
    }
    if (next == id) break;
    c->rot_pos_.push_back(next);
    c->rot_neg_.push_back(prev);
  }
  c->period_ = static_cast<int>(c->rot_pos_.size());

  c->build_layout();
  for (int d = 1; d <= D; ++d) c->fibers_.push_back(c->build_fiber(d));
  return c;
}

int CominData::box_index(const RootVector& v) const {
  if (static_cast<int>(v.size()) != rs_->rank() || v[gamma_] != 1) return -1;
  auto it = std::lower_bound(boxes_.begin(), boxes_.end(), v, [](const RootVector& a, const RootVector& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  if (it == boxes_.end() || *it != v) return -1;
  return static_cast<int>(it - boxes_.begin());
}

int CominData::rotate_pow(int i, int k) const {
  k %= period_;
  if (k >= 0) return rot_pos_[k][i];
  return rot_neg_[-k][i];
}

BoxSet CominData::rotate_set(BoxSet s, int k) const {
  k %= period_;
  const std::vector<int>& perm = k >= 0 ? rot_pos_[k] : rot_neg_[-k];
  BoxSet out;
  s.for_each([&](int i) { out.set(perm[i]); });
  return out;
}

Shape CominData::make_shape(BoxSet s) const {
  if (!(s.subset_of(poset_.all()) && poset_.is_ideal(s))) throw std::invalid_argument("box set is not an order ideal");
  return {s, size()};
}

void CominData::build_layout() {
  const CartanType t = rs_->type();
  auto grid = label_grid(t, gamma_);
  const int N = size();
  if (static_cast<int>(grid.size()) != N) throw std::logic_error("layout size mismatch for " + name());
  std::vector<int> assign(N, -1);
  std::vector<bool> used(grid.size(), false);
  std::function<bool(int)> place = [&](int i) {
    if (i == N) return true;
    for (int k = 0; k < static_cast<int>(grid.size()); ++k) {
      if (used[k] || grid[k].label != labels_[i] + 1) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const auto& cj = grid[assign[j]];
        ok = leq(j, i) == north_west(cj, grid[k]) && !north_west(grid[k], cj);
      }
      if (!ok) continue;
      used[k] = true;
      assign[i] = k;
      if (place(i + 1)) return true;
      used[k] = false;
    }
    return false;
  };
  if (!place(0)) throw std::logic_error("no label-preserving layout for " + name());
  cells_.resize(N);
  rows_ = cols_ = 0;
  for (int i = 0; i < N; ++i) {
    cells_[i] = {grid[assign[i]].row, grid[assign[i]].col};
    rows_ = std::max(rows_, cells_[i].row);
    cols_ = std::max(cols_, cells_[i].col);
  }
  row_boxes_.assign(rows_, {});
  for (int i = 0; i < N; ++i) row_boxes_[cells_[i].row - 1].push_back(i);
  for (auto& r : row_boxes_)
    std::sort(r.begin(), r.end(), [&](int a, int b) { return cells_[a].col < cells_[b].col; });
  row_input_ = t.family != Family::E;
}

FiberPoset CominData::build_fiber(int d) const {
  FiberPoset f;
  f.d = d;
  WeylElement zd = shape_to_weyl(*this, make_shape(z_[d]));
  WeylElement kd = shape_to_weyl(*this, make_shape(kappa_[d]));
  WeylElement x = zd * kd.inverse();
  for (const auto& b : rs_->positive_roots())
    if (is_negative(x.act(b))) f.roots.push_back(b);
  const int M = f.size();
  if (M > BoxSet::kCapacity) throw std::logic_error("fiber poset too large");
  f.poset.below.assign(M, BoxSet{});
  f.poset.long_box.assign(M, false);
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j <= i; ++j)
      if (root_leq(f.roots[j], f.roots[i])) f.poset.below[i].set(j);
    f.poset.long_box[i] = rs_->is_long(f.roots[i]);
  }
  f.labels.assign(M, -1);
  for (int i = 0; i < M; ++i) {
    std::vector<const RootVector*> lower;
    (f.poset.below[i] - BoxSet::single(i)).for_each([&](int j) { lower.push_back(&f.roots[j]); });
    int s = simple_index(apply_matrix(reflection_product(*rs_, lower), f.roots[i]));
    if (s < 0 || s == gamma_) throw std::logic_error("fiber label is not a simple root of W_X");
    f.labels[i] = s;
  }
  f.kappa_map.assign(M, -1);
  f.z_map.assign(M, -1);
  for (int i = 0; i < M; ++i) {
    int a = box_index(kd.act(f.roots[i]));
    int b = box_index(zd.act(f.roots[i]));
    if (a < 0 || b < 0) throw std::logic_error("fiber embedding leaves P_X");
    f.kappa_map[i] = a;
    f.z_map[i] = b;
    f.kappa_image.set(a);
    f.z_image.set(b);
  }
  if (f.kappa_image != (z_[d] - kappa_[d]) || f.z_image != (kappa_dual_[d] - z_dual_[d]))
    throw std::logic_error("fiber embeddings have the wrong image");

  // Connected components of the comparability graph.
  std::vector<int> parent(M);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (int i = 0; i < M; ++i) f.poset.below[i].for_each([&](int j) { parent[find(j)] = find(i); });
  f.component.assign(M, -1);
  std::vector<int> root_id(M, -1);
  for (int i = 0; i < M; ++i) {
    int r = find(i);
    if (root_id[r] < 0) root_id[r] = f.num_components++;
    f.component[i] = root_id[r];
  }

  // w_{0,F}: longest element of the Levi of the fiber, generated by the
  // labels other than those of minimal elements.
  std::vector<bool> in_support(rs_->rank(), false), minimal(rs_->rank(), false);
  for (int i = 0; i < M; ++i) {
    in_support[f.labels[i]] = true;
    if (f.poset.below[i].count() == 1) minimal[f.labels[i]] = true;
  }
  std::vector<int> gens;
  for (int s = 0; s < rs_->rank(); ++s)
    if (in_support[s] && !minimal[s]) gens.push_back(s);
  WeylElement w0f = longest_parabolic(rs_, gens);
  f.w0_involution.assign(M, -1);
  for (int i = 0; i < M; ++i) {
    RootVector img = w0f.act(f.roots[i]);
    auto it = std::find(f.roots.begin(), f.roots.end(), img);
    if (it == f.roots.end()) throw std::logic_error("fiber involution leaves the fiber poset");
    f.w0_involution[i] = static_cast<int>(it - f.roots.begin());
  }
  return f;
}

CominPtr build_comin(CartanType type, int gamma) { return CominData::build(type, gamma); }

WeylElement shape_to_weyl(const CominData& c, const Shape& s) {
  std::vector<const RootVector*> roots;
  s.boxes.for_each([&](int i) { roots.push_back(&c.box(i)); });
  return WeylElement::from_action(c.rs_ptr(), reflection_product(c.rs(), roots));
}

Shape weyl_to_shape(const CominData& c, const WeylElement& w) {
  if (!is_min_coset_rep(w, c.excluded())) throw std::invalid_argument("element is not in W^X");
  BoxSet s;
  int total = 0;
  for (const auto& b : c.rs().positive_roots()) {
    if (!is_negative(w.act(b))) continue;
    ++total;
    int i = c.box_index(b);
    if (i < 0) throw std::invalid_argument("inversion outside P_X");
    s.set(i);
  }
  if (total != s.count()) throw std::logic_error("inversion count mismatch");
  return c.make_shape(s);
}

std::vector<int> delta_word(const CominData& c, const Shape& outer, const Shape& inner) {
  if (!inner.boxes.subset_of(outer.boxes)) throw std::invalid_argument("delta_word: shapes are not nested");
  std::vector<int> word;
  std::vector<int> idx = (outer.boxes - inner.boxes).indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) word.push_back(c.label(*it));
  return word;
}

std::vector<int> delta_word(const CominData& c, const Shape& s) { return delta_word(c, s, c.empty_shape()); }

std::pair<Shape, Shape> kappa_z(const CominData& c, int d) {
  if (d < 0 || d > c.diameter()) throw std::out_of_range("kappa_z: degree out of range");
  return {c.make_shape(c.kappa_set(d)), c.make_shape(c.z_set(d))};
}

int diameter(const CominData& c) { return c.diameter(); }

Shape dual_shape(const CominData& c, const Shape& s) {
  BoxSet img;
  s.boxes.for_each([&](int i) { img.set(c.w0x_box(i)); });
  return {c.poset().all() - img, c.size()};
}

Shape join(const Shape& s, const Shape& t) {
  if (s.universe != t.universe) throw std::invalid_argument("join: ambient mismatch");
  return {s.boxes | t.boxes, s.universe};
}

Shape meet(const Shape& s, const Shape& t) {
  if (s.universe != t.universe) throw std::invalid_argument("meet: ambient mismatch");
  return {s.boxes & t.boxes, s.universe};
}

bool is_rook_strip(const CominData& c, const Shape& outer, const Shape& inner, bool require_short) {
  BoxSet skew = outer.boxes - inner.boxes;
  if (!c.poset().is_antichain(skew)) return false;
  if (!require_short) return true;
  return !skew.empty() && skew.subset_of(c.short_boxes());
}

const FiberPoset& fiber_poset(const CominData& c, int d) {
  if (d < 1 || d > c.diameter()) throw std::out_of_range("fiber_poset: degree out of range");
  return c.fiber(d);
}

int deg_q(const CominData& c) {
  return length(shape_to_weyl(c, c.make_shape(c.z_set(std::min(1, c.diameter()))))) + 1;
}

std::vector<Shape> all_shapes(const CominData& c) {
  std::vector<Shape> out;
  for (BoxSet s : all_ideals(c.poset())) out.push_back({s, c.size()});
  return out;
}

bool is_primitive(const CominData& c) {
  const int D = c.diameter();
  return c.kappa_set(D) == c.z_set(D);
}

std::vector<int> shape_rows(const CominData& c, const Shape& s) {
  std::vector<int> rows;
  for (int r = 1; r <= c.num_rows(); ++r) {
    int n = 0;
    for (int i : c.row_boxes(r)) n += s.contains(i);
    rows.push_back(n);
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

Shape shape_from_rows(const CominData& c, const std::vector<int>& rows) {
  if (!c.has_rows()) throw std::invalid_argument("partition input is not available for " + c.name() + "; use boxes:i,j,...");
  if (static_cast<int>(rows.size()) > c.num_rows())
    throw std::invalid_argument("too many rows for " + c.name());
  BoxSet s;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    const auto& row = c.row_boxes(r + 1);
    if (rows[r] < 0 || rows[r] > static_cast<int>(row.size()))
      throw std::invalid_argument("row " + std::to_string(r + 1) + " length out of range");
    for (int k = 0; k < rows[r]; ++k) s.set(row[k]);
  }
  if (!c.poset().is_ideal(s)) throw std::invalid_argument("rows do not form an order ideal");
  return {s, c.size()};
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty entry in list '" + text + "'");
    item = item.substr(a, b - a + 1);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Shape parse_shape(const CominData& c, const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return ch == '(' || ch == ')' || ch == ' '; }), t.end());
  if (t.empty()) return c.empty_shape();
  if (t.rfind("boxes:", 0) == 0) {
    BoxSet s;
    std::string rest = t.substr(6);
    if (!rest.empty())
      for (int i : parse_int_list(rest)) {
        if (i < 0 || i >= c.size()) throw std::invalid_argument("box index out of range: " + std::to_string(i));
        s.set(i);
      }
    if (!c.poset().is_ideal(s)) throw std::invalid_argument("boxes do not form an order ideal");
    return {s, c.size()};
  }
  return shape_from_rows(c, parse_int_list(t));
}

std::string format_shape(const CominData& c, const Shape& s) {
  std::string out;
  if (c.has_rows()) {
    for (int r : shape_rows(c, s)) out += (out.empty() ? "" : ",") + std::to_string(r);
    return out;
  }
  out = "boxes:";
  bool first = true;
  s.boxes.for_each([&](int i) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  });
  return out;
}

std::vector<std::vector<int>> fiber_rows(const CominData& c, const FiberPoset& f, BoxSet fiber_shape,
                                         FiberSide side) {
  const auto& map = side == FiberSide::Kappa ? f.kappa_map : f.z_map;
  // Components are ordered by their smallest simple-root label, so both sides agree.
  struct Comp {
    int min_label = 1 << 20;
    std::vector<int> members;
  };
  std::vector<Comp> comps(f.num_components);
  for (int e = 0; e < f.size(); ++e) {
    Comp& k = comps[f.component[e]];
    k.min_label = std::min(k.min_label, f.labels[e]);
    k.members.push_back(e);
  }
  std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) { return a.min_label < b.min_label; });
  std::vector<std::vector<int>> out;
  for (const Comp& k : comps) {
    std::vector<int> rows;
    for (int e : k.members) rows.push_back(c.cell(map[e]).row);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<int> counts(rows.size(), 0);
    for (int e : k.members)
      if (fiber_shape.test(e)) {
        int r = c.cell(map[e]).row;
        counts[std::lower_bound(rows.begin(), rows.end(), r) - rows.begin()]++;
      }
    out.push_back(counts);
  }
  return out;
}

namespace {

std::string draw_grid(const CominData& c, const std::function<std::string(int)>& cell_text, int width) {
  std::vector<std::vector<int>> grid(c.num_rows(), std::vector<int>(c.num_cols(), -1));
  for (int i = 0; i < c.size(); ++i) grid[c.cell(i).row - 1][c.cell(i).col - 1] = i;
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (int i : row) line += i < 0 ? std::string(width, ' ') : cell_text(i);
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string render_poset(const CominData& c, BoxSet highlight) {
  return draw_grid(
      c,
      [&](int i) {
        std::string lab = std::to_string(c.label(i) + 1);
        if (lab.size() < 2) lab = " " + lab;
        return highlight.test(i) ? "[" + lab + "]" : " " + lab + " ";
      },
      4);
}

std::string render_shape(const CominData& c, BoxSet members) {
  return draw_grid(c, [&](int i) { return std::string(members.test(i) ? "# " : ". "); }, 2);
}

}  // namespace qcomin
