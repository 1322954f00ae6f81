#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qcomin/boxset.hpp"
#include "qcomin/root_system.hpp"
#include "qcomin/weyl.hpp"

namespace qcomin {

// A finite poset on indices 0..n-1 listed in a linear extension.
struct FinitePoset {
  std::vector<BoxSet> below;   // below[i] = {j : j <= i}, including i
  std::vector<bool> long_box;  // root length in the ambient root system

  int size() const { return static_cast<int>(below.size()); }
  bool leq(int i, int j) const { return below[j].test(i); }
  bool is_ideal(BoxSet s) const;
  bool is_antichain(BoxSet s) const;
  BoxSet all() const { return BoxSet::prefix(size()); }
};

// All lower order ideals, sorted by size then by member set.
std::vector<BoxSet> all_ideals(const FinitePoset& p);

// A lower order ideal of a fixed ambient poset.
struct Shape {
  BoxSet boxes;
  int universe = 0;

  int size() const { return boxes.count(); }
  bool contains(int i) const { return boxes.test(i); }
  bool operator==(const Shape&) const = default;
  bool operator<(const Shape& o) const { return boxes < o.boxes; }
};

// Layout position of a box, 1-based.
struct Cell {
  int row = 0;
  int col = 0;
};

class CominData;

// The poset I(z_d / kappa_d) together with its two embeddings into P_X.
struct FiberPoset {
  int d = 0;
  std::vector<RootVector> roots;
  FinitePoset poset;
  std::vector<int> labels;     // delta', 0-based simple index
  std::vector<int> kappa_map;  // eta -> box index of kappa_d . eta
  std::vector<int> z_map;      // eta -> box index of z_d . eta
  std::vector<int> component;  // connected component of each element
  int num_components = 0;
  BoxSet kappa_image;          // I(z_d) \ I(kappa_d)
  BoxSet z_image;              // I(kappa_d^v) \ I(z_d^v)

  int size() const { return static_cast<int>(roots.size()); }
  // Pull a set of P_X boxes back along one embedding.
  BoxSet pull_back_kappa(BoxSet px) const;
  BoxSet pull_back_z(BoxSet px) const;
  BoxSet push_kappa(BoxSet fiber) const;
  BoxSet push_z(BoxSet fiber) const;
  // Fiber dual: complement of the image under the order-reversing involution w_{0,F}.
  BoxSet dual(BoxSet s) const;

  std::vector<int> w0_involution;  // w_{0,F} on fiber boxes
};

enum class FiberSide { Kappa, Z };

class CominData {
 public:
  // gamma is 0-based.
  static std::shared_ptr<const CominData> build(CartanType type, int gamma);
  static std::vector<int> cominuscule_nodes(CartanType type);

  const RootSystem& rs() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& rs_ptr() const { return rs_; }
  int gamma() const { return gamma_; }
  std::string name() const;
  bool minuscule() const { return rs_->type().simply_laced(); }

  int size() const { return poset_.size(); }
  const FinitePoset& poset() const { return poset_; }
  const RootVector& box(int i) const { return boxes_[i]; }
  const std::vector<RootVector>& boxes() const { return boxes_; }
  int box_index(const RootVector& v) const;
  int label(int i) const { return labels_[i]; }
  bool is_long_box(int i) const { return poset_.long_box[i]; }
  bool leq(int i, int j) const { return poset_.leq(i, j); }
  BoxSet below(int i) const { return poset_.below[i]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  BoxSet short_boxes() const { return short_mask_; }

  int diameter() const { return static_cast<int>(tilde_.size()); }
  // The gamma-labelled box alpha~_d, 1 <= d <= diameter.
  int tilde_alpha(int d) const { return tilde_.at(d - 1); }
  BoxSet kappa_set(int d) const { return kappa_.at(d); }
  BoxSet z_set(int d) const { return z_.at(d); }
  BoxSet kappa_dual_set(int d) const { return kappa_dual_.at(d); }
  BoxSet z_dual_set(int d) const { return z_dual_.at(d); }

  int rotate(int i) const { return rot_[i]; }
  int rotate_inverse(int i) const { return rot_inv_[i]; }
  // rotation^k on a box, any integer k.
  int rotate_pow(int i, int k) const;
  // rotation^k applied to a set of boxes.
  BoxSet rotate_set(BoxSet s, int k) const;
  int w0x_box(int i) const { return w0x_boxes_[i]; }
  const std::vector<int>& rotation() const { return rot_; }
  const std::vector<int>& w0x_boxes() const { return w0x_boxes_; }

  const WeylElement& w0() const { return w0_; }
  const WeylElement& w0_X() const { return w0x_; }      // longest element of W_X
  const WeylElement& w0_upper_X() const { return w0_upper_; }  // w_0^X
  std::vector<int> excluded() const { return {gamma_}; }

  const FiberPoset& fiber(int d) const { return fibers_.at(d - 1); }

  bool has_rows() const { return row_input_; }
  const Cell& cell(int i) const { return cells_[i]; }
  int num_rows() const { return rows_; }
  int num_cols() const { return cols_; }
  // Box indices of a layout row, left to right.
  const std::vector<int>& row_boxes(int r) const { return row_boxes_.at(r - 1); }

  Shape empty_shape() const { return {BoxSet{}, size()}; }
  Shape full_shape() const { return {poset_.all(), size()}; }
  Shape make_shape(BoxSet s) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  int gamma_ = 0;
  std::vector<RootVector> boxes_;
  FinitePoset poset_;
  std::vector<int> labels_;
  std::vector<std::pair<int, int>> covers_;
  BoxSet short_mask_;
  std::vector<int> tilde_;
  std::vector<BoxSet> kappa_, z_, kappa_dual_, z_dual_;
  std::vector<int> rot_, rot_inv_, w0x_boxes_;
  std::vector<std::vector<int>> rot_pos_, rot_neg_;  // rot_pos_[k][i] = rot^k(i), 0 <= k <= period
  int period_ = 1;
  WeylElement w0_, w0x_, w0_upper_;
  std::vector<FiberPoset> fibers_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> row_boxes_;
  int rows_ = 0, cols_ = 0;
  bool row_input_ = false;

  void build_layout();
  FiberPoset build_fiber(int d) const;
};

using CominPtr = std::shared_ptr<const CominData>;

CominPtr build_comin(CartanType type, int gamma);

WeylElement shape_to_weyl(const CominData& c, const Shape& s);
// Ideal of a minimal coset representative; throws if w is not in W^X.
Shape weyl_to_shape(const CominData& c, const WeylElement& w);
// Reduced word s_{delta(a_l)} ... s_{delta(a_1)} of the skew outer \ inner.
std::vector<int> delta_word(const CominData& c, const Shape& outer, const Shape& inner);
std::vector<int> delta_word(const CominData& c, const Shape& s);
std::pair<Shape, Shape> kappa_z(const CominData& c, int d);
int diameter(const CominData& c);
Shape dual_shape(const CominData& c, const Shape& s);
Shape join(const Shape& s, const Shape& t);
Shape meet(const Shape& s, const Shape& t);
bool is_rook_strip(const CominData& c, const Shape& outer, const Shape& inner, bool require_short);
const FiberPoset& fiber_poset(const CominData& c, int d);
int deg_q(const CominData& c);
std::vector<Shape> all_shapes(const CominData& c);
bool is_primitive(const CominData& c);

// Row lengths of a shape along the layout; trailing zeros dropped.
std::vector<int> shape_rows(const CominData& c, const Shape& s);
Shape shape_from_rows(const CominData& c, const std::vector<int>& rows);
// "" (empty), "3,2" (rows) or "boxes:0,1,4" (box indices).
Shape parse_shape(const CominData& c, const std::string& text);
std::string format_shape(const CominData& c, const Shape& s);

// Per component row counts of a fiber shape, read on one embedding side.
std::vector<std::vector<int>> fiber_rows(const CominData& c, const FiberPoset& f, BoxSet fiber_shape,
                                         FiberSide side);

// Table-style drawing of P_X with labels; highlighted boxes are bracketed.
std::string render_poset(const CominData& c, BoxSet highlight);
// Drawing of a shape: '#' for members, '.' for other boxes.
std::string render_shape(const CominData& c, BoxSet members);

}  // namespace qcomin
