#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcomin/comin.hpp"

namespace qcomin {

// The element q^d [X^u] of the lattice B.
struct QClass {
  int d = 0;
  Shape u;
  bool operator==(const QClass&) const = default;
};

bool qclass_leq(const CominData& c, const QClass& a, const QClass& b);
QClass qclass_meet(const CominData& c, const QClass& a, const QClass& b);
QClass qclass_join(const CominData& c, const QClass& a, const QClass& b);

// [point] * [X^v] = q^{d_max(v)} [X^{w_0^X v}].
QClass point_product(const CominData& c, const Shape& v);
// [X^v] <= q^d [X^u] <= [point] * [X^v].
bool qdeg_via_lattice(const CominData& c, const Shape& u, const Shape& v, int d);

int partial_depth(const CominData& c, int box);
Shape xi(const CominData& c, int box);
QClass tau(const CominData& c, int box);

struct CylinderElement {
  enum class Kind { PureQ, Tau };
  Kind kind = Kind::PureQ;
  int d = 0;
  int box = -1;  // Tau only; a box outside I(z_1^v)
  bool operator==(const CylinderElement&) const = default;
};

QClass to_qclass(const CominData& c, const CylinderElement& x);

// Join-irreducibles of B with shift in [lo, hi].
struct CylinderWindow {
  int lo = 0;
  int hi = 0;
  std::vector<CylinderElement> elements;
  std::vector<std::vector<bool>> leq;           // leq[i][j]: element i <= element j
  std::vector<std::pair<int, int>> relations;   // covering relations
  int index_of(const CylinderElement& x) const;
};

CylinderWindow cylinder_window(const CominData& c, int lo, int hi);
// Window elements below a (the window truncation of its ideal).
std::vector<int> ideal_of(const CominData& c, const QClass& a, const CylinderWindow& w);
// Boxes outside I(z_1^v), the Tau boxes.
BoxSet tau_boxes(const CominData& c);
// One P_X-shaped slice per degree; 'o' marks join-irreducibles, '#' those in tau(P_X).
std::string render_cylinder(const CominData& c, const CylinderWindow& w);

}  // namespace qcomin
