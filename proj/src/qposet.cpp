#include "qcomin/qposet.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qcomin/qdegrees.hpp"

namespace qcomin {

bool qclass_leq(const CominData& c, const QClass& a, const QClass& b) {
  if (a.d > b.d) return false;
  return a.u.boxes.subset_of(shift(c, b.u, b.d - a.d).boxes);
}

QClass qclass_meet(const CominData& c, const QClass& a, const QClass& b) {
  if (a.d > b.d) return qclass_meet(c, b, a);
  // a = (e, v), b = (d, u), e <= d
  return {a.d, meet(shift(c, b.u, b.d - a.d), a.u)};
}

QClass qclass_join(const CominData& c, const QClass& a, const QClass& b) {
  if (a.d > b.d) return qclass_join(c, b, a);
  return {b.d, join(shift(c, a.u, a.d - b.d), b.u)};
}

QClass point_product(const CominData& c, const Shape& v) {
  // The class X^{w_0^X v} is that of the coset w_0^X v W_X.
  WeylElement w = c.w0_upper_X() * shape_to_weyl(c, v);
  WeylElement rep = parabolic_factorize(w, c.excluded()).first;
  if (!is_min_coset_rep(rep, c.excluded())) throw OracleViolation("point product is not in W^X");
  return {dmax_point(c, v), weyl_to_shape(c, rep)};
}

bool qdeg_via_lattice(const CominData& c, const Shape& u, const Shape& v, int d) {
  if (d < 0) return false;
  QClass x{d, u};
  return qclass_leq(c, {0, v}, x) && qclass_leq(c, x, point_product(c, v));
}

BoxSet tau_boxes(const CominData& c) { return c.poset().all() - c.z_dual_set(std::min(1, c.diameter())); }

int partial_depth(const CominData& c, int box) {
  const BoxSet outside = tau_boxes(c);
  for (int d = 0; d <= c.size(); ++d)
    if (outside.test(c.rotate_pow(box, -d))) return d;
  throw std::logic_error("partial_depth: rotation orbit misses P_X \\ I(z_1^v)");
}

Shape xi(const CominData& c, int box) { return {c.below(box), c.size()}; }

QClass tau(const CominData& c, int box) {
  int p = partial_depth(c, box);
  return {-p, xi(c, c.rotate_pow(box, -p))};
}

QClass to_qclass(const CominData& c, const CylinderElement& x) {
  if (x.kind == CylinderElement::Kind::PureQ) return {x.d, c.empty_shape()};
  return {x.d, xi(c, x.box)};
}

int CylinderWindow::index_of(const CylinderElement& x) const {
  auto it = std::find(elements.begin(), elements.end(), x);
  return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

CylinderWindow cylinder_window(const CominData& c, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("cylinder_window: empty window");
  CylinderWindow w;
  w.lo = lo;
  w.hi = hi;
  const BoxSet boxes = tau_boxes(c);
  for (int d = lo; d <= hi; ++d) {
    w.elements.push_back({CylinderElement::Kind::PureQ, d, -1});
    boxes.for_each([&](int b) { w.elements.push_back({CylinderElement::Kind::Tau, d, b}); });
  }
  const int n = static_cast<int>(w.elements.size());
  std::vector<QClass> q;
  for (const auto& x : w.elements) q.push_back(to_qclass(c, x));
  w.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.leq[i][j] = qclass_leq(c, q[i], q[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !w.leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && w.leq[i][k] && w.leq[k][j]) cover = false;
      if (cover) w.relations.push_back({i, j});
    }
  return w;
}

std::vector<int> ideal_of(const CominData& c, const QClass& a, const CylinderWindow& w) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(w.elements.size()); ++i)
    if (qclass_leq(c, to_qclass(c, w.elements[i]), a)) out.push_back(i);
  return out;
}

std::string render_cylinder(const CominData& c, const CylinderWindow& w) {
  const BoxSet boxes = tau_boxes(c);
  // tau(P_X) lies at shifts -partial_depth; record which (d, box) pairs it hits.
  std::vector<std::pair<int, int>> image;
  for (int b = 0; b < c.size(); ++b) {
    QClass t = tau(c, b);
    image.push_back({t.d, c.rotate_pow(b, t.d)});
  }
  std::ostringstream os;
  for (int d = w.hi; d >= w.lo; --d) {
    os << "q^" << d << "\n";
    std::vector<std::string> grid(c.num_rows(), std::string(2 * c.num_cols(), ' '));
    for (int b = 0; b < c.size(); ++b) {
      char ch = '.';
      if (boxes.test(b)) {
        ch = 'o';
        if (std::find(image.begin(), image.end(), std::make_pair(d, b)) != image.end()) ch = '#';
      }
      grid[c.cell(b).row - 1][2 * (c.cell(b).col - 1)] = ch;
    }
    for (auto& line : grid) {
      line.erase(line.find_last_not_of(' ') + 1);
      os << "  " << line << "\n";
    }
  }
  return os.str();
}

}  // namespace qcomin
