#include "qcomin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "qcomin/qdegrees.hpp"
#include "qcomin/qposet.hpp"
#include "qcomin/space.hpp"
#include "qcomin/tableaux.hpp"

namespace qcomin {

namespace {

constexpr double kSuiteLimitSeconds = 60.0;

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::vector<int> trim(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

template <class... Args>
void note(std::string& detail, Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  if (!detail.empty()) detail += "; ";
  detail += os.str();
}

std::vector<std::string> minuscule_spaces() {
  return {"grassmannian 2 5", "grassmannian 3 6", "orthogonal 5", "quadric 6", "cayley"};
}

std::vector<std::string> cross_check_spaces() {
  std::vector<std::string> s = {"lagrangian 4", "lagrangian 3", "quadric 5"};
  for (int n = 4; n <= 8; ++n) s.push_back("quadric " + std::to_string(2 * n - 1));
  for (const auto& m : minuscule_spaces()) s.push_back(m);
  return s;
}

// ---- numbered criteria ----

bool check_census(std::string& detail) {
  static const std::int64_t kTable[][2] = {{10, 1},       {36, 3},        {136, 17},      {528, 70},     {2080, 313},
                                           {8256, 1317}, {32896, 5590}, {131328, 23310}, {524800, 96932}};
  bool ok = true;
  for (int n = 2; n <= 10; ++n) {
    auto c = build_space("lagrangian " + std::to_string(n));
    CensusResult r = census(*c, 1);
    bool good = r.total == kTable[n - 2][0] && r.exceptional == kTable[n - 2][1] &&
                r.total == r.ideals * (r.ideals + 1) / 2;
    if (!good) note(detail, "LG(", n, ") got (", r.total, ",", r.exceptional, ")");
    ok = ok && good;
  }
  if (ok) note(detail, "LG(n,2n), n=2..10 match");
  return ok;
}

bool check_euler_lg3(std::string& detail) {
  auto c = build_space("lagrangian 3");
  auto e = euler_characteristic(*c, parse_shape(*c, "3,2"), parse_shape(*c, "2"), 2);
  WeightMultiset want;
  want.add({-2, -5, -3});
  want.add({-3, -5, -3});
  bool ok = e.sign == -1 && e.weights == want;
  note(detail, "sign ", e.sign, ", ", e.weights.total(), " weights");
  return ok;
}

bool check_degrees_lg4(std::string& detail) {
  auto c = build_space("lagrangian 4");
  Shape u = parse_shape(*c, "3"), v = parse_shape(*c, "4,3,1");
  int lo = d_min(*c, u, v), hi = d_max(*c, u, v);
  bool ok = lo == 2 && hi == 3;
  for (int d = 0; d <= 4; ++d) {
    bool want = d == 2 || d == 3;
    ok = ok && qdeg_via_lattice(*c, u, v, d) == want && qh_degree_occurs(*c, u, v, d) == want;
  }
  note(detail, "d_min=", lo, " d_max=", hi);
  return ok;
}

bool check_odd_quadrics(std::string& detail) {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    auto c = build_space("quadric " + std::to_string(2 * n - 1));
    const int middle = n - 1;
    auto shapes = all_shapes(*c);
    for (const auto& u : shapes)
      for (const auto& v : shapes) {
        auto ex = exceptional_degrees(*c, u, v);
        bool is_middle = (u.boxes - v.boxes) == BoxSet::single(middle);
        bool good = is_middle ? ex == std::vector<int>{1} : ex.empty();
        if (!good) note(detail, c->name(), " u=", format_shape(*c, u), " v=", format_shape(*c, v));
        ok = ok && good;
      }
  }
  if (ok) note(detail, "Q^5..Q^15 exhaustive");
  return ok;
}

bool check_profile_lg4(std::string& detail) {
  auto c = build_space("lagrangian 4");
  auto p = degree_profile(*c, parse_shape(*c, "4,2"), parse_shape(*c, "3,1"));
  note(detail, "QH {", join_ints(p.qh_degrees), "} QK [", p.qk_interval.first, ",", p.qk_interval.second, "]");
  return p.qh_degrees == std::vector<int>{0, 1} && p.qk_interval == std::make_pair(0, 2) && p.exceptional == 2 &&
         p.status == ExceptionalStatus::PresentVerified;
}

bool check_minuscule(std::string& detail) {
  bool ok = true;
  std::int64_t pairs = 0;
  for (const auto& name : minuscule_spaces()) {
    auto c = build_space(name);
    auto shapes = all_shapes(*c);
    for (const auto& u : shapes)
      for (const auto& v : shapes) {
        auto p = degree_profile(*c, u, v);
        ++pairs;
        bool good = !p.exceptional && p.qk_interval == std::make_pair(p.d_min, p.d_max);
        if (!good) note(detail, c->name(), " u=", format_shape(*c, u), " v=", format_shape(*c, v));
        ok = ok && good;
      }
  }
  note(detail, pairs, " pairs");
  return ok;
}

bool check_cross_formula(std::string& detail) {
  bool ok = true;
  std::int64_t pairs = 0;
  for (const auto& name : cross_check_spaces()) {
    auto c = build_space(name);
    auto shapes = all_shapes(*c);
    for (const auto& u : shapes)
      for (const auto& v : shapes) {
        ++pairs;
        bool good = d_max_formula(*c, u, v) == d_max_scan(*c, u, v);
        for (int d = 0; d <= c->diameter() + 1; ++d)
          good = good && qdeg_via_lattice(*c, u, v, d) == qh_degree_occurs(*c, u, v, d);
        if (!good) note(detail, c->name(), " u=", format_shape(*c, u), " v=", format_shape(*c, v));
        ok = ok && good;
      }
  }
  note(detail, pairs, " pairs");
  return ok;
}

bool check_fiber_recursion(std::string& detail) {
  bool ok = true;
  std::int64_t n = 0;
  for (const std::string name : {"lagrangian 4", "grassmannian 3 7"}) {
    auto c = build_space(name);
    auto shapes = all_shapes(*c);
    for (const auto& u : shapes)
      for (const auto& v : shapes)
        for (int d = 1; d <= c->diameter(); ++d) {
          auto [ud, vd] = fiber_elements(*c, u, v, d);
          Shape ud1 = c->empty_shape(), vd1 = c->empty_shape();
          if (d > 1) {
            auto [a, b] = fiber_elements(*c, u, v, d - 1);
            ud1 = fiber_times_kappa(*c, a, d - 1);
            vd1 = fiber_times_kappa(*c, b, d - 1);
          }
          Shape lhs_u = shift(*c, fiber_times_kappa(*c, ud, d), -1);
          Shape lhs_v = meet(fiber_times_kappa(*c, vd, d), {c->z_set(d - 1), c->size()});
          const bool u_valid = d <= d_max(*c, c->empty_shape(), dual_shape(*c, u));
          const bool v_valid = d <= d_max(*c, c->empty_shape(), v);
          if (!u_valid && !v_valid) continue;
          ++n;
          bool good = (!u_valid || ud1 == lhs_u) && (!v_valid || vd1 == lhs_v);
          if (!good) note(detail, c->name(), " d=", d, " u=", format_shape(*c, u), " v=", format_shape(*c, v));
          ok = ok && good;
        }
  }
  note(detail, n, " (u,v,d) triples");
  return ok;
}

int pairing_oracle(const CominData& c) {
  const RootVector g = c.rs().simple_root(c.gamma());
  int s = 0;
  for (const auto& a : c.boxes()) s += c.rs().pair_with_coroot(a, g);
  return s;
}

bool check_deg_q(std::string& detail) {
  struct Case {
    std::string space;
    int want;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= 9; ++n)
    for (int m = 1; m < n; ++m)
      cases.push_back({"grassmannian " + std::to_string(m) + " " + std::to_string(n), n});
  for (int n = 2; n <= 9; ++n) cases.push_back({"lagrangian " + std::to_string(n), n + 1});
  for (int n = 3; n <= 9; ++n) cases.push_back({"orthogonal " + std::to_string(n), 2 * n - 2});
  for (int N = 3; N <= 16; ++N) cases.push_back({"quadric " + std::to_string(N), N});
  cases.push_back({"cayley", 12});
  cases.push_back({"freudenthal", 18});
  bool ok = true;
  for (const auto& k : cases) {
    auto c = build_space(k.space);
    int a = deg_q(*c), b = pairing_oracle(*c);
    if (a != k.want || b != k.want) {
      note(detail, k.space, ": l(z1)+1=", a, " oracle=", b, " want ", k.want);
      ok = false;
    }
  }
  if (ok) note(detail, cases.size(), " spaces");
  return ok;
}

// ---- property suites ----

bool suite_tableau_oracle(std::string& detail) {
  std::int64_t skews = 0;
  bool ok = true;
  for (const std::string name : {"lagrangian 3", "quadric 7", "grassmannian 2 5", "lagrangian 4"}) {
    auto c = build_space(name);
    auto shapes = all_shapes(*c);
    for (const auto& u : shapes)
      for (const auto& v : shapes) {
        if (!v.boxes.subset_of(u.boxes) || u.size() - v.size() > 8) continue;
        for (int a : {0, 1})
          for (int m : {1, 2, 3}) {
            if (m == 3 && u.size() - v.size() > 5) continue;  // the naive oracle is exponential in the skew size
            auto fast = enumerate_tableaux(*c, u, v, HalfInt{a}, HalfInt::from_int(m));
            auto slow = enumerate_tableaux_naive(c->poset(), u.boxes, v.boxes, HalfInt{a}, HalfInt::from_int(m));
            std::sort(fast.begin(), fast.end());
            std::sort(slow.begin(), slow.end());
            ++skews;
            if (fast != slow) {
              note(detail, c->name(), " u=", format_shape(*c, u), " v=", format_shape(*c, v), " a=", a, "/2 m=", m);
              ok = false;
            }
          }
      }
  }
  note(detail, skews, " skew/range cases");
  return ok;
}

bool suite_tableau_recursion(std::string& detail) {
  std::mt19937_64 rng(20240601);
  bool ok = true;
  int cases = 0;
  for (const std::string name : {"lagrangian 3", "quadric 7"}) {
    auto c = build_space(name);
    auto shapes = all_shapes(*c);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    for (int iter = 0; iter < 150; ++iter) {
      Shape u = shapes[pick(rng)], v = shapes[pick(rng)];
      if (!v.boxes.subset_of(u.boxes)) std::swap(u, v);
      if (!v.boxes.subset_of(u.boxes)) v = meet(u, v);
      int a = static_cast<int>(rng() % 2);
      int m = 1 + static_cast<int>(rng() % 2);
      int p = static_cast<int>(rng() % 3);
      WeightMultiset lhs = representation(*c, u, v, HalfInt{a}, m + p);
      WeightMultiset rhs;
      for (const auto& w : shapes)
        if (v.boxes.subset_of(w.boxes) && w.boxes.subset_of(u.boxes))
          rhs.add_all(tensor(representation(*c, w, v, HalfInt{0}, p), representation(*c, u, w, HalfInt{a}, m)));
      ++cases;
      if (!(lhs == rhs)) {
        note(detail, c->name(), " u=", format_shape(*c, u), " v=", format_shape(*c, v), " a=", a, "/2 m=", m,
             " p=", p);
        ok = false;
      }
      // Rook-strip decomposition of C^u_{v,[0,m)}.
      WeightMultiset zero = representation(*c, u, v, HalfInt{0}, m), strips;
      for (const auto& w : shapes)
        if (v.boxes.subset_of(w.boxes) && w.boxes.subset_of(u.boxes) && is_rook_strip(*c, u, w, false))
          strips.add_all(representation(*c, w, v, HalfInt{1}, m));
      if (!(zero == strips)) {
        note(detail, "rook strips: ", c->name(), " u=", format_shape(*c, u), " v=", format_shape(*c, v));
        ok = false;
      }
    }
  }
  note(detail, cases, " random cases");
  return ok;
}

bool lattice_laws_hold(const CominData& c, const QClass& a, const QClass& b, const QClass& x) {
  auto J = [&](const QClass& p, const QClass& q) { return qclass_join(c, p, q); };
  auto M = [&](const QClass& p, const QClass& q) { return qclass_meet(c, p, q); };
  bool ok = J(a, a) == a && M(a, a) == a;
  ok = ok && J(a, b) == J(b, a) && M(a, b) == M(b, a);
  ok = ok && J(a, M(a, b)) == a && M(a, J(a, b)) == a;
  ok = ok && M(a, J(b, x)) == J(M(a, b), M(a, x));
  ok = ok && J(a, M(b, x)) == M(J(a, b), J(a, x));
  QClass j = J(a, b), m = M(a, b);
  ok = ok && qclass_leq(c, a, j) && qclass_leq(c, b, j) && qclass_leq(c, m, a) && qclass_leq(c, m, b);
  // least upper bound / greatest lower bound against the third element
  if (qclass_leq(c, a, x) && qclass_leq(c, b, x)) ok = ok && qclass_leq(c, j, x);
  if (qclass_leq(c, x, a) && qclass_leq(c, x, b)) ok = ok && qclass_leq(c, x, m);
  return ok;
}

bool suite_lattice_laws(std::string& detail) {
  bool ok = true;
  std::int64_t triples = 0;
  for (const std::string name : {"quadric 5", "grassmannian 2 4", "lagrangian 2"}) {
    auto c = build_space(name);
    std::vector<QClass> els;
    for (int d = -1; d <= 1; ++d)
      for (const auto& s : all_shapes(*c)) els.push_back({d, s});
    for (const auto& a : els)
      for (const auto& b : els)
        for (const auto& x : els) {
          ++triples;
          if (!lattice_laws_hold(*c, a, b, x)) {
            ok = false;
            note(detail, c->name(), " counterexample");
          }
        }
  }
  std::mt19937_64 rng(7);
  for (const std::string name : {"lagrangian 6", "grassmannian 3 6", "lagrangian 4"}) {
    auto c = build_space(name);
    auto shapes = all_shapes(*c);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    std::uniform_int_distribution<int> deg(-3, 3);
    for (int i = 0; i < 4000; ++i) {
      QClass a{deg(rng), shapes[pick(rng)]}, b{deg(rng), shapes[pick(rng)]}, x{deg(rng), shapes[pick(rng)]};
      ++triples;
      if (!lattice_laws_hold(*c, a, b, x)) {
        ok = false;
        note(detail, c->name(), " counterexample");
      }
    }
  }
  note(detail, triples, " triples");
  return ok;
}

bool suite_hecke(std::string& detail) {
  std::mt19937_64 rng(11);
  bool ok = true;
  int n = 0;
  for (const std::string t : {"A3", "B3", "C3"}) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(CartanType::parse(t)));
    auto random_element = [&]() {
      std::vector<int> w(rng() % 10);
      for (int& x : w) x = static_cast<int>(rng() % 3);
      return WeylElement::from_word(rs, w);
    };
    for (int i = 0; i < 2000; ++i) {
      WeylElement a = random_element(), b = random_element(), x = random_element();
      ++n;
      if (!(hecke_product(hecke_product(a, b), x) == hecke_product(a, hecke_product(b, x)))) {
        ok = false;
        note(detail, t, " counterexample");
      }
    }
  }
  note(detail, n, " random triples");
  return ok;
}

bool suite_semi_transversal(std::string& detail) {
  auto c = build_space("lagrangian 3");
  auto shapes = all_shapes(*c);
  bool ok = true;
  int n = 0;
  for (const auto& us : shapes)
    for (const auto& zs : shapes) {
      WeylElement u = shape_to_weyl(*c, us), z = shape_to_weyl(*c, zs);
      WeylElement k = semi_transversal_kappa(u, z, c->excluded()).kappa;
      WeylElement lhs = k * z * c->w0_X();
      WeylElement rhs = shape_to_weyl(*c, meet(us, dual_shape(*c, zs)));
      ++n;
      if (!(lhs == rhs)) {
        ok = false;
        note(detail, "u=", format_shape(*c, us), " z=", format_shape(*c, zs));
      }
    }
  note(detail, n, " pairs");
  return ok;
}

bool check_properties(std::string& detail) {
  bool ok = true;
  for (const auto& s : property_checks()) {
    CheckResult r = run_check(s);
    bool good = r.pass && r.seconds < kSuiteLimitSeconds;
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s.title << " " << (good ? "ok" : "FAILED") << " (" << r.seconds << " s)";
    if (!r.pass) os << " [" << r.detail << "]";
    note(detail, os.str());
    ok = ok && good;
  }
  return ok;
}

// ---- worked examples ----

bool example_shifts(std::string& detail) {
  auto c = build_space("lagrangian 8");
  Shape u = parse_shape(*c, "8,6,2");
  std::vector<std::pair<int, std::string>> want = {{-2, "2"}, {-1, "6,2"}, {1, "8,7,6,2"}, {2, "8,7,6,5,2"}};
  bool ok = true;
  for (auto& [d, s] : want) ok = ok && shift(*c, u, d) == parse_shape(*c, s);
  Shape v = dual_shape(*c, u);
  ok = ok && v == parse_shape(*c, "7,5,4,3,1");
  ok = ok && shift(*c, u, 5) == c->full_shape() && shift(*c, v, -5) == c->empty_shape();
  auto [ud, vd] = fiber_elements(*c, u, v, 5);
  const FiberPoset& f = c->fiber(5);
  auto zr = fiber_rows(*c, f, ud.boxes, FiberSide::Z);
  auto kr = fiber_rows(*c, f, vd.boxes, FiberSide::Kappa);
  ok = ok && zr.size() == 1 && trim(zr[0]) == std::vector<int>{5, 4, 1};
  ok = ok && kr.size() == 1 && trim(kr[0]) == std::vector<int>{2, 1, 1, 1};
  ok = ok && f.dual(ud.boxes) == vd.boxes;
  note(detail, "LG(8,16) shifts, dual and fiber shapes");
  return ok;
}

bool example_gr_fiber(std::string& detail) {
  auto c = build_space("grassmannian 7 17");
  Shape u = parse_shape(*c, "10,8,5,5,4,1,0");
  auto [ud, vd] = fiber_elements(*c, u, c->empty_shape(), 4);
  auto rows = fiber_rows(*c, c->fiber(4), ud.boxes, FiberSide::Z);
  note(detail, "Gr(7,17) d=4 fiber has ", c->fiber(4).num_components, " components");
  return rows == std::vector<std::vector<int>>{{4, 2, 0}, {5, 4, 1, 0}};
}

bool example_kappa_z(std::string& detail) {
  auto c = build_space("grassmannian 4 9");
  auto [k, z] = kappa_z(*c, 2);
  note(detail, "Gr(4,9) kappa_2=", format_shape(*c, k), " z_2=", format_shape(*c, z));
  return k == parse_shape(*c, "2,2") && z == parse_shape(*c, "5,5,2,2");
}

bool example_layouts(std::string& detail) {
  struct Case {
    std::string space;
    std::vector<std::vector<int>> rows;  // labels of each layout row
  };
  std::vector<Case> cases = {
      {"grassmannian 3 7", {{3, 4, 5, 6}, {2, 3, 4, 5}, {1, 2, 3, 4}}},
      {"orthogonal 6", {{6, 4, 3, 2, 1}, {5, 4, 3, 2}, {6, 4, 3}, {5, 4}, {6}}},
      {"lagrangian 6", {{6, 5, 4, 3, 2, 1}, {6, 5, 4, 3, 2}, {6, 5, 4, 3}, {6, 5, 4}, {6, 5}, {6}}},
      {"cayley", {{6, 5, 4, 2}, {3, 4, 5, 6}, {1, 3, 4, 5}, {2, 4, 3, 1}}},
      {"quadric 10", {{1, 2, 3, 4, 5}, {6, 4, 3, 2, 1}}},
      {"quadric 11", {{1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1}}},
      {"freudenthal",
       {{7, 6, 5, 4, 3, 1}, {2, 4, 3}, {5, 4, 2}, {6, 5, 4, 3, 1}, {7, 6, 5, 4, 3}, {2, 4}, {5}, {6}, {7}}},
  };
  bool ok = true;
  for (const auto& k : cases) {
    auto c = build_space(k.space);
    std::vector<std::vector<int>> got;
    for (int r = 1; r <= c->num_rows(); ++r) {
      std::vector<int> labels;
      for (int b : c->row_boxes(r)) labels.push_back(c->label(b) + 1);
      got.push_back(labels);
    }
    if (got != k.rows) {
      ok = false;
      note(detail, k.space, " labels differ");
    }
  }
  auto e7 = build_space("freudenthal");
  ok = ok && e7->size() == 27;
  if (ok) note(detail, cases.size(), " posets");
  return ok;
}

bool example_delta_words(std::string& detail) {
  auto c = build_space("lagrangian 3");
  auto rs = c->rs_ptr();
  bool ok = delta_word(*c, parse_shape(*c, "2")) == std::vector<int>{1, 2};
  ok = ok && WeylElement::from_word(rs, delta_word(*c, parse_shape(*c, "3,2"))) ==
                 WeylElement::from_word(rs, {1, 2, 0, 1, 2});
  ok = ok && !is_cohomologically_trivial(*c, parse_shape(*c, "3,2"), parse_shape(*c, "2"), 2);
  note(detail, "LG(3,6) words s2s3 and s2s3s1s2s3");
  return ok;
}

bool example_quadric_qh(std::string& detail) {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    auto c = build_space("quadric " + std::to_string(2 * n - 1));
    // [X^{n-1}] * [X^{n-1}]: u is the dual of the (n-1)-box ideal.
    Shape a = c->make_shape(BoxSet::prefix(n - 1));
    Shape u = dual_shape(*c, a);
    ok = ok && !qh_degree_occurs(*c, u, a, 1) && qh_degree_occurs(*c, u, a, 0);
    auto p = degree_profile(*c, u, a);
    ok = ok && p.exceptional == 1 && p.status == ExceptionalStatus::PresentVerified;
  }
  note(detail, "O^{n-1} * O^{n-1} on Q^{2n-1}, n=3..8");
  return ok;
}

bool example_cylinder(std::string& detail) {
  bool ok = true;
  for (const std::string name : {"lagrangian 4", "orthogonal 6", "quadric 10", "freudenthal"}) {
    auto c = build_space(name);
    const int D = c->diameter();
    int gamma_box = c->tilde_alpha(1);
    int rho = c->size() - 1;
    ok = ok && tau(*c, gamma_box) == QClass{1 - D, {c->kappa_set(D), c->size()}};
    ok = ok && tau(*c, rho) == QClass{0, c->full_shape()};
    for (int a = 0; a < c->size(); ++a)
      for (int b = 0; b < c->size(); ++b) ok = ok && qclass_leq(*c, tau(*c, a), tau(*c, b)) == c->leq(a, b);
  }
  note(detail, "tau(gamma), tau(rho) and order embedding");
  return ok;
}

bool example_point_product(std::string& detail) {
  auto c = build_space("lagrangian 4");
  bool ok = point_product(*c, c->empty_shape()) == QClass{0, c->full_shape()};
  QClass p = point_product(*c, parse_shape(*c, "4,3,1"));
  // The product sits in degree 3 and lies above q^3 [X^(3)].
  ok = ok && p.d == 3 && qclass_leq(*c, {3, parse_shape(*c, "3")}, p) && !qclass_leq(*c, {4, parse_shape(*c, "3")}, p);
  note(detail, "LG(4,8) point * X^(4,3,1) = q^", p.d, " [X^(", format_shape(*c, p.u), ")]");
  return ok;
}

bool example_px_order(std::string& detail) {
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(CartanType::parse("A4")));
  WeylElement v = WeylElement::from_word(rs, {2});
  WeylElement u = WeylElement::from_word(rs, {2, 1, 0, 3, 2, 1, 2});
  note(detail, "A4, W_X=<s4>");
  return px_bruhat_leq(v, u, {0, 1, 2});
}

}  // namespace

std::vector<Check> acceptance_checks() {
  return {
      {"1", "exceptional-degree census for LG(n,2n), n=2..10", check_census},
      {"2", "Euler characteristic on LG(3,6)", check_euler_lg3},
      {"3", "q-degree interval on LG(4,8)", check_degrees_lg4},
      {"4", "exceptional degrees on odd quadrics", check_odd_quadrics},
      {"5", "quantum K degree profile on LG(4,8)", check_profile_lg4},
      {"6", "minuscule spaces have no exceptional degrees", check_minuscule},
      {"7", "d_max formula vs scan and lattice vs fiber test", check_cross_formula},
      {"8", "fiber recursion identities on LG(4,8) and Gr(3,7)", check_fiber_recursion},
      {"9", "degree of q", check_deg_q},
      {"10", "property suites", check_properties},
  };
}

std::vector<Check> property_checks() {
  return {
      {"P1", "tableau enumeration oracle", suite_tableau_oracle},
      {"P2", "tableau recursion", suite_tableau_recursion},
      {"P3", "lattice laws", suite_lattice_laws},
      {"P4", "Hecke associativity", suite_hecke},
      {"P5", "semi-transversal identity on LG(3,6)", suite_semi_transversal},
  };
}

std::vector<Check> example_checks() {
  return {
      {"E1", "LG(8,16) shifts and fiber shapes", example_shifts},
      {"E2", "Gr(7,17) fiber shapes", example_gr_fiber},
      {"E3", "kappa_2 and z_2 on Gr(4,9)", example_kappa_z},
      {"E4", "labelled posets", example_layouts},
      {"E5", "delta words on LG(3,6)", example_delta_words},
      {"E6", "quadric products", example_quadric_qh},
      {"E7", "cylinder embedding", example_cylinder},
      {"E8", "point product on LG(4,8)", example_point_product},
      {"E9", "P_X-Bruhat order example in A4", example_px_order},
  };
}

CheckResult run_check(const Check& c) {
  CheckResult r{c.id, c.title, false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = c.run(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " (" << r.seconds << " s)";
  if (!r.detail.empty()) os << " -- " << r.detail;
  return os.str();
}

}  // namespace qcomin
