// Command-line front end for the cominuscule q-degree library.

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcomin/json_io.hpp"
#include "qcomin/space.hpp"
#include "qcomin/verify.hpp"

using namespace qcomin;

namespace {

struct Options {
  std::vector<std::string> space_words;
  std::string space;
  std::string u, v;
  int d = 0;
  int m = 1;
  bool json = false;
  int threads = 1;
  int lo = 0, hi = 0;
  bool lo_set = false, hi_set = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

CominPtr resolve_space(const Options& o) {
  if (!o.space.empty() && !o.space_words.empty()) throw UsageError("give the space either positionally or with --space");
  if (!o.space.empty()) return build_space(o.space);
  if (o.space_words.empty()) throw UsageError("no space given");
  return build_space(parse_space(o.space_words));
}

std::string fmt(const CominData& c, const Shape& s) { return "(" + format_shape(c, s) + ")"; }

std::string weight_str(const RootVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

void print_multiset(const WeightMultiset& w, const std::string& indent) {
  if (w.empty()) {
    std::cout << indent << "(empty)\n";
    return;
  }
  for (const auto& [weight, mult] : w.entries()) std::cout << indent << mult << " x " << weight_str(weight) << "\n";
}

int cmd_poset(const Options& o) {
  auto c = resolve_space(o);
  if (o.json) {
    std::cout << poset_json(*c).dump(2) << "\n";
    return 0;
  }
  std::cout << c->name() << ": " << c->size() << " boxes, I(z_1) highlighted\n";
  std::cout << render_poset(*c, c->z_set(1));
  return 0;
}

int cmd_degrees(const Options& o) {
  auto c = resolve_space(o);
  Shape u = parse_shape(*c, o.u), v = parse_shape(*c, o.v);
  DegreeProfile p = degree_profile(*c, u, v);
  if (o.json) {
    std::cout << to_json(p).dump(2) << "\n";
    return 0;
  }
  std::cout << c->name() << "  u=" << fmt(*c, u) << "  v=" << fmt(*c, v) << "\n";
  std::cout << "QH degrees: [" << p.d_min << "," << p.d_max << "]";
  std::cout << "  occurring: {";
  for (std::size_t i = 0; i < p.qh_degrees.size(); ++i) std::cout << (i ? "," : "") << p.qh_degrees[i];
  std::cout << "}\n";
  std::cout << "QK interval: [" << p.qk_interval.first << "," << p.qk_interval.second << "]\n";
  std::cout << "exceptional: ";
  if (p.exceptional)
    std::cout << *p.exceptional;
  else
    std::cout << "none";
  std::cout << " (" << to_string(p.status) << ")\n";
  return 0;
}

int cmd_census(const Options& o) {
  auto c = resolve_space(o);
  CensusResult r = census(*c, o.threads);
  const bool self_check = r.total == r.ideals * (r.ideals + 1) / 2;
  if (o.json) {
    Json j = {{"space", c->name()},
              {"ideals", r.ideals},
              {"total", r.total},
              {"exceptional", r.exceptional},
              {"self_check", self_check}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << c->name() << ": " << r.total << " pairs, " << r.exceptional << " with an exceptional degree\n";
    std::cout << "self-check: N=" << r.ideals << ", N(N+1)/2=" << r.ideals * (r.ideals + 1) / 2 << " "
              << (self_check ? "ok" : "MISMATCH") << "\n";
  }
  return self_check ? 0 : 2;
}

int cmd_euler(const Options& o) {
  auto c = resolve_space(o);
  Shape u = parse_shape(*c, o.u), v = parse_shape(*c, o.v);
  SignedMultiset e = euler_characteristic(*c, u, v, o.m);
  if (o.json) {
    std::cout << Json{{"sign", e.sign}, {"weights", to_json(e.weights)}}.dump(2) << "\n";
    return 0;
  }
  std::cout << c->name() << "  u=" << fmt(*c, u) << "  v=" << fmt(*c, v) << "  m=" << o.m << "\n";
  std::cout << "sign " << (e.sign > 0 ? "+1" : "-1") << ", weights (simple root coordinates):\n";
  print_multiset(e.weights, "  ");
  return 0;
}

int cmd_chevalley(const Options& o) {
  auto c = resolve_space(o);
  Shape v = parse_shape(*c, o.v);
  auto terms = chevalley_power(*c, v, o.m);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& [u, e] : terms)
      arr.push_back({{"u", to_json(*c, u)}, {"sign", e.sign}, {"weights", to_json(e.weights)}});
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::cout << c->name() << "  v=" << fmt(*c, v) << "  m=" << o.m << "\n";
  for (const auto& [u, e] : terms) {
    std::cout << "O^" << fmt(*c, u) << "  sign " << (e.sign > 0 ? "+1" : "-1") << "\n";
    print_multiset(e.weights, "  ");
  }
  return 0;
}

int cmd_cylinder(const Options& o) {
  auto c = resolve_space(o);
  int lo = o.lo_set ? o.lo : -c->diameter();
  int hi = o.hi_set ? o.hi : 0;
  if (lo > hi) throw UsageError("--lo must not exceed --hi");
  CylinderWindow w = cylinder_window(*c, lo, hi);
  if (o.json) {
    std::cout << cylinder_json(*c, w).dump(2) << "\n";
    return 0;
  }
  std::cout << c->name() << ": join-irreducibles with degree in [" << lo << "," << hi << "], " << w.elements.size()
            << " elements, " << w.relations.size() << " covers\n";
  std::cout << render_cylinder(*c, w);
  return 0;
}

int cmd_shift(const Options& o) {
  auto c = resolve_space(o);
  Shape u = parse_shape(*c, o.u);
  Shape s = shift(*c, u, o.d);
  if (o.json) {
    std::cout << to_json(*c, s).dump(2) << "\n";
    return 0;
  }
  std::cout << fmt(*c, u) << "(" << o.d << ") = " << fmt(*c, s) << "\n";
  return 0;
}

int cmd_fiber(const Options& o) {
  auto c = resolve_space(o);
  if (o.d < 1 || o.d > c->diameter())
    throw UsageError("--d must lie in [1," + std::to_string(c->diameter()) + "]");
  Shape u = parse_shape(*c, o.u), v = parse_shape(*c, o.v);
  const FiberPoset& f = c->fiber(o.d);
  auto [ud, vd] = fiber_elements(*c, u, v, o.d);
  auto rows_str = [](const std::vector<std::vector<int>>& rows) {
    std::string s;
    for (const auto& comp : rows) {
      std::string part;
      for (int x : comp) part += (part.empty() ? "" : ",") + std::to_string(x);
      s += "(" + part + ")";
    }
    return s;
  };
  if (o.json) {
    Json j = {{"d", o.d},
              {"components", f.num_components},
              {"u_d", ud.boxes.indices()},
              {"v_d", vd.boxes.indices()},
              {"u_d_rows", fiber_rows(*c, f, ud.boxes, FiberSide::Z)},
              {"v_d_rows", fiber_rows(*c, f, vd.boxes, FiberSide::Kappa)},
              {"contained", ud.boxes.subset_of(vd.boxes)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << c->name() << "  d=" << o.d << "  fiber poset: " << f.size() << " boxes, " << f.num_components
            << " component(s)\n";
  std::cout << "u_d = " << rows_str(fiber_rows(*c, f, ud.boxes, FiberSide::Z)) << "  (transposed)\n";
  std::cout << "v^d = " << rows_str(fiber_rows(*c, f, vd.boxes, FiberSide::Kappa)) << "\n";
  std::cout << "u_d <= v^d: " << (ud.boxes.subset_of(vd.boxes) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<CheckResult> results;
  for (const auto& group : {acceptance_checks(), example_checks(), property_checks()})
    for (const auto& c : group) {
      results.push_back(run_check(c));
      if (!o.json) std::cout << format_result(results.back()) << std::endl;
    }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    std::cout << Json{{"pass", ok}, {"checks", arr}}.dump(2) << "\n";
  } else {
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of quantum cohomology and quantum K-theory of cominuscule spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("words", o.space_words, "space, e.g. 'grassmannian 3 7', 'lagrangian 4', 'quadric 11', 'cayley'");
    sub->add_option("--space", o.space, "space as a single string");
    sub->add_flag("--json", o.json, "print JSON");
  };
  auto add_u = [&](CLI::App* sub) { sub->add_option("--u", o.u, "shape u: rows '4,2', 'boxes:i,j', or ''"); };
  auto add_v = [&](CLI::App* sub) { sub->add_option("--v", o.v, "shape v"); };

  int (*handler)(const Options&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };

  auto* poset = sub("poset", "render the labelled poset of the space", cmd_poset);
  add_space(poset);

  auto* degrees = sub("degrees", "q-degrees in the product O_u * O^v", cmd_degrees);
  add_space(degrees);
  add_u(degrees);
  add_v(degrees);

  auto* cen = sub("census", "count pairs whose product has an exceptional degree", cmd_census);
  add_space(cen);
  cen->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* eul = sub("euler", "Euler characteristic of the tableau representation", cmd_euler);
  add_space(eul);
  add_u(eul);
  add_v(eul);
  eul->add_option("--m", o.m, "number of hyperplane factors")->check(CLI::NonNegativeNumber);

  auto* chev = sub("chevalley", "expansion of O^v times a power of the hyperplane class", cmd_chevalley);
  add_space(chev);
  add_v(chev);
  chev->add_option("--m", o.m, "power")->check(CLI::NonNegativeNumber);

  auto* cyl = sub("cylinder", "join-irreducible elements of the degree lattice", cmd_cylinder);
  add_space(cyl);
  cyl->add_option("--lo", o.lo, "lowest degree (default: minus the diameter)")->each([&](const std::string&) {
    o.lo_set = true;
  });
  cyl->add_option("--hi", o.hi, "highest degree (default: 0)")->each([&](const std::string&) { o.hi_set = true; });

  auto* sh = sub("shift", "the shifted shape u(d)", cmd_shift);
  add_space(sh);
  add_u(sh);
  sh->add_option("--d", o.d, "degree")->required();

  auto* fib = sub("fiber", "fiber shapes u_d and v^d", cmd_fiber);
  add_space(fib);
  add_u(fib);
  add_v(fib);
  fib->add_option("--d", o.d, "degree")->required();

  auto* ver = sub("verify", "run all worked examples and property suites", cmd_verify);
  ver->add_flag("--json", o.json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    return handler(o);
  } catch (const OracleViolation& e) {
    std::cerr << "oracle violation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
