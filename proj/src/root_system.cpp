#include "qcomin/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcomin {

namespace {

void check_supported(CartanType t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B:
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 3; break;
    case Family::E: ok = t.rank == 6 || t.rank == 7; break;
  }
  if (!ok || t.rank > 60)
    throw std::invalid_argument("unsupported root system " + t.name() +
                                " (supported: A_n n>=1, B_n/C_n n>=2, D_n n>=3, E6, E7)");
}

}  // namespace

CartanType CartanType::parse(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad Cartan type: '" + text + "'");
  CartanType t;
  switch (text[0]) {
    case 'A': case 'a': t.family = Family::A; break;
    case 'B': case 'b': t.family = Family::B; break;
    case 'C': case 'c': t.family = Family::C; break;
    case 'D': case 'd': t.family = Family::D; break;
    case 'E': case 'e': t.family = Family::E; break;
    default: throw std::invalid_argument("bad Cartan type: '" + text + "'");
  }
  std::size_t pos = 0;
  try {
    t.rank = std::stoi(text.substr(1), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad Cartan type: '" + text + "'");
  }
  if (pos + 1 != text.size()) throw std::invalid_argument("bad Cartan type: '" + text + "'");
  check_supported(t);
  return t;
}

std::string CartanType::name() const {
  static const char kLetters[] = "ABCDE";
  return std::string(1, kLetters[static_cast<int>(family)]) + std::to_string(rank);
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(CartanType t) {
  std::vector<std::pair<int, int>> e;
  const int n = t.rank;
  if (t.family == Family::E) {
    // Bourbaki: 1-3-4-5-6(-7), 2 attached to 4.
    e = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
    if (n == 7) e.push_back({5, 6});
    return e;
  }
  if (t.family == Family::D) {
    for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
    e.push_back({n - 3, n - 1});
    return e;
  }
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

}  // namespace

RootSystem RootSystem::build(CartanType type) {
  check_supported(type);
  RootSystem rs;
  rs.type_ = type;
  const int n = type.rank;
  std::vector<int> norms(n, 2);
  if (type.family == Family::B) norms[n - 1] = 1;
  if (type.family == Family::C)
    for (int i = 0; i < n - 1; ++i) norms[i] = 1;
  rs.cartan_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) rs.cartan_[i * n + i] = 2;
  for (auto [i, j] : dynkin_edges(type)) {
    // <alpha_i, alpha_j^vee> is -2 when alpha_i is long and alpha_j short.
    rs.cartan_[i * n + j] = norms[i] > norms[j] ? -2 : -1;
    rs.cartan_[j * n + i] = norms[j] > norms[i] ? -2 : -1;
  }
  rs.gram2_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram2_[i * n + j] = rs.cartan_[i * n + j] * norms[j];

  // Closure of the simple roots under simple reflections, keeping positive roots.
  std::vector<RootVector> found;
  std::map<RootVector, int> seen;
  for (int i = 0; i < n; ++i) {
    RootVector v(n, 0);
    v[i] = 1;
    seen.emplace(v, 0);
    found.push_back(v);
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      RootVector w = rs.simple_reflect(i, found[k]);
      if (is_positive(w) && !seen.count(w)) {
        seen.emplace(w, 0);
        found.push_back(w);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const RootVector& a, const RootVector& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.positive_ = std::move(found);
  for (int i = 0; i < static_cast<int>(rs.positive_.size()); ++i) rs.index_[rs.positive_[i]] = i;
  return rs;
}

int RootSystem::positive_index(const RootVector& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

std::int64_t RootSystem::pair2(const RootVector& a, const RootVector& b) const {
  const int n = rank();
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    std::int64_t t = 0;
    for (int j = 0; j < n; ++j) t += static_cast<std::int64_t>(gram2_[i * n + j]) * b[j];
    s += a[i] * t;
  }
  return s;
}

Rational RootSystem::pair(const RootVector& a, const RootVector& b) const {
  std::int64_t p = pair2(a, b);
  if (p % 2 == 0) return {p / 2, 1};
  return {p, 2};
}

int RootSystem::pair_with_coroot(const RootVector& a, const RootVector& b) const {
  std::int64_t bb = pair2(b, b);
  if (bb == 0) throw std::invalid_argument("pair_with_coroot: zero vector");
  std::int64_t num = 2 * pair2(a, b);
  if (num % bb != 0) throw std::invalid_argument("pair_with_coroot: non-integral value");
  return static_cast<int>(num / bb);
}

bool RootSystem::is_root(const RootVector& v) const {
  if (static_cast<int>(v.size()) != rank()) return false;
  if (is_positive(v)) return index_.count(v) > 0;
  if (is_negative(v)) return index_.count(-v) > 0;
  return false;
}

bool RootSystem::is_long(const RootVector& root) const {
  if (!is_root(root)) throw std::invalid_argument("is_long: not a root");
  return pair2(root, root) == 4;
}

RootVector RootSystem::reflect(const RootVector& alpha, const RootVector& v) const {
  if (!is_root(alpha)) throw std::invalid_argument("reflect: not a root");
  int c = pair_with_coroot(v, alpha);
  RootVector out = v;
  for (int i = 0; i < rank(); ++i) out[i] -= c * alpha[i];
  return out;
}

RootVector RootSystem::simple_reflect(int i, const RootVector& v) const {
  const int n = rank();
  int c = 0;
  for (int j = 0; j < n; ++j) c += v[j] * cartan_[j * n + i];
  RootVector out = v;
  out[i] -= c;
  return out;
}

RootVector RootSystem::simple_root(int i) const {
  RootVector v(rank(), 0);
  v.at(i) = 1;
  return v;
}

int height(const RootVector& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

bool is_positive(const RootVector& v) {
  bool nz = false;
  for (int c : v) {
    if (c < 0) return false;
    nz |= c != 0;
  }
  return nz;
}

bool is_negative(const RootVector& v) {
  bool nz = false;
  for (int c : v) {
    if (c > 0) return false;
    nz |= c != 0;
  }
  return nz;
}

bool root_leq(const RootVector& a, const RootVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

RootVector operator-(const RootVector& v) {
  RootVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

RootVector operator+(const RootVector& a, const RootVector& b) {
  RootVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RootVector operator-(const RootVector& a, const RootVector& b) {
  RootVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

}  // namespace qcomin
