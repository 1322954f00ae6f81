#include "qcomin/space.hpp"

#include <sstream>
#include <stdexcept>

namespace qcomin {

namespace {

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

void expect_args(const std::vector<std::string>& w, std::size_t n, const std::string& usage) {
  if (w.size() != n + 1) throw std::invalid_argument("usage: " + usage);
}

}  // namespace

SpaceSpec parse_space(const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("missing space (e.g. 'lagrangian 4')");
  SpaceSpec s;
  s.family = words[0];
  const std::string& f = s.family;
  if (f == "grassmannian" || f == "gr") {
    expect_args(words, 2, "grassmannian m n");
    int m = to_int(words[1]), n = to_int(words[2]);
    if (m < 1 || m >= n) throw std::invalid_argument("grassmannian m n needs 1 <= m < n");
    s.params = {m, n};
    s.type = {Family::A, n - 1};
    s.gamma = m - 1;
  } else if (f == "lagrangian" || f == "lg") {
    expect_args(words, 1, "lagrangian n");
    int n = to_int(words[1]);
    if (n < 2) throw std::invalid_argument("lagrangian n needs n >= 2");
    s.params = {n};
    s.type = {Family::C, n};
    s.gamma = n - 1;
  } else if (f == "orthogonal" || f == "og") {
    expect_args(words, 1, "orthogonal n");
    int n = to_int(words[1]);
    if (n < 3) throw std::invalid_argument("orthogonal n needs n >= 3");
    s.params = {n};
    s.type = {Family::D, n};
    s.gamma = n - 1;
  } else if (f == "quadric") {
    expect_args(words, 1, "quadric N");
    int N = to_int(words[1]);
    if (N < 3) throw std::invalid_argument("quadric N needs N >= 3");
    s.params = {N};
    if (N % 2 == 1) s.type = {Family::B, (N + 1) / 2};
    else s.type = {Family::D, N / 2 + 1};
    s.gamma = 0;
  } else if (f == "cayley") {
    expect_args(words, 0, "cayley");
    s.type = {Family::E, 6};
    s.gamma = 5;
  } else if (f == "freudenthal") {
    expect_args(words, 0, "freudenthal");
    s.type = {Family::E, 7};
    s.gamma = 6;
  } else if (f == "raw") {
    if (words.size() == 3) {
      s.type = CartanType::parse(words[1]);
      s.gamma = to_int(words[2]) - 1;
    } else if (words.size() == 4) {
      s.type = CartanType::parse(words[1] + words[2]);
      s.gamma = to_int(words[3]) - 1;
    } else {
      throw std::invalid_argument("usage: raw TYPE RANK NODE (e.g. raw C 4 4)");
    }
    s.params = {s.type.rank, s.gamma + 1};
  } else {
    throw std::invalid_argument("unknown space family '" + f +
                                "' (grassmannian, lagrangian, orthogonal, quadric, cayley, freudenthal, raw)");
  }
  return s;
}

SpaceSpec parse_space(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  return parse_space(words);
}

CominPtr build_space(const SpaceSpec& s) { return build_comin(s.type, s.gamma); }

CominPtr build_space(const std::string& text) { return build_space(parse_space(text)); }

}  // namespace qcomin
