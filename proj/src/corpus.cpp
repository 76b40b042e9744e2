#include "corpus.hpp"

namespace stratih::corpus {

namespace {

std::vector<std::string> numbered_labels(int n, const std::string& prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

StratifiedComplex circle(int edges) {
  if (edges < 3) throw std::invalid_argument("a triangulated circle needs >= 3 edges");
  std::vector<Simplex> tops;
  for (int i = 0; i + 1 < edges; ++i) tops.push_back({i, i + 1});
  tops.push_back({0, edges - 1});
  auto x = StratifiedComplex::build(1, numbered_labels(edges, "v"), tops, {});
  x.set_name(edges == 3 ? "circle" : "circle" + std::to_string(edges));
  return x;
}

StratifiedComplex boundary_simplex(int n) {
  std::vector<Simplex> tops;
  for (int skip = 0; skip <= n + 1; ++skip) {
    Simplex s;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) s.push_back(v);
    tops.push_back(std::move(s));
  }
  auto x = StratifiedComplex::build(n, numbered_labels(n + 2, "v"), tops, {});
  x.set_name("bd-simplex-" + std::to_string(n + 1));
  return x;
}

StratifiedComplex octahedron() {
  std::vector<Simplex> tops;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) tops.push_back({a, b, c});
  auto x = StratifiedComplex::build(2, numbered_labels(6, "v"), tops, {});
  x.set_name("octahedron");
  return x;
}

StratifiedComplex torus7() {
  std::vector<Simplex> tops;
  for (int i = 0; i < 7; ++i) {
    Simplex a = {i, (i + 1) % 7, (i + 3) % 7};
    Simplex b = {i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    tops.push_back(a);
    tops.push_back(b);
  }
  auto x = StratifiedComplex::build(2, numbered_labels(7, "v"), tops, {});
  x.set_name("torus7");
  return x;
}

StratifiedComplex torus() {
  auto x = barycentric_subdivide(torus7()).complex;
  x.set_name("torus");
  return x;
}

StratifiedComplex projective_plane() {
  std::vector<Simplex> tops = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  auto x = StratifiedComplex::build(2, numbered_labels(6, "v"), tops, {});
  x.set_name("rp2");
  return x;
}

StratifiedComplex staircase_torus() {
  auto c = circle(3);
  auto x = product(c, c);
  x.set_name("staircase-torus");
  return x;
}

StratifiedComplex suspended_torus() {
  auto x = suspension(torus7());
  x.set_name("susp-torus");
  return x;
}

StratifiedComplex two_circles() {
  std::vector<Simplex> tops;
  for (int base : {0, 3})
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}}) tops.push_back({base + a, base + b});
  auto x = StratifiedComplex::build(1, numbered_labels(6, "v"), tops, {});
  x.set_name("two-circles");
  return x;
}

StratifiedComplex suspended_two_circles() {
  auto x = suspension(two_circles());
  x.set_name("susp-two-circles");
  return x;
}

StratifiedComplex interval() {
  auto s0 = StratifiedComplex::build(0, {"p", "q"}, {{0}, {1}}, {});
  s0.set_name("s0");
  auto x = cone(s0);
  x.set_name("interval");
  return x;
}

std::vector<StratifiedComplex> all_spaces() {
  std::vector<StratifiedComplex> out;
  out.push_back(circle(3));
  out.push_back(boundary_simplex(2));
  out.push_back(octahedron());
  out.push_back(torus());
  out.push_back(projective_plane());
  out.push_back(staircase_torus());
  out.push_back(suspended_torus());
  out.push_back(suspended_two_circles());
  return out;
}

}  // namespace stratih::corpus
