#include <doctest.h>

#include "corpus.hpp"
#include "simplicial.hpp"

using namespace stratih;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("validator accepts trivially stratified sphere with one stratum") {
  auto s2 = corpus::boundary_simplex(2);
  auto rep = s2.validate();
  CHECK(rep.valid);
  CHECK(rep.flag_like);
  CHECK(s2.strata().size() == 1);
  CHECK(s2.euler_characteristic() == 2);
}

TEST_CASE("validator rejects a lone 2-simplex") {
  auto x = StratifiedComplex::build(2, {"a", "b", "c"}, {{0, 1, 2}}, {});
  auto rep = x.validate();
  CHECK(!rep.valid);
  bool pseudo = false;
  for (const auto& p : rep.problems)
    if (p.find("pseudomanifold") != std::string::npos) pseudo = true;
  CHECK(pseudo);
}

TEST_CASE("suspension of the 7-vertex torus validates with 3 strata") {
  auto st = corpus::suspended_torus();
  auto rep = st.validate();
  CHECK(rep.valid);
  CHECK(rep.flag_like);
  CHECK(st.strata().size() == 3);
  CHECK(st.singular_strata().size() == 2);
  for (int s : st.singular_strata()) CHECK(st.strata()[s].codim == 3);
  CHECK(st.euler_characteristic() == 2);
  CHECK(st.simplex_count(3) == 28);
}

TEST_CASE("cone over the triangle circle is a disk with a codim-2 apex") {
  auto c = cone(corpus::circle(3));
  CHECK(c.simplex_count(0) == 4);
  CHECK(c.simplex_count(1) == 6);
  CHECK(c.simplex_count(2) == 3);
  CHECK(c.euler_characteristic() == 1);
  auto sing = c.singular_strata();
  REQUIRE(sing.size() == 1);
  CHECK(c.strata()[sing[0]].codim == 2);
  auto rep = c.validate(/*allow_boundary=*/true);
  CHECK(rep.valid);
  CHECK(!rep.closed);
  CHECK(!c.validate().valid);  // strict mode: the base circle is a boundary
}

TEST_CASE("cone over a point is an edge") {
  auto pt = StratifiedComplex::build(0, {"p"}, {{0}}, {});
  auto e = cone(pt);
  CHECK(e.dim() == 1);
  CHECK(e.simplex_count(0) == 2);
  CHECK(e.simplex_count(1) == 1);
}

TEST_CASE("cone over the torus has Euler characteristic 1") {
  auto c = cone(corpus::torus7());
  CHECK(c.euler_characteristic() == 1);
  CHECK(c.dim() == 3);
  CHECK(c.validate(true).valid);
}

TEST_CASE("suspension Euler characteristics") {
  auto s0 = StratifiedComplex::build(0, {"p", "q"}, {{0}, {1}}, {});
  auto square = suspension(s0);
  CHECK(square.euler_characteristic() == 0);
  CHECK(square.simplex_count(0) == 4);
  CHECK(square.simplex_count(1) == 4);

  CHECK(suspension(corpus::boundary_simplex(1)).euler_characteristic() == 2);
  CHECK(corpus::suspended_torus().euler_characteristic() == 2);
}

TEST_CASE("staircase products") {
  auto s1 = corpus::circle(3);
  auto pt = StratifiedComplex::build(0, {"p"}, {{0}}, {});

  auto cyl = product(s1, pt);
  CHECK(cyl.dim() == 1);
  CHECK(cyl.simplex_count(1) == 3);
  CHECK(cyl.euler_characteristic() == 0);

  auto edge = StratifiedComplex::build(1, {"a", "b"}, {{0, 1}}, {});
  auto sq = product(edge, edge);
  CHECK(sq.simplex_count(2) == 2);

  auto t = corpus::staircase_torus();
  CHECK(t.euler_characteristic() == 0);
  CHECK(t.simplex_count(0) == 9);
  CHECK(t.simplex_count(2) == 18);
  CHECK(t.validate().valid);

  CHECK_THROWS(product(cone(s1), s1));  // nontrivial filtration unsupported
}

TEST_CASE("barycentric subdivision counts and Euler invariance") {
  auto edge = StratifiedComplex::build(1, {"a", "b"}, {{0, 1}}, {});
  auto sd_edge = barycentric_subdivide(edge).complex;
  CHECK(sd_edge.simplex_count(0) == 3);
  CHECK(sd_edge.simplex_count(1) == 2);

  auto sd_circle = barycentric_subdivide(corpus::circle(3)).complex;
  CHECK(sd_circle.simplex_count(1) == 6);

  for (const auto& x : corpus::all_spaces()) {
    auto sd = barycentric_subdivide(x).complex;
    CHECK(sd.euler_characteristic() == x.euler_characteristic());
    CHECK(sd.validate().valid == x.validate().valid);
  }
}

TEST_CASE("subdivision respects the filtration") {
  auto st = corpus::suspended_torus();
  auto sd = barycentric_subdivide(st);
  CHECK(sd.complex.validate().valid);
  CHECK(sd.complex.singular_strata().size() == 2);
  // apex barycenters keep level 0
  for (int v = 0; v < sd.complex.vertex_count(); ++v) {
    auto [d, i] = sd.vertex_origin[v];
    int orig_level = st.level(d, i);
    CHECK(sd.complex.level(0, v) == (orig_level < st.dim() ? orig_level : st.dim()));
  }
}

TEST_CASE("orientations over Q and F_2") {
  CHECK(find_fundamental_cycle(corpus::boundary_simplex(2), Q).has_value());
  CHECK(find_fundamental_cycle(corpus::octahedron(), Q).has_value());
  CHECK(find_fundamental_cycle(corpus::suspended_torus(), Q).has_value());

  // classical: RP^2 is not Q-orientable but is F_2-orientable
  CHECK(!find_fundamental_cycle(corpus::projective_plane(), Q).has_value());
  auto f2 = find_fundamental_cycle(corpus::projective_plane(), FieldSpec::mod(2));
  REQUIRE(f2.has_value());
  for (const auto& s : f2->signs) CHECK(s.is_one());

  CHECK_THROWS(find_fundamental_cycle(corpus::two_circles(), Q));
}

TEST_CASE("fundamental cycle has vanishing coefficient-zeroed boundary") {
  for (const auto* name : {"octahedron", "susp-torus"}) {
    auto x = std::string(name) == "octahedron" ? corpus::octahedron()
                                               : corpus::suspended_torus();
    auto ori = find_fundamental_cycle(x, Q);
    REQUIRE(ori.has_value());
    auto bd = x.boundary_matrix(x.dim(), Q);
    Vec b = bd.apply(ori->signs);
    for (int i = 0; i < x.simplex_count(x.dim() - 1); ++i)
      if (!x.in_boundary_skeleton(x.dim() - 1, i)) CHECK(b[i].is_zero());
  }
}

TEST_CASE("cone validates for every valid corpus link") {
  for (const auto& link : corpus::all_spaces()) {
    if (!link.validate().valid) continue;
    auto rep = cone(link).validate(/*allow_boundary=*/true);
    CHECK(rep.valid);
  }
}
