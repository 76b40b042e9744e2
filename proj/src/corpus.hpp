#pragma once

#include <vector>

#include "simplicial.hpp"

namespace stratih::corpus {

// Named example spaces, small enough for seconds-scale exact linear algebra.
StratifiedComplex circle(int edges = 3);        // boundary of the (edges-1)-gon fan; 3 -> bd of a triangle
StratifiedComplex boundary_simplex(int n);      // bd of the (n+1)-simplex, an n-sphere
StratifiedComplex octahedron();                 // 6-vertex S^2
StratifiedComplex torus7();                     // 7-vertex flat torus
StratifiedComplex torus();                      // one barycentric subdivision of torus7
StratifiedComplex projective_plane();           // 6-vertex RP^2
StratifiedComplex staircase_torus();            // S^1 x S^1 staircase triangulation
StratifiedComplex suspended_torus();            // susp(torus7), two codim-3 strata
StratifiedComplex suspended_two_circles();      // susp(S^1 u S^1), non-normal
StratifiedComplex two_circles();                // disjoint union of two triangles
StratifiedComplex interval();                   // cone over two points

// Everything the diagram checks run over, in canonical order.
std::vector<StratifiedComplex> all_spaces();

}  // namespace stratih::corpus
