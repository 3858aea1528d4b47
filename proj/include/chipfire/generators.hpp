#pragma once

// Graph families. Vertex numbering is fixed so that divisors and
// certificates written against these graphs are reproducible:
//
//   complete(n)                 0..n-1
//   complete_multipartite(p)    part by part, in the order given
//   cycle(n), path(n)           consecutive around / along
//   star(n)                     centre 0, leaves 1..n-1
//   hypercube(d)                vertex = bit string read as an integer
//   cartesian_product(g, h)     (i, j) -> i * |V(h)| + j; for fixed i the
//                               vertices form a copy of h, for fixed j a copy of g
//
// Platonic graphs follow their planar drawings, outer ring first:
//   tetrahedron   outer triangle 0-2, centre 3
//   octahedron    outer triangle 0-2, inner triangle 3-5, i opposite i+3
//   cube          outer square 0-3, inner square 4-7, spokes i -- i+4
//   dodecahedron  outer pentagon 0-4, middle 10-cycle 5-14, inner pentagon 15-19
//   icosahedron   outer triangle 0-2, middle hexagon 3-8, inner triangle 9-11

#include <chipfire/graph.hpp>

#include <vector>

namespace chipfire::generators {

Multigraph complete(std::size_t n);
Multigraph complete_multipartite(const std::vector<std::size_t>& parts);
Multigraph cycle(std::size_t n);
Multigraph path(std::size_t n);
Multigraph star(std::size_t n);
Multigraph hypercube(std::size_t d);
Multigraph cartesian_product(const Multigraph& g, const Multigraph& h);

Multigraph tetrahedron();
Multigraph octahedron();
Multigraph cube();
Multigraph dodecahedron();
Multigraph icosahedron();

// Lookup by family name ("dodecahedron", "complete", ...) for the CLI and
// the HTTP service. `size` is n for sized families and d for the hypercube.
Multigraph by_name(const std::string& family, std::size_t size = 0,
                   const std::vector<std::size_t>& parts = {});

} // namespace chipfire::generators
