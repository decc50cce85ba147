#pragma once

#include <string_view>
#include <vector>

#include "genmap3/simplicial_complex.hpp"

namespace genmap3 {

/// Names accepted by builtin(): S3, T3, RP3, S2xS1, RP2xS1.
const std::vector<std::string_view>& builtin_names();

/// Fixed triangulations of small closed 3-manifolds:
///   S3      boundary of the 4-simplex (5 vertices, 5 facets)
///   T3      3x3x3 periodic grid, 6 tetrahedra per cube (27 vertices, 162 facets)
///   RP3     minimal 11-vertex triangulation (40 facets)
///   S2xS1   boundary of a tetrahedron times a 3-cycle, staircase prisms
///   RP2xS1  6-vertex RP^2 times a 3-cycle, staircase prisms
/// Throws UnknownBuiltin.
ComplexPtr builtin(std::string_view name);

std::vector<Facet> builtin_facets(std::string_view name);

// Helpers that address the T3 grid by coordinates.
namespace torus3 {

constexpr int kSize = 3;

/// Label of grid vertex (i, j, k), coordinates taken mod 3.
Vertex vertex(int i, int j, int k);

/// Triangles of the coordinate 2-torus {coordinate[axis] = level}.
std::vector<std::vector<Vertex>> coordinate_torus(int axis, int level);

/// Edges of the coordinate circle along `axis` through the grid point
/// whose other two coordinates are (a, b), in increasing axis order.
std::vector<std::vector<Vertex>> coordinate_circle(int axis, int a, int b);

/// Vertex map collapsing the given axis: (i, j, k) -> same point with
/// coordinate[axis] = 0.
std::vector<std::pair<Vertex, Vertex>> collapse_axis(int axis);

}  // namespace torus3

/// Product of a triangulated closed surface with the 3-cycle {0,1,2}.
/// Vertex (a, b) gets label 3a + b; each prism triangle × edge is split
/// into the three tetrahedra of its staircase triangulation.
std::vector<Facet> circle_product(const std::vector<std::array<Vertex, 3>>& surface_triangles);

}  // namespace genmap3
