#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facering/simplicial/complex.hpp"

namespace facering::library {

/// Vertices labelled "1".."n".
std::vector<std::string> numbered_labels(std::size_t n, std::size_t first = 1);

/// Boundary of the d-simplex: a (d-1)-sphere on d+1 vertices.
Complex boundary_simplex(int d);
/// A single (d-1)-simplex (d vertices) with all its faces.
Complex simplex(int d);
/// n-cycle, n >= 3.
Complex cycle(int n);
/// Boundary of the d-dimensional cross-polytope (suspension of the (d-1) one).
Complex cross_polytope(int d);
Complex octahedron();
Complex icosahedron();
/// Seven-vertex torus (Möbius-Császár).
Complex torus7();
/// Boundary of the hexagonal bipyramid: apexes "N", "S", ring "c0".."c5".
Complex hexagonal_bipyramid();

Complex cone_over_cycle4();
Complex cone_over_octahedron();

/// Boundary of the d-simplex with `extra` facets stellarly subdivided, each
/// chosen uniformly from the current facets.
Complex random_stacked_sphere(int d, int extra, std::uint64_t seed);

/// Octahedron with its two hemispherical disks: stars of the poles "5" and
/// "6". Both share the universe of the sphere.
struct Hemispheres {
  Complex sphere;
  Complex upper;
  Complex lower;
};
Hemispheres octahedron_hemispheres();

/// Named spheres used by the acceptance suite: boundary simplices (d=3..6),
/// octahedron, icosahedron, suspension towers.
std::vector<Complex> standard_spheres();
/// 2- and 3-dimensional random stacked spheres, `count` of each dimension.
std::vector<Complex> stacked_spheres(int count, std::uint64_t seed);
/// Simplex (d=3), cone over the 4-cycle, cone over the octahedron.
std::vector<Complex> standard_balls();

/// Looks up a bundled complex by name ("octahedron", "icosahedron", "torus",
/// "bdsimplex4", ...). Throws std::invalid_argument for unknown names.
Complex by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace facering::library
