#include "facering/simplicial/library.hpp"

#include <stdexcept>

#include "facering/linalg/random.hpp"
#include "facering/simplicial/operators.hpp"

namespace facering::library {
namespace {

void combinations(int n, int k, int start, Face& cur, std::vector<Face>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(static_cast<Vertex>(i));
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Face> k_subsets(int n, int k) {
  std::vector<Face> out;
  Face cur;
  combinations(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::vector<std::string> numbered_labels(std::size_t n, std::size_t first) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
  return labels;
}

Complex boundary_simplex(int d) {
  if (d < 1) throw std::invalid_argument("boundary_simplex: d >= 1");
  return Complex(numbered_labels(static_cast<std::size_t>(d) + 1), k_subsets(d + 1, d), std::nullopt,
                 "bdsimplex" + std::to_string(d));
}

Complex simplex(int d) {
  if (d < 1) throw std::invalid_argument("simplex: d >= 1");
  return Complex(numbered_labels(static_cast<std::size_t>(d)), k_subsets(d, d), std::nullopt,
                 "simplex" + std::to_string(d));
}

Complex cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3");
  std::vector<Face> facets;
  for (int i = 0; i < n; ++i) facets.push_back(make_face({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)}));
  return Complex(numbered_labels(static_cast<std::size_t>(n)), std::move(facets), std::nullopt,
                 "cycle" + std::to_string(n));
}

Complex cross_polytope(int d) {
  if (d < 1) throw std::invalid_argument("cross_polytope: d >= 1");
  Complex c(numbered_labels(2), {{0}, {1}});
  for (int i = 1; i < d; ++i) {
    const auto n = c.universe_size();
    c = suspension(c, std::to_string(n + 1), std::to_string(n + 2));
  }
  return c.with_name("cross" + std::to_string(d));
}

Complex octahedron() {
  return suspension(cycle(4), "5", "6").with_name("octahedron");
}

Complex icosahedron() {
  std::vector<Face> facets;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex a = 1 + i;
    const Vertex b = 1 + (i + 1) % 5;
    const Vertex c = 6 + i;
    const Vertex e = 6 + (i + 1) % 5;
    facets.push_back(make_face({0, a, b}));
    facets.push_back(make_face({a, b, c}));
    facets.push_back(make_face({b, c, e}));
    facets.push_back(make_face({11, c, e}));
  }
  return Complex(numbered_labels(12), std::move(facets), std::nullopt, "icosahedron");
}

Complex torus7() {
  std::vector<Face> facets;
  for (Vertex i = 0; i < 7; ++i) {
    facets.push_back(make_face({i, (i + 1) % 7, (i + 3) % 7}));
    facets.push_back(make_face({i, (i + 2) % 7, (i + 3) % 7}));
  }
  return Complex(numbered_labels(7), std::move(facets), std::nullopt, "torus");
}

Complex hexagonal_bipyramid() {
  std::vector<std::string> labels{"N", "S"};
  for (int i = 0; i < 6; ++i) labels.push_back("c" + std::to_string(i));
  std::vector<Face> facets;
  for (Vertex i = 0; i < 6; ++i) {
    const Vertex a = 2 + i;
    const Vertex b = 2 + (i + 1) % 6;
    facets.push_back(make_face({0, a, b}));
    facets.push_back(make_face({1, a, b}));
  }
  return Complex(std::move(labels), std::move(facets), std::nullopt, "bipyramid6");
}

Complex cone_over_cycle4() { return cone(cycle(4), "5").with_name("cone_cycle4"); }

Complex cone_over_octahedron() { return cone(octahedron(), "7").with_name("cone_octahedron"); }

Complex random_stacked_sphere(int d, int extra, std::uint64_t seed) {
  Complex c = boundary_simplex(d);
  SampleStream stream(seed);
  for (int i = 0; i < extra; ++i) {
    const auto& facets = c.facets();
    const Face pick = facets[stream.next_u64() % facets.size()];
    c = stellar_subdivision(c, pick, std::to_string(c.universe_size() + 1));
  }
  return c.with_name("stacked" + std::to_string(d) + "_" + std::to_string(extra) + "_" + std::to_string(seed));
}

Hemispheres octahedron_hemispheres() {
  Complex s = octahedron();
  Complex upper = star(s, {s.vertex_id("5")});
  Complex lower = star(s, {s.vertex_id("6")});
  return {s, upper, lower};
}

std::vector<Complex> standard_spheres() {
  std::vector<Complex> out;
  for (int d = 3; d <= 6; ++d) out.push_back(boundary_simplex(d));
  out.push_back(octahedron());
  out.push_back(icosahedron());
  out.push_back(cross_polytope(4));
  out.push_back(suspension(icosahedron(), "13", "14").with_name("susp_icosahedron"));
  out.push_back(suspension(boundary_simplex(3), "5", "6").with_name("susp_bdsimplex3"));
  return out;
}

std::vector<Complex> stacked_spheres(int count, std::uint64_t seed) {
  std::vector<Complex> out;
  for (int d = 3; d <= 4; ++d) {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(d * 1000 + i));
      out.push_back(random_stacked_sphere(d, 2 + static_cast<int>(s % 7), s));
    }
  }
  return out;
}

std::vector<Complex> standard_balls() {
  return {simplex(3), cone_over_cycle4(), cone_over_octahedron()};
}

std::vector<std::string> names() {
  return {"bdsimplex3", "bdsimplex4", "bdsimplex5", "bdsimplex6", "simplex3", "cycle4",     "cross4",
          "octahedron", "icosahedron", "torus",     "bipyramid6", "cone_cycle4", "cone_octahedron"};
}

Complex by_name(const std::string& name) {
  if (name.rfind("bdsimplex", 0) == 0) return boundary_simplex(std::stoi(name.substr(9)));
  if (name.rfind("simplex", 0) == 0) return simplex(std::stoi(name.substr(7)));
  if (name.rfind("cycle", 0) == 0) return cycle(std::stoi(name.substr(5)));
  if (name.rfind("cross", 0) == 0) return cross_polytope(std::stoi(name.substr(5)));
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "torus") return torus7();
  if (name == "bipyramid6") return hexagonal_bipyramid();
  if (name == "cone_cycle4") return cone_over_cycle4();
  if (name == "cone_octahedron") return cone_over_octahedron();
  throw std::invalid_argument("unknown bundled complex '" + name + "'");
}

}  // namespace facering::library
