#include <gtest/gtest.h>

#include "facering/simplicial/geometric.hpp"
#include "facering/simplicial/homology.hpp"
#include "facering/simplicial/library.hpp"
#include "facering/simplicial/operators.hpp"
#include "facering/simplicial/vectors.hpp"

using namespace facering;

namespace {

Complex from_labels(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::vector<Face> fs;
  for (const auto& f : facets) {
    Face face;
    for (const auto& l : f) {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) {
        labels.push_back(l);
        it = labels.end() - 1;
      }
      face.push_back(static_cast<Vertex>(it - labels.begin()));
    }
    fs.push_back(make_face(face));
  }
  return Complex(labels, fs);
}

Face F(const Complex& c, const std::vector<std::string>& labels) { return c.face_from_labels(labels); }

// Neighbours of v by brute force over edges.
std::vector<Vertex> neighbours(const Complex& c, Vertex v) {
  std::vector<Vertex> out;
  for (const auto& e : c.faces(1)) {
    if (e[0] == v) out.push_back(e[1]);
    if (e[1] == v) out.push_back(e[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Complex, RejectsMalformedInput) {
  EXPECT_THROW(Complex({"a", "b"}, {{0, 1}, {0, 1}}), PreconditionError);
  EXPECT_THROW(Complex({"a", "b", "c"}, {{0, 1, 2}, {0, 1}}), PreconditionError);
  EXPECT_THROW(Complex({"a"}, {{0, 3}}), PreconditionError);
  EXPECT_THROW(Complex({"a", "a"}, {{0}}), PreconditionError);
  EXPECT_THROW(Complex({"a", "b"}, {{0, 1}}, CoordTable{{Rational(1)}, {Rational(1), Rational(2)}}),
               PreconditionError);
}

TEST(Complex, VoidVersusEmptyFace) {
  const Complex v = Complex::void_on({"a"});
  const Complex e({"a"}, {Face{}});
  EXPECT_TRUE(v.is_void());
  EXPECT_FALSE(e.is_void());
  EXPECT_EQ(v.dim(), -1);
  EXPECT_EQ(e.dim(), -1);
  EXPECT_EQ(reduced_betti(e), std::vector<std::size_t>{1});
  EXPECT_TRUE(is_homology_sphere(e));
}

TEST(Operators, OctahedronVertexLinkIsFourCycleOnNeighbours) {
  const Complex o = library::octahedron();
  for (Vertex v : o.vertices()) {
    const Complex lk = link(o, {v});
    EXPECT_EQ(lk.vertices(), neighbours(o, v));
    EXPECT_EQ(f_vector(lk), (std::vector<Count>{1, 4, 4}));
    EXPECT_TRUE(is_homology_sphere(lk));
  }
}

TEST(Operators, StarDeletionOfSingleTriangle) {
  const Complex t = from_labels({{"1", "2", "3"}});
  EXPECT_TRUE(star(t, F(t, {"1"})).same_faces(t));
  const Complex del = deletion(t, F(t, {"1"}));
  EXPECT_EQ(del.facets(), std::vector<Face>{F(t, {"2", "3"})});
  EXPECT_EQ(f_vector(del), (std::vector<Count>{1, 2, 1}));
}

TEST(Operators, EmptyFaceStarAndLink) {
  const Complex o = library::octahedron();
  EXPECT_TRUE(star(o, {}).same_faces(o));
  EXPECT_TRUE(link(o, {}).same_faces(o));
  EXPECT_TRUE(deletion(o, {}).is_void());
}

TEST(Operators, FaceNotFound) {
  const Complex o = library::octahedron();
  EXPECT_THROW(star(o, F(o, {"5", "6"})), FaceNotFound);
  EXPECT_THROW(link(o, F(o, {"5", "6"})), FaceNotFound);
}

TEST(Operators, StarLinkDeletionInvariants) {
  const Complex ico = library::icosahedron();
  for (const auto& sigma : ico.face_set()) {
    const Complex st = star(ico, sigma), lk = link(ico, sigma), del = deletion(ico, sigma);
    for (const auto& tau : lk.face_set()) EXPECT_TRUE(st.contains(face_union(tau, sigma)));
    if (sigma.empty()) continue;
    for (const auto& tau : del.face_set()) EXPECT_FALSE(is_subface(sigma, tau));
  }
}

TEST(Operators, StarPairRemovesFacesThroughSigma) {
  const Complex o = library::octahedron();
  const RelativePair p = star_pair(o, {o.vertex_id("5")});
  EXPECT_EQ(f_vector(p.total()), (std::vector<Count>{1, 5, 8, 4}));
  EXPECT_EQ(f_vector(p.sub()), (std::vector<Count>{1, 4, 4}));
}

TEST(Operators, ConeAndSuspension) {
  EXPECT_EQ(f_vector(library::cone_over_cycle4()), (std::vector<Count>{1, 5, 8, 4}));
  const Complex s = suspension(library::cycle(4), "n", "s");
  EXPECT_EQ(f_vector(s), (std::vector<Count>{1, 6, 12, 8}));
  const Complex pt({"p"}, {{0}});
  EXPECT_EQ(f_vector(cone(pt, "a")), (std::vector<Count>{1, 2, 1}));
  EXPECT_THROW(cone(pt, "p"), PreconditionError);
}

TEST(Operators, ConeCoordinatesExtendByNewDirection) {
  const Complex pt({"p"}, {{0}}, CoordTable{{Rational(3)}});
  const Complex c = cone(pt, "a");
  ASSERT_TRUE(c.coords().has_value());
  EXPECT_EQ((*c.coords())[0], (std::vector<Rational>{Rational(3), Rational(0)}));
  EXPECT_EQ((*c.coords())[1], (std::vector<Rational>{Rational(0), Rational(1)}));
}

TEST(Operators, BoundaryComplex) {
  EXPECT_TRUE(boundary_complex(library::simplex(3)).same_faces(library::cycle(3)));
  const Complex two = from_labels({{"1", "2", "3"}, {"2", "3", "4"}});
  const Complex bd = boundary_complex(two);
  EXPECT_EQ(f_vector(bd), (std::vector<Count>{1, 4, 4}));
  EXPECT_TRUE(is_homology_sphere(bd));
  EXPECT_TRUE(boundary_complex(library::octahedron()).is_void());
  EXPECT_THROW(boundary_complex(from_labels({{"1", "2", "3"}, {"3", "4"}})), PreconditionError);
}

TEST(Operators, Skeleton) {
  const Complex t = library::boundary_simplex(3);
  EXPECT_TRUE(skeleton(t, t.dim()).same_faces(t));
  const Complex k4 = skeleton(t, 1);
  EXPECT_EQ(f_vector(k4), (std::vector<Count>{1, 4, 6}));
  EXPECT_EQ(skeleton(t, 0).facets().size(), 4u);
}

TEST(Homology, KnownBettiNumbers) {
  EXPECT_EQ(reduced_homology(library::octahedron()), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(reduced_homology(library::simplex(4)), (std::vector<std::size_t>{0, 0, 0, 0}));
  const Complex two_points({"a", "b"}, {{0}, {1}});
  EXPECT_EQ(reduced_homology(two_points), std::vector<std::size_t>{1});
  EXPECT_EQ(reduced_homology(library::torus7()), (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(reduced_homology(library::torus7(), FieldMode::Rational), (std::vector<std::size_t>{0, 2, 1}));
}

TEST(Homology, TopologyGates) {
  EXPECT_TRUE(is_homology_sphere(library::icosahedron()));
  EXPECT_FALSE(is_homology_sphere(library::torus7()));
  EXPECT_TRUE(is_homology_ball(library::cone_over_octahedron()));
  EXPECT_FALSE(is_homology_ball(library::octahedron()));
  EXPECT_TRUE(is_homology_manifold(library::torus7()));
  // Two tetrahedron boundaries wedged at a vertex.
  const Complex wedge = from_labels({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"},
                                     {"1", "5", "6"}, {"1", "5", "7"}, {"1", "6", "7"}, {"5", "6", "7"}});
  EXPECT_FALSE(is_homology_sphere(wedge));
  EXPECT_FALSE(is_homology_manifold(wedge));
}

TEST(Homology, EulerRelationOnSpheres) {
  for (const auto& s : library::standard_spheres()) {
    ASSERT_TRUE(is_homology_sphere(s)) << s.name();
    const int d = s.dim() + 1;
    EXPECT_EQ(euler_characteristic(s), 1 + ((d - 1) % 2 == 0 ? 1 : -1)) << s.name();
  }
}

TEST(Contraction, OctahedronEdgeGivesBipyramid) {
  const Complex o = library::octahedron();
  for (const auto& e : o.faces(1)) {
    const auto r = contract_edge(o, e);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(f_vector(compact(*r.complex)), (std::vector<Count>{1, 5, 9, 6}));
    EXPECT_EQ(reduced_homology(*r.complex), reduced_homology(o));
  }
}

TEST(Contraction, CycleAndTetrahedron) {
  const auto r = contract_edge(library::cycle(4), {0, 1});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(f_vector(*r.complex), (std::vector<Count>{1, 3, 3}));
  const Complex t = library::boundary_simplex(3);
  for (const auto& e : t.faces(1)) {
    const auto bad = contract_edge(t, e);
    ASSERT_FALSE(bad.ok());
    EXPECT_EQ(*bad.violation, face_difference(t.vertices(), e));
  }
}

TEST(Contraction, PreservesHomologyOnStackedSpheres) {
  for (const auto& s : library::stacked_spheres(3, 99)) {
    for (const auto& e : s.faces(1)) {
      const auto r = contract_edge(s, e);
      if (r.ok()) EXPECT_EQ(reduced_homology(*r.complex), reduced_homology(s)) << s.name();
    }
  }
}

TEST(Double, ConeOverCycleGivesOctahedronLikeSphere) {
  const Complex d = double_ball(library::cone_over_cycle4());
  EXPECT_EQ(f_vector(compact(d)), (std::vector<Count>{1, 6, 12, 8}));
  EXPECT_TRUE(is_homology_sphere(d));
  EXPECT_TRUE(boundary_complex(d).is_void());
}

TEST(Double, EulerCharacteristicFormula) {
  for (const auto& b : {library::cone_over_cycle4(), library::cone_over_octahedron()}) {
    const Complex d = double_ball(b);
    EXPECT_EQ(euler_characteristic(d), 2 * euler_characteristic(b) - euler_characteristic(boundary_complex(b)));
  }
}

TEST(Double, RefusesWhenFacetsCoincide) {
  EXPECT_THROW(double_ball(library::simplex(3)), PreconditionError);
  EXPECT_THROW(double_ball(library::simplex(2)), PreconditionError);
  EXPECT_THROW(double_ball(library::octahedron()), PreconditionError);
}

TEST(Stellar, SubdivisionKeepsSphere) {
  const Complex o = library::octahedron();
  const Complex s = stellar_subdivision(o, o.facets()[0], "x");
  EXPECT_EQ(f_vector(s), (std::vector<Count>{1, 7, 15, 10}));
  EXPECT_TRUE(is_homology_sphere(s));
  EXPECT_THROW(stellar_subdivision(o, {0}, "y"), PreconditionError);
}

TEST(Geometric, ProperAndImproper) {
  const Complex e({"a", "b"}, {{0, 1}}, CoordTable{{Rational(1), Rational(0)}, {Rational(2), Rational(0)}});
  const auto m = coordinate_matrix<Rational>(e);
  const auto bad = improper_face<Rational>(e, m);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(*bad, (Face{0, 1}));
  EXPECT_THROW(require_proper<Rational>(e, m), ImproperCoordinates);
}

TEST(Geometric, LinkProjectionKillsSigma) {
  const Complex o = library::octahedron();
  SampleStream s(4);
  const auto g = realize<Rational>(o, 3, s);
  const Face v{o.vertex_id("5")};
  const auto lg = geometric_link(g, v);
  EXPECT_EQ(lg.ambient(), 2u);
  for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(lg.coords(j, v[0]).is_zero());
  EXPECT_FALSE(improper_face<Rational>(lg.complex, lg.coords).has_value());
}
