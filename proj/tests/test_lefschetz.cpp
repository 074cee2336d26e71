#include <gtest/gtest.h>

#include "facering/lefschetz/certificate.hpp"
#include "facering/lefschetz/lefschetz.hpp"
#include "facering/lefschetz/perturbation.hpp"
#include "facering/simplicial/geometric.hpp"
#include "facering/simplicial/homology.hpp"
#include "facering/simplicial/library.hpp"
#include "facering/simplicial/operators.hpp"
#include "facering/simplicial/vectors.hpp"

using namespace facering;

namespace {

std::vector<std::size_t> ranks_of(const Verdict& v) {
  std::vector<std::size_t> out;
  for (const auto& r : v.degrees) out.push_back(r.rank);
  return out;
}

// Faces avoiding W.
Complex induced_without(const Complex& c, const std::vector<Vertex>& w) {
  std::vector<Face> gens;
  for (const auto& f : c.facets()) {
    Face g;
    for (Vertex v : f)
      if (std::find(w.begin(), w.end(), v) == w.end()) g.push_back(v);
    gens.push_back(g);
  }
  return Complex::generated_by(c.labels(), gens);
}

Complex wedge_of_triangles() {
  return Complex({"1", "2", "3", "4", "5"}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}, std::nullopt, "wedge");
}

Complex path_with(std::vector<std::vector<Rational>> coords) {
  return Complex({"a", "b", "c"}, {{0, 1}, {1, 2}}, CoordTable(std::move(coords)), "path");
}

}  // namespace

// ---- weak Lefschetz

TEST(WeakLefschetz, BoundarySimplexMapsAreOneByOne) {
  for (int d = 3; d <= 6; ++d) {
    const Verdict v = check_weak_lefschetz(library::boundary_simplex(d));
    ASSERT_TRUE(v.holds()) << d << " " << v.reason;
    for (const auto& r : v.degrees) {
      if (r.informational) continue;
      EXPECT_EQ(r.dim_src, 1u);
      EXPECT_EQ(r.dim_dst, 1u);
      EXPECT_EQ(r.rank, 1u);
    }
  }
}

TEST(WeakLefschetz, IcosahedronRankNine) {
  const Verdict v = check_weak_lefschetz(library::icosahedron());
  ASSERT_TRUE(v.holds());
  // d = 3: only A^0 -> A^1 decides; the middle map A^1 -> A^2 is reported.
  ASSERT_EQ(v.degrees.size(), 2u);
  EXPECT_EQ(v.degrees[0].rank, 1u);
  EXPECT_FALSE(v.degrees[0].informational);
  EXPECT_TRUE(v.degrees[1].informational);
  EXPECT_EQ(v.degrees[1].rank, 9u);
  EXPECT_EQ(v.degrees[1].dim_src, 9u);
  // d = 4 (suspension): A^0 -> A^1 and A^1 -> A^2 both decide.
  const Verdict w = check_weak_lefschetz(suspension(library::icosahedron(), "n", "s"));
  ASSERT_TRUE(w.holds());
  ASSERT_EQ(w.degrees.size(), 2u);
  EXPECT_EQ(w.degrees[1].rank, 10u);
}

TEST(WeakLefschetz, WedgeIsRejectedInStrictMode) {
  const Verdict v = check_weak_lefschetz(wedge_of_triangles());
  EXPECT_EQ(v.status, Status::Error);
  EXPECT_NE(v.reason.find("homology sphere"), std::string::npos);
}

// ---- hard Lefschetz

TEST(HardLefschetz, OctahedronRanks) {
  const Verdict v = check_hard_lefschetz(library::octahedron());
  ASSERT_TRUE(v.holds()) << v.reason;
  EXPECT_EQ(ranks_of(v), (std::vector<std::size_t>{1, 3}));
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->coords_source, "sampled");
  EXPECT_EQ(v.witness->ell.size(), 6u);
}

TEST(HardLefschetz, IcosahedronRanks) {
  const Verdict v = check_hard_lefschetz(library::icosahedron());
  ASSERT_TRUE(v.holds());
  EXPECT_EQ(ranks_of(v), (std::vector<std::size_t>{1, 9}));
}

TEST(HardLefschetz, SingleSimplexAsBall) {
  const Complex s = library::simplex(3);
  const Verdict v = check_hard_lefschetz(s);
  ASSERT_TRUE(v.holds()) << v.reason;
  for (const auto& r : v.degrees) {
    EXPECT_EQ(r.dim_src, 0u);
    EXPECT_EQ(r.dim_dst, 0u);
  }
}

TEST(HardLefschetz, BundledSpheresAndBalls) {
  for (const auto& c : library::standard_spheres()) {
    if (c.dim() > 3) continue;
    EXPECT_TRUE(check_hard_lefschetz(c).holds()) << c.name();
  }
  for (const auto& c : library::standard_balls()) EXPECT_TRUE(check_hard_lefschetz(c).holds()) << c.name();
}

TEST(HardLefschetz, RationalModeAgreesWithPrime) {
  CheckOptions q;
  q.mode = FieldMode::Rational;
  const Verdict a = check_hard_lefschetz(library::octahedron());
  const Verdict b = check_hard_lefschetz(library::octahedron(), q);
  ASSERT_TRUE(b.holds());
  EXPECT_EQ(ranks_of(a), ranks_of(b));
}

TEST(HardLefschetz, ReplayReproducesRanks) {
  const Complex c = library::cone_over_octahedron();
  CheckOptions o;
  o.seed = 99;
  const Verdict v = check_hard_lefschetz(c, o);
  ASSERT_TRUE(v.holds());
  const auto again = replay_hard_lefschetz(c, o.mode, v.witness->seed);
  ASSERT_EQ(again.size(), v.degrees.size());
  for (std::size_t i = 0; i < again.size(); ++i) EXPECT_EQ(again[i].rank, v.degrees[i].rank);
}

TEST(HardLefschetz, ImpliesWeakOnTestSpheres) {
  auto spheres = library::standard_spheres();
  for (auto& s : library::stacked_spheres(6, 3)) spheres.push_back(s);
  for (const auto& s : spheres) {
    if (s.dim() > 3) continue;
    const Verdict hard = check_hard_lefschetz(s);
    ASSERT_TRUE(hard.holds()) << s.name();
    const Verdict weak = check_weak_lefschetz(s);
    EXPECT_TRUE(weak.holds()) << s.name();
  }
}

TEST(HardLefschetz, ImproperStoredCoordinatesAreAnError) {
  const Complex bad = path_with({{Rational(1), Rational(0)}, {Rational(2), Rational(0)}, {Rational(0), Rational(1)}});
  const Verdict v = check_hard_lefschetz(bad);
  EXPECT_EQ(v.status, Status::Error);
  EXPECT_NE(v.reason.find("improper"), std::string::npos);
}

TEST(HardLefschetz, DegenerateCoordinatesAreOnlyObserved) {
  const Complex ico = library::icosahedron();
  const Verdict v = observe_degenerate_lefschetz(ico, {0, 1, 2});
  EXPECT_NE(v.status, Status::Error);
  ASSERT_FALSE(v.notes.empty());
  EXPECT_NE(v.notes.back().find("not a refutation"), std::string::npos);
  EXPECT_EQ(observe_degenerate_lefschetz(ico, {0, 0, 1}).status, Status::Error);
}

// ---- orthogonality of kernel and image

TEST(Orthogonality, GenericAndVertexForms) {
  for (const auto& s : {library::octahedron(), library::icosahedron(), library::boundary_simplex(4)}) {
    const auto generic = orthogonality_check(s);
    EXPECT_TRUE(generic.ok) << s.name();
    for (Vertex v : s.vertices()) {
      const auto r = orthogonality_check(s, {}, v);
      EXPECT_TRUE(r.ok) << s.name() << " x_" << v << (r.failures.empty() ? "" : " " + r.failures[0]);
    }
  }
}

// ---- biased pairing

TEST(BiasedPairing, SimplexHolds) {
  const Verdict v = check_biased_pairing(library::simplex(3));
  ASSERT_TRUE(v.holds()) << v.reason;
  for (const auto& r : v.degrees) EXPECT_EQ(r.dim_src, 0u);
}

TEST(BiasedPairing, ConeOverCycleHolds) {
  const Verdict v = check_biased_pairing(library::cone_over_cycle4());
  ASSERT_TRUE(v.holds()) << v.reason;
  // k = 0, 1, each with the injectivity and the pairing record.
  EXPECT_EQ(v.degrees.size(), 4u);
  EXPECT_EQ(v.degrees[2].dim_src, 1u);
  EXPECT_EQ(v.degrees[2].rank, 1u);
}

TEST(BiasedPairing, SphereIsRejected) {
  const Verdict v = check_biased_pairing(library::octahedron());
  EXPECT_EQ(v.status, Status::Error);
  EXPECT_NE(v.reason.find("trivial for spheres"), std::string::npos);
}

TEST(BiasedPairing, RoutesAgreeOnBalls) {
  std::vector<Complex> balls = library::standard_balls();
  balls.push_back(star(library::icosahedron(), {0}));
  balls.push_back(deletion(library::icosahedron(), {0}));
  for (const auto& b : balls) {
    const Verdict v = check_biased_pairing(b);
    ASSERT_NE(v.status, Status::Error) << b.name() << " " << v.reason;
    for (std::size_t i = 0; i < v.degrees.size(); i += 2) EXPECT_EQ(v.degrees[i].rank, v.degrees[i + 1].rank);
  }
}

// Middle degree k = d/2 of an odd-dimensional ball: biased pairing holds iff
// A^k of the boundary, taken with all d forms, vanishes.
TEST(BiasedPairing, MiddleDegreeMatchesBoundary) {
  const auto boundary_middle_dim = [](const Complex& ball) {
    const Matrix<Rational> theta = coordinate_matrix<Rational>(ball);
    const ArtinianModule<Rational> bd(RelativePair::absolute(boundary_complex(ball)), theta);
    return bd.dim((ball.dim() + 1) / 2);
  };
  CheckOptions q;
  q.mode = FieldMode::Rational;
  q.trials = 1;
  const Complex generic = path_with({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(3)}});
  const Complex degenerate = path_with({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(2), Rational(0)}});
  EXPECT_TRUE(check_biased_pairing(generic, q, 1).holds());
  EXPECT_EQ(boundary_middle_dim(generic), 0u);
  EXPECT_EQ(check_biased_pairing(degenerate, q, 1).status, Status::LikelyFails);
  EXPECT_EQ(boundary_middle_dim(degenerate), 1u);

  const Complex ball = library::cone_over_octahedron();
  CheckOptions o;
  o.mode = FieldMode::Rational;
  const Verdict v = check_biased_pairing(ball, o, 2);
  ASSERT_TRUE(v.holds());
  SampleStream s(v.witness->seed);
  const auto g = realize<Rational>(ball, 4, s);
  const ArtinianModule<Rational> bd(RelativePair::absolute(boundary_complex(ball)), g.coords);
  EXPECT_EQ(bd.dim(2), 0u);
}

// ---- biased Poincaré duality

TEST(BiasedPoincare, WholeSphereIsVacuous) {
  const Complex s = library::octahedron();
  const Verdict v = check_biased_poincare(s, s);
  ASSERT_TRUE(v.holds());
  for (const auto& r : v.degrees) EXPECT_EQ(r.dim_src, 0u);
}

TEST(BiasedPoincare, EmptySubcomplexIsThePoincarePairing) {
  const Complex s = library::icosahedron();
  const Verdict v = check_biased_poincare(s, Complex::void_on(s.labels()));
  ASSERT_TRUE(v.holds());
  SampleStream stream(v.witness->seed);
  const Matrix<Fp> theta = realize<Fp>(s, 3, stream).coords;
  const ArtinianModule<Fp> a(RelativePair::absolute(s), theta);
  EXPECT_EQ(ranks_of(v), (std::vector<std::size_t>{rank(pairing_matrix(a, a, 0)), rank(pairing_matrix(a, a, 1))}));
  EXPECT_EQ(ranks_of(v), (std::vector<std::size_t>{1, 9}));
}

TEST(BiasedPoincare, HemispheresMatchBiasedPairing) {
  const auto h = library::octahedron_hemispheres();
  for (int k = 0; k <= 1; ++k) {
    const Verdict poincare = check_biased_poincare(h.sphere, h.lower, {}, k);
    const Verdict pairing = check_biased_pairing(h.upper, {}, k);
    ASSERT_NE(poincare.status, Status::Error) << poincare.reason;
    EXPECT_EQ(poincare.status, pairing.status) << k;
    EXPECT_EQ(poincare.degrees[0].dim_src, pairing.degrees[0].dim_src) << k;
  }
}

TEST(BiasedPoincare, Errors) {
  const Complex s = library::octahedron();
  EXPECT_EQ(check_biased_poincare(s, library::icosahedron()).status, Status::Error);
  EXPECT_EQ(check_biased_poincare(s, s, {}, 2).status, Status::Error);
  EXPECT_EQ(check_biased_poincare(s, s, {}, -1).status, Status::Error);
}

// ---- transversal prime

TEST(TransversalPrime, SingleVertexIsIdentical) {
  const Complex s = library::icosahedron();
  for (Vertex v : {0u, 5u, 11u}) EXPECT_TRUE(check_transversal_prime(s, {v}).holds());
}

TEST(TransversalPrime, AllVerticesMatchesGenericForm) {
  const Complex s = library::icosahedron();
  std::vector<Vertex> all = s.vertices();
  const Verdict v = check_transversal_prime(s, all);
  ASSERT_TRUE(v.holds());
  // A generic ℓ is injective below the middle (weak Lefschetz), and so is the
  // intersection of all ker x_v.
  for (const auto& r : v.degrees) {
    EXPECT_EQ(r.rank, 0u);
    EXPECT_EQ(r.dim_dst, 0u);
  }
}

TEST(TransversalPrime, KernelIsTheRelativePieceOfTheComplement) {
  struct Case {
    Complex sphere;
    std::vector<Vertex> w;
  };
  const Complex ico = library::icosahedron();
  const Vertex nb = link(ico, {0}).vertices().front();
  for (const auto& c : {Case{library::octahedron(), {4}}, Case{ico, {0}}, Case{ico, {0, nb}}}) {
    const Complex disk = induced_without(c.sphere, c.w);
    ASSERT_TRUE(is_homology_ball(disk));
    CheckOptions o;
    o.mode = FieldMode::Rational;
    const Verdict v = check_transversal_prime(c.sphere, c.w, o, 1);
    ASSERT_TRUE(v.holds());
    // Rebuild the witness and compare ker ℓ' with the image of A^1(Δ,∂Δ).
    SampleStream s(v.witness->seed);
    const Matrix<Rational> theta = realize<Rational>(c.sphere, 3, s).coords;
    LinearForm<Rational> ell(c.sphere.universe_size(), Rational::zero());
    for (std::size_t i = 0; i < ell.size(); ++i) ell[i] = Rational::parse(v.witness->ell[i]);
    const ArtinianModule<Rational> a(RelativePair::absolute(c.sphere), theta);
    const Subspace<Rational> ker = kernel_basis(multiplication_matrix(ell, a.piece(1), a.piece(2)));
    const ArtinianModule<Rational> rel(RelativePair(disk, boundary_complex(disk)), theta);
    std::vector<std::vector<Rational>> img;
    for (std::size_t i = 0; i < rel.dim(1); ++i) {
      img.push_back(a.piece(1).normal_form(Polynomial<Rational>{{rel.piece(1).rep_monomial(i), Rational::one()}}));
    }
    EXPECT_EQ(ker.dim(), rel.dim(1));
    EXPECT_EQ(ker, Subspace<Rational>::span(a.dim(1), img));
  }
}

TEST(TransversalPrime, Errors) {
  const Complex s = library::octahedron();
  EXPECT_EQ(check_transversal_prime(s, {}).status, Status::Error);
  EXPECT_EQ(check_transversal_prime(s, {17}).status, Status::Error);
  EXPECT_EQ(check_transversal_prime(s, {1, 1}).status, Status::Error);
}

// ---- perturbation lemma

TEST(Perturbation, ZeroPerturbation) {
  const Matrix<Fp> a = Matrix<Fp>::from_rows({{Fp::from_int(1), Fp::from_int(2), Fp::from_int(3)}, {Fp::from_int(2), Fp::from_int(4), Fp::from_int(6)}}, 3);
  const auto r = generic_combine(a, Matrix<Fp>(2, 3));
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.kernel_equality);
  EXPECT_EQ(kernel_basis(r.combined), kernel_basis(a));
}

TEST(Perturbation, DiagonalPair) {
  const Matrix<Rational> a = Matrix<Rational>::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(0)}}, 2);
  const Matrix<Rational> b = Matrix<Rational>::from_rows({{Rational(0), Rational(0)}, {Rational(0), Rational(1)}}, 2);
  const auto r = generic_combine(a, b);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.kernel_equality);
  EXPECT_TRUE(kernel_basis(r.combined).is_zero());
}

TEST(Perturbation, CounterexampleWithoutHypothesis) {
  const Matrix<Rational> a = Matrix<Rational>::from_rows({{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}, 2);
  const Matrix<Rational> b = Matrix<Rational>::from_rows({{Rational(-1), Rational(0)}, {Rational(0), Rational(0)}}, 2);
  const auto r = generic_combine(a, b);
  EXPECT_FALSE(r.hypothesis);
  EXPECT_FALSE(r.kernel_equality);
  EXPECT_EQ(kernel_basis(r.combined).dim(), 1u);
}

TEST(Perturbation, ShapeMismatch) {
  EXPECT_THROW(generic_combine(Matrix<Fp>(2, 3), Matrix<Fp>(3, 2)), DimensionError);
}

// Oracle: choose bases S of X and T of Y first. A kills the first `a` columns
// of S and maps the rest onto the first `r` columns of T; B sends the kernel of
// A into the span of the remaining columns of T, so B(ker A) ∩ im A = 0.
TEST(Perturbation, StructuredPairsSatisfyKernelEquality) {
  SampleStream s(4242);
  int resamples = 0;
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + s.next_u64() % 5;
    const std::size_t m = 2 + s.next_u64() % 5;
    const std::size_t r = s.next_u64() % (std::min(n, m));
    const std::size_t ka = n - r;
    Matrix<Fp> sb(n, n), tb(m, m);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sb(i, j) = s.next<Fp>();
    } while (rank(sb) != n);
    do {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) tb(i, j) = s.next<Fp>();
    } while (rank(tb) != m);
    // In the S/T coordinates: A' sends s_{ka+i} to t_i; B' sends the kernel part
    // into t_r.. and the rest anywhere.
    Matrix<Fp> ap(m, n), bp(m, n);
    for (std::size_t i = 0; i < r; ++i) ap(i, ka + i) = Fp::one();
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        const bool kernel_column = j < ka;
        if (kernel_column && i < r) continue;
        if (kernel_column && s.next_u64() % 3 == 0) continue;
        bp(i, j) = s.next<Fp>();
      }
    }
    // Coordinates to matrices: M = T M' S^{-1}.
    RowEchelon<Fp> inv_solver(2 * n);
    Matrix<Fp> sinv(n, n);
    {
      Matrix<Fp> aug(n, 2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = sb(i, j);
        aug(i, n + i) = Fp::one();
      }
      for (std::size_t i = 0; i < n; ++i) inv_solver.insert(std::vector<Fp>(aug.row(i).begin(), aug.row(i).end()));
      for (std::size_t i = 0; i < n; ++i) {
        const auto& row = inv_solver.row_for_pivot(i);
        for (std::size_t j = 0; j < n; ++j) sinv(i, j) = row[n + j];
      }
    }
    ASSERT_EQ(sb * sinv, Matrix<Fp>::identity(n));
    const Matrix<Fp> a = tb * ap * sinv;
    const Matrix<Fp> b = tb * bp * sinv;
    const auto res = generic_combine(a, b, static_cast<std::uint64_t>(round));
    ASSERT_TRUE(res.hypothesis) << round;
    ASSERT_TRUE(res.kernel_equality) << round;
    resamples += res.resamples;
  }
  EXPECT_LE(resamples, 1);
}

// ---- cone lemmas

TEST(ConeLemma, OctahedronEveryVertex) {
  const Complex o = library::octahedron();
  for (Vertex v : o.vertices()) {
    const Verdict r = cone_lemma_check(o, v);
    ASSERT_TRUE(r.holds()) << v << " " << r.reason;
    // Star = cone over the 4-cycle: dims (1, 2, 1, 0).
    EXPECT_EQ(r.degrees[0].rank, 1u);
    EXPECT_EQ(r.degrees[1].rank, 2u);
    EXPECT_EQ(r.degrees[2].rank, 1u);
    EXPECT_EQ(r.degrees[3].rank, 0u);
  }
}

TEST(ConeLemma, SimplexAndIcosahedron) {
  const Complex s = library::simplex(3);
  for (Vertex v : s.vertices()) EXPECT_TRUE(cone_lemma_check(s, v).holds());
  EXPECT_TRUE(cone_lemma_check(library::icosahedron(), 0).holds());
  EXPECT_TRUE(cone_lemma_check(library::cone_over_octahedron(), 0).holds());
}

TEST(ConeLemma, MissingVertex) {
  EXPECT_EQ(cone_lemma_check(library::octahedron(), 40).status, Status::Error);
}

// ---- middle reduction

TEST(MiddleReduction, BoundaryOfTetrahedron) {
  const Verdict v = middle_reduction_check(library::boundary_simplex(3));
  ASSERT_TRUE(v.holds()) << v.reason;
  // k = 0 (θ^3) and k = 1 (θ^1, bottom exponent 0), top and bottom each.
  ASSERT_EQ(v.degrees.size(), 4u);
  EXPECT_EQ(v.degrees[2].rank, v.degrees[3].rank);
  EXPECT_NE(v.degrees[3].map.find("x_n^0"), std::string::npos);
}

TEST(MiddleReduction, SpheresBallsAndIteratedCones) {
  for (const auto& c : {library::octahedron(), library::icosahedron(), library::cone_over_cycle4(),
                        library::cone_over_octahedron(), cone(library::cone_over_cycle4(), "t")}) {
    const Verdict v = middle_reduction_check(c);
    EXPECT_TRUE(v.holds()) << c.name() << " " << v.reason;
  }
}

// ---- stellar subdivision

TEST(StellarInvariance, FacetAndInteriorEdge) {
  const Complex ball = library::cone_over_cycle4();
  const auto interior = interior_faces(ball);
  ASSERT_FALSE(interior.empty());
  bool saw_edge = false, saw_facet = false;
  for (const auto& f : interior) {
    const Verdict v = stellar_invariance_check(ball, f);
    EXPECT_TRUE(v.holds()) << ball.face_to_string(f) << " " << v.reason;
    saw_edge |= f.size() == 2;
    saw_facet |= f.size() == 3;
  }
  EXPECT_TRUE(saw_edge);
  EXPECT_TRUE(saw_facet);
  const Complex big = library::cone_over_octahedron();
  EXPECT_TRUE(stellar_invariance_check(big, big.facets()[0]).holds());
}

TEST(StellarInvariance, Rejections) {
  const Complex ball = library::cone_over_cycle4();
  EXPECT_EQ(stellar_invariance_check(ball, {ball.vertex_id("5")}).status, Status::Error);
  const Face rim = boundary_complex(ball).facets()[0];
  EXPECT_EQ(stellar_invariance_check(ball, rim).status, Status::Error);
}

// ---- certificates

TEST(Certificate, Icosahedron) {
  const Complex ico = library::icosahedron();
  const Certificate c = certify_g(ico);
  EXPECT_EQ(c.verdict, Status::Holds);
  EXPECT_EQ(c.g, (std::vector<Count>{1, 8}));
  EXPECT_TRUE(c.m_sequence);
  EXPECT_TRUE(c.witness.has_value());
  const auto j = to_json(c);
  EXPECT_EQ(j.dump(), to_json(certify_g(ico)).dump());
  const auto replay = replay_certificate(ico, j);
  EXPECT_TRUE(replay.ok) << replay.detail;
}

TEST(Certificate, BoundaryOfFourSimplex) {
  // h = (1,1,1,1,1), so every g_i with i >= 1 vanishes.
  const Certificate c = certify_g(library::boundary_simplex(4));
  EXPECT_EQ(c.verdict, Status::Holds);
  EXPECT_EQ(c.h, (std::vector<Count>{1, 1, 1, 1, 1}));
  EXPECT_EQ(c.g, (std::vector<Count>{1, 0, 0}));
  EXPECT_TRUE(c.witness.has_value());
}

TEST(Certificate, TorusFailsAtHomology) {
  const Certificate c = certify_g(library::torus7());
  EXPECT_EQ(c.verdict, Status::Error);
  EXPECT_EQ(c.stage, "homology");
  EXPECT_EQ(c.betti, (std::vector<std::size_t>{0, 2, 1}));
}

TEST(Certificate, ReplayDetectsTampering) {
  const Complex ico = library::icosahedron();
  auto j = to_json(certify_g(ico));
  j["degrees"][1]["rank"] = 8;
  EXPECT_FALSE(replay_certificate(ico, j).ok);
  EXPECT_FALSE(replay_certificate(library::octahedron(), to_json(certify_g(ico))).ok);
}
