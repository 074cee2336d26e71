#include <algorithm>

#include "facering/lefschetz/lefschetz.hpp"
#include "facering/simplicial/homology.hpp"
#include "trials.hpp"

namespace facering {
namespace {

using namespace detail;

template <ExactField F>
LinearForm<F> unit_form(std::size_t n, Vertex v) {
  LinearForm<F> e(n, F::zero());
  e[v] = F::one();
  return e;
}

template <ExactField F>
TrialOutcome cone_trial(const Complex& delta, Vertex v, std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(delta, stream);
  const int d = top_degree(delta);
  const Complex bare = delta.with_coords(std::nullopt);
  const Geometric<F> lk = geometric_link(Geometric<F>{bare, theta}, Face{v});
  const ArtinianModule<F> a_lk(RelativePair::absolute(lk.complex), lk.coords);
  const ArtinianModule<F> a_st(RelativePair::absolute(star(bare, {v})), theta);
  const ArtinianModule<F> a_open(star_pair(bare, {v}), theta);
  const LinearForm<F> xv = unit_form<F>(delta.universe_size(), v);
  TrialOutcome out;
  for (int k = 0; k <= d; ++k) {
    const std::size_t l = a_lk.dim(k);
    const std::size_t s = a_st.dim(k);
    out.degrees.push_back({k, s, l, s, "dim A^" + std::to_string(k) + "(Lk_v) vs dim A^" + std::to_string(k) + "(St_v)",
                           l == s});
  }
  for (int k = 0; k < d; ++k) {
    const std::size_t r = rank(multiplication_matrix(xv, a_st.piece(k), a_open.piece(k + 1)));
    const std::size_t src = a_st.dim(k);
    const std::size_t dst = a_open.dim(k + 1);
    out.degrees.push_back({k, r, src, dst,
                           "A^" + std::to_string(k) + "(St_v) -> A^" + std::to_string(k + 1) + "(St_v, St_v - v) by x_v",
                           src == dst && r == src});
  }
  return out;
}

template <ExactField F>
TrialOutcome middle_trial(const Complex& delta, std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(delta, stream);
  const LinearForm<F> h = stream.next_vector<F>(delta.universe_size());
  const int d = top_degree(delta);
  const Complex bare = delta.with_coords(std::nullopt);
  const Geometric<F> cg = geometric_cone(Geometric<F>{bare, theta}, fresh_label(delta, "apex"), std::span<const F>(h));
  require_proper(cg.complex, cg.coords);
  const Modules<F> base = modules_for(bare, theta);
  const Modules<F> up = modules_for(cg.complex, cg.coords);
  const LinearForm<F> xn = unit_form<F>(cg.complex.universe_size(), cg.complex.vertex_id(cg.complex.labels().back()));
  TrialOutcome out;
  out.ell = render(h);
  for (int k = 0; 2 * k < d; ++k) {
    const std::size_t top = rank(power_map_matrix(h, k, d - 2 * k, base.rel, base.abs, InclusionAt::Last));
    const std::size_t bottom = rank(power_map_matrix(xn, k + 1, d - 2 * k - 1, up.rel, up.abs, InclusionAt::Last));
    const bool ok = top == bottom && base.rel.dim(k) == up.rel.dim(k + 1) && base.abs.dim(d - k) == up.abs.dim(d - k);
    out.degrees.push_back({k, top, base.rel.dim(k), base.abs.dim(d - k),
                           "A^" + std::to_string(k) + "(Δ,∂Δ) -> A^" + std::to_string(d - k) + "(Δ) by θ^" +
                               std::to_string(d - 2 * k),
                           ok});
    out.degrees.push_back({k, bottom, up.rel.dim(k + 1), up.abs.dim(d - k),
                           "A^" + std::to_string(k + 1) + "(cΔ,∂cΔ) -> A^" + std::to_string(d - k) + "(cΔ) by x_n^" +
                               std::to_string(d - 2 * k - 1),
                           ok});
  }
  return out;
}

template <ExactField F>
TrialOutcome stellar_trial(const Complex& delta, const Face& sigma, const std::vector<int>& ks, std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(delta, stream);
  const Complex bare = delta.with_coords(std::nullopt);
  const Complex sub = stellar_subdivision(bare, sigma, fresh_label(delta, "s"));
  Matrix<F> theta2(theta.rows(), sub.universe_size());
  for (std::size_t j = 0; j < theta.rows(); ++j) {
    for (std::size_t v = 0; v < theta.cols(); ++v) theta2(j, v) = theta(j, v);
  }
  const std::size_t s = sub.universe_size() - 1;
  for (Vertex u : sigma) {
    F w = stream.next<F>();
    while (w.is_zero()) w = stream.next<F>();
    for (std::size_t j = 0; j < theta.rows(); ++j) theta2(j, s) += w * theta(j, u);
  }
  require_proper(sub, theta2);
  const auto before = biased_records(bare, theta, ks);
  const auto after = biased_records(sub, theta2, ks);
  TrialOutcome out;
  // Records come in (injectivity, pairing) pairs; compare the injectivity verdicts.
  for (std::size_t i = 0; i < before.size(); i += 2) {
    const bool agree = before[i].ok == after[i].ok;
    DegreeRecord b = before[i];
    DegreeRecord a = after[i];
    b.map = "before: " + b.map;
    a.map = "after: " + a.map;
    b.ok = a.ok = agree;
    out.degrees.push_back(b);
    out.degrees.push_back(a);
    if (!before[i].ok) out.notes.push_back("degree " + std::to_string(b.k) + ": biased pairing fails on both sides");
  }
  return out;
}

}  // namespace

Verdict cone_lemma_check(const Complex& delta, Vertex v, const CheckOptions& options) {
  const std::string name = "cone_lemma";
  return guarded(name, [&] {
    const auto verts = delta.vertices();
    if (!std::binary_search(verts.begin(), verts.end(), v)) {
      throw PreconditionError("vertex id " + std::to_string(v) + " is not a vertex of '" + delta.name() + "'");
    }
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return run_trials(name, options, delta.coords().has_value(),
                        [&](std::uint64_t s) { return cone_trial<F>(delta, v, s); });
    });
  });
}

Verdict middle_reduction_check(const Complex& delta, const CheckOptions& options) {
  const std::string name = "middle_reduction";
  return guarded(name, [&] {
    if (options.strict && !is_homology_sphere(delta) && !is_homology_ball(delta)) {
      throw PreconditionError("'" + delta.name() + "' is not a homology sphere or ball");
    }
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return run_trials(name, options, delta.coords().has_value(),
                        [&](std::uint64_t s) { return middle_trial<F>(delta, s); });
    });
  });
}

Verdict stellar_invariance_check(const Complex& delta, const Face& sigma, const CheckOptions& options,
                                 std::optional<int> only_degree) {
  const std::string name = "stellar_invariance";
  return guarded(name, [&] {
    if (sigma.size() < 2) throw PreconditionError("σ must have dimension >= 1: a vertex gives no subdivision");
    if (!delta.contains(sigma)) throw PreconditionError("σ is not a face of '" + delta.name() + "'");
    if (boundary_complex(delta).contains(sigma)) throw PreconditionError("σ lies on the boundary");
    if (options.strict && !is_homology_ball(delta)) {
      throw PreconditionError("'" + delta.name() + "' is not a homology ball");
    }
    const auto ks = degrees_upto(top_degree(delta) / 2, only_degree);
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return run_trials(name, options, delta.coords().has_value(),
                        [&](std::uint64_t s) { return stellar_trial<F>(delta, sigma, ks, s); });
    });
  });
}

}  // namespace facering
