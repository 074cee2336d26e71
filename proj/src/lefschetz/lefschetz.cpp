#include "facering/lefschetz/lefschetz.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "facering/simplicial/geometric.hpp"
#include "facering/simplicial/homology.hpp"
#include "facering/simplicial/operators.hpp"
#include "trials.hpp"

namespace facering {
namespace detail {

Verdict run_trials(const std::string& check, const CheckOptions& options, bool stored_coords,
                   const std::function<TrialOutcome(std::uint64_t)>& trial) {
  Verdict v;
  v.check = check;
  const int total = std::max(1, options.trials);
  for (int t = 0; t < total; ++t) {
    const std::uint64_t seed = derive_seed(options.seed, static_cast<std::uint64_t>(t));
    v.trials = t + 1;
    TrialOutcome out;
    try {
      out = trial(seed);
    } catch (const ImproperCoordinates& e) {
      if (stored_coords) return Verdict::error(check, std::string("stored coordinates: ") + e.what());
      v.notes.push_back("trial " + std::to_string(t) + ": " + e.what() + ", resampled");
      continue;
    } catch (const std::exception& e) {
      Verdict err = Verdict::error(check, e.what());
      err.trials = t + 1;
      err.notes = v.notes;
      return err;
    }
    v.degrees = out.degrees;
    for (auto& n : out.notes) v.notes.push_back(std::move(n));
    const bool ok = std::all_of(out.degrees.begin(), out.degrees.end(), [](const DegreeRecord& r) { return r.ok || r.informational; });
    if (ok) {
      v.status = Status::Holds;
      v.witness = Witness{seed, stored_coords ? "input" : "sampled", std::move(out.ell), v.degrees};
      return v;
    }
  }
  v.status = Status::LikelyFails;
  v.reason = "no successful trial out of " + std::to_string(v.trials);
  return v;
}

}  // namespace detail

namespace {

using namespace detail;

// ---- weak / hard Lefschetz

template <ExactField F>
TrialOutcome weak_trial(const Complex& delta, std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(delta, stream);
  const LinearForm<F> ell = stream.next_vector<F>(delta.universe_size());
  const ArtinianModule<F> a = module_of(delta, theta, false);
  const int d = top_degree(delta);
  TrialOutcome out;
  out.ell = render(ell);
  for (int i = 0; 2 * i <= d - 2; ++i) {
    const Matrix<F> m = multiplication_matrix(ell, a.piece(i), a.piece(i + 1));
    DegreeRecord r{i, rank(m), a.dim(i), a.dim(i + 1), power_label(i, 1, "(Δ)", "(Δ)"), false};
    r.ok = r.rank == r.dim_src;
    out.degrees.push_back(r);
  }
  if (d % 2 == 1) {
    const int i = (d - 1) / 2;
    const Matrix<F> m = multiplication_matrix(ell, a.piece(i), a.piece(i + 1));
    DegreeRecord r{i, rank(m), a.dim(i), a.dim(i + 1), power_label(i, 1, "(Δ)", "(Δ)") + " (middle)", false, true};
    r.ok = r.rank == r.dim_src;
    out.degrees.push_back(r);
  }
  return out;
}

template <ExactField F>
TrialOutcome hard_records(const Complex& delta, const Matrix<F>& theta, const LinearForm<F>& ell) {
  const Modules<F> m = modules_for(delta, theta);
  const int d = top_degree(delta);
  TrialOutcome out;
  out.ell = render(ell);
  for (int k = 0; 2 * k <= d; ++k) {
    const Matrix<F> last = power_map_matrix(ell, k, d - 2 * k, m.rel, m.abs, InclusionAt::Last);
    const Matrix<F> first = power_map_matrix(ell, k, d - 2 * k, m.rel, m.abs, InclusionAt::First);
    if (!(last == first)) {
      throw std::logic_error("factoring orders disagree in degree " + std::to_string(k));
    }
    DegreeRecord r{k, rank(last), m.rel.dim(k), m.abs.dim(d - k), power_label(k, d - 2 * k, "(Δ,∂Δ)", "(Δ)"), false};
    r.ok = r.dim_src == r.dim_dst && r.rank == r.dim_src;
    out.degrees.push_back(r);
  }
  return out;
}

template <ExactField F>
TrialOutcome hard_trial(const Complex& delta, std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(delta, stream);
  return hard_records(delta, theta, stream.next_vector<F>(delta.universe_size()));
}

// ---- Gräbe pairing

template <ExactField F>
TrialOutcome graebe_trial(const Complex& delta, std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(delta, stream);
  const Modules<F> m = modules_for(delta, theta);
  const int d = top_degree(delta);
  TrialOutcome out;
  for (int k = 0; k <= d; ++k) {
    const Matrix<F> p = pairing_matrix(m.rel, m.abs, k);
    DegreeRecord r{k, rank(p), p.rows(), p.cols(),
                   "A^" + std::to_string(k) + "(Δ,∂Δ) x A^" + std::to_string(d - k) + "(Δ) -> R", false};
    r.ok = r.dim_src == r.dim_dst && r.rank == r.dim_src;
    out.degrees.push_back(r);
  }
  return out;
}

// ---- biased pairing

template <ExactField F>
TrialOutcome biased_trial(const Complex& delta, const std::vector<int>& ks, std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(delta, stream);
  return {biased_records(delta, theta, ks), {}, {}};
}

// ---- biased Poincaré duality

template <ExactField F>
TrialOutcome biased_poincare_trial(const Complex& sigma, const Complex& x, const std::vector<int>& ks,
                                   std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(sigma, stream);
  const ArtinianModule<F> a = module_of(sigma, theta, false);
  const ArtinianModule<F> ax(RelativePair::absolute(x), theta);
  const FundamentalClass<F> fc = fundamental_class(a);
  const int d = top_degree(sigma);
  auto ideal = [&](int k) { return basis_columns(kernel_basis(restriction_matrix(a.piece(k), ax.piece(k)))); };
  TrialOutcome out;
  for (int k : ks) {
    const Matrix<F> lo = ideal(k);
    const Matrix<F> hi = ideal(d - k);
    const std::size_t r =
        lo.cols() == 0 || hi.cols() == 0 ? 0 : rank(lo.transpose() * pairing_block(fc, a.piece(k), a.piece(d - k)) * hi);
    out.degrees.push_back({k, r, lo.cols(), hi.cols(),
                           "I^" + std::to_string(k) + " x I^" + std::to_string(d - k) + " -> R", r == lo.cols()});
  }
  return out;
}

// ---- transversal prime

template <ExactField F>
LinearForm<F> supported_form(std::size_t n, const std::vector<Vertex>& support, SampleStream& stream) {
  LinearForm<F> ell(n, F::zero());
  for (Vertex v : support) {
    F c = stream.next<F>();
    while (c.is_zero()) c = stream.next<F>();
    ell[v] = c;
  }
  return ell;
}

template <ExactField F>
TrialOutcome transversal_trial(const Complex& delta, const std::vector<Vertex>& w, const std::vector<int>& ks,
                               std::uint64_t seed) {
  SampleStream stream(seed);
  const Matrix<F> theta = coords_for<F>(delta, stream);
  const LinearForm<F> ell = supported_form<F>(delta.universe_size(), w, stream);
  const ArtinianModule<F> a = module_of(delta, theta, false);
  TrialOutcome out;
  out.ell = render(ell);
  for (int k : ks) {
    const Subspace<F> lhs = kernel_basis(multiplication_matrix(ell, a.piece(k), a.piece(k + 1)));
    Subspace<F> rhs = Subspace<F>::full(a.dim(k));
    for (Vertex v : w) {
      LinearForm<F> xv(delta.universe_size(), F::zero());
      xv[v] = F::one();
      rhs = subspace_intersect(rhs, kernel_basis(multiplication_matrix(xv, a.piece(k), a.piece(k + 1))));
    }
    out.degrees.push_back({k, lhs.dim(), a.dim(k), rhs.dim(),
                           "ker ℓ' vs ∩ ker x_v on A^" + std::to_string(k) + "(Δ)", lhs == rhs});
  }
  return out;
}

// ---- orthogonality

template <ExactField F>
OrthogonalityReport orthogonality_impl(const Complex& sphere, const CheckOptions& options,
                                       std::optional<Vertex> vertex_ell) {
  SampleStream stream(derive_seed(options.seed, 0));
  const Matrix<F> theta = coords_for<F>(sphere, stream);
  LinearForm<F> ell = stream.next_vector<F>(sphere.universe_size());
  if (vertex_ell) {
    std::fill(ell.begin(), ell.end(), F::zero());
    ell[*vertex_ell] = F::one();
  }
  const ArtinianModule<F> a = module_of(sphere, theta, false);
  const FundamentalClass<F> fc = fundamental_class(a);
  const int d = top_degree(sphere);
  OrthogonalityReport report;
  for (int k = 0; 2 * k <= d; ++k) {
    const Matrix<F> l = power_map_matrix(ell, k, d - 2 * k, a, a, InclusionAt::Last);
    const Subspace<F> ker = kernel_basis(l);
    const Subspace<F> im = image(l);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    if (ker.dim() + im.dim() != a.dim(k)) {
      report.ok = false;
      report.failures.push_back(tag + "dim ker + dim im != dim A^k");
    }
    if (ker.is_zero() || im.is_zero()) continue;
    const Matrix<F> block =
        basis_columns(ker).transpose() * pairing_block(fc, a.piece(k), a.piece(d - k)) * basis_columns(im);
    if (!block.is_zero()) {
      report.ok = false;
      report.failures.push_back(tag + "kernel pairs nontrivially with image");
    }
  }
  return report;
}

// ---- degenerate observation

template <ExactField F>
TrialOutcome degenerate_trial(const Complex& delta, const std::vector<Vertex>& triple, std::uint64_t seed) {
  SampleStream stream(seed);
  auto g = realize<F>(delta.with_coords(std::nullopt), static_cast<std::size_t>(top_degree(delta)), stream);
  const F a = stream.next<F>();
  const F b = stream.next<F>();
  for (std::size_t j = 0; j < g.coords.rows(); ++j) {
    g.coords(j, triple[2]) = a * g.coords(j, triple[0]) + b * g.coords(j, triple[1]);
  }
  TrialOutcome out;
  if (auto bad = improper_face(delta, g.coords)) {
    out.notes.push_back("degenerate placement is improper at face " + delta.face_to_string(*bad));
    out.degrees.push_back({0, 0, 0, 0, "proper coordinates", false});
    return out;
  }
  return hard_records(delta, g.coords, stream.next_vector<F>(delta.universe_size()));
}

void require_sphere_or_ball(const Complex& delta, const CheckOptions& options) {
  if (!options.strict) return;
  if (!is_homology_sphere(delta) && !is_homology_ball(delta)) {
    throw PreconditionError("'" + delta.name() + "' is not a homology sphere or ball");
  }
}

bool stored(const Complex& delta) { return delta.coords().has_value(); }

}  // namespace

Verdict check_weak_lefschetz(const Complex& delta, const CheckOptions& options) {
  const std::string name = "weak_lefschetz";
  return guarded(name, [&] {
    if (options.strict && !is_homology_sphere(delta)) {
      throw PreconditionError("'" + delta.name() + "' is not a homology sphere");
    }
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return detail::run_trials(name, options, stored(delta), [&](std::uint64_t s) { return weak_trial<F>(delta, s); });
    });
  });
}

Verdict check_hard_lefschetz(const Complex& delta, const CheckOptions& options) {
  const std::string name = "hard_lefschetz";
  return guarded(name, [&] {
    require_sphere_or_ball(delta, options);
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return detail::run_trials(name, options, stored(delta), [&](std::uint64_t s) { return hard_trial<F>(delta, s); });
    });
  });
}

Verdict check_graebe_pairing(const Complex& delta, const CheckOptions& options) {
  const std::string name = "graebe_pairing";
  return guarded(name, [&] {
    require_sphere_or_ball(delta, options);
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return run_trials(name, options, stored(delta), [&](std::uint64_t s) { return graebe_trial<F>(delta, s); });
    });
  });
}

std::vector<DegreeRecord> replay_hard_lefschetz(const Complex& delta, FieldMode mode, std::uint64_t trial_seed) {
  return dispatch(mode, [&](auto zero) {
    using F = decltype(zero);
    return hard_trial<F>(delta, trial_seed).degrees;
  });
}

Verdict check_biased_pairing(const Complex& delta, const CheckOptions& options, std::optional<int> only_degree) {
  const std::string name = "biased_pairing";
  return guarded(name, [&] {
    if (boundary_complex(delta).is_void()) throw PreconditionError("trivial for spheres: the boundary is empty");
    if (options.strict && !is_homology_ball(delta)) {
      throw PreconditionError("'" + delta.name() + "' is not a homology ball");
    }
    const auto ks = degrees_upto(top_degree(delta) / 2, only_degree);
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return detail::run_trials(name, options, stored(delta),
                                [&](std::uint64_t s) { return biased_trial<F>(delta, ks, s); });
    });
  });
}

Verdict check_biased_poincare(const Complex& sigma, const Complex& x, const CheckOptions& options,
                              std::optional<int> only_degree) {
  const std::string name = "biased_poincare";
  return guarded(name, [&] {
    if (x.labels() != sigma.labels() || !x.is_subcomplex_of(sigma)) {
      throw PreconditionError("'" + x.name() + "' is not a subcomplex of '" + sigma.name() + "'");
    }
    if (options.strict && !is_homology_sphere(sigma)) {
      throw PreconditionError("'" + sigma.name() + "' is not a homology sphere");
    }
    const auto ks = degrees_upto(top_degree(sigma) / 2, only_degree);
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return detail::run_trials(name, options, stored(sigma),
                                [&](std::uint64_t s) { return biased_poincare_trial<F>(sigma, x, ks, s); });
    });
  });
}

Verdict check_transversal_prime(const Complex& delta, const std::vector<Vertex>& w, const CheckOptions& options,
                                std::optional<int> only_degree) {
  const std::string name = "transversal_prime";
  return guarded(name, [&] {
    if (w.empty()) throw PreconditionError("W is empty");
    const auto verts = delta.vertices();
    std::set<Vertex> seen;
    for (Vertex v : w) {
      if (!std::binary_search(verts.begin(), verts.end(), v)) {
        throw PreconditionError("vertex id " + std::to_string(v) + " is not a vertex of '" + delta.name() + "'");
      }
      if (!seen.insert(v).second) throw PreconditionError("W lists a vertex twice");
    }
    const int d = top_degree(delta);
    std::vector<int> ks;
    if (only_degree) {
      if (*only_degree < 0 || *only_degree >= d) throw PreconditionError("degree out of range 0.." + std::to_string(d - 1));
      ks = {*only_degree};
    } else {
      for (int k = 0; 2 * k < d; ++k) ks.push_back(k);
    }
    return dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return detail::run_trials(name, options, stored(delta),
                                [&](std::uint64_t s) { return transversal_trial<F>(delta, w, ks, s); });
    });
  });
}

OrthogonalityReport orthogonality_check(const Complex& sphere, const CheckOptions& options,
                                        std::optional<Vertex> vertex_ell) {
  if (!is_homology_sphere(sphere)) throw PreconditionError("'" + sphere.name() + "' is not a homology sphere");
  return dispatch(options.mode, [&](auto zero) {
    using F = decltype(zero);
    return orthogonality_impl<F>(sphere, options, vertex_ell);
  });
}

Verdict observe_degenerate_lefschetz(const Complex& delta, const std::vector<Vertex>& triple,
                                     const CheckOptions& options) {
  const std::string name = "degenerate_observation";
  return guarded(name, [&] {
    if (triple.size() != 3) throw PreconditionError("need exactly three vertices");
    if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2]) {
      throw PreconditionError("the three vertices must be distinct");
    }
    for (Vertex v : triple) {
      if (v >= delta.universe_size()) throw PreconditionError("vertex id out of range");
    }
    require_sphere_or_ball(delta, options);
    Verdict v = dispatch(options.mode, [&](auto zero) {
      using F = decltype(zero);
      return detail::run_trials(name, options, false,
                                [&](std::uint64_t s) { return degenerate_trial<F>(delta, triple, s); });
    });
    v.notes.push_back("observation under degenerate coordinates; not a refutation");
    return v;
  });
}

std::vector<Face> interior_faces(const Complex& delta) {
  const Complex bd = boundary_complex(delta);
  std::vector<Face> out;
  for (int k = 1; k <= delta.dim(); ++k) {
    for (const auto& f : delta.faces(k)) {
      if (!bd.contains(f)) out.push_back(f);
    }
  }
  return out;
}

}  // namespace facering
