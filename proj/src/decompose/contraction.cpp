#include <algorithm>
#include <limits>

#include "facering/artinian/graded_piece.hpp"
#include "facering/decompose/decompose.hpp"
#include "facering/simplicial/geometric.hpp"
#include "facering/simplicial/homology.hpp"
#include "facering/simplicial/operators.hpp"

namespace facering {
namespace {

// X with edge[1] identified into edge[0].
Complex merge_image(const Complex& x, const Face& edge) {
  std::vector<Face> gens;
  for (const auto& f : x.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(v == edge[1] ? edge[0] : v);
    gens.push_back(make_face(std::move(g)));
  }
  return Complex::generated_by(x.labels(), std::move(gens), std::nullopt, x.name());
}

// Smallest dim A^d over the sampled coordinates; improper samples are skipped.
std::pair<std::size_t, std::size_t> top_dims(const Complex& e, const Complex& x, int degree,
                                             const CheckOptions& options, std::uint64_t salt) {
  const std::size_t ambient = static_cast<std::size_t>(e.dim() + 1);
  std::size_t best_e = std::numeric_limits<std::size_t>::max();
  std::size_t best_x = best_e;
  for (int t = 0; t < std::max(1, options.trials); ++t) {
    SampleStream stream(derive_seed(derive_seed(options.seed, salt), static_cast<std::uint64_t>(t)));
    const Matrix<Fp> theta = realize<Fp>(e.with_coords(std::nullopt), ambient, stream).coords;
    if (improper_face(e, theta)) continue;
    best_e = std::min(best_e, ArtinianModule<Fp>(RelativePair::absolute(e), theta).dim(degree));
    best_x = std::min(best_x, ArtinianModule<Fp>(RelativePair::absolute(x), theta).dim(degree));
  }
  if (best_e == std::numeric_limits<std::size_t>::max()) throw ImproperCoordinates("no proper sample", {});
  return {best_e, best_x};
}

EnvelopeStep measure(const Complex& e, const Complex& x, int degree, const CheckOptions& options, std::uint64_t salt) {
  EnvelopeStep s;
  s.contains = x.is_subcomplex_of(e);
  std::tie(s.dim_e, s.dim_x) = top_dims(e, x, degree, options, salt);
  s.ok = s.contains && s.dim_e == s.dim_x;
  if (!s.contains) s.detail = "X is not a subcomplex of E";
  else if (!s.ok) s.detail = "dim A^" + std::to_string(degree) + " differs";
  else s.detail = "envelope in degree " + std::to_string(degree);
  return s;
}

}  // namespace

std::vector<EdgeReport> contractible_edges(const Complex& delta) {
  const auto betti = reduced_betti(delta);
  std::vector<EdgeReport> out;
  for (const auto& edge : delta.faces(1)) {
    EdgeReport r;
    r.edge = edge;
    const ContractionResult c = contract_edge(delta.with_coords(std::nullopt), edge);
    r.link_condition = c.ok();
    r.violation = c.violation;
    if (c.ok()) {
      r.homology_preserved = reduced_betti(*c.complex) == betti;
      r.f_after = f_vector(*c.complex);
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const EdgeReport& a, const EdgeReport& b) { return a.edge < b.edge; });
  return out;
}

nlohmann::json to_json(const EdgeReport& r, const Complex& delta) {
  nlohmann::json j = {{"edge", delta.face_to_string(r.edge)}, {"link_condition", r.link_condition}};
  j["violation"] = r.violation ? nlohmann::json(delta.face_to_string(*r.violation)) : nlohmann::json(nullptr);
  j["homology_preserved"] = r.homology_preserved ? nlohmann::json(*r.homology_preserved) : nlohmann::json(nullptr);
  j["f_after"] = r.f_after;
  return j;
}

EnvelopeReport verify_envelope_contractions(const Complex& e, const Complex& x, const std::vector<Face>& edges,
                                            int degree, const CheckOptions& options) {
  EnvelopeReport report;
  report.degree = degree;
  if (x.labels() != e.labels()) throw PreconditionError("X and E must share a vertex universe");
  if (degree < 0 || degree > e.dim() + 1) throw PreconditionError("degree out of range");
  Complex ce = e.with_coords(std::nullopt);
  Complex cx = x.with_coords(std::nullopt);
  report.steps.push_back(measure(ce, cx, degree, options, 0));
  if (!report.steps.back().ok) {
    report.detail = "input: " + report.steps.back().detail;
    return report;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (cx.dim() < degree - 1) {
      report.detail = "X has dimension below d - 1 after " + std::to_string(i) + " contraction(s)";
      report.ok = true;
      return report;
    }
    const Face edge = make_face(edges[i]);
    const std::string at = "edge " + ce.face_to_string(edge);
    if (edge.size() != 2 || !ce.contains(edge)) {
      report.steps.push_back({edge, false, 0, 0, false, false, at + " is not an edge of E"});
      report.detail = report.steps.back().detail;
      return report;
    }
    const ContractionResult c = contract_edge(ce, edge);
    if (!c.ok()) {
      report.steps.push_back({edge, false, 0, 0, false, false, at + " fails the link condition"});
      report.detail = report.steps.back().detail;
      return report;
    }
    ce = *c.complex;
    cx = merge_image(cx, edge);
    EnvelopeStep s = measure(ce, cx, degree, options, i + 1);
    s.edge = edge;
    s.contracted = true;
    report.steps.push_back(s);
    if (!s.ok) {
      report.detail = at + ": " + s.detail;
      return report;
    }
  }
  report.ok = true;
  report.detail = "all " + std::to_string(edges.size()) + " contraction(s) keep the envelope";
  return report;
}

}  // namespace facering
