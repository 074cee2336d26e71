#include <algorithm>
#include <set>

#include "facering/decompose/decompose.hpp"
#include "facering/simplicial/homology.hpp"
#include "facering/simplicial/operators.hpp"

namespace facering {
namespace {

bool is_empty_complex(const Complex& c) { return c.is_void() || c.dim() < 0; }

Complex union_of_stars(const Complex& m, const std::vector<Vertex>& vs) {
  Complex u = Complex::void_on(m.labels());
  for (Vertex v : vs) u = complex_union(u, star(m, {v}));
  return u;
}

LinkDiagnostic diagnose(std::string which, const Complex& l, int want_dim, const NestedOrder& nested) {
  LinkDiagnostic d;
  d.which = std::move(which);
  if (is_empty_complex(l)) {
    d.empty = true;
    d.ok = true;
    d.detail = "empty";
    return d;
  }
  d.f = f_vector(l);
  if (l.dim() != want_dim) {
    d.detail = "dimension " + std::to_string(l.dim()) + ", expected " + std::to_string(want_dim) + " (codimension one)";
    return d;
  }
  if (want_dim == 0) {
    d.ok = true;
    d.detail = "vertex set, C-decomposable by default";
    return d;
  }
  if (!is_homology_manifold(l)) {
    d.detail = "not a homology manifold";
    return d;
  }
  d.nested_order = nested ? nested(l) : interior_vertices(l);
  auto report = std::make_shared<COrderReport>(verify_C_order(l, d.nested_order, nested));
  d.ok = report->holds;
  d.detail = report->holds ? "C-decomposable" : "nested order fails: " + report->detail;
  d.nested = std::move(report);
  return d;
}

nlohmann::json diagnostic_json(const LinkDiagnostic& d) {
  nlohmann::json j = {{"which", d.which}, {"empty", d.empty}, {"ok", d.ok}, {"detail", d.detail}, {"f", d.f}};
  j["nested_order"] = d.nested_order;
  j["nested"] = d.nested ? to_json(*d.nested) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

std::vector<Vertex> interior_vertices(const Complex& m) {
  const Complex bd = boundary_complex(m);
  std::vector<Vertex> out;
  for (Vertex v : m.vertices()) {
    if (!bd.contains({v})) out.push_back(v);
  }
  return out;
}

COrderReport verify_C_order(const Complex& m, const std::vector<Vertex>& order, const NestedOrder& nested) {
  COrderReport report;
  report.dim = m.dim();
  if (m.is_void()) throw PreconditionError("the void complex has no C-decomposition order");
  if (m.dim() == 0) {
    report.holds = true;
    report.covers = true;
    report.detail = "vertex set, C-decomposable by default";
    return report;
  }
  if (!is_homology_manifold(m)) throw PreconditionError("'" + m.name() + "' is not a homology manifold");
  const auto interior = interior_vertices(m);
  std::set<Vertex> seen;
  for (Vertex v : order) {
    if (!std::binary_search(interior.begin(), interior.end(), v)) {
      throw PreconditionError("vertex " + (v < m.universe_size() ? m.labels()[v] : std::to_string(v)) +
                              " is not an interior vertex");
    }
    if (!seen.insert(v).second) throw PreconditionError("vertex " + m.labels()[v] + " appears twice in the order");
  }

  const Complex bd = boundary_complex(m);
  std::vector<std::string> violations(4);
  Complex u = Complex::void_on(m.labels());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex w = order[i];
    COrderStep step;
    step.vertex = w;
    step.label = m.labels()[w];
    const Complex lk = link(m, {w});
    step.meet = diagnose("Lk_w M ∩ (∂M ∪ U_W)", intersection(lk, complex_union(bd, u)), m.dim() - 1, nested);
    step.link = diagnose("Lk_w U_W", u.contains({w}) ? link(u, {w}) : Complex::void_on(m.labels()), m.dim() - 1, nested);
    if (violations[3].empty()) {
      if (!step.meet.ok) violations[3] = "at " + step.label + ": " + step.meet.which + " " + step.meet.detail;
      else if (!step.link.ok) violations[3] = "at " + step.label + ": " + step.link.which + " " + step.link.detail;
    }
    u = complex_union(u, star(m, {w}));
    step.submanifold = u.dim() == m.dim() && is_homology_manifold(u);
    step.submanifold_detail = step.submanifold ? "homology submanifold" : "union of stars is not a homology submanifold";
    if (!step.submanifold && violations[1].empty()) {
      violations[1] = "after " + step.label + ": " + step.submanifold_detail;
    }
    report.steps.push_back(std::move(step));
  }
  report.covers = union_of_stars(m, order).same_faces(m);
  if (!report.covers) violations[2] = "the stars of the order do not cover M";
  for (int c = 1; c <= 3; ++c) {
    if (!violations[static_cast<std::size_t>(c)].empty()) {
      report.first_violation = c;
      report.detail = "(" + std::to_string(c) + ") " + violations[static_cast<std::size_t>(c)];
      return report;
    }
  }
  report.holds = true;
  report.detail = "conditions (1)-(3) hold";
  return report;
}

nlohmann::json to_json(const COrderReport& report) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"vertex", s.vertex},
                     {"label", s.label},
                     {"submanifold", s.submanifold},
                     {"submanifold_detail", s.submanifold_detail},
                     {"meet", diagnostic_json(s.meet)},
                     {"link", diagnostic_json(s.link)}});
  }
  return {{"holds", report.holds}, {"first_violation", report.first_violation}, {"detail", report.detail},
          {"covers", report.covers}, {"dim", report.dim},                         {"steps", steps}};
}

}  // namespace facering
