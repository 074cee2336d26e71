#include "facering/simplicial/operators.hpp"

#include <algorithm>

#include "facering/linalg/random.hpp"
#include "facering/simplicial/geometric.hpp"
#include "facering/simplicial/homology.hpp"

namespace facering {
namespace {

void require_face(const Complex& delta, const Face& sigma) {
  if (!delta.contains(sigma)) {
    throw FaceNotFound("face " + delta.face_to_string(sigma) + " is not in the complex");
  }
}

void require_same_universe(const Complex& a, const Complex& b) {
  if (a.labels() != b.labels()) throw PreconditionError("complexes over different vertex universes");
}

// Nonzero small rational weight.
Rational nonzero_weight(SampleStream& stream) {
  for (;;) {
    Rational r = stream.next<Rational>();
    if (!r.is_zero()) return r;
  }
}

}  // namespace

Complex star(const Complex& delta, const Face& sigma) {
  require_face(delta, sigma);
  std::vector<Face> gens;
  for (const auto& f : delta.facets()) {
    if (is_subface(sigma, f)) gens.push_back(f);
  }
  return Complex::generated_by(delta.labels(), std::move(gens), delta.coords());
}

Complex link(const Complex& delta, const Face& sigma) {
  require_face(delta, sigma);
  std::vector<Face> gens;
  for (const auto& f : delta.facets()) {
    if (is_subface(sigma, f)) gens.push_back(face_difference(f, sigma));
  }
  std::optional<CoordTable> coords;
  if (delta.coords()) {
    const Matrix<Rational> projected = project_away(coordinate_matrix<Rational>(delta), sigma);
    CoordTable table(delta.universe_size(), std::vector<Rational>(projected.rows()));
    for (std::size_t v = 0; v < table.size(); ++v) {
      for (std::size_t j = 0; j < projected.rows(); ++j) table[v][j] = projected(j, v);
    }
    coords = std::move(table);
  }
  return Complex::generated_by(delta.labels(), std::move(gens), std::move(coords));
}

Complex deletion(const Complex& delta, const Face& sigma) {
  std::vector<Face> gens;
  for (const auto& f : delta.facets()) {
    if (!is_subface(sigma, f)) {
      gens.push_back(f);
      continue;
    }
    for (Vertex u : sigma) gens.push_back(face_difference(f, {u}));
  }
  return Complex::generated_by(delta.labels(), std::move(gens), delta.coords());
}

RelativePair star_pair(const Complex& delta, const Face& sigma) {
  Complex st = star(delta, sigma);
  Complex rest = deletion(st, sigma);
  return RelativePair(std::move(st), std::move(rest));
}

Complex intersection(const Complex& a, const Complex& b) {
  require_same_universe(a, b);
  std::vector<Face> gens;
  for (const auto& f : a.face_set()) {
    if (b.contains(f)) gens.push_back(f);
  }
  return Complex::generated_by(a.labels(), std::move(gens), a.coords());
}

Complex complex_union(const Complex& a, const Complex& b) {
  require_same_universe(a, b);
  std::vector<Face> gens = a.facets();
  gens.insert(gens.end(), b.facets().begin(), b.facets().end());
  return Complex::generated_by(a.labels(), std::move(gens), a.coords() ? a.coords() : b.coords());
}

std::string fresh_label(const Complex& delta, const std::string& base) {
  const auto& labels = delta.labels();
  const auto taken = [&](const std::string& s) { return std::find(labels.begin(), labels.end(), s) != labels.end(); };
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

namespace {

// Appends new labels; existing coordinate rows gain a trailing zero.
struct Extended {
  std::vector<std::string> labels;
  std::optional<CoordTable> coords;
};

Extended extend_universe(const Complex& delta, const std::vector<std::string>& extra) {
  Extended out{delta.labels(), std::nullopt};
  for (const auto& label : extra) {
    if (std::find(out.labels.begin(), out.labels.end(), label) != out.labels.end()) {
      throw PreconditionError("label '" + label + "' already used");
    }
    out.labels.push_back(label);
  }
  if (delta.coords()) {
    CoordTable table = *delta.coords();
    for (auto& row : table) row.push_back(Rational::zero());
    const std::size_t l = delta.ambient_dim() + 1;
    for (std::size_t i = 0; i < extra.size(); ++i) table.emplace_back(l, Rational::zero());
    out.coords = std::move(table);
  }
  return out;
}

}  // namespace

Complex cone(const Complex& delta, const std::string& apex, std::optional<std::vector<Rational>> apex_coords) {
  Extended ext = extend_universe(delta, {apex});
  const auto a = static_cast<Vertex>(delta.universe_size());
  if (ext.coords) {
    const std::size_t l = delta.ambient_dim() + 1;
    if (apex_coords) {
      if (apex_coords->size() != l) throw DimensionError("apex coordinates must live in R^" + std::to_string(l));
      ext.coords->back() = *apex_coords;
    } else {
      ext.coords->back().back() = Rational::one();
    }
  }
  std::vector<Face> gens;
  for (const auto& f : delta.facets()) gens.push_back(face_union(f, {a}));
  return Complex::generated_by(std::move(ext.labels), std::move(gens), std::move(ext.coords));
}

Complex suspension(const Complex& delta, const std::string& north, const std::string& south) {
  Extended ext = extend_universe(delta, {north, south});
  const auto n = static_cast<Vertex>(delta.universe_size());
  const auto s = n + 1;
  if (ext.coords) {
    (*ext.coords)[n].back() = Rational::one();
    (*ext.coords)[s].back() = -Rational::one();
  }
  std::vector<Face> gens;
  for (const auto& f : delta.facets()) {
    gens.push_back(face_union(f, {n}));
    gens.push_back(face_union(f, {s}));
  }
  return Complex::generated_by(std::move(ext.labels), std::move(gens), std::move(ext.coords));
}

Complex boundary_complex(const Complex& delta) {
  if (!delta.is_pure()) throw PreconditionError("boundary_complex needs a pure complex");
  if (delta.is_void() || delta.dim() < 0) return Complex::void_on(delta.labels());
  std::unordered_map<Face, int, FaceHash> count;
  for (const auto& facet : delta.facets()) {
    for (std::size_t drop = 0; drop < facet.size(); ++drop) {
      Face r = facet;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
      ++count[r];
    }
  }
  std::vector<Face> gens;
  for (auto& [ridge, c] : count) {
    if (c == 1) gens.push_back(ridge);
  }
  return Complex::generated_by(delta.labels(), std::move(gens), delta.coords());
}

Complex skeleton(const Complex& delta, int k) {
  std::vector<Face> gens;
  for (int i = -1; i <= std::min(k, delta.dim()); ++i) {
    for (const auto& f : delta.faces(i)) gens.push_back(f);
  }
  return Complex::generated_by(delta.labels(), std::move(gens), delta.coords());
}

Complex double_ball(const Complex& delta) {
  const Complex bd = boundary_complex(delta);
  if (bd.is_void()) throw PreconditionError("double: boundary is empty, not a ball");
  if (!is_homology_ball(delta)) throw PreconditionError("double: input is not a homology ball");
  std::vector<std::string> labels = delta.labels();
  std::vector<Vertex> twin(delta.universe_size());
  std::optional<CoordTable> coords = delta.coords();
  for (Vertex v = 0; v < delta.universe_size(); ++v) {
    twin[v] = v;
    if (bd.contains({v}) || !delta.contains({v})) continue;
    std::string name = delta.labels()[v] + "'";
    while (std::find(labels.begin(), labels.end(), name) != labels.end()) name += "'";
    twin[v] = static_cast<Vertex>(labels.size());
    labels.push_back(name);
    if (coords) coords->push_back((*coords)[v]);
  }
  std::vector<Face> facets = delta.facets();
  for (const auto& f : delta.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(twin[v]);
    g = make_face(std::move(g));
    if (std::find(facets.begin(), facets.end(), g) != facets.end()) {
      throw PreconditionError("double: simpliciality violated, facet " + delta.face_to_string(g) +
                              " would appear twice");
    }
    facets.push_back(std::move(g));
  }
  return Complex(std::move(labels), std::move(facets), std::move(coords), delta.name().empty() ? "" : "D" + delta.name());
}

bool link_condition(const Complex& delta, Vertex u, Vertex v, Face* violation) {
  std::vector<Face> bad;
  for (const auto& tau : delta.face_set()) {
    if (std::binary_search(tau.begin(), tau.end(), u) || std::binary_search(tau.begin(), tau.end(), v)) continue;
    if (!delta.contains(face_union(tau, {u})) || !delta.contains(face_union(tau, {v}))) continue;
    if (!delta.contains(face_union(tau, make_face({u, v})))) bad.push_back(tau);
  }
  if (bad.empty()) return true;
  if (violation != nullptr) {
    *violation = *std::min_element(bad.begin(), bad.end(), [](const Face& a, const Face& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  }
  return false;
}

ContractionResult contract_edge(const Complex& delta, const Face& edge, std::uint64_t seed) {
  if (edge.size() != 2 || !delta.contains(edge)) {
    throw FaceNotFound("contract_edge: " + delta.face_to_string(edge) + " is not an edge of the complex");
  }
  const Vertex keep = edge[0];
  const Vertex gone = edge[1];
  Face violation;
  if (!link_condition(delta, keep, gone, &violation)) return {std::nullopt, violation};
  std::vector<Face> gens;
  for (const auto& f : delta.facets()) {
    Face g;
    for (Vertex w : f) g.push_back(w == gone ? keep : w);
    gens.push_back(make_face(std::move(g)));
  }
  std::optional<CoordTable> coords = delta.coords();
  if (coords) {
    SampleStream stream(seed);
    const Rational a = nonzero_weight(stream);
    const Rational b = nonzero_weight(stream);
    auto& row = (*coords)[keep];
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = a * row[j] + b * (*coords)[gone][j];
  }
  return {Complex::generated_by(delta.labels(), std::move(gens), std::move(coords), delta.name()), std::nullopt};
}

Complex stellar_subdivision(const Complex& delta, const Face& sigma, const std::string& label, std::uint64_t seed) {
  if (sigma.size() < 2) throw PreconditionError("stellar subdivision needs a face of dimension >= 1");
  require_face(delta, sigma);
  Extended ext = extend_universe(delta, {label});
  const auto s = static_cast<Vertex>(delta.universe_size());
  if (ext.coords) {
    // Undo the extra coordinate direction: subdivision stays in R^l.
    for (auto& row : *ext.coords) row.pop_back();
    SampleStream stream(seed);
    std::vector<Rational> pos(delta.ambient_dim(), Rational::zero());
    for (Vertex u : sigma) {
      const Rational w = nonzero_weight(stream);
      for (std::size_t j = 0; j < pos.size(); ++j) pos[j] += w * (*delta.coords())[u][j];
    }
    ext.coords->back() = std::move(pos);
  }
  std::vector<Face> gens;
  for (const auto& f : delta.facets()) {
    if (!is_subface(sigma, f)) {
      gens.push_back(f);
      continue;
    }
    for (Vertex u : sigma) gens.push_back(face_union(face_difference(f, {u}), {s}));
  }
  return Complex::generated_by(std::move(ext.labels), std::move(gens), std::move(ext.coords), delta.name());
}

Complex compact(const Complex& delta) {
  const auto used = delta.vertices();
  std::vector<Vertex> remap(delta.universe_size(), 0);
  std::vector<std::string> labels;
  std::optional<CoordTable> coords;
  if (delta.coords()) coords.emplace();
  for (std::size_t i = 0; i < used.size(); ++i) {
    remap[used[i]] = static_cast<Vertex>(i);
    labels.push_back(delta.labels()[used[i]]);
    if (coords) coords->push_back((*delta.coords())[used[i]]);
  }
  std::vector<Face> facets;
  for (const auto& f : delta.facets()) {
    Face g;
    for (Vertex v : f) g.push_back(remap[v]);
    facets.push_back(std::move(g));
  }
  return Complex(std::move(labels), std::move(facets), std::move(coords), delta.name());
}

}  // namespace facering
