#include "facering/simplicial/complex.hpp"

#include <algorithm>
#include <unordered_map>

namespace facering {

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ f.size();
  for (Vertex v : f) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Face make_face(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool is_subface(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Complex::Data {
  std::string name;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> ids;
  std::vector<Face> facets;
  std::optional<CoordTable> coords;
  std::vector<std::vector<Face>> faces_by_dim;  // index = dim + 1
  FaceSet face_set;
};

namespace {

void enumerate_subfaces(const Face& facet, FaceSet& out) {
  const std::size_t n = facet.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Face f;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) f.push_back(facet[i]);
    }
    out.insert(std::move(f));
  }
}

}  // namespace

std::shared_ptr<const Complex::Data> Complex::build(std::vector<std::string> labels, std::vector<Face> facets,
                                                    std::optional<CoordTable> coords, std::string name) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!d->ids.emplace(labels[i], static_cast<Vertex>(i)).second) {
      throw PreconditionError("duplicate vertex label '" + labels[i] + "'");
    }
  }
  d->labels = std::move(labels);
  if (coords) {
    if (coords->size() != d->labels.size()) {
      throw PreconditionError("coordinate table has " + std::to_string(coords->size()) + " rows for " +
                              std::to_string(d->labels.size()) + " vertices");
    }
    for (std::size_t i = 0; i < coords->size(); ++i) {
      if ((*coords)[i].size() != coords->front().size()) {
        throw PreconditionError("ragged coordinates at vertex '" + d->labels[i] + "'");
      }
    }
  }
  d->coords = std::move(coords);
  std::sort(facets.begin(), facets.end());
  d->facets = std::move(facets);
  for (const auto& f : d->facets) enumerate_subfaces(f, d->face_set);
  int top = -1;
  for (const auto& f : d->facets) top = std::max(top, static_cast<int>(f.size()) - 1);
  d->faces_by_dim.assign(static_cast<std::size_t>(top + 2), {});
  for (const auto& f : d->face_set) d->faces_by_dim[f.size()].push_back(f);
  for (auto& level : d->faces_by_dim) std::sort(level.begin(), level.end());
  return d;
}

Complex::Complex() : data_(build({}, {}, std::nullopt, {})) {}

Complex::Complex(std::vector<std::string> labels, std::vector<Face> facets, std::optional<CoordTable> coords,
                 std::string name) {
  for (const auto& f : facets) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= labels.size()) {
        throw PreconditionError("facet references vertex id " + std::to_string(f[i]) + " outside the universe");
      }
      if (i > 0 && f[i] <= f[i - 1]) {
        throw PreconditionError(f[i] == f[i - 1] ? "repeated vertex '" + labels[f[i]] + "' inside a facet"
                                                 : "facet vertices not sorted");
      }
    }
  }
  std::vector<Face> sorted = facets;
  std::sort(sorted.begin(), sorted.end());
  const auto show = [&](const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + labels[f[i]];
    return s + "}";
  };
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) throw PreconditionError("duplicate facet " + show(sorted[i]));
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (i != j && sorted[i].size() < sorted[j].size() && is_subface(sorted[i], sorted[j])) {
        throw PreconditionError("facet " + show(sorted[i]) + " is contained in facet " + show(sorted[j]));
      }
    }
  }
  data_ = build(std::move(labels), std::move(sorted), std::move(coords), std::move(name));
}

Complex Complex::generated_by(std::vector<std::string> labels, std::vector<Face> generators,
                              std::optional<CoordTable> coords, std::string name) {
  for (auto& g : generators) g = make_face(std::move(g));
  std::sort(generators.begin(), generators.end(),
            [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Face> maximal;
  for (auto& g : generators) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const Face& m) {
      return m.size() > g.size() && is_subface(g, m);
    });
    if (!covered) maximal.push_back(std::move(g));
  }
  return Complex(build(std::move(labels), std::move(maximal), std::move(coords), std::move(name)));
}

Complex Complex::void_on(std::vector<std::string> labels) {
  return Complex(build(std::move(labels), {}, std::nullopt, {}));
}

const std::string& Complex::name() const { return data_->name; }
const std::vector<std::string>& Complex::labels() const { return data_->labels; }
const std::vector<Face>& Complex::facets() const { return data_->facets; }
const std::optional<CoordTable>& Complex::coords() const { return data_->coords; }

std::size_t Complex::ambient_dim() const {
  if (!data_->coords || data_->coords->empty()) return 0;
  return data_->coords->front().size();
}

int Complex::dim() const { return static_cast<int>(data_->faces_by_dim.size()) - 2; }

bool Complex::contains(const Face& f) const { return data_->face_set.count(f) != 0; }

const std::vector<Face>& Complex::faces(int k) const {
  static const std::vector<Face> kNone;
  const auto idx = static_cast<std::size_t>(k + 1);
  if (k < -1 || idx >= data_->faces_by_dim.size()) return kNone;
  return data_->faces_by_dim[idx];
}

const FaceSet& Complex::face_set() const { return data_->face_set; }

std::vector<Vertex> Complex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& f : faces(0)) out.push_back(f[0]);
  return out;
}

bool Complex::is_pure() const {
  const auto& fs = facets();
  return std::all_of(fs.begin(), fs.end(), [&](const Face& f) { return f.size() == fs.front().size(); });
}

Vertex Complex::vertex_id(std::string_view label) const {
  const auto it = data_->ids.find(std::string(label));
  if (it == data_->ids.end()) throw FaceNotFound("unknown vertex '" + std::string(label) + "'");
  return it->second;
}

Face Complex::face_from_labels(const std::vector<std::string>& labels) const {
  std::vector<Vertex> ids;
  for (const auto& l : labels) ids.push_back(vertex_id(l));
  return make_face(std::move(ids));
}

std::string Complex::face_to_string(const Face& f) const {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += f[i] < data_->labels.size() ? data_->labels[f[i]] : "#" + std::to_string(f[i]);
  }
  return s + "}";
}

bool Complex::is_subcomplex_of(const Complex& other) const {
  return std::all_of(facets().begin(), facets().end(), [&](const Face& f) { return other.contains(f); });
}

Complex Complex::with_name(std::string name) const {
  return Complex(build(labels(), facets(), coords(), std::move(name)));
}

Complex Complex::with_coords(std::optional<CoordTable> coords) const {
  return Complex(build(labels(), facets(), std::move(coords), name()));
}

RelativePair::RelativePair(Complex total, Complex sub) : total_(std::move(total)), sub_(std::move(sub)) {
  if (total_.labels() != sub_.labels()) throw PreconditionError("relative pair over different vertex universes");
  if (!sub_.is_subcomplex_of(total_)) throw PreconditionError("relative pair: Γ is not a subcomplex of Δ");
}

RelativePair RelativePair::absolute(Complex total) {
  Complex sub = Complex::void_on(total.labels());
  return RelativePair(std::move(total), std::move(sub));
}

}  // namespace facering
